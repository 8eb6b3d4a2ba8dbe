use lattice_hamiltonian::HamiltonianTerms;
use ndarray::{Array1, Array2};
use quoct_algebra::linalg::{adjoint, c, eigh, expm_hermitian};
use quoct_algebra::{QuoctOperator, C64};

use crate::blocks::TermBlocks;
use crate::DynamicsError;

fn check_square(h: &Array2<C64>, n: usize) -> Result<(), DynamicsError> {
    if h.nrows() != h.ncols() || h.nrows() != n {
        return Err(DynamicsError::DimensionMismatch { expected: h.nrows(), got: n });
    }
    Ok(())
}

/// exp(−iHt)·ψ₀ by eigendecomposition.
pub fn exact_evolve(h: &Array2<C64>, psi0: &Array1<C64>, t: f64) -> Result<Array1<C64>, DynamicsError> {
    check_square(h, psi0.len())?;
    if t == 0.0 {
        return Ok(psi0.clone());
    }
    let (vals, vecs) = eigh(h);
    let mut y = adjoint(&vecs).dot(psi0);
    for (k, v) in y.iter_mut().enumerate() {
        *v *= c(0.0, -vals[k] * t).exp();
    }
    Ok(vecs.dot(&y))
}

#[derive(Clone, Debug)]
pub struct Level {
    pub energy: f64,
    /// ⟨Σ_n M̃_n⟩
    pub density: f64,
    pub state: Array1<C64>,
}

/// Eigenpairs of H on the span of the orthonormal columns of `basis`,
/// annotated with the expectation of a diagonal density operator.
/// States are returned in the coordinates of `h`.
pub fn spectrum_in_basis(
    h: &Array2<C64>,
    density: &Array1<f64>,
    basis: &Array2<C64>,
) -> Result<Vec<Level>, DynamicsError> {
    check_square(h, basis.nrows())?;
    if density.len() != h.nrows() {
        return Err(DynamicsError::DimensionMismatch { expected: h.nrows(), got: density.len() });
    }
    let hr = adjoint(basis).dot(&h.dot(basis));
    let (vals, vecs) = eigh(&hr);
    let states = basis.dot(&vecs);
    Ok((0..vals.len())
        .map(|k| {
            let state = states.column(k).to_owned();
            let density = state.iter().zip(density).map(|(a, d)| a.norm_sqr() * d).sum();
            Level { energy: vals[k], density, state }
        })
        .collect())
}

/// Spectrum of P·H·P on the range of the projector P, or of H itself.
pub fn spectrum(
    h: &Array2<C64>,
    density: &Array1<f64>,
    projector: Option<&Array2<C64>>,
) -> Result<Vec<Level>, DynamicsError> {
    let basis = match projector {
        None => quoct_algebra::linalg::eye(h.nrows()),
        Some(p) => {
            check_square(p, h.nrows())?;
            let (vals, vecs) = eigh(p);
            let keep: Vec<usize> = (0..vals.len()).filter(|&k| vals[k] > 0.5).collect();
            vecs.select(ndarray::Axis(1), &keep)
        }
    };
    spectrum_in_basis(h, density, &basis)
}

/// One first-order Trotter step on the full space. Time order is kinetic,
/// mass + chemical potential, then electric together with the Gauss penalty,
/// so the returned matrix is E·M·K.
pub fn trotter_step(terms: &HamiltonianTerms, dt: f64) -> QuoctOperator {
    let sites = terms.total.sites();
    let uk = expm_hermitian(&terms.kinetic.to_dense(), dt);
    let mc: Vec<C64> = (&terms.mass + &terms.chem)
        .diagonal()
        .iter()
        .map(|d| c(0.0, -d.re * dt).exp())
        .collect();
    let ue = expm_hermitian(&(&terms.electric + &terms.penalty).to_dense(), dt);
    let mut mk = uk;
    for (i, mut row) in mk.rows_mut().into_iter().enumerate() {
        row.mapv_inplace(|x| x * mc[i]);
    }
    let u = ue.dot(&mk);
    QuoctOperator::from_dense(sites, &u, false).expect("square by construction").pruned(1e-15)
}

/// Block-restricted counterpart of [`trotter_step`] at coupling `g`.
pub fn trotter_step_blocks(blocks: &TermBlocks, dt: f64, g: f64) -> Array2<C64> {
    let uk = expm_hermitian(&blocks.kinetic, dt);
    let ue = expm_hermitian(&(&blocks.electric_unit.mapv(|x| x * (g * g)) + &blocks.penalty), dt);
    let mut mk = uk;
    for (i, mut row) in mk.rows_mut().into_iter().enumerate() {
        let f = c(0.0, -blocks.mass_chem[i] * dt).exp();
        row.mapv_inplace(|x| x * f);
    }
    ue.dot(&mk)
}
