use lattice_hamiltonian::{hamiltonian_sectors, singlet_basis, total_number_op, LatticeParams};
use ndarray::Array1;
use quoct_algebra::linalg::{c, eigh};
use quoct_algebra::{QuoctBasis, C64};
use serde::{Deserialize, Serialize};

use crate::blocks::{sector_containing, TermBlocks, TrotterEvolver};
use crate::evolve::{spectrum_in_basis, Level};
use crate::DynamicsError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvolutionSpec {
    pub t_final: f64,
    pub trotter_steps: usize,
    pub sample_times: Vec<f64>,
}

impl EvolutionSpec {
    /// `n + 1` evenly spaced samples over [0, t_final].
    pub fn uniform(t_final: f64, trotter_steps: usize, n: usize) -> Self {
        let sample_times = (0..=n).map(|k| t_final * k as f64 / n as f64).collect();
        Self { t_final, trotter_steps, sample_times }
    }

    pub fn validate(&self) -> Result<(), DynamicsError> {
        if self.trotter_steps == 0 {
            return Err(DynamicsError::InvalidSpec("trotter_steps must be positive".into()));
        }
        if let Some(t) = self.sample_times.iter().find(|&&t| !(0.0..=self.t_final).contains(&t)) {
            return Err(DynamicsError::InvalidSpec(format!("sample time {t} outside [0, {}]", self.t_final)));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PersistenceRow {
    pub t: f64,
    pub ed: f64,
    pub trotter: f64,
}

/// |⟨0|e^{−iHt}|0⟩|² exactly and with `trotter_steps` steps of size t/D.
/// Evolution stays in the symmetry sector of the empty state.
pub fn vacuum_persistence(params: &LatticeParams, spec: &EvolutionSpec) -> Result<Vec<PersistenceRow>, DynamicsError> {
    spec.validate()?;
    let sector = sector_containing(params.l, 0);
    let blocks = TermBlocks::new(params, &sector.indices);
    let psi0 = blocks.basis_state(0).unwrap();
    let k0 = blocks.local(0).unwrap();
    let (vals, vecs) = eigh(&blocks.hamiltonian(params.g));
    let overlaps: Vec<C64> = (0..vals.len()).map(|k| vecs[[k0, k]]).collect();
    let evolver = TrotterEvolver::new(&blocks);
    let d = spec.trotter_steps;
    Ok(spec
        .sample_times
        .iter()
        .map(|&t| {
            if t == 0.0 {
                return PersistenceRow { t, ed: 1.0, trotter: 1.0 };
            }
            let amp: C64 = overlaps.iter().zip(&vals).map(|(o, &e)| o.norm_sqr() * c(0.0, -e * t).exp()).sum();
            let dt = t / d as f64;
            let uk = evolver.kinetic_propagator(dt);
            let mut psi = psi0.clone();
            for _ in 0..d {
                psi = evolver.step_with(&uk, &psi, dt, params.g);
            }
            PersistenceRow { t, ed: amp.norm_sqr(), trotter: psi[k0].norm_sqr() }
        })
        .collect())
}

/// All color-singlet levels across every neutral sector, sorted by energy,
/// with states lifted to the full space.
pub fn singlet_spectrum(params: &LatticeParams) -> Vec<Level> {
    let density = Array1::from(total_number_op(params.n_sites()).diagonal().iter().map(|x| x.re).collect::<Vec<_>>());
    let mut levels = Vec::new();
    for sector in hamiltonian_sectors(params.l).into_iter().filter(|s| s.key.is_color_neutral()) {
        let basis = singlet_basis(params.l, &sector.indices);
        if basis.ncols() == 0 {
            continue;
        }
        let blocks = TermBlocks::new(params, &sector.indices);
        let dens = blocks.diag_of(density.as_slice().unwrap());
        let local = spectrum_in_basis(&blocks.hamiltonian(params.g), &dens, &basis).expect("consistent block");
        levels.extend(local.into_iter().map(|lv| Level { state: blocks.lift(&lv.state), ..lv }));
    }
    levels.sort_by(|a, b| a.energy.total_cmp(&b.energy));
    levels
}

/// Diagonal of the L = 2 projector onto two quarks on site 0 with one on
/// site 2, or one on site 0 with two on site 2.
pub fn nonlocal_baryon_diag() -> Vec<f64> {
    let basis = QuoctBasis::default();
    (0..4096usize)
        .map(|i| {
            let n0 = basis.fermion_number(i / 512);
            let n2 = basis.fermion_number((i / 8) % 8);
            if (n0, n2) == (2, 1) || (n0, n2) == (1, 2) {
                1.0
            } else {
                0.0
            }
        })
        .collect()
}

pub fn nonlocal_baryon_density(state: &Array1<C64>) -> Result<f64, DynamicsError> {
    if state.len() != 4096 {
        return Err(DynamicsError::DimensionMismatch { expected: 4096, got: state.len() });
    }
    let diag = nonlocal_baryon_diag();
    let norm: f64 = state.iter().map(|a| a.norm_sqr()).sum();
    Ok(state.iter().zip(&diag).map(|(a, d)| a.norm_sqr() * d).sum::<f64>() / norm)
}
