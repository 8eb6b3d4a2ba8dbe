use lattice_hamiltonian::{build_electric, build_full, hamiltonian_sectors, LatticeParams, Sector};
use ndarray::{Array1, Array2};
use quoct_algebra::linalg::{adjoint, c, eigh};
use quoct_algebra::C64;

/// Hamiltonian terms restricted to a set of basis states closed under H
/// (a symmetry sector, or the full space for small L). The electric term is
/// stored at g = 1 since it scales as g².
#[derive(Clone, Debug)]
pub struct TermBlocks {
    pub params: LatticeParams,
    pub indices: Vec<usize>,
    pub kinetic: Array2<C64>,
    pub mass_chem: Array1<f64>,
    pub electric_unit: Array2<C64>,
    pub penalty: Array2<C64>,
}

impl TermBlocks {
    pub fn new(params: &LatticeParams, indices: &[usize]) -> Self {
        let terms = build_full(params);
        let e1 = build_electric(&params.with_g(1.0));
        let mc = &terms.mass + &terms.chem;
        let mass_chem = indices.iter().map(|&i| mc.get(i, i).re).collect();
        Self {
            params: *params,
            indices: indices.to_vec(),
            kinetic: terms.kinetic.restrict(indices),
            mass_chem,
            electric_unit: e1.restrict(indices),
            penalty: terms.penalty.restrict(indices),
        }
    }

    /// Whole Hilbert space; only sensible for L = 1.
    pub fn full(params: &LatticeParams) -> Self {
        let all: Vec<usize> = (0..params.dim()).collect();
        Self::new(params, &all)
    }

    pub fn dim(&self) -> usize {
        self.indices.len()
    }

    pub fn hamiltonian(&self, g: f64) -> Array2<C64> {
        let mut h = &self.kinetic + &self.electric_unit.mapv(|x| x * (g * g)) + &self.penalty;
        for (k, &v) in self.mass_chem.iter().enumerate() {
            h[[k, k]] += c(v, 0.0);
        }
        h
    }

    /// Local coordinate of a global basis index.
    pub fn local(&self, global: usize) -> Option<usize> {
        self.indices.iter().position(|&i| i == global)
    }

    pub fn basis_state(&self, global: usize) -> Option<Array1<C64>> {
        let k = self.local(global)?;
        let mut v = Array1::zeros(self.dim());
        v[k] = c(1.0, 0.0);
        Some(v)
    }

    /// Diagonal operator restricted to the block.
    pub fn diag_of(&self, diag: &[f64]) -> Array1<f64> {
        self.indices.iter().map(|&i| diag[i]).collect()
    }

    /// Lifts a block-local vector into the full 8^(2L) space.
    pub fn lift(&self, v: &Array1<C64>) -> Array1<C64> {
        let mut out = Array1::zeros(self.params.dim());
        for (k, &i) in self.indices.iter().enumerate() {
            out[i] = v[k];
        }
        out
    }
}

/// Symmetry sector holding basis state `index`.
pub fn sector_containing(l: usize, index: usize) -> Sector {
    hamiltonian_sectors(l).into_iter().find(|s| s.indices.contains(&index)).unwrap()
}

struct Spectral {
    vals: Array1<f64>,
    vecs: Array2<C64>,
    vecs_h: Array2<C64>,
}

impl Spectral {
    fn new(h: &Array2<C64>) -> Self {
        let (vals, vecs) = eigh(h);
        let vecs_h = adjoint(&vecs);
        Self { vals, vecs, vecs_h }
    }

    fn apply_exp(&self, psi: &Array1<C64>, scale: f64) -> Array1<C64> {
        let mut y = self.vecs_h.dot(psi);
        for (k, v) in y.iter_mut().enumerate() {
            *v *= c(0.0, -self.vals[k] * scale).exp();
        }
        self.vecs.dot(&y)
    }
}

/// First-order Trotter stepping on a [`TermBlocks`]: kinetic, then mass and
/// chemical potential, then electric (with the penalty, which commutes with
/// everything) in time order.
pub struct TrotterEvolver {
    kin: Spectral,
    elec: Spectral,
    pen: Option<Spectral>,
    mass_chem: Array1<f64>,
}

impl TrotterEvolver {
    pub fn new(blocks: &TermBlocks) -> Self {
        let pen = if blocks.params.penalty_weight > 0.0 { Some(Spectral::new(&blocks.penalty)) } else { None };
        Self {
            kin: Spectral::new(&blocks.kinetic),
            elec: Spectral::new(&blocks.electric_unit),
            pen,
            mass_chem: blocks.mass_chem.clone(),
        }
    }

    pub fn step(&self, psi: &Array1<C64>, dt: f64, g: f64) -> Array1<C64> {
        let mut y = self.kin.apply_exp(psi, dt);
        for (k, v) in y.iter_mut().enumerate() {
            *v *= c(0.0, -self.mass_chem[k] * dt).exp();
        }
        let mut y = self.elec.apply_exp(&y, g * g * dt);
        if let Some(p) = &self.pen {
            y = p.apply_exp(&y, dt);
        }
        y
    }

    /// Cached kinetic propagator for repeated steps of the same `dt`.
    pub fn kinetic_propagator(&self, dt: f64) -> Array2<C64> {
        let mut scaled = self.kin.vecs.clone();
        for (k, mut col) in scaled.columns_mut().into_iter().enumerate() {
            let f = c(0.0, -self.kin.vals[k] * dt).exp();
            col.mapv_inplace(|x| x * f);
        }
        scaled.dot(&self.kin.vecs_h)
    }

    /// Same as [`Self::step`] with a precomputed kinetic propagator.
    pub fn step_with(&self, ukin: &Array2<C64>, psi: &Array1<C64>, dt: f64, g: f64) -> Array1<C64> {
        let mut y = ukin.dot(psi);
        for (k, v) in y.iter_mut().enumerate() {
            *v *= c(0.0, -self.mass_chem[k] * dt).exp();
        }
        let mut y = self.elec.apply_exp(&y, g * g * dt);
        if let Some(p) = &self.pen {
            y = p.apply_exp(&y, dt);
        }
        y
    }
}
