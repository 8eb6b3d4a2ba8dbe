use lattice_hamiltonian::{hamiltonian_sectors, singlet_basis, total_number_op, LatticeParams};
use ndarray::{Array1, Array2};
use quoct_algebra::linalg::inner;
use quoct_algebra::C64;

use crate::adiabatic::{adiabatic_evolve, coupling_schedule, track_eigenstate, AdiabaticSpec, Segment};
use crate::blocks::TermBlocks;
use crate::observables::nonlocal_baryon_diag;
use crate::DynamicsError;

/// An adiabatic preparation inside one baryon-number sector: start from
/// singlet level `level` at g_initial and ramp.
#[derive(Clone, Debug)]
pub struct AdiabaticScenario {
    pub blocks: TermBlocks,
    pub singlets: Array2<C64>,
    pub level: usize,
    pub spec: AdiabaticSpec,
    /// Diagonal observable in block coordinates.
    pub observable: Array1<f64>,
}

#[derive(Clone, Debug)]
pub struct ScenarioPoint {
    pub time: f64,
    pub g: f64,
    pub evolved: f64,
    pub tracked: f64,
    pub overlap: f64,
}

impl AdiabaticScenario {
    pub fn new(params: &LatticeParams, baryon3: i32, level: usize, spec: AdiabaticSpec, observable: &[f64]) -> Self {
        let sector = hamiltonian_sectors(params.l)
            .into_iter()
            .find(|s| s.key.is_color_neutral() && s.key.baryon3 == baryon3)
            .expect("neutral sector exists");
        let blocks = TermBlocks::new(params, &sector.indices);
        let singlets = singlet_basis(params.l, &sector.indices);
        let observable = blocks.diag_of(observable);
        Self { blocks, singlets, level, spec, observable }
    }

    /// Meson to two baryons at L = 1 (total fermion number).
    pub fn string_breaking(params: &LatticeParams, spec: AdiabaticSpec) -> Self {
        let dens: Vec<f64> = total_number_op(2).diagonal().iter().map(|x| x.re).collect();
        Self::new(params, 0, 1, spec, &dens)
    }

    /// Lowest n_B = 1 state at L = 2 (nonlocal-baryon density).
    pub fn baryon_size(params: &LatticeParams, spec: AdiabaticSpec) -> Self {
        Self::new(params, 3, 0, spec, &nonlocal_baryon_diag())
    }

    pub fn default_string_breaking() -> Self {
        let p = LatticeParams::new(1, 1.0, 1.0, 0.0, 0.0).unwrap();
        let segs = vec![
            Segment { fraction: 0.4, steps: 70 },
            Segment { fraction: 0.2, steps: 110 },
            Segment { fraction: 0.4, steps: 70 },
        ];
        Self::string_breaking(&p, AdiabaticSpec::segmented(0.0, 3.5, 20.0, segs))
    }

    pub fn default_baryon_size() -> Self {
        let p = LatticeParams::new(2, 1.0, 2.0, 0.1, 0.0).unwrap();
        Self::baryon_size(&p, AdiabaticSpec::uniform(0.0, 1.0, 100.0, 500))
    }

    fn expect(&self, v: &Array1<C64>) -> f64 {
        v.iter().zip(&self.observable).map(|(a, d)| a.norm_sqr() * d).sum()
    }

    /// Evolves and compares with the tracked eigenstate at every schedule
    /// point (tracking is refined `refine`-fold between points).
    pub fn run(&self, refine: usize) -> Result<Vec<ScenarioPoint>, DynamicsError> {
        let sched = coupling_schedule(&self.spec);
        let mut fine = Vec::new();
        for w in sched.windows(2) {
            let (a, b) = (w[0] * w[0], w[1] * w[1]);
            for r in 0..refine.max(1) {
                fine.push((a + (b - a) * r as f64 / refine.max(1) as f64).max(0.0).sqrt());
            }
        }
        fine.push(*sched.last().unwrap());
        let tracked = track_eigenstate(&self.blocks, &self.singlets, &fine, self.level);
        let psi0 = tracked[0].state.clone();
        let traj = adiabatic_evolve(&self.blocks, &self.spec, &psi0)?;
        let stride = refine.max(1);
        Ok(traj
            .iter()
            .map(|s| {
                let tr = &tracked[s.step * stride];
                ScenarioPoint {
                    time: s.time,
                    g: s.g,
                    evolved: self.expect(&s.state),
                    tracked: self.expect(&tr.state),
                    overlap: inner(&tr.state, &s.state).norm_sqr(),
                }
            })
            .collect())
    }
}

/// Points nearest to integer times, as a measured circuit would be sampled.
pub fn unit_time_samples(points: &[ScenarioPoint]) -> Vec<ScenarioPoint> {
    let t_end = points.last().map_or(0.0, |p| p.time);
    (0..=t_end.round() as usize)
        .filter_map(|k| {
            points
                .iter()
                .min_by(|a, b| (a.time - k as f64).abs().total_cmp(&(b.time - k as f64).abs()))
                .cloned()
        })
        .collect()
}

/// Largest drop below the running maximum.
pub fn max_drawdown(values: &[f64]) -> f64 {
    let mut peak = f64::MIN;
    let mut worst: f64 = 0.0;
    for &v in values {
        peak = peak.max(v);
        worst = worst.max(peak - v);
    }
    worst
}
