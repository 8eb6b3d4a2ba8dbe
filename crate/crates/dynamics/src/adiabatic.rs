use ndarray::{Array1, Array2};
use quoct_algebra::linalg::{adjoint, eigh, inner};
use quoct_algebra::C64;
use serde::{Deserialize, Serialize};

use crate::blocks::{TermBlocks, TrotterEvolver};
use crate::DynamicsError;

/// A stretch of the g² ramp covering `fraction` of g_f² − g_i², taken in
/// `steps` Trotter steps.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub fraction: f64,
    pub steps: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AdiabaticSpec {
    pub g_initial: f64,
    pub g_final: f64,
    /// Total schedule time T.
    pub t_total: f64,
    /// Empty means a single uniform ramp of `steps` steps.
    #[serde(default)]
    pub segments: Vec<Segment>,
    #[serde(default)]
    pub steps: usize,
    #[serde(default = "one")]
    pub record_every: usize,
}

fn one() -> usize {
    1
}

impl AdiabaticSpec {
    pub fn uniform(g_initial: f64, g_final: f64, t_total: f64, steps: usize) -> Self {
        Self { g_initial, g_final, t_total, segments: Vec::new(), steps, record_every: 1 }
    }

    pub fn segmented(g_initial: f64, g_final: f64, t_total: f64, segments: Vec<Segment>) -> Self {
        Self { g_initial, g_final, t_total, segments, steps: 0, record_every: 1 }
    }

    fn layout(&self) -> Vec<Segment> {
        if self.segments.is_empty() {
            vec![Segment { fraction: 1.0, steps: self.steps }]
        } else {
            self.segments.clone()
        }
    }

    pub fn total_steps(&self) -> usize {
        self.layout().iter().map(|s| s.steps).sum()
    }

    pub fn dt(&self) -> f64 {
        self.t_total / self.total_steps() as f64
    }

    pub fn validate(&self) -> Result<(), DynamicsError> {
        let bad = |m: &str| Err(DynamicsError::InvalidSpec(m.into()));
        if !(self.t_total > 0.0) {
            return bad("T must be positive");
        }
        let layout = self.layout();
        if layout.iter().any(|s| s.steps == 0) {
            return bad("every segment needs at least one step");
        }
        if layout.iter().any(|s| s.fraction < 0.0) || (layout.iter().map(|s| s.fraction).sum::<f64>() - 1.0).abs() > 1e-9 {
            return bad("segment fractions must be nonnegative and sum to 1");
        }
        if self.record_every == 0 {
            return bad("record_every must be positive");
        }
        Ok(())
    }
}

/// g_eff at every schedule point j = 0..=D. Step j uses point j; point D is g_f.
pub fn coupling_schedule(spec: &AdiabaticSpec) -> Vec<f64> {
    let (gi2, gf2) = (spec.g_initial.powi(2), spec.g_final.powi(2));
    let span = gf2 - gi2;
    let mut out = Vec::with_capacity(spec.total_steps() + 1);
    let mut start = 0.0;
    for seg in spec.layout() {
        for j in 0..seg.steps {
            let x = start + seg.fraction * j as f64 / seg.steps as f64;
            out.push((gi2 + x * span).max(0.0).sqrt());
        }
        start += seg.fraction;
    }
    out.push(spec.g_final.abs());
    out
}

#[derive(Clone, Debug)]
pub struct AdiabaticSample {
    pub step: usize,
    pub time: f64,
    pub g: f64,
    pub state: Array1<C64>,
}

/// Ramped Trotter evolution; records after every `record_every` steps and at the end.
pub fn adiabatic_evolve(
    blocks: &TermBlocks,
    spec: &AdiabaticSpec,
    psi0: &Array1<C64>,
) -> Result<Vec<AdiabaticSample>, DynamicsError> {
    spec.validate()?;
    if psi0.len() != blocks.dim() {
        return Err(DynamicsError::DimensionMismatch { expected: blocks.dim(), got: psi0.len() });
    }
    let sched = coupling_schedule(spec);
    let d = sched.len() - 1;
    let dt = spec.dt();
    let evolver = TrotterEvolver::new(blocks);
    let uk = evolver.kinetic_propagator(dt);
    let mut psi = psi0.clone();
    let mut out = vec![AdiabaticSample { step: 0, time: 0.0, g: sched[0], state: psi.clone() }];
    for j in 0..d {
        psi = evolver.step_with(&uk, &psi, dt, sched[j]);
        let k = j + 1;
        if k % spec.record_every == 0 || k == d {
            out.push(AdiabaticSample { step: k, time: k as f64 * dt, g: sched[k], state: psi.clone() });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct TrackedLevel {
    pub g: f64,
    pub energy: f64,
    /// Block-local coordinates.
    pub state: Array1<C64>,
}

/// Follows one eigenstate of V†H(g)V through `g_values`, matching each
/// point to the eigenvector of largest overlap with the previous one.
pub fn track_eigenstate(blocks: &TermBlocks, basis: &Array2<C64>, g_values: &[f64], level: usize) -> Vec<TrackedLevel> {
    let vh = adjoint(basis);
    let mut out: Vec<TrackedLevel> = Vec::with_capacity(g_values.len());
    for &g in g_values {
        let hr = vh.dot(&blocks.hamiltonian(g).dot(basis));
        let (vals, vecs) = eigh(&hr);
        let pick = match out.last() {
            None => level.min(vals.len() - 1),
            Some(prev) => {
                let prev_r = vh.dot(&prev.state);
                let mut best = 0;
                let mut best_ov = -1.0;
                for k in 0..vals.len() {
                    let ov = inner(&vecs.column(k).to_owned(), &prev_r).norm();
                    // ascending eigenvalues, so ties keep the lower level
                    if ov > best_ov + 1e-12 {
                        best = k;
                        best_ov = ov;
                    }
                }
                best
            }
        };
        out.push(TrackedLevel { g, energy: vals[pick], state: basis.dot(&vecs.column(pick)) });
    }
    out
}
