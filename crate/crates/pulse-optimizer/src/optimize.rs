use std::f64::consts::PI;

use atom_model::AtomSpace;
use ndarray::Array2;
use quoct_algebra::C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::fidelity::{fidelity, ZFidelity};
use crate::gates::{reference_sequence, GateKind, GateTarget};
use crate::sequence::{PulseFamily, PulseSequence};
use crate::PulseError;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OptConfig {
    pub space: AtomSpace,
    pub starts: usize,
    pub max_iter: usize,
    pub grad_tol: f64,
    pub fd_step: f64,
    /// Detune to cancel the carrier light shift.
    pub compensate: bool,
    /// Upper bound on each nutation angle.
    pub theta_max: f64,
}

impl Default for OptConfig {
    fn default() -> Self {
        Self { space: AtomSpace::default(), starts: 20, max_iter: 5000, grad_tol: 1e-8, fd_step: 1e-5, compensate: true, theta_max: 2.0 * PI }
    }
}

impl OptConfig {
    pub fn for_gate(gate: GateKind) -> Self {
        Self { starts: 40, compensate: gate.default_compensated(), ..Default::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OptStatus {
    Converged,
    IterationLimit,
    /// No start got above F = 0.5.
    NoGoodStart,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OptResult {
    pub gate: GateKind,
    pub sequence: PulseSequence,
    pub z_correct: (f64, f64, f64),
    pub fidelity: f64,
    pub gate_time: f64,
    pub status: OptStatus,
    pub iterations: usize,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct SweepPoint {
    pub rabi: f64,
    pub fidelity: f64,
    pub gate_time: f64,
}

pub fn gate_time(space: &AtomSpace, seq: &PulseSequence) -> f64 {
    seq.duration(space)
}

fn family(gate: GateKind, rabi: f64, cfg: &OptConfig) -> PulseFamily {
    if cfg.compensate {
        PulseFamily::compensated(cfg.space, rabi, gate.sideband(), gate.polarization())
    } else {
        PulseFamily::new(cfg.space, rabi, gate.sideband(), gate.polarization(), 0.0)
    }
}

fn restrict(space: &AtomSpace, u: &Array2<C64>, labels: &[(usize, usize, usize)]) -> Array2<C64> {
    let idx: Vec<usize> = labels.iter().map(|&(e, n, m)| space.index(e, n, m)).collect();
    Array2::from_shape_fn((idx.len(), idx.len()), |(i, j)| u[[idx[i], idx[j]]])
}

fn evaluate(fam: &PulseFamily, target: &GateTarget, x: &[f64; 6]) -> ZFidelity {
    let u = fam.unitary(&[x[0], x[1], x[2]], &[x[3], x[4], x[5]]);
    fidelity(&target.u0, &restrict(&fam.space, &u, &target.labels), &target.labels).expect("matching dimensions")
}

/// Largest population any subspace state loses to levels outside it.
pub fn leakage(space: &AtomSpace, seq: &PulseSequence, target: &GateTarget) -> f64 {
    let u = atom_model::propagate(space, &seq.drives());
    let idx: Vec<usize> = target.labels.iter().map(|&(e, n, m)| space.index(e, n, m)).collect();
    idx.iter()
        .map(|&j| 1.0 - idx.iter().map(|&i| u[[i, j]].norm_sqr()).sum::<f64>())
        .fold(0.0, f64::max)
}

fn clamp_theta(x: &mut [f64; 6], max: f64) {
    for t in x.iter_mut().take(3) {
        *t = t.clamp(0.0, max);
    }
}

struct Ascent {
    x: [f64; 6],
    f: f64,
    iterations: usize,
    converged: bool,
}

fn ascend(f: &dyn Fn(&[f64; 6]) -> f64, mut x: [f64; 6], cfg: &OptConfig) -> Ascent {
    let grad = |x: &[f64; 6]| {
        let mut g = [0.0; 6];
        for k in 0..6 {
            let (mut a, mut b) = (*x, *x);
            a[k] += cfg.fd_step;
            b[k] -= cfg.fd_step;
            g[k] = (f(&a) - f(&b)) / (2.0 * cfg.fd_step);
        }
        g
    };
    let dot = |a: &[f64; 6], b: &[f64; 6]| a.iter().zip(b).map(|(p, q)| p * q).sum::<f64>();
    let mut fx = f(&x);
    let mut g = grad(&x);
    let mut step = 0.1;
    let mut prev: Option<([f64; 6], [f64; 6])> = None;
    for it in 0..cfg.max_iter {
        let gn = dot(&g, &g).sqrt();
        if gn < cfg.grad_tol {
            return Ascent { x, f: fx, iterations: it, converged: true };
        }
        // Barzilai-Borwein guess, then backtrack
        if let Some((px, pg)) = prev {
            let s: [f64; 6] = std::array::from_fn(|k| x[k] - px[k]);
            let y: [f64; 6] = std::array::from_fn(|k| g[k] - pg[k]);
            let sy = dot(&s, &y).abs();
            if sy > 0.0 {
                step = (dot(&s, &s) / sy).clamp(1e-6, 10.0);
            }
        }
        let mut accepted = None;
        for _ in 0..50 {
            let mut xn: [f64; 6] = std::array::from_fn(|k| x[k] + step * g[k]);
            clamp_theta(&mut xn, cfg.theta_max);
            let moved: [f64; 6] = std::array::from_fn(|k| xn[k] - x[k]);
            let fnew = f(&xn);
            if fnew >= fx + 1e-4 * dot(&g, &moved) && moved.iter().any(|&v| v != 0.0) {
                accepted = Some((xn, fnew));
                break;
            }
            step *= 0.5;
        }
        let Some((xn, fnew)) = accepted else {
            // no ascent left at finite-difference resolution
            return Ascent { x, f: fx, iterations: it, converged: true };
        };
        prev = Some((x, g));
        x = xn;
        fx = fnew;
        g = grad(&x);
    }
    Ascent { x, f: fx, iterations: cfg.max_iter, converged: false }
}

fn starts(seed: u64, n: usize) -> Vec<[f64; 6]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| std::array::from_fn(|_| rng.gen_range(0.0..2.0 * PI))).collect()
}

fn finish(gate: GateKind, fam: &PulseFamily, target: &GateTarget, a: &Ascent, status: OptStatus) -> OptResult {
    let z = evaluate(fam, target, &a.x);
    let seq = fam.sequence([a.x[0], a.x[1], a.x[2]], [a.x[3], a.x[4], a.x[5]]).normalized();
    OptResult {
        gate,
        gate_time: gate_time(&fam.space, &seq),
        sequence: seq,
        z_correct: (z.alpha, z.beta, z.gamma),
        fidelity: z.fidelity,
        status,
        iterations: a.iterations,
    }
}

/// Multi-start gradient ascent of the phase-corrected fidelity over the
/// three nutation angles and three phases.
pub fn optimize(gate: GateKind, rabi: f64, seed: u64, cfg: &OptConfig) -> Result<OptResult, PulseError> {
    if !(rabi > 0.0) {
        return Err(PulseError::NonPositive("Rabi frequency"));
    }
    let fam = family(gate, rabi, cfg);
    let target = gate.target();
    let f = |x: &[f64; 6]| evaluate(&fam, &target, x).fidelity;
    let runs: Vec<Ascent> = starts(seed, cfg.starts.max(1)).into_par_iter().map(|x0| ascend(&f, x0, cfg)).collect();
    // first index wins ties so the result never depends on scheduling
    let best = runs.iter().fold(&runs[0], |b, r| if r.f > b.f { r } else { b });
    let status = if best.f <= 0.5 {
        OptStatus::NoGoodStart
    } else if best.converged {
        OptStatus::Converged
    } else {
        OptStatus::IterationLimit
    };
    Ok(finish(gate, &fam, &target, best, status))
}

pub fn sweep_rabi(gate: GateKind, grid: &[f64], seed: u64, cfg: &OptConfig) -> Result<Vec<SweepPoint>, PulseError> {
    if grid.is_empty() {
        return Err(PulseError::EmptyGrid);
    }
    grid.iter()
        .map(|&rabi| {
            let r = optimize(gate, rabi, seed, cfg)?;
            Ok(SweepPoint { rabi, fidelity: r.fidelity, gate_time: r.gate_time })
        })
        .collect()
}

/// Fidelity of the reference angles, with θ durations scaled by
/// `duration_scale` (1 for a literal replay).
pub fn replay(gate: GateKind, rabi: f64, duration_scale: f64, cfg: &OptConfig) -> (ZFidelity, PulseSequence) {
    let r = reference_sequence(gate);
    let fam = family(gate, rabi, cfg);
    let x: [f64; 6] = std::array::from_fn(|k| if k < 3 { r.theta[k] * PI * duration_scale } else { r.phi[k - 3] * PI });
    let z = evaluate(&fam, &gate.target(), &x);
    (z, fam.sequence([x[0], x[1], x[2]], [x[3], x[4], x[5]]))
}
