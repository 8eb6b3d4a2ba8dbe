use std::f64::consts::PI;

use ndarray::Array2;
use quoct_algebra::linalg::c;
use quoct_algebra::C64;

use crate::drive::{propagate, DriveSpec, Polarization, Sideband};
use crate::space::AtomSpace;

/// CORPSE nutation angles for a net rotation θ.
pub fn corpse_angles(theta: f64) -> [f64; 3] {
    let k = ((theta / 2.0).sin() / 2.0).asin();
    [2.0 * PI + theta / 2.0 - k, 2.0 * PI - 2.0 * k, theta / 2.0 - k]
}

/// Motion-preserving π pulse: two CORPSE triplets, each a net π/2, on the carrier.
pub fn corpse_mpp(omega: f64) -> Vec<DriveSpec> {
    let angles = corpse_angles(PI / 2.0);
    let phases = [0.0, PI, 0.0];
    (0..2)
        .flat_map(|_| angles.iter().zip(phases).map(|(&th, ph)| DriveSpec::new(omega, Sideband::Carrier, Polarization::Pi, ph, th)))
        .collect()
}

/// Single carrier pulse detuned by the carrier Rabi rate, so it rotates
/// about (x + z)/√2 and takes |0⟩ to |+⟩ at the right duration.
pub fn hadamard_pulse(space: &AtomSpace, omega: f64, duration: f64) -> Vec<DriveSpec> {
    let p = DriveSpec::new(omega, Sideband::Carrier, Polarization::Pi, 0.0, 0.0);
    let rate = p.reference_rate(space);
    vec![p.with_detuning(rate).with_duration(space, duration)]
}

pub fn total_duration(space: &AtomSpace, pulses: &[DriveSpec]) -> f64 {
    pulses.iter().map(|p| p.duration(space)).sum()
}

/// Removes the free motional phase e^{−iωmt} from the output of `u`.
pub fn to_motional_frame(space: &AtomSpace, u: &Array2<C64>, t: f64) -> Array2<C64> {
    let mut out = u.clone();
    for (i, mut row) in out.rows_mut().into_iter().enumerate() {
        let f = c(0.0, space.trap_freq * space.label(i).2 as f64 * t).exp();
        row.mapv_inplace(|x| x * f);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransferReport {
    pub m0: usize,
    /// 1 − |Tr(T†B)|²/4 for the e-qubit block B at fixed n = 0, m = m0
    /// (global phase ignored).
    pub infidelity: f64,
    /// Largest change of the mean motional number over both e inputs.
    pub delta_mbar: f64,
    /// arg Tr(T†B)
    pub phase: f64,
}

/// Compares the e-qubit action of `u` at motional level `m0` with a 2×2 target.
pub fn transfer_report(space: &AtomSpace, u: &Array2<C64>, target: &Array2<C64>, m0: usize) -> TransferReport {
    let idx = [space.index(0, 0, m0), space.index(1, 0, m0)];
    let mut tr = c(0.0, 0.0);
    for a in 0..2 {
        for b in 0..2 {
            tr += target[[a, b]].conj() * u[[idx[a], idx[b]]];
        }
    }
    let mut dm: f64 = 0.0;
    for &col in &idx {
        let mbar: f64 = (0..space.dim()).map(|i| space.label(i).2 as f64 * u[[i, col]].norm_sqr()).sum();
        dm = dm.max((mbar - m0 as f64).abs());
    }
    TransferReport { m0, infidelity: 1.0 - tr.norm_sqr() / 4.0, delta_mbar: dm, phase: tr.arg() }
}

fn pauli_x() -> Array2<C64> {
    ndarray::array![[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]
}

fn hadamard() -> Array2<C64> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    ndarray::array![[c(s, 0.0), c(s, 0.0)], [c(s, 0.0), c(-s, 0.0)]]
}

/// MPP reports for each Rabi frequency and each initial m, phases taken in
/// the frame co-rotating with the motion.
pub fn mpp_sweep(space: &AtomSpace, omegas: &[f64], m0s: &[usize]) -> Vec<(f64, Vec<TransferReport>)> {
    let x = pauli_x();
    omegas
        .iter()
        .map(|&om| {
            let p = corpse_mpp(om);
            let u = to_motional_frame(space, &propagate(space, &p), total_duration(space, &p));
            (om, m0s.iter().map(|&m| transfer_report(space, &u, &x, m)).collect())
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct HadamardPoint {
    pub omega: f64,
    pub duration: f64,
    pub reports: Vec<TransferReport>,
}

impl HadamardPoint {
    pub fn worst_infidelity(&self) -> f64 {
        self.reports.iter().map(|r| r.infidelity).fold(0.0, f64::max)
    }
}

/// Hadamard reports over an (Ω, T) grid, lab-frame phases.
pub fn hadamard_sweep(space: &AtomSpace, omegas: &[f64], durations: &[f64], m0s: &[usize]) -> Vec<HadamardPoint> {
    let h = hadamard();
    let mut out = Vec::with_capacity(omegas.len() * durations.len());
    for &omega in omegas {
        for &duration in durations {
            let u = propagate(space, &hadamard_pulse(space, omega, duration));
            out.push(HadamardPoint { omega, duration, reports: m0s.iter().map(|&m| transfer_report(space, &u, &h, m)).collect() });
        }
    }
    out
}
