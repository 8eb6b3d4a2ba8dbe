use std::f64::consts::PI;

use ndarray::Array2;
use quoct_algebra::linalg::{c, expm_hermitian};
use quoct_algebra::C64;
use serde::{Deserialize, Serialize};

use crate::lamb_dicke::sideband_matrix_element;
use crate::space::AtomSpace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sideband {
    Red,
    Carrier,
    Blue,
}

impl Sideband {
    /// Motional quanta added when e goes 0 → 1.
    pub fn offset(self) -> i32 {
        match self {
            Sideband::Red => -1,
            Sideband::Carrier => 0,
            Sideband::Blue => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Polarization {
    Pi,
    SigmaPlus,
    SigmaMinus,
}

impl Polarization {
    /// Allowed (n in e=0, n in e=1) pairs.
    pub fn pairs(self) -> &'static [(usize, usize)] {
        match self {
            Polarization::Pi => &[(0, 0), (1, 1)],
            Polarization::SigmaMinus => &[(0, 1)],
            Polarization::SigmaPlus => &[(1, 0)],
        }
    }
}

/// One square pulse. Angles in radians, frequencies in rad/s.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DriveSpec {
    pub rabi: f64,
    pub sideband: Sideband,
    pub polarization: Polarization,
    pub phase: f64,
    /// Nutation on the reference transition (m 1→0 for sidebands, m 0→0 on the carrier).
    pub theta: f64,
    /// Extra laser detuning; lowers e = 1 by this much in the drive frame.
    #[serde(default)]
    pub detuning: f64,
}

impl DriveSpec {
    pub fn new(rabi: f64, sideband: Sideband, polarization: Polarization, phase: f64, theta: f64) -> Self {
        Self { rabi, sideband, polarization, phase, theta, detuning: 0.0 }
    }

    pub fn with_detuning(mut self, detuning: f64) -> Self {
        self.detuning = detuning;
        self
    }

    pub fn reference_rate(&self, space: &AtomSpace) -> f64 {
        let f = match self.sideband {
            Sideband::Carrier => sideband_matrix_element(0, 0, space.eta),
            _ => sideband_matrix_element(1, 0, space.eta),
        };
        self.rabi * f.abs()
    }

    pub fn duration(&self, space: &AtomSpace) -> f64 {
        self.theta / self.reference_rate(space)
    }

    /// Sets θ so that the pulse lasts `duration` seconds.
    pub fn with_duration(mut self, space: &AtomSpace, duration: f64) -> Self {
        self.theta = duration * self.reference_rate(space);
        self
    }
}

fn i_pow(k: usize) -> C64 {
    [c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)][k % 4]
}

/// Coupling part: ⟨1 n' m'|V|0 n m⟩ = (Ω/2) e^{iφ} i^{|Δm|} F(m, m').
fn coupling(space: &AtomSpace, drive: &DriveSpec) -> Vec<(usize, usize, C64)> {
    let l = space.levels();
    let mut out = Vec::new();
    let ph = c(0.0, drive.phase).exp() * (drive.rabi / 2.0);
    for &(ng, ne) in drive.polarization.pairs() {
        for m in 0..l {
            for mp in 0..l {
                let f = sideband_matrix_element(m, mp, space.eta);
                let v = ph * i_pow(m.abs_diff(mp)) * f;
                out.push((space.index(1, ne, mp), space.index(0, ng, m), v));
            }
        }
    }
    out
}

/// Time-independent Hamiltonian in the frame co-rotating with the laser on
/// the clock transition and with the lab frame for motion: e = 1 sits at
/// −(sideband)·ω − detuning, level m at m·ω. Carrier and spectator sidebands
/// are all retained.
pub fn drive_hamiltonian(space: &AtomSpace, drive: &DriveSpec) -> Array2<C64> {
    let n = space.dim();
    let w = space.trap_freq;
    let mut h = Array2::zeros((n, n));
    for i in 0..n {
        let (e, _, m) = space.label(i);
        let mut d = w * m as f64;
        if e == 1 {
            d += -(drive.sideband.offset() as f64) * w - drive.detuning;
        }
        h[[i, i]] = c(d, 0.0);
    }
    for (i, j, v) in coupling(space, drive) {
        h[[i, j]] += v;
        h[[j, i]] += v.conj();
    }
    h
}

/// Detuning that cancels the differential light shift from the
/// off-resonant carrier during a sideband drive.
pub fn light_shift_compensation(space: &AtomSpace, drive: &DriveSpec) -> f64 {
    let s = drive.sideband.offset();
    if s == 0 {
        return 0.0;
    }
    let r = drive.rabi * sideband_matrix_element(0, 0, space.eta);
    -r * r / (2.0 * s as f64 * space.trap_freq)
}

/// Frame change from the laser frame of a sideband-s drive back to the
/// carrier frame at time t: phase e^{−isωt} on every e = 1 state.
fn frame_phase(space: &AtomSpace, s: i32, t: f64) -> Vec<C64> {
    (0..space.dim())
        .map(|i| if space.label(i).0 == 1 { c(0.0, -(s as f64) * space.trap_freq * t).exp() } else { c(1.0, 0.0) })
        .collect()
}

/// Unitary of a pulse train in the carrier frame (clock starts at 0),
/// each pulse exponentiated exactly in its own laser frame.
pub fn propagate(space: &AtomSpace, pulses: &[DriveSpec]) -> Array2<C64> {
    let n = space.dim();
    let mut u = quoct_algebra::linalg::eye(n);
    let mut t = 0.0;
    for p in pulses {
        let tau = p.duration(space);
        if tau == 0.0 {
            continue;
        }
        let s = p.sideband.offset();
        let w0 = frame_phase(space, s, t);
        let w1 = frame_phase(space, s, t + tau);
        let mut step = expm_hermitian(&drive_hamiltonian(space, p), tau);
        for i in 0..n {
            for j in 0..n {
                step[[i, j]] *= w1[i] * w0[j].conj();
            }
        }
        u = step.dot(&u);
        t += tau;
    }
    u
}

/// Same unitary by midpoint stepping of the interaction-picture
/// Hamiltonian (rotating with m·ω), where each coupling carries its
/// explicit off-resonant phase e^{i(Δm − s)ωt}.
pub fn propagate_stepwise(space: &AtomSpace, pulses: &[DriveSpec], max_step: f64) -> Array2<C64> {
    let n = space.dim();
    let w = space.trap_freq;
    let mut u = quoct_algebra::linalg::eye(n);
    let mut t = 0.0;
    for p in pulses {
        let tau = p.duration(space);
        if tau == 0.0 {
            continue;
        }
        // fast drives need steps short against the Rabi period too
        let h_max = max_step.min(2.0 * PI / (50.0 * p.rabi.abs().max(f64::MIN_POSITIVE)));
        let steps = (tau / h_max).ceil().max(1.0) as usize;
        let dt = tau / steps as f64;
        let s = p.sideband.offset() as f64;
        let cpl = coupling(space, p);
        for k in 0..steps {
            let tm = t + (k as f64 + 0.5) * dt;
            let mut h = Array2::zeros((n, n));
            for i in 0..n {
                if space.label(i).0 == 1 {
                    h[[i, i]] = c(-p.detuning, 0.0);
                }
            }
            for &(i, j, v) in &cpl {
                let dm = space.label(i).2 as f64 - space.label(j).2 as f64;
                let vt = v * c(0.0, (dm - s) * w * tm).exp();
                h[[i, j]] += vt;
                h[[j, i]] += vt.conj();
            }
            u = expm_hermitian(&h, dt).dot(&u);
        }
        t += tau;
    }
    // back from the interaction picture
    for i in 0..n {
        let f = c(0.0, -w * space.label(i).2 as f64 * t).exp();
        for j in 0..n {
            u[[i, j]] *= f;
        }
    }
    u
}
