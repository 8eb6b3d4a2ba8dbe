use std::f64::consts::PI;

use atom_model::{drive_hamiltonian, light_shift_compensation, AtomSpace, DriveSpec, Polarization, Sideband};
use ndarray::{Array1, Array2};
use quoct_algebra::linalg::{adjoint, c, eigh};
use quoct_algebra::C64;
use serde::{Deserialize, Serialize};

/// Three pulses sharing Rabi frequency, sideband, polarization and detuning.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PulseSequence {
    pub theta: [f64; 3],
    pub phi: [f64; 3],
    pub rabi: f64,
    pub sideband: Sideband,
    pub polarization: Polarization,
    pub detuning: f64,
}

impl PulseSequence {
    /// Wraps the phases into [0, 2π). Nutation angles are physical
    /// durations and stay as they are.
    pub fn normalized(mut self) -> Self {
        for a in self.phi.iter_mut() {
            *a = a.rem_euclid(2.0 * PI);
        }
        self
    }

    pub fn drives(&self) -> Vec<DriveSpec> {
        (0..3)
            .map(|k| {
                DriveSpec::new(self.rabi, self.sideband, self.polarization, self.phi[k], self.theta[k])
                    .with_detuning(self.detuning)
            })
            .collect()
    }

    pub fn duration(&self, space: &AtomSpace) -> f64 {
        self.drives().iter().map(|d| d.duration(space)).sum()
    }
}

/// Spectral data of one drive Hamiltonian. Changing the laser phase is a
/// diagonal similarity on the e = 1 states, so a single decomposition serves
/// every pulse of a sequence.
#[derive(Clone, Debug)]
pub struct PulseFamily {
    pub space: AtomSpace,
    pub rabi: f64,
    pub sideband: Sideband,
    pub polarization: Polarization,
    pub detuning: f64,
    rate: f64,
    vals: Array1<f64>,
    vecs: Array2<C64>,
    excited: Vec<bool>,
}

impl PulseFamily {
    pub fn new(space: AtomSpace, rabi: f64, sideband: Sideband, polarization: Polarization, detuning: f64) -> Self {
        let d = DriveSpec::new(rabi, sideband, polarization, 0.0, 0.0).with_detuning(detuning);
        let (vals, vecs) = eigh(&drive_hamiltonian(&space, &d));
        let excited = (0..space.dim()).map(|i| space.label(i).0 == 1).collect();
        Self { space, rabi, sideband, polarization, detuning, rate: d.reference_rate(&space), vals, vecs, excited }
    }

    /// Family with the off-resonant carrier light shift cancelled.
    pub fn compensated(space: AtomSpace, rabi: f64, sideband: Sideband, polarization: Polarization) -> Self {
        let d = DriveSpec::new(rabi, sideband, polarization, 0.0, 0.0);
        Self::new(space, rabi, sideband, polarization, light_shift_compensation(&space, &d))
    }

    pub fn sequence(&self, theta: [f64; 3], phi: [f64; 3]) -> PulseSequence {
        PulseSequence {
            theta,
            phi,
            rabi: self.rabi,
            sideband: self.sideband,
            polarization: self.polarization,
            detuning: self.detuning,
        }
    }

    pub fn rate(&self) -> f64 {
        self.rate
    }

    /// Laser-frame propagator of one pulse.
    pub fn pulse(&self, phi: f64, theta: f64) -> Array2<C64> {
        let tau = theta / self.rate;
        let p = c(0.0, phi).exp();
        let mut w = self.vecs.clone();
        for (i, mut row) in w.rows_mut().into_iter().enumerate() {
            if self.excited[i] {
                row.mapv_inplace(|x| x * p);
            }
        }
        let mut wd = w.clone();
        for (k, mut col) in wd.columns_mut().into_iter().enumerate() {
            let f = c(0.0, -self.vals[k] * tau).exp();
            col.mapv_inplace(|x| x * f);
        }
        wd.dot(&adjoint(&w))
    }

    /// Carrier-frame unitary of the three-pulse train; matches
    /// `atom_model::propagate` on the same drives.
    pub fn unitary(&self, theta: &[f64; 3], phi: &[f64; 3]) -> Array2<C64> {
        let mut u = self.pulse(phi[0], theta[0]);
        for k in 1..3 {
            u = self.pulse(phi[k], theta[k]).dot(&u);
        }
        let t: f64 = theta.iter().sum::<f64>() / self.rate;
        let f = c(0.0, -(self.sideband.offset() as f64) * self.space.trap_freq * t).exp();
        for (i, mut row) in u.rows_mut().into_iter().enumerate() {
            if self.excited[i] {
                row.mapv_inplace(|x| x * f);
            }
        }
        u
    }
}
