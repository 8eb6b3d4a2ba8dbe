use serde::{Deserialize, Serialize};

use crate::lamb_dicke::lamb_dicke_parameter;
use crate::AtomError;

pub const YB_CLOCK_WAVELENGTH: f64 = 578.4e-9;
pub const YB_MASS: f64 = 171.0;

/// |e n m⟩ with m = 0..=m_max, stored at ((e·2 + n)·(m_max+1) + m).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AtomSpace {
    pub m_max: usize,
    /// Angular trap frequency ω (rad/s).
    pub trap_freq: f64,
    pub eta: f64,
}

impl AtomSpace {
    pub fn new(m_max: usize, trap_freq: f64, eta: f64) -> Result<Self, AtomError> {
        if m_max < 2 {
            return Err(AtomError::Truncation(m_max));
        }
        if !(trap_freq > 0.0) {
            return Err(AtomError::NonPositive("trap frequency"));
        }
        if !(eta > 0.0) {
            return Err(AtomError::NonPositive("eta"));
        }
        Ok(Self { m_max, trap_freq, eta })
    }

    /// Yb clock transition in a trap of angular frequency `trap_freq`.
    pub fn ytterbium(m_max: usize, trap_freq: f64) -> Result<Self, AtomError> {
        let eta = lamb_dicke_parameter(YB_CLOCK_WAVELENGTH, YB_MASS, trap_freq)?;
        Self::new(m_max, trap_freq, eta)
    }

    pub fn levels(&self) -> usize {
        self.m_max + 1
    }

    pub fn dim(&self) -> usize {
        4 * self.levels()
    }

    pub fn index(&self, e: usize, n: usize, m: usize) -> usize {
        (e * 2 + n) * self.levels() + m
    }

    pub fn label(&self, i: usize) -> (usize, usize, usize) {
        let l = self.levels();
        (i / (2 * l), (i / l) % 2, i % l)
    }
}

impl Default for AtomSpace {
    /// m ≤ 3, ω = 2π × 100 kHz.
    fn default() -> Self {
        Self::ytterbium(3, 2.0 * std::f64::consts::PI * 1e5).expect("valid defaults")
    }
}
