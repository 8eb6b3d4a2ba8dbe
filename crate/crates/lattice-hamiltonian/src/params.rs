use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum ParamError {
    #[error("L must be at least 1")]
    ZeroSites,
    #[error("lattice spacing must be positive, got {0}")]
    Spacing(f64),
    #[error("coupling must be nonnegative, got {0}")]
    Coupling(f64),
    #[error("penalty weight must be nonnegative, got {0}")]
    Penalty(f64),
}

/// One Hamiltonian instance: `l` spinor sites (2L staggered sites).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeParams {
    #[serde(rename = "L")]
    pub l: usize,
    pub a: f64,
    pub m: f64,
    pub mu: f64,
    pub g: f64,
    #[serde(default)]
    pub penalty_weight: f64,
}

impl LatticeParams {
    pub fn new(l: usize, a: f64, m: f64, mu: f64, g: f64) -> Result<Self, ParamError> {
        let p = Self { l, a, m, mu, g, penalty_weight: 0.0 };
        p.validate()?;
        Ok(p)
    }

    pub fn with_penalty(mut self, w: f64) -> Result<Self, ParamError> {
        self.penalty_weight = w;
        self.validate()?;
        Ok(self)
    }

    pub fn with_g(mut self, g: f64) -> Self {
        self.g = g;
        self
    }

    pub fn validate(&self) -> Result<(), ParamError> {
        if self.l == 0 {
            return Err(ParamError::ZeroSites);
        }
        if !(self.a > 0.0) {
            return Err(ParamError::Spacing(self.a));
        }
        if !(self.g >= 0.0) {
            return Err(ParamError::Coupling(self.g));
        }
        if !(self.penalty_weight >= 0.0) {
            return Err(ParamError::Penalty(self.penalty_weight));
        }
        Ok(())
    }

    pub fn n_sites(&self) -> usize {
        2 * self.l
    }

    pub fn dim(&self) -> usize {
        8usize.pow(self.n_sites() as u32)
    }
}
