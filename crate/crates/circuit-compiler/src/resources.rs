use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::ir::Circuit;
use crate::CompileError;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GateCost {
    pub fidelity: f64,
    /// Seconds.
    pub duration: f64,
}

/// Per-gate fidelity and duration, keyed by gate label.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResourceModel {
    pub gates: BTreeMap<String, GateCost>,
}

pub const INTER_QUOCT: &str = "CantiCZ";

impl Default for ResourceModel {
    /// Z rotations are frame updates and free. Single-qubit e/n gates sit at
    /// the composite-pulse level, the motional gates at their optimized
    /// sequences; every physical gate takes 1 ms. The inter-quoct entry is
    /// a placeholder until [`ResourceModel::calibrated`] fixes it.
    fn default() -> Self {
        let ms = 1e-3;
        let mut gates = BTreeMap::new();
        let mut put = |k: &str, f: f64, d: f64| {
            gates.insert(k.to_string(), GateCost { fidelity: f, duration: d });
        };
        for s in ["e", "n", "m"] {
            put(&format!("Z_{s}"), 1.0, 0.0);
        }
        for k in ["X_e", "X_n", "H_e", "H_n", "CNOT_en", "CNOT_ne", "SWAP_en"] {
            put(k, 0.999, ms);
        }
        put("SWAP_em", 0.9925, ms);
        put("SWAP_nm", 0.9925, ms);
        put("CZ_em", 0.9929, ms);
        put("CCZ", 0.9814, ms);
        put("SHELVE_em", 0.9907, ms);
        put("RSWAP_en", 0.999, ms);
        put(INTER_QUOCT, 0.99, ms);
        Self { gates }
    }
}

impl ResourceModel {
    /// Sets the inter-quoct fidelity so that `circuit` estimates to `target`.
    pub fn calibrated(mut self, circuit: &Circuit, target: f64) -> Result<Self, CompileError> {
        let n = circuit.gates.iter().filter(|g| g.label() == INTER_QUOCT).count();
        self.gates.get_mut(INTER_QUOCT).expect("inter-quoct entry").fidelity = 1.0;
        let rest = estimate_resources(circuit, &self)?.fidelity;
        let f = (target / rest).powf(1.0 / n.max(1) as f64);
        if n == 0 || !(f > 0.0 && f <= 1.0) {
            return Err(CompileError::Precondition(format!("cannot reach {target} (other gates give {rest})")));
        }
        self.gates.get_mut(INTER_QUOCT).expect("inter-quoct entry").fidelity = f;
        Ok(self)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResourceEstimate {
    pub fidelity: f64,
    pub duration: f64,
    pub histogram: BTreeMap<String, usize>,
}

impl ResourceEstimate {
    /// Fidelity of `d` repetitions.
    pub fn repeated(&self, d: u32) -> f64 {
        self.fidelity.powi(d as i32)
    }
}

pub fn estimate_resources(circuit: &Circuit, model: &ResourceModel) -> Result<ResourceEstimate, CompileError> {
    let histogram = circuit.histogram();
    let (mut fidelity, mut duration) = (1.0, 0.0);
    for (k, &n) in &histogram {
        let g = model.gates.get(k).ok_or_else(|| CompileError::UnknownGate(k.clone()))?;
        fidelity *= g.fidelity.powi(n as i32);
        duration += g.duration * n as f64;
    }
    Ok(ResourceEstimate { fidelity, duration, histogram })
}
