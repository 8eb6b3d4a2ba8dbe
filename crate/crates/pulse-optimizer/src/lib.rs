//! Gradient-ascent search over three-pulse sideband sequences that realize
//! motion-selective gates on an (e, n, m) atom.

mod fidelity;
mod gates;
mod optimize;
mod sequence;

pub use fidelity::{fidelity, z_phases, ZFidelity};
pub use gates::{reference_sequence, GateKind, GateTarget, ReferenceSequence};
pub use optimize::{
    gate_time, leakage, optimize, replay, sweep_rabi, OptConfig, OptResult, OptStatus, SweepPoint,
};
pub use sequence::{PulseFamily, PulseSequence};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum PulseError {
    #[error("dimension mismatch: target {target}, actual {actual}")]
    DimensionMismatch { target: usize, actual: usize },
    #[error("{0} must be positive")]
    NonPositive(&'static str),
    #[error("empty Rabi grid")]
    EmptyGrid,
    #[error(transparent)]
    Atom(#[from] atom_model::AtomError),
}
