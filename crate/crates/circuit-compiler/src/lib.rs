//! Compiles the single-link lattice Trotter step into native quoct gates,
//! with exact unitary simulation of the result and a per-gate resource model.

mod build;
mod compile;
mod conjugation;
mod ir;
mod resources;
mod sim;

pub use build::Builder;
pub use compile::{compile_electric_l1, compile_kinetic, compile_kinetic_colors, compile_mass_chem, compile_trotter_step, exp_q1_circuit, q1_matrix};
pub use conjugation::{controlled_conjugation, Conjugation};
pub use ir::{Circuit, Gate, GateName, Slot};
pub use resources::{estimate_resources, GateCost, ResourceEstimate, ResourceModel, INTER_QUOCT};
pub use sim::{circuit_unitary, circuit_unitary_storage, gate_unitary};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum CompileError {
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("gate `{0}` missing from resource model")]
    UnknownGate(String),
    #[error("cannot parse circuit line `{0}`")]
    Parse(String),
}
