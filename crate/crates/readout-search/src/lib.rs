//! Readout of a single quoct: bright/dark channels with motional scrambling,
//! protocol simulation, and a genetic search for short protocols.

mod brute;
mod channel;
mod gates;
mod genetic;
mod protocol;

pub use brute::{exhaustive_unique, ExhaustiveReport};
pub use channel::{basis_density, e_readout, n_partial_readout, scramble, Branch, DIM};
pub use gates::{gate_alphabet, label, state_index, NativeGate};
pub use genetic::{genetic_search, GaConfig, GaReport};
pub use protocol::{
    fitness, reference_protocol, short_circuit_table, simulate_protocol, verify_protocol, Fitness, Measurement,
    Label, Outcome, OutcomeRecord, ReadoutProtocol, Round, SimMode, Verification, COMPUTATIONAL,
};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum ReadoutError {
    #[error("protocol does not identify every basis state ({0} duplicates)")]
    NotUnique(usize),
    #[error("unknown gate `{0}`")]
    UnknownGate(String),
}
