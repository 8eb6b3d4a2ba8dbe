//! Time evolution of lattice Hamiltonians and the observables built on it.

mod adiabatic;
mod blocks;
mod evolve;
mod observables;
mod scenarios;

pub use adiabatic::{adiabatic_evolve, coupling_schedule, track_eigenstate, AdiabaticSample, AdiabaticSpec, Segment, TrackedLevel};
pub use blocks::{sector_containing, TermBlocks, TrotterEvolver};
pub use evolve::{exact_evolve, spectrum, spectrum_in_basis, trotter_step, trotter_step_blocks, Level};
pub use scenarios::{max_drawdown, unit_time_samples, AdiabaticScenario, ScenarioPoint};
pub use observables::{
    nonlocal_baryon_density, nonlocal_baryon_diag, singlet_spectrum, vacuum_persistence, EvolutionSpec, PersistenceRow,
};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum DynamicsError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
}
