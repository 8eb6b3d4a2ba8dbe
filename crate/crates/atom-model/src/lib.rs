//! ¹⁷¹Yb quoct level structure |e n m⟩ with a truncated motional ladder,
//! Lamb-Dicke sideband couplings and pulse propagation.

mod composite;
mod drive;
mod lamb_dicke;
mod space;

pub use composite::{
    corpse_angles, corpse_mpp, hadamard_pulse, hadamard_sweep, mpp_sweep, HadamardPoint, to_motional_frame, total_duration, transfer_report, TransferReport,
};
pub use drive::{
    drive_hamiltonian, light_shift_compensation, propagate, propagate_stepwise, DriveSpec, Polarization, Sideband,
};
pub use lamb_dicke::{laguerre, lamb_dicke_parameter, sideband_matrix_element, ATOMIC_MASS_UNIT, HBAR};
pub use space::{AtomSpace, YB_CLOCK_WAVELENGTH, YB_MASS};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum AtomError {
    #[error("{0} must be positive")]
    NonPositive(&'static str),
    #[error("motional truncation {0} below 2")]
    Truncation(usize),
}
