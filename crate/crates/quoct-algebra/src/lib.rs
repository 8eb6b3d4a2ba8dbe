//! Operator algebra for quocts: eight-level sites built from three fermionic
//! color modes, with Jordan-Wigner strings for multi-site spaces.

pub mod basis;
pub mod gellmann;
pub mod linalg;
pub mod operator;
pub mod pauli;
pub mod site;

pub use basis::{Color, QuoctBasis};
pub use gellmann::GellMannSet;
pub use operator::QuoctOperator;
pub use pauli::{pauli_decompose, PauliTerm};
pub use site::{annihilator, casimir, charge_op, creator, number_op, parity, SiteKind};

pub use num_complex::Complex64 as C64;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum AlgebraError {
    #[error("generator index {0} outside 1..=8")]
    InvalidGenerator(usize),
    #[error("site {site} out of range for {total} sites")]
    SiteOutOfRange { site: usize, total: usize },
    #[error("operator is not hermitian (max deviation {0:e})")]
    NotHermitian(f64),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}
