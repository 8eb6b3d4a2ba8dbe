//! Kogut-Susskind Hamiltonian terms in the quoct basis, plus the symmetry
//! operators used to label and block-diagonalize its spectrum.

mod params;
mod sectors;
mod terms;

pub use params::{LatticeParams, ParamError};
pub use sectors::{hamiltonian_sectors, singlet_basis, singlet_projector, Sector, SectorKey};
pub use terms::{
    baryon_number_op, build_electric, build_full, build_kinetic, build_mass_chem, build_penalty, charge_pair_count,
    site_charges, total_casimir, total_charge, total_number_op, HamiltonianTerms,
};
