use crate::AtomError;

pub const HBAR: f64 = 1.054_571_817e-34;
pub const ATOMIC_MASS_UNIT: f64 = 1.660_539_066_60e-27;

/// η = k·sqrt(ħ/2Mω); mass in atomic mass units, wavelength in metres.
pub fn lamb_dicke_parameter(wavelength: f64, atomic_mass: f64, trap_freq: f64) -> Result<f64, AtomError> {
    for (v, name) in [(wavelength, "wavelength"), (atomic_mass, "atomic mass"), (trap_freq, "trap frequency")] {
        if !(v > 0.0) {
            return Err(AtomError::NonPositive(name));
        }
    }
    let k = 2.0 * std::f64::consts::PI / wavelength;
    Ok(k * (HBAR / (2.0 * atomic_mass * ATOMIC_MASS_UNIT * trap_freq)).sqrt())
}

/// Generalized Laguerre polynomial L_n^α(x).
pub fn laguerre(n: usize, alpha: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - x;
    for k in 1..n {
        let k = k as f64;
        let next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// |⟨m_to| e^{iη(a+a†)} |m_from⟩| up to the i^{|Δm|} phase, which the drive
/// Hamiltonian attaches separately.
pub fn sideband_matrix_element(m_from: usize, m_to: usize, eta: f64) -> f64 {
    let (lo, hi) = (m_from.min(m_to), m_from.max(m_to));
    let dm = hi - lo;
    let ratio: f64 = (lo + 1..=hi).map(|k| 1.0 / k as f64).product();
    (-eta * eta / 2.0).exp() * eta.powi(dm as i32) * ratio.sqrt() * laguerre(lo, dm as f64, eta * eta)
}
