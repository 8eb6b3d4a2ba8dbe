use ndarray::Array2;
use quoct_algebra::linalg::{adjoint, c, expm_hermitian, kron, max_abs};
use quoct_algebra::C64;

use crate::CompileError;

const TOL: f64 = 1e-10;

/// Controlled-B conjugation for an A that exchanges the two halves of a
/// partition: CB (A ⊗ I) CB = A ⊗ B with CB = Σ_k |k⟩⟨k| ⊗ (B if k is in the
/// second half else I).
#[derive(Clone, Debug)]
pub struct Conjugation {
    pub a: Array2<C64>,
    pub b: Array2<C64>,
    pub cb: Array2<C64>,
}

fn check_hermitian_unitary(m: &Array2<C64>, name: &str) -> Result<(), CompileError> {
    let (r, cdim) = m.dim();
    if r != cdim {
        return Err(CompileError::Precondition(format!("{name} is not square")));
    }
    if max_abs(&(m - &adjoint(m))) > TOL {
        return Err(CompileError::Precondition(format!("{name} is not hermitian")));
    }
    if max_abs(&(m.dot(m) - Array2::<C64>::eye(r))) > TOL {
        return Err(CompileError::Precondition(format!("{name} is not unitary")));
    }
    Ok(())
}

pub fn controlled_conjugation(a: &Array2<C64>, b: &Array2<C64>, partition: &[bool]) -> Result<Conjugation, CompileError> {
    check_hermitian_unitary(a, "A")?;
    check_hermitian_unitary(b, "B")?;
    let n = a.nrows();
    if partition.len() != n {
        return Err(CompileError::Precondition(format!("partition has {} entries for dimension {n}", partition.len())));
    }
    for k in 0..n {
        for l in 0..n {
            if partition[k] == partition[l] && a[[k, l]].norm() > TOL {
                return Err(CompileError::Precondition(format!("A couples {k} and {l} inside one half")));
            }
        }
    }
    let d = b.nrows();
    let mut cb = Array2::zeros((n * d, n * d));
    for k in 0..n {
        for i in 0..d {
            for j in 0..d {
                cb[[k * d + i, k * d + j]] = if partition[k] { b[[i, j]] } else if i == j { c(1.0, 0.0) } else { c(0.0, 0.0) };
            }
        }
    }
    Ok(Conjugation { a: a.clone(), b: b.clone(), cb })
}

impl Conjugation {
    fn lift(&self, m: &Array2<C64>) -> Array2<C64> {
        kron(m, &Array2::eye(self.b.nrows()))
    }

    /// max |CB (A ⊗ I) CB − A ⊗ B|.
    pub fn product_deviation(&self) -> f64 {
        let lhs = self.cb.dot(&self.lift(&self.a)).dot(&self.cb);
        max_abs(&(lhs - kron(&self.a, &self.b)))
    }

    /// CB (exp(iαA) ⊗ I) CB.
    pub fn exp_rhs(&self, alpha: f64) -> Array2<C64> {
        self.cb.dot(&self.lift(&expm_hermitian(&self.a, -alpha))).dot(&self.cb)
    }

    /// max |exp(iα A⊗B) − CB (exp(iαA) ⊗ I) CB|.
    pub fn exp_deviation(&self, alpha: f64) -> f64 {
        max_abs(&(expm_hermitian(&kron(&self.a, &self.b), -alpha) - self.exp_rhs(alpha)))
    }
}
