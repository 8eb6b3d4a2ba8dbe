//! Dense helpers shared by the simulation crates.

use ndarray::{s, Array1, Array2, Axis, ShapeBuilder};
use ndarray_linalg::{Eigh, UPLO};

use crate::C64;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn eye(n: usize) -> Array2<C64> {
    Array2::eye(n)
}

pub fn adjoint(a: &Array2<C64>) -> Array2<C64> {
    a.t().mapv(|x| x.conj())
}

pub fn kron(a: &Array2<C64>, b: &Array2<C64>) -> Array2<C64> {
    let (ar, ac) = a.dim();
    let (br, bc) = b.dim();
    let mut out = Array2::zeros((ar * br, ac * bc));
    for i in 0..ar {
        for j in 0..ac {
            let x = a[[i, j]];
            if x.norm() == 0.0 {
                continue;
            }
            out.slice_mut(s![i * br..(i + 1) * br, j * bc..(j + 1) * bc]).assign(&b.mapv(|y| x * y));
        }
    }
    out
}

/// Eigenvalues (ascending) and eigenvectors (columns) of a hermitian matrix.
pub fn eigh(h: &Array2<C64>) -> (Array1<f64>, Array2<C64>) {
    let n = h.nrows();
    if n == 0 {
        return (Array1::zeros(0), Array2::zeros((0, 0)));
    }
    // symmetrize so round-off asymmetry never reaches LAPACK
    let hs = (h + &adjoint(h)).mapv(|x| x * 0.5);
    // LAPACK reads row-major input as its transpose; hand it column-major
    let mut f = Array2::zeros(hs.raw_dim().f());
    f.assign(&hs);
    f.eigh(UPLO::Lower).expect("hermitian eigendecomposition failed")
}

/// V f(λ) V† for a spectral decomposition.
pub fn spectral_apply(vals: &Array1<f64>, vecs: &Array2<C64>, f: impl Fn(f64) -> C64) -> Array2<C64> {
    let mut scaled = vecs.clone();
    for (k, mut col) in scaled.axis_iter_mut(Axis(1)).enumerate() {
        let fk = f(vals[k]);
        col.mapv_inplace(|x| x * fk);
    }
    scaled.dot(&adjoint(vecs))
}

/// exp(-i H t) for hermitian H.
pub fn expm_hermitian(h: &Array2<C64>, t: f64) -> Array2<C64> {
    let (vals, vecs) = eigh(h);
    spectral_apply(&vals, &vecs, |l| c(0.0, -l * t).exp())
}

/// Largest singular value.
pub fn op_norm(a: &Array2<C64>) -> f64 {
    let (vals, _) = eigh(&adjoint(a).dot(a));
    vals.iter().fold(0.0f64, |m, &v| m.max(v)).max(0.0).sqrt()
}

pub fn max_abs(a: &Array2<C64>) -> f64 {
    a.iter().fold(0.0, |m, v| m.max(v.norm()))
}

pub fn unitarity_error(u: &Array2<C64>) -> f64 {
    max_abs(&(adjoint(u).dot(u) - eye(u.nrows())))
}

pub fn vec_norm(v: &Array1<C64>) -> f64 {
    v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

pub fn inner(a: &Array1<C64>, b: &Array1<C64>) -> C64 {
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}

/// Max elementwise deviation between `a` and `b` after removing the global
/// phase that aligns the largest-magnitude element of `b` with `a`.
pub fn phase_aligned_diff(a: &Array2<C64>, b: &Array2<C64>) -> f64 {
    let (mut k, mut best) = ((0, 0), -1.0);
    for (idx, v) in b.indexed_iter() {
        if v.norm() > best {
            best = v.norm();
            k = idx;
        }
    }
    if best <= 0.0 {
        return max_abs(&(a - b));
    }
    let ratio = a[k] / b[k];
    let ph = if ratio.norm() > 0.0 { ratio / ratio.norm() } else { c(1.0, 0.0) };
    max_abs(&(a - &b.mapv(|x| x * ph)))
}

/// Orthonormal basis (columns) of the eigenspace of `h` with |λ| < `thr`.
pub fn null_space(h: &Array2<C64>, thr: f64) -> Array2<C64> {
    let (vals, vecs) = eigh(h);
    let keep: Vec<usize> = (0..vals.len()).filter(|&k| vals[k].abs() < thr).collect();
    vecs.select(Axis(1), &keep)
}
