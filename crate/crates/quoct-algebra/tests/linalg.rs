use ndarray::{array, Array2};
use proptest::prelude::*;
use quoct_algebra::linalg::*;
use quoct_algebra::C64;

fn taylor_expm(h: &Array2<C64>, t: f64) -> Array2<C64> {
    let n = h.nrows();
    let a = h.mapv(|x| x * c(0.0, -t / 64.0));
    let mut sum = eye(n);
    let mut term = eye(n);
    for k in 1..25 {
        term = term.dot(&a).mapv(|x| x / k as f64);
        sum += &term;
    }
    for _ in 0..6 {
        sum = sum.dot(&sum);
    }
    sum
}

#[test]
fn eigenvectors_of_complex_matrix() {
    let sy = array![[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]];
    let (vals, vecs) = eigh(&sy);
    for k in 0..2 {
        let v = vecs.column(k).to_owned();
        let r = sy.dot(&v) - v.mapv(|x| x * vals[k]);
        assert!(vec_norm(&r) < 1e-14);
    }
}

#[test]
fn exponential_of_sigma_y() {
    let sy = array![[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]];
    let u = expm_hermitian(&sy, 0.4);
    // exp(-i 0.4 σy) = cos 0.4 − i sin 0.4 σy
    let want = array![[c(0.4f64.cos(), 0.0), c(-(0.4f64.sin()), 0.0)], [c(0.4f64.sin(), 0.0), c(0.4f64.cos(), 0.0)]];
    assert!(max_abs(&(&u - &want)) < 1e-14);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn expm_matches_taylor(vals in prop::collection::vec(-1.0f64..1.0, 32), t in -2.0f64..2.0) {
        let mut h = Array2::zeros((4, 4));
        for i in 0..4 {
            for j in 0..4 {
                h[[i, j]] = c(vals[i * 4 + j], vals[16 + (i * 4 + j)]);
            }
        }
        let h = (&h + &adjoint(&h)).mapv(|x| x * 0.5);
        prop_assert!(max_abs(&(&expm_hermitian(&h, t) - &taylor_expm(&h, t))) < 1e-11);
        prop_assert!(unitarity_error(&expm_hermitian(&h, t)) < 1e-12);
    }
}
