use ndarray::Array2;
use proptest::prelude::*;
use pulse_optimizer::*;
use quoct_algebra::linalg::c;
use quoct_algebra::C64;
use std::f64::consts::PI;

fn apply_z(u: &Array2<C64>, labels: &[(usize, usize, usize)], a: f64, b: f64, g: f64) -> Array2<C64> {
    let z = z_phases(labels, a, b, g);
    Array2::from_shape_fn(u.dim(), |(i, j)| z[i] * u[[i, j]])
}

fn wrap(x: f64) -> f64 {
    let y = x.rem_euclid(2.0 * PI);
    y.min(2.0 * PI - y)
}

#[test]
fn identical_unitaries() {
    for g in GateKind::ALL {
        let t = g.target();
        let f = fidelity(&t.u0, &t.u0, &t.labels).unwrap();
        assert!((f.fidelity - 1.0).abs() < 1e-12);
        assert!(wrap(f.alpha) < 1e-9 && wrap(f.gamma) < 1e-9, "{g:?} {f:?}");
    }
}

#[test]
fn recovers_electronic_phase() {
    let t = GateKind::CzEm.target();
    let u = apply_z(&t.u0, &t.labels, 0.3, 0.0, 0.0);
    let f = fidelity(&t.u0, &u, &t.labels).unwrap();
    assert!((f.fidelity - 1.0).abs() < 1e-12);
    assert!(wrap(f.alpha + 0.3) < 1e-9, "{f:?}");
}

#[test]
fn identity_against_cz_is_half() {
    // CZ is maximally entangling: local phases reach at most |2 + 2i|²/16
    let t = GateKind::CzEm.target();
    let f = fidelity(&t.u0, &Array2::eye(8), &t.labels).unwrap();
    assert!((f.fidelity - 0.5).abs() < 1e-12, "{f:?}");
}

#[test]
fn dimension_mismatch() {
    let t = GateKind::SwapEm.target();
    let err = fidelity(&t.u0, &Array2::eye(4), &t.labels).unwrap_err();
    assert_eq!(err, PulseError::DimensionMismatch { target: 8, actual: 4 });
}

fn random_unitary(d: usize, seed: &[f64]) -> Array2<C64> {
    // exp(iH) for a seeded hermitian H
    let mut h = Array2::zeros((d, d));
    let mut k = 0;
    for i in 0..d {
        for j in i..d {
            let (re, im) = (seed[k % seed.len()], seed[(k + 1) % seed.len()]);
            k += 2;
            h[[i, j]] = if i == j { c(re, 0.0) } else { c(re, im) };
            h[[j, i]] = h[[i, j]].conj();
        }
    }
    quoct_algebra::linalg::expm_hermitian(&h, 1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn gauge_invariant(seed in prop::collection::vec(-2.0..2.0f64, 7), a in 0.0..2.0 * PI, b in 0.0..2.0 * PI, g in 0.0..2.0 * PI, k in 0usize..4) {
        let t = GateKind::ALL[k].target();
        let u = random_unitary(t.dim(), &seed);
        let f0 = fidelity(&t.u0, &u, &t.labels).unwrap().fidelity;
        let f1 = fidelity(&t.u0, &apply_z(&u, &t.labels, a, b, g), &t.labels).unwrap().fidelity;
        prop_assert!((f0 - f1).abs() < 1e-10, "{} vs {}", f0, f1);
        prop_assert!(f0 <= 1.0 + 1e-12);
    }

    #[test]
    fn beats_any_fixed_gauge(seed in prop::collection::vec(-2.0..2.0f64, 5), a in 0.0..2.0 * PI, b in 0.0..2.0 * PI, g in 0.0..2.0 * PI) {
        let t = GateKind::ShelveEm.target();
        let u = random_unitary(t.dim(), &seed);
        let best = fidelity(&t.u0, &u, &t.labels).unwrap().fidelity;
        let z = z_phases(&t.labels, a, b, g);
        let tr: C64 = (0..t.dim()).map(|i| (0..t.dim()).map(|j| t.u0[[i, j]].conj() * z[i] * u[[i, j]]).sum::<C64>()).sum();
        prop_assert!(tr.norm_sqr() / (t.dim() * t.dim()) as f64 <= best + 1e-12);
    }
}
