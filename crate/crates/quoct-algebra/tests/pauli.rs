use ndarray::Array2;
use proptest::prelude::*;
use quoct_algebra::linalg::{kron, max_abs};
use quoct_algebra::{casimir, number_op, pauli_decompose, PauliTerm, QuoctBasis, QuoctOperator, C64};

fn pauli(ch: char) -> Array2<C64> {
    let z = C64::new(0.0, 0.0);
    let o = C64::new(1.0, 0.0);
    let i = C64::new(0.0, 1.0);
    match ch {
        'I' => ndarray::arr2(&[[o, z], [z, o]]),
        'X' => ndarray::arr2(&[[z, o], [o, z]]),
        'Y' => ndarray::arr2(&[[z, -i], [i, z]]),
        'Z' => ndarray::arr2(&[[o, z], [z, -o]]),
        _ => unreachable!(),
    }
}

// Rebuilds the operator in storage order from explicit Kronecker products.
fn rebuild(terms: &[PauliTerm], sites: usize) -> Array2<C64> {
    let dim = 8usize.pow(sites as u32);
    let mut enm = Array2::<C64>::zeros((dim, dim));
    for t in terms {
        let mut m = ndarray::arr2(&[[C64::new(1.0, 0.0)]]);
        for ch in t.label.chars() {
            m = kron(&m, &pauli(ch));
        }
        enm = enm + m.mapv(|x| x * t.coeff);
    }
    let perm = QuoctBasis::default().enm_permutation_sites(sites);
    let mut out = Array2::zeros((dim, dim));
    for i in 0..dim {
        for j in 0..dim {
            out[[i, j]] = enm[[perm[i], perm[j]]];
        }
    }
    out
}

fn coeff(terms: &[PauliTerm], label: &str) -> f64 {
    terms.iter().find(|t| t.label == label).map(|t| t.coeff).unwrap_or(0.0)
}

#[test]
fn number_operator_expansion() {
    let t = pauli_decompose(&number_op()).unwrap();
    assert_eq!(t.len(), 4);
    assert!((coeff(&t, "III") - 1.5).abs() < 1e-14);
    for l in ["ZII", "IZI", "IIZ"] {
        assert!((coeff(&t, l) + 0.5).abs() < 1e-14);
    }
}

#[test]
fn casimir_expansion() {
    // (4/3) diag(0,1,1,1,1,1,1,0) = (1/3)(3 - ZZI - IZZ - ZIZ) · (2/3)·... checked term by term
    let t = pauli_decompose(&casimir()).unwrap();
    assert_eq!(t.len(), 4);
    assert!((coeff(&t, "III") - 1.0).abs() < 1e-14);
    for l in ["ZZI", "IZZ", "ZIZ"] {
        assert!((coeff(&t, l) + 1.0 / 3.0).abs() < 1e-14);
    }
    let colored: Vec<String> = t.iter().map(|x| x.colored(&QuoctBasis::default())).collect();
    assert!(colored.contains(&"Z_r0 Z_g0".to_string()));
}

#[test]
fn zero_operator_has_no_terms() {
    assert!(pauli_decompose(&QuoctOperator::zeros(1)).unwrap().is_empty());
}

#[test]
fn rejects_non_hermitian() {
    let op = quoct_algebra::annihilator(quoct_algebra::Color::R);
    assert!(pauli_decompose(&op).is_err());
}

proptest! {
    #[test]
    fn random_hermitian_round_trip(vals in proptest::collection::vec(-1.0f64..1.0, 128)) {
        let mut m = Array2::<C64>::zeros((8, 8));
        let mut k = 0;
        for i in 0..8 {
            for j in i..8 {
                let v = if i == j { C64::new(vals[k], 0.0) } else { C64::new(vals[k], vals[k + 1]) };
                k += 2;
                m[[i, j]] = v;
                m[[j, i]] = v.conj();
            }
        }
        let op = QuoctOperator::from_dense(1, &m, false).unwrap();
        let terms = pauli_decompose(&op).unwrap();
        prop_assert!(max_abs(&(rebuild(&terms, 1) - &m)) < 1e-12);
    }
}

#[test]
fn two_site_round_trip() {
    let op = &number_op().tensor(&casimir())
        + &quoct_algebra::annihilator(quoct_algebra::Color::G)
            .tensor(&quoct_algebra::creator(quoct_algebra::Color::B))
            .anticommutator(&QuoctOperator::identity(2));
    let op = &op + &op.adjoint();
    let terms = pauli_decompose(&op).unwrap();
    assert!(max_abs(&(rebuild(&terms, 2) - op.to_dense())) < 1e-12);
}
