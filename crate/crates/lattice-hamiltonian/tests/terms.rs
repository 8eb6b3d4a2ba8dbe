use ndarray::{Array1, Array2};
use lattice_hamiltonian::*;
use quoct_algebra::linalg::{eigh, kron, max_abs};
use quoct_algebra::{annihilator, casimir, creator, number_op, parity, Color, QuoctOperator, C64};

fn dense(op: &QuoctOperator) -> Array2<C64> {
    op.to_dense()
}

fn ket(sites: &[usize]) -> Array1<C64> {
    let mut idx = 0;
    for &s in sites {
        idx = idx * 8 + s;
    }
    let mut v = Array1::zeros(8usize.pow(sites.len() as u32));
    v[idx] = C64::new(1.0, 0.0);
    v
}

fn p1(a: f64, m: f64, mu: f64, g: f64) -> LatticeParams {
    LatticeParams::new(1, a, m, mu, g).unwrap()
}

#[test]
fn kinetic_l1_matches_two_site_formula() {
    let a = 0.7;
    let h = build_kinetic(&p1(a, 1.0, 0.0, 1.0));
    let mut want = Array2::<C64>::zeros((64, 64));
    let p = dense(&parity());
    for c in Color::ALL {
        let cd = dense(&creator(c));
        let cc = dense(&annihilator(c));
        want = want + kron(&cd.dot(&p), &cd) - kron(&cc.dot(&p), &cc);
    }
    want.mapv_inplace(|x| x / (2.0 * a));
    assert!(max_abs(&(dense(&h) - want)) < 1e-15);
}

#[test]
fn kinetic_examples() {
    let h = build_kinetic(&p1(1.0, 1.0, 0.0, 1.0));
    let r = 1;
    assert!((h.get(r * 8 + r, 0) - C64::new(0.5, 0.0)).norm() < 1e-15);
    // a full quark site next to an empty antiquark site can neither create nor annihilate a pair
    let out = h.apply(&ket(&[7, 0]));
    assert!(out.iter().all(|x| x.norm() < 1e-15));
    let out = h.apply(&ket(&[0, 7]));
    assert!(out.iter().all(|x| x.norm() < 1e-15));
    // two full sites still pair-annihilate
    let out = h.apply(&ket(&[7, 7]));
    assert!(out.iter().any(|x| x.norm() > 0.1));
    assert!(h.is_hermitian(1e-12));
    assert!(h.trace().norm() < 1e-15);
}

#[test]
fn mass_chem_examples() {
    let p = p1(1.0, 2.0, 0.2, 1.0);
    let (mass, chem) = build_mass_chem(&p);
    let tot = &mass + &chem;
    assert!((tot.get(7 * 8, 7 * 8).re - 6.6).abs() < 1e-12);
    assert!((tot.get(7, 7).re - 5.4).abs() < 1e-12);
    assert!(mass.is_diagonal() && chem.is_diagonal());
    let (_, chem0) = build_mass_chem(&p1(1.0, 2.0, 0.0, 1.0));
    assert_eq!(chem0.max_abs(), 0.0);
}

#[test]
fn electric_l1_is_local_casimir() {
    let (a, g) = (1.3, 0.8);
    let e = build_electric(&p1(a, 1.0, 0.0, g));
    let want = casimir().tensor(&QuoctOperator::identity(1)).scale_re(a * g * g / 2.0);
    assert!(e.max_abs_diff(&want) < 1e-14);
    let e1 = build_electric(&p1(1.0, 1.0, 0.0, 1.0));
    for s in 0..8 {
        assert!((e1.get(8 + s, 8 + s).re - 2.0 / 3.0).abs() < 1e-14);
    }
    assert_eq!(build_electric(&p1(1.0, 1.0, 0.0, 0.0)).max_abs(), 0.0);
    assert_eq!(charge_pair_count(2), 3);
    assert_eq!(charge_pair_count(1), 0);
}

#[test]
fn electric_l2_matches_nested_flux_sum() {
    // H_E = (ag²/2) Σ_{n ≤ 2L-2} (Σ_{m ≤ n} Q_m)², built from the flux on each link
    let p = LatticeParams::new(2, 0.9, 1.0, 0.0, 1.1).unwrap();
    let q = site_charges(4);
    let mut want = QuoctOperator::zeros(4);
    for n in 0..=2 {
        for a in 0..8 {
            let mut flux = QuoctOperator::zeros(4);
            for m in 0..=n {
                flux = &flux + &q[m][a];
            }
            want = &want + &flux.dot(&flux);
        }
    }
    let want = want.scale_re(p.a * p.g * p.g / 2.0);
    assert!(build_electric(&p).max_abs_diff(&want) < 1e-12);
}

#[test]
fn penalty_examples() {
    let p = p1(1.0, 1.0, 0.0, 1.0).with_penalty(2.0).unwrap();
    let w = build_penalty(&p);
    assert!(w.apply(&ket(&[0, 0])).iter().all(|x| x.norm() < 1e-14));
    let out = w.apply(&ket(&[1, 0]));
    assert!(out.iter().any(|x| x.norm() > 0.1));
    // quark of color c paired with the antiquark state |c> on the odd site
    let mut s = Array1::<C64>::zeros(64);
    for c in 1..4 {
        s = s + ket(&[c, c]).mapv(|x| x / 3f64.sqrt());
    }
    assert!(max_abs(&w.apply(&s).insert_axis(ndarray::Axis(1))) < 1e-14);
    let (vals, _) = eigh(&dense(&w));
    assert!(vals[0] > -1e-10);
}

#[test]
fn full_assembly() {
    let t = build_full(&p1(1.0, 1.0, 0.0, 1.0));
    let d = dense(&t.total);
    assert_eq!(d.nrows(), 64);
    assert!(t.total.is_hermitian(1e-12));
    assert!(d.iter().all(|x| x.im.abs() < 1e-15));
    let sum = &(&(&(&t.kinetic + &t.mass) + &t.chem) + &t.electric) + &t.penalty;
    assert!(sum.max_abs_diff(&t.total) < 1e-14);
    let t0 = build_full(&p1(1.0, 1.0, 0.3, 0.0));
    let kmc = &(&t0.kinetic + &t0.mass) + &t0.chem;
    assert!(kmc.max_abs_diff(&t0.total) < 1e-14);
}

#[test]
fn baryon_number_examples() {
    let nb = baryon_number_op(1);
    assert!((nb.get(7 * 8, 7 * 8).re - 1.0).abs() < 1e-15);
    assert!((nb.get(7, 7).re + 1.0).abs() < 1e-15);
    assert_eq!(nb.get(0, 0).re, 0.0);
    let _ = number_op();
}

#[test]
fn hermitian_terms_l2() {
    let p = LatticeParams::new(2, 1.0, 1.0, 0.2, 0.7).unwrap().with_penalty(0.5).unwrap();
    let t = build_full(&p);
    for (name, op) in [
        ("kinetic", &t.kinetic),
        ("mass", &t.mass),
        ("chem", &t.chem),
        ("electric", &t.electric),
        ("penalty", &t.penalty),
    ] {
        assert!(op.is_hermitian(1e-10), "{name}");
    }
    assert_eq!(t.total.dim(), 4096);
}

#[test]
fn params_validation() {
    assert!(LatticeParams::new(0, 1.0, 1.0, 0.0, 1.0).is_err());
    assert!(LatticeParams::new(1, 0.0, 1.0, 0.0, 1.0).is_err());
    assert!(LatticeParams::new(1, 1.0, 1.0, 0.0, -1.0).is_err());
    assert!(LatticeParams::new(1, 1.0, 1.0, 0.0, 1.0).unwrap().with_penalty(-1.0).is_err());
}
