use ndarray::Array2;
use quoct_algebra::linalg::max_abs;
use quoct_algebra::{annihilator, casimir, charge_op, creator, number_op, parity, Color, QuoctOperator, SiteKind, C64};

// Each basis state as the ordered creator product acting on |0>; the diquarks
// follow the cyclic order gb, br, rg.
const ORDERED: [&[usize]; 8] = [&[], &[0], &[1], &[2], &[1, 2], &[2, 0], &[0, 1], &[0, 1, 2]];

fn fock_annihilator(color: usize) -> Array2<C64> {
    let mut m = Array2::zeros((8, 8));
    for (src, list) in ORDERED.iter().enumerate() {
        if let Some(p) = list.iter().position(|&c| c == color) {
            let rest: Vec<usize> = list.iter().copied().filter(|&c| c != color).collect();
            let dst = ORDERED
                .iter()
                .position(|l| l.len() == rest.len() && rest.iter().all(|c| l.contains(c)))
                .unwrap();
            // reorder `rest` into the stored order, counting transpositions
            let mut cur = rest.clone();
            let mut swaps = p;
            for k in 0..cur.len() {
                let j = cur.iter().position(|&c| c == ORDERED[dst][k]).unwrap();
                if j != k {
                    cur.swap(j, k);
                    swaps += 1;
                }
            }
            let sign = if swaps % 2 == 0 { 1.0 } else { -1.0 };
            m[[dst, src]] = C64::new(sign, 0.0);
        }
    }
    m
}

fn basis(i: usize) -> ndarray::Array1<C64> {
    let mut v = ndarray::Array1::zeros(8);
    v[i] = C64::new(1.0, 0.0);
    v
}

#[test]
fn annihilators_match_ordered_fock_construction() {
    for (k, c) in Color::ALL.into_iter().enumerate() {
        let diff = max_abs(&(annihilator(c).to_dense() - fock_annihilator(k)));
        assert_eq!(diff, 0.0, "color {c}");
    }
}

#[test]
fn annihilator_examples() {
    let cr = annihilator(Color::R);
    let out = cr.apply(&basis(1));
    assert_eq!(out[0], C64::new(1.0, 0.0));
    let out = cr.apply(&basis(5));
    assert_eq!(out[3], C64::new(-1.0, 0.0));
    let out = annihilator(Color::G).apply(&basis(0));
    assert!(out.iter().all(|x| x.norm() == 0.0));
}

#[test]
fn diagonal_fixtures() {
    let p: Vec<f64> = parity().diagonal().iter().map(|x| x.re).collect();
    assert_eq!(p, vec![1.0, -1.0, -1.0, -1.0, 1.0, 1.0, 1.0, -1.0]);
    let m: Vec<f64> = number_op().diagonal().iter().map(|x| x.re).collect();
    assert_eq!(m, vec![0.0, 1.0, 1.0, 1.0, 2.0, 2.0, 2.0, 3.0]);
    let q = casimir().diagonal();
    for (i, v) in q.iter().enumerate() {
        let want = if i == 0 || i == 7 { 0.0 } else { 4.0 / 3.0 };
        assert!((v.re - want).abs() < 1e-14);
    }
}

#[test]
fn parity_is_zzz_in_enm_order() {
    let b = quoct_algebra::QuoctBasis::default();
    let p = parity().permuted(&b.enm_permutation());
    for k in 0..8 {
        let want = if (k as u32).count_ones() % 2 == 0 { 1.0 } else { -1.0 };
        assert_eq!(p.get(k, k).re, want);
    }
}

#[test]
fn number_is_sum_of_occupations() {
    let mut acc = QuoctOperator::zeros(1);
    for c in Color::ALL {
        acc = &acc + &creator(c).dot(&annihilator(c));
    }
    assert!(acc.max_abs_diff(&number_op()) < 1e-15);
}

#[test]
fn charge_examples() {
    let q3 = charge_op(3, SiteKind::Even).unwrap();
    let d: Vec<f64> = q3.diagonal()[1..4].iter().map(|x| x.re).collect();
    assert_eq!(d, vec![0.5, -0.5, 0.0]);
    for a in 1..=8 {
        let q = charge_op(a, SiteKind::Even).unwrap();
        assert!(q.apply(&basis(7)).iter().all(|x| x.norm() == 0.0));
        assert!(q.apply(&basis(0)).iter().all(|x| x.norm() == 0.0));
    }
    assert!(charge_op(0, SiteKind::Even).is_err());
    assert!(charge_op(9, SiteKind::Odd).is_err());
}

#[test]
fn charge_from_bilinear_matches_block_form() {
    let gm = quoct_algebra::GellMannSet::new();
    let cs: Vec<_> = Color::ALL.iter().map(|&c| annihilator(c)).collect();
    for a in 1..=8 {
        let mut q = QuoctOperator::zeros(1);
        for i in 0..3 {
            for j in 0..3 {
                let t = gm.t[a - 1][[i, j]];
                if t.norm() > 0.0 {
                    q = &q + &cs[i].adjoint().dot(&cs[j]).scale(t);
                }
            }
        }
        let want = charge_op(a, SiteKind::Even).unwrap();
        assert!(q.max_abs_diff(&want) < 1e-15, "a = {a}");
    }
}

#[test]
fn casimir_is_sum_of_squares() {
    for kind in [SiteKind::Even, SiteKind::Odd] {
        let mut acc = QuoctOperator::zeros(1);
        for a in 1..=8 {
            let q = charge_op(a, kind).unwrap();
            acc = &acc + &q.dot(&q);
        }
        assert!(acc.max_abs_diff(&casimir()) < 1e-14);
    }
}

#[test]
fn gell_mann_normalization_and_structure_constants() {
    let gm = quoct_algebra::GellMannSet::new();
    for a in 0..8 {
        for b in 0..8 {
            let tr: C64 = gm.t[a].dot(&gm.t[b]).diag().sum();
            let want = if a == b { 0.5 } else { 0.0 };
            assert!((tr - C64::new(want, 0.0)).norm() < 1e-15);
            for c in 0..8 {
                assert!((gm.f[a][b][c] + gm.f[b][a][c]).abs() < 1e-15);
            }
        }
    }
    // f^{123} = 1, f^{458} = f^{678} = √3/2
    assert!((gm.f[0][1][2] - 1.0).abs() < 1e-14);
    assert!((gm.f[3][4][7] - 3f64.sqrt() / 2.0).abs() < 1e-14);
    assert!((gm.f[5][6][7] - 3f64.sqrt() / 2.0).abs() < 1e-14);
    assert!((gm.f[0][3][6] - 0.5).abs() < 1e-14);
}
