use lattice_hamiltonian::*;
use quoct_algebra::linalg::max_abs;
use quoct_algebra::{QuoctOperator, C64};

fn check_symmetries(l: usize) {
    let p = LatticeParams::new(l, 1.0, 1.0, 0.2, 0.7).unwrap();
    let h = build_full(&p).total;
    let nb = baryon_number_op(l);
    assert!(h.commutator(&nb).max_abs() < 1e-10);
    for a in 1..=8 {
        let q = total_charge(2 * l, a);
        assert!(h.commutator(&q).max_abs() < 1e-10, "L={l} a={a}");
    }
}

#[test]
fn symmetries_l1() {
    check_symmetries(1);
}

#[test]
fn symmetries_l2() {
    check_symmetries(2);
}

#[test]
fn charges_on_distinct_sites_commute_l2() {
    let q = site_charges(4);
    for m in 0..4 {
        for mp in 0..4 {
            if m == mp {
                continue;
            }
            for a in [0, 3, 7] {
                for b in [1, 2, 6] {
                    assert!(q[m][a].commutator(&q[mp][b]).max_abs() < 1e-14);
                }
            }
        }
    }
}

#[test]
fn singlet_projector_l1() {
    let p = singlet_projector(1);
    let d = p.to_dense();
    let rank: f64 = d.diag().iter().map(|x| x.re).sum();
    assert!((rank - 6.0).abs() < 1e-9);
    assert!(max_abs(&(d.dot(&d) - &d)) < 1e-12);
    assert!(p.is_hermitian(1e-12));
    let baryon = 7 * 8;
    assert!((p.get(baryon, baryon) - C64::new(1.0, 0.0)).norm() < 1e-12);
    // projector kills what the Casimir sees and keeps what it does not
    let cas = total_casimir(2);
    assert!(cas.dot(&p).max_abs() < 1e-9);
}

#[test]
fn sectors_partition_and_block_hamiltonian() {
    for l in [1, 2] {
        let secs = hamiltonian_sectors(l);
        let total: usize = secs.iter().map(|s| s.dim()).sum();
        assert_eq!(total, 8usize.pow(2 * l as u32));
        let p = LatticeParams::new(l, 1.0, 1.0, 0.2, 0.7).unwrap();
        let h = build_full(&p).total;
        let mut sec_of = vec![0; total];
        for (k, s) in secs.iter().enumerate() {
            for &i in &s.indices {
                sec_of[i] = k;
            }
        }
        for (i, row) in h.matrix().outer_iterator().enumerate() {
            for (j, v) in row.iter() {
                if v.norm() > 1e-14 {
                    assert_eq!(sec_of[i], sec_of[j]);
                }
            }
        }
    }
}

#[test]
fn l2_single_baryon_singlets() {
    let secs = hamiltonian_sectors(2);
    let s = secs.iter().find(|s| s.key.baryon3 == 3 && s.key.is_color_neutral()).unwrap();
    let v = singlet_basis(2, &s.indices);
    assert_eq!(v.ncols(), 20);
    let _ = QuoctOperator::identity(1);
}
