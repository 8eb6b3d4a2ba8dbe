use dynamics::*;
use lattice_hamiltonian::{build_full, total_number_op, singlet_projector, LatticeParams};
use ndarray::{Array1, Array2};
use proptest::prelude::*;
use quoct_algebra::linalg::{c, eye, op_norm, unitarity_error, vec_norm};
use quoct_algebra::C64;

// Taylor series with scaling and squaring, independent of the eigensolver.
fn expm_oracle(h: &Array2<C64>, t: f64) -> Array2<C64> {
    let a = h.mapv(|x| x * c(0.0, -t));
    let norm = op_norm(&a).max(1e-300);
    let s = (norm.log2().ceil().max(0.0) as i32) + 4;
    let a = a.mapv(|x| x / 2f64.powi(s));
    let n = a.nrows();
    let mut sum = eye(n);
    let mut term = eye(n);
    for k in 1..30 {
        term = term.dot(&a).mapv(|x| x / k as f64);
        sum += &term;
    }
    for _ in 0..s {
        sum = sum.dot(&sum);
    }
    sum
}

fn unit(n: usize, k: usize) -> Array1<C64> {
    let mut v = Array1::zeros(n);
    v[k] = c(1.0, 0.0);
    v
}

fn params(m: f64, mu: f64, g: f64) -> LatticeParams {
    LatticeParams::new(1, 1.0, m, mu, g).unwrap()
}

#[test]
fn zero_time_is_identity() {
    let h = build_full(&params(1.0, 0.0, 1.0)).total.to_dense();
    let psi = unit(64, 5);
    assert_eq!(exact_evolve(&h, &psi, 0.0).unwrap(), psi);
}

#[test]
fn diagonal_hamiltonian_gives_phase() {
    let h = Array2::from_diag(&Array1::from(vec![c(0.3, 0.0), c(-1.2, 0.0), c(2.0, 0.0)]));
    let out = exact_evolve(&h, &unit(3, 1), 0.8).unwrap();
    assert!((out[1] - c(0.0, 1.2 * 0.8).exp()).norm() < 1e-12);
    assert!(out[0].norm() < 1e-14 && out[2].norm() < 1e-14);
}

#[test]
fn dimension_mismatch() {
    let h = eye(4);
    assert_eq!(
        exact_evolve(&h, &unit(3, 0), 1.0),
        Err(DynamicsError::DimensionMismatch { expected: 4, got: 3 })
    );
}

#[test]
fn vacuum_amplitude_matches_taylor_oracle() {
    let h = build_full(&params(1.0, 0.0, 1.0)).total.to_dense();
    let psi = exact_evolve(&h, &unit(64, 0), 1.0).unwrap();
    let oracle = expm_oracle(&h, 1.0).column(0).to_owned();
    assert!((psi[0].norm_sqr() - oracle[0].norm_sqr()).abs() < 1e-10);
    assert!((vec_norm(&psi) - 1.0).abs() < 1e-12);
}

#[test]
fn baryon_levels_are_exact() {
    for g in [0.0, 1.0, 3.0] {
        let levels = singlet_spectrum(&params(2.0, 0.2, g));
        assert_eq!(levels.len(), 6);
        for target in [6.6, 5.4] {
            assert!(
                levels.iter().any(|l| (l.energy - target).abs() < 1e-9 && (l.density - 3.0).abs() < 1e-9),
                "g={g} missing {target}"
            );
        }
    }
}

#[test]
fn projector_spectrum_agrees_with_sector_spectrum() {
    let p = params(2.0, 0.2, 1.3);
    let h = build_full(&p).total.to_dense();
    let dens = Array1::from(total_number_op(2).diagonal().iter().map(|x| x.re).collect::<Vec<_>>());
    let proj = singlet_projector(1).to_dense();
    let a = spectrum(&h, &dens, Some(&proj)).unwrap();
    let b = singlet_spectrum(&p);
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(&b) {
        assert!((x.energy - y.energy).abs() < 1e-9);
    }
}

#[test]
fn zero_coupling_spectrum_is_free() {
    let p = params(2.0, 0.2, 0.0);
    let t = build_full(&p);
    let free = (&(&t.kinetic + &t.mass) + &t.chem).to_dense();
    let dens = Array1::zeros(64);
    let a: Vec<f64> = spectrum(&t.total.to_dense(), &dens, None).unwrap().iter().map(|l| l.energy).collect();
    let b: Vec<f64> = spectrum(&free, &dens, None).unwrap().iter().map(|l| l.energy).collect();
    for (x, y) in a.iter().zip(&b) {
        assert!((x - y).abs() < 1e-10);
    }
}

#[test]
fn trotter_step_zero_dt_is_identity() {
    let t = build_full(&params(1.0, 0.0, 1.0));
    assert!(op_norm(&(&trotter_step(&t, 0.0).to_dense() - &eye(64))) < 1e-12);
}

#[test]
fn trotter_step_is_exact_for_single_term() {
    let t = build_full(&params(0.0, 0.0, 0.0));
    let exact = expm_oracle(&t.total.to_dense(), 0.37);
    assert!(op_norm(&(&trotter_step(&t, 0.37).to_dense() - &exact)) < 1e-10);
}

#[test]
fn trotter_step_is_first_order() {
    let t = build_full(&params(1.0, 0.0, 1.0));
    let h = t.total.to_dense();
    let dev = |dt: f64| op_norm(&(&trotter_step(&t, dt).to_dense() - &expm_oracle(&h, dt)));
    let u = trotter_step(&t, 0.2).to_dense();
    assert!(unitarity_error(&u) < 1e-12);
    let ratio = dev(0.2) / dev(0.1);
    assert!((3.2..=4.8).contains(&ratio), "ratio {ratio}");
}

#[test]
fn block_step_matches_full_step() {
    let p = params(1.0, 0.3, 0.8);
    let full = trotter_step(&build_full(&p), 0.25).to_dense();
    let blocks = TermBlocks::full(&p);
    let u = trotter_step_blocks(&blocks, 0.25, 0.8);
    assert!(op_norm(&(&full - &u)) < 1e-12);
    let ev = TrotterEvolver::new(&blocks);
    let psi = unit(64, 6);
    let a = ev.step(&psi, 0.25, 0.8);
    assert!(vec_norm(&(&a - &u.dot(&psi))) < 1e-12);
}

#[test]
fn norm_survives_many_steps() {
    let p = params(1.0, 0.2, 1.5);
    let blocks = TermBlocks::full(&p);
    let ev = TrotterEvolver::new(&blocks);
    let uk = ev.kinetic_propagator(0.1);
    let mut psi = unit(64, 0);
    for _ in 0..600 {
        psi = ev.step_with(&uk, &psi, 0.1, 1.5);
    }
    assert!((vec_norm(&psi) - 1.0).abs() < 1e-10);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn exact_evolution_preserves_norm(re in prop::collection::vec(-1.0f64..1.0, 64), im in prop::collection::vec(-1.0f64..1.0, 64), t in -5.0f64..5.0, g in 0.0f64..3.0) {
        let h = build_full(&params(1.0, 0.1, g)).total.to_dense();
        let mut psi: Array1<C64> = re.iter().zip(&im).map(|(&a, &b)| c(a, b)).collect();
        let n = vec_norm(&psi);
        prop_assume!(n > 1e-3);
        psi.mapv_inplace(|x| x / n);
        let out = exact_evolve(&h, &psi, t).unwrap();
        prop_assert!((vec_norm(&out) - 1.0).abs() < 1e-12);
    }
}
