use ndarray::Array2;
use proptest::prelude::*;
use quoct_algebra::linalg::c;
use quoct_algebra::C64;
use readout_search::*;

fn trace(r: &Array2<C64>) -> f64 {
    (0..DIM).map(|i| r[[i, i]].re).sum()
}

fn random_density(re: &[f64], im: &[f64]) -> Array2<C64> {
    let psi: Vec<C64> = re.iter().zip(im).map(|(&a, &b)| c(a, b)).collect();
    let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    Array2::from_shape_fn((DIM, DIM), |(i, j)| psi[i] * psi[j].conj() / (norm * norm))
}

fn close(a: &Array2<C64>, b: &Array2<C64>) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).norm() < 1e-12)
}

#[test]
fn ground_state_is_bright() {
    let (b, d) = e_readout(&basis_density(0, 0, 0));
    assert!((b.probability - 1.0).abs() < 1e-12 && d.probability.abs() < 1e-12);
    let (b, _) = n_partial_readout(&basis_density(0, 1, 0));
    assert!(b.probability.abs() < 1e-12);
    let (b, _) = e_readout(&basis_density(1, 0, 0));
    assert!(b.probability.abs() < 1e-12);
}

#[test]
fn scrambling_spreads_motion_but_keeps_n() {
    let s = scramble(&basis_density(0, 1, 0));
    for m in 0..3 {
        let i = state_index(0, 1, m);
        assert!((s[[i, i]].re - 1.0 / 3.0).abs() < 1e-12);
        assert!(s[[state_index(0, 0, m), state_index(0, 0, m)]].norm() < 1e-12);
    }
}

#[test]
fn shelved_states_are_fixed_points_of_the_dark_branch() {
    for (n, m) in [(0, 0), (1, 1), (0, 2), (1, 2)] {
        let rho = basis_density(1, n, m);
        let (_, d) = e_readout(&rho);
        assert!((d.probability - 1.0).abs() < 1e-12);
        assert!(close(&d.state, &rho));
    }
}

proptest! {
    #[test]
    fn branches_preserve_trace(re in prop::collection::vec(-1.0f64..1.0, DIM), im in prop::collection::vec(-1.0f64..1.0, DIM)) {
        prop_assume!(re.iter().chain(&im).map(|x| x * x).sum::<f64>() > 1e-3);
        let rho = random_density(&re, &im);
        for (b, d) in [e_readout(&rho), n_partial_readout(&rho)] {
            prop_assert!((b.probability + d.probability - 1.0).abs() < 1e-10);
            if b.probability > 1e-9 { prop_assert!((trace(&b.state) - 1.0).abs() < 1e-10); }
            if d.probability > 1e-9 { prop_assert!((trace(&d.state) - 1.0).abs() < 1e-10); }
        }
    }

    #[test]
    fn scrambling_is_idempotent(re in prop::collection::vec(-1.0f64..1.0, DIM), im in prop::collection::vec(-1.0f64..1.0, DIM)) {
        prop_assume!(re.iter().chain(&im).map(|x| x * x).sum::<f64>() > 1e-3);
        let once = scramble(&random_density(&re, &im));
        prop_assert!(close(&scramble(&once), &once));
        prop_assert!((trace(&once) - 1.0).abs() < 1e-10);
    }

    #[test]
    fn alphabet_gates_are_unitary(k in 0usize..18) {
        let a = gate_alphabet();
        let u = a[k % a.len()].unitary();
        let p = u.t().mapv(|z| z.conj()).dot(&u);
        prop_assert!(close(&p, &Array2::eye(DIM)));
    }
}
