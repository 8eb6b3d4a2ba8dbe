use dynamics::*;
use lattice_hamiltonian::LatticeParams;
use ndarray::Array1;
use quoct_algebra::linalg::{c, vec_norm};
use quoct_algebra::C64;

#[test]
fn single_segment_schedule_is_linear_in_g_squared() {
    let spec = AdiabaticSpec::uniform(0.5, 2.0, 10.0, 4);
    let s = coupling_schedule(&spec);
    assert_eq!(s.len(), 5);
    for (j, g) in s.iter().enumerate() {
        let want = 0.25 + j as f64 / 4.0 * (4.0 - 0.25);
        assert!((g * g - want).abs() < 1e-12);
    }
    assert!((spec.dt() - 2.5).abs() < 1e-15);
}

#[test]
fn segments_split_the_ramp() {
    let segs = vec![Segment { fraction: 0.5, steps: 2 }, Segment { fraction: 0.5, steps: 4 }];
    let s = coupling_schedule(&AdiabaticSpec::segmented(0.0, 1.0, 6.0, segs));
    let g2: Vec<f64> = s.iter().map(|g| g * g).collect();
    let want = [0.0, 0.25, 0.5, 0.625, 0.75, 0.875, 1.0];
    for (a, b) in g2.iter().zip(want) {
        assert!((a - b).abs() < 1e-12);
    }
}

#[test]
fn invalid_specs() {
    let bad = AdiabaticSpec::segmented(0.0, 1.0, 1.0, vec![Segment { fraction: 0.7, steps: 3 }]);
    assert!(bad.validate().is_err());
    assert!(AdiabaticSpec::uniform(0.0, 1.0, 0.0, 3).validate().is_err());
    assert!(AdiabaticSpec::uniform(0.0, 1.0, 1.0, 0).validate().is_err());
}

#[test]
fn constant_coupling_is_plain_trotter() {
    let p = LatticeParams::new(1, 1.0, 1.0, 0.1, 1.2).unwrap();
    let blocks = TermBlocks::full(&p);
    let mut psi = Array1::<C64>::zeros(64);
    psi[0] = c(1.0, 0.0);
    let traj = adiabatic_evolve(&blocks, &AdiabaticSpec::uniform(1.2, 1.2, 3.0, 30), &psi).unwrap();
    let ev = TrotterEvolver::new(&blocks);
    let mut want = psi.clone();
    for _ in 0..30 {
        want = ev.step(&want, 0.1, 1.2);
    }
    let got = &traj.last().unwrap().state;
    assert!(vec_norm(&(got - &want)) < 1e-12);
    assert_eq!(traj.len(), 31);
}

#[test]
fn string_breaking_reaches_two_baryons() {
    let sc = AdiabaticScenario::default_string_breaking();
    assert_eq!(sc.spec.total_steps(), 250);
    assert_eq!(sc.singlets.ncols(), 4);
    let pts = sc.run(4).unwrap();
    let last = pts.last().unwrap();
    assert!(last.overlap >= 0.99, "overlap {}", last.overlap);
    assert!((pts[0].evolved - 2.0).abs() < 0.15);
    assert!((last.evolved - 6.0).abs() < 0.15);
    let sampled: Vec<f64> = unit_time_samples(&pts).iter().map(|p| p.evolved).collect();
    assert!(max_drawdown(&sampled) < 0.15);
    for p in &pts {
        assert!((p.evolved - p.evolved.clamp(0.0, 6.0)).abs() < 1e-12);
    }
}

#[test]
fn slower_ramp_is_more_adiabatic() {
    let p = LatticeParams::new(1, 1.0, 1.0, 0.0, 0.0).unwrap();
    let overlap = |t: f64, d: usize| {
        let sc = AdiabaticScenario::string_breaking(&p, AdiabaticSpec::uniform(0.0, 3.0, t, d));
        sc.run(1).unwrap().last().unwrap().overlap
    };
    let (fast, slow) = (overlap(5.0, 250), overlap(20.0, 2000));
    assert!(slow >= fast - 1e-6, "{fast} {slow}");
}

#[test]
fn nonlocal_density_examples() {
    let mut psi = Array1::<C64>::zeros(4096);
    // |r⟩₀ |∅⟩₁ |gb⟩₂ |∅⟩₃ with labels r = 1, gb = 4
    psi[512 + 4 * 8] = c(1.0, 0.0);
    assert_eq!(nonlocal_baryon_density(&psi).unwrap(), 1.0);
    let mut local = Array1::<C64>::zeros(4096);
    local[7 * 512] = c(1.0, 0.0);
    assert_eq!(nonlocal_baryon_density(&local).unwrap(), 0.0);
    assert!(nonlocal_baryon_density(&Array1::zeros(64)).is_err());
}

#[test]
fn baryon_localizes_at_strong_coupling() {
    let sc = AdiabaticScenario::default_baryon_size();
    assert_eq!(sc.singlets.ncols(), 20);
    let pts = sc.run(1).unwrap();
    assert!(pts[0].evolved > 0.5, "start {}", pts[0].evolved);
    assert!(pts.last().unwrap().evolved < 0.1, "end {}", pts.last().unwrap().evolved);
    assert!(pts.last().unwrap().tracked < 0.01);
}
