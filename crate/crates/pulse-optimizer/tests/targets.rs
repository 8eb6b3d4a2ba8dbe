use atom_model::{propagate, AtomSpace};
use pulse_optimizer::*;
use quoct_algebra::linalg::{c, max_abs, unitarity_error};
use std::f64::consts::PI;

fn pos(t: &GateTarget, l: (usize, usize, usize)) -> usize {
    t.labels.iter().position(|&x| x == l).unwrap()
}

#[test]
fn targets_are_unitary() {
    for g in GateKind::ALL {
        assert!(unitarity_error(&g.target().u0) < 1e-15, "{g:?}");
    }
}

#[test]
fn swap_exchanges_electron_and_motion() {
    let t = GateTarget::swap_em();
    for n in 0..2 {
        assert_eq!(t.u0[[pos(&t, (1, n, 0)), pos(&t, (0, n, 1))]], c(1.0, 0.0));
        assert_eq!(t.u0[[pos(&t, (0, n, 1)), pos(&t, (1, n, 0))]], c(1.0, 0.0));
        assert_eq!(t.u0[[pos(&t, (1, n, 1)), pos(&t, (1, n, 1))]], c(1.0, 0.0));
    }
    assert!(max_abs(&(t.u0.dot(&t.u0) - ndarray::Array2::<quoct_algebra::C64>::eye(8))) < 1e-15);
}

#[test]
fn phase_gates_flip_one_sign_per_block() {
    let cz = GateTarget::cz_em();
    let ccz = GateTarget::ccz();
    let neg = |t: &GateTarget| t.labels.iter().enumerate().filter(|(i, _)| t.u0[[*i, *i]].re < 0.0).map(|(_, l)| *l).collect::<Vec<_>>();
    assert_eq!(neg(&cz), vec![(1, 0, 1), (1, 1, 1)]);
    assert_eq!(neg(&ccz), vec![(1, 1, 1)]);
}

#[test]
fn shelve_moves_one_motional_quantum_out() {
    let t = GateTarget::shelve_em();
    assert_eq!(t.dim(), 10);
    for n in 0..2 {
        assert_eq!(t.u0[[pos(&t, (1, n, 2)), pos(&t, (0, n, 1))]].norm(), 1.0);
        assert_eq!(t.u0[[pos(&t, (0, n, 1)), pos(&t, (1, n, 2))]], c(-1.0, 0.0));
        for l in [(0, n, 0), (1, n, 0), (1, n, 1)] {
            assert_eq!(t.u0[[pos(&t, l), pos(&t, l)]], c(1.0, 0.0));
        }
    }
    assert!(t.labels.iter().filter(|l| l.2 == 2).all(|l| l.0 == 1));
}

#[test]
fn family_matches_direct_propagation() {
    let space = AtomSpace::default();
    for g in GateKind::ALL {
        let fam = PulseFamily::compensated(space, 2.0 * PI * 8e3, g.sideband(), g.polarization());
        let (th, ph) = ([1.1, 4.0, 0.3], [0.2, 2.5, 5.9]);
        let seq = fam.sequence(th, ph);
        let direct = propagate(&space, &seq.drives());
        assert!(max_abs(&(fam.unitary(&th, &ph) - direct)) < 1e-10, "{g:?}");
    }
}

#[test]
fn gate_time_is_inverse_in_rabi() {
    let space = AtomSpace::default();
    let g = GateKind::SwapEm;
    let a = PulseFamily::compensated(space, 2.0 * PI * 5e3, g.sideband(), g.polarization()).sequence([1.0, 2.0, 3.0], [0.0; 3]);
    let b = PulseSequence { rabi: a.rabi * 3.0, ..a };
    assert_eq!(gate_time(&space, &a) / gate_time(&space, &b), 3.0);
    let rate = a.rabi * atom_model::sideband_matrix_element(1, 0, space.eta);
    assert!((gate_time(&space, &a) - 6.0 / rate).abs() < 1e-15);
}

#[test]
fn normalized_angles() {
    let s = PulseFamily::compensated(AtomSpace::default(), 1e4, atom_model::Sideband::Red, atom_model::Polarization::Pi)
        .sequence([7.0, 0.5, 2.0], [-1.0, 13.0, 0.0])
        .normalized();
    for a in &s.phi {
        assert!((0.0..2.0 * PI).contains(a));
    }
    assert_eq!(s.theta, [7.0, 0.5, 2.0]);
}

#[test]
fn gate_names() {
    for g in GateKind::ALL {
        assert_eq!(GateKind::parse(g.name()), Some(g));
    }
    assert_eq!(GateKind::parse("shelve"), Some(GateKind::ShelveEm));
    assert_eq!(GateKind::parse("toffoli"), None);
    let r = reference_sequence(GateKind::Ccz);
    assert_eq!(r.beta, Some(1.966));
}
