use atom_model::AtomSpace;
use pulse_optimizer::*;
use std::f64::consts::PI;

fn khz(k: f64) -> f64 {
    2.0 * PI * k * 1e3
}

fn quick(gate: GateKind) -> OptConfig {
    OptConfig { starts: 4, ..OptConfig::for_gate(gate) }
}

#[test]
fn bad_inputs() {
    let cfg = quick(GateKind::SwapEm);
    assert_eq!(optimize(GateKind::SwapEm, 0.0, 1, &cfg).unwrap_err(), PulseError::NonPositive("Rabi frequency"));
    assert!(optimize(GateKind::SwapEm, f64::NAN, 1, &cfg).is_err());
    assert_eq!(sweep_rabi(GateKind::SwapEm, &[], 1, &cfg).unwrap_err(), PulseError::EmptyGrid);
}

#[test]
fn same_seed_same_sequence() {
    let cfg = quick(GateKind::CzEm);
    let a = optimize(GateKind::CzEm, khz(6.0), 11, &cfg).unwrap();
    let b = optimize(GateKind::CzEm, khz(6.0), 11, &cfg).unwrap();
    assert_eq!(a.sequence, b.sequence);
    assert_eq!(a.fidelity, b.fidelity);
}

#[test]
fn angles_stay_in_box() {
    let r = optimize(GateKind::ShelveEm, khz(3.0), 3, &quick(GateKind::ShelveEm)).unwrap();
    assert!(r.sequence.theta.iter().all(|t| (0.0..=2.0 * PI).contains(t)), "{:?}", r.sequence);
    assert!(r.sequence.phi.iter().all(|p| (0.0..2.0 * PI).contains(p)), "{:?}", r.sequence);
    assert!((r.gate_time - gate_time(&AtomSpace::default(), &r.sequence)).abs() < 1e-15);
}

#[test]
fn swap_at_default_rabi() {
    let g = GateKind::SwapEm;
    let cfg = OptConfig::for_gate(g);
    let r = optimize(g, g.default_rabi(), 7, &cfg).unwrap();
    assert_eq!(r.status, OptStatus::Converged);
    assert!(r.fidelity >= 0.99, "{r:?}");
    assert!(leakage(&cfg.space, &r.sequence, &g.target()) < 1e-3);
    assert!(r.gate_time < 5e-3);
}

#[test]
fn fast_drive_breaks_sideband_selectivity() {
    let g = GateKind::SwapEm;
    let cfg = quick(g);
    let r = optimize(g, cfg.space.trap_freq, 7, &cfg).unwrap();
    assert!(r.fidelity < 0.9, "{r:?}");
}

#[test]
fn sweep_trades_speed_for_fidelity() {
    let g = GateKind::CzEm;
    let pts = sweep_rabi(g, &[khz(4.0), khz(40.0)], 7, &quick(g)).unwrap();
    assert!(pts[0].gate_time > pts[1].gate_time);
    assert!(pts[0].fidelity > pts[1].fidelity, "{pts:?}");
}

#[test]
fn reference_replay_runs() {
    for g in GateKind::ALL {
        let cfg = OptConfig::for_gate(g);
        let (z, seq) = replay(g, g.default_rabi(), 1.0, &cfg);
        assert!(z.fidelity > 0.0 && z.fidelity <= 1.0 + 1e-12, "{g:?}");
        assert_eq!(seq.rabi, g.default_rabi());
    }
}
