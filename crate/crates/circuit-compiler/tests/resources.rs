use circuit_compiler::*;
use lattice_hamiltonian::LatticeParams;
use proptest::prelude::*;
use quoct_algebra::QuoctBasis;

fn step() -> Circuit {
    let p = LatticeParams::new(1, 1.0, 1.0, 0.0, 1.0).unwrap();
    compile_trotter_step(&p, 0.3, &QuoctBasis::default()).unwrap()
}

fn calibrated() -> ResourceModel {
    ResourceModel::default().calibrated(&step(), 0.691).unwrap()
}

#[test]
fn calibrated_step_fidelity_and_repeats() {
    let e = estimate_resources(&step(), &calibrated()).unwrap();
    assert!((e.fidelity - 0.691).abs() < 1e-9);
    assert!((e.repeated(3) - 0.330).abs() < 0.002);
    assert!((e.repeated(10) - 0.025).abs() < 0.001);
    assert!((e.duration - 0.1).abs() < 0.01, "{}", e.duration);
    let f = calibrated().gates[INTER_QUOCT].fidelity;
    assert!(f > 0.0 && f <= 1.0);
}

#[test]
fn empty_circuit_is_free() {
    let e = estimate_resources(&Circuit::new(2), &ResourceModel::default()).unwrap();
    assert_eq!((e.fidelity, e.duration), (1.0, 0.0));
}

#[test]
fn unknown_gate_is_reported() {
    let mut m = ResourceModel::default();
    m.gates.remove("CCZ");
    assert_eq!(estimate_resources(&step(), &m), Err(CompileError::UnknownGate("CCZ".into())));
}

#[test]
fn gate_count_is_stable() {
    let a = step();
    assert_eq!(a.histogram(), step().histogram());
    assert_eq!(a.histogram()[INTER_QUOCT], 12);
}

#[test]
fn text_round_trip() {
    let c = step();
    let back = Circuit::from_text(&c.to_text()).unwrap();
    assert_eq!(back, c);
    assert!(Circuit::from_text("quocts 1 phase 0.0\nX_m 0\n").is_err());
    assert!(Circuit::from_text("quocts 1 phase 0.0\nCantiCZ 0,1\n").is_err());
    assert!(Circuit::from_text("quocts 2 phase 0.0\nCantiCZ 0,1\nZ_m 1 0.25\n").is_ok());
}

proptest! {
    #[test]
    fn estimates_multiply(split in 0usize..131, alpha in -3.0f64..3.0) {
        let full = step();
        let cut = split.min(full.len());
        let mut head = Circuit::new(2);
        head.gates = full.gates[..cut].to_vec();
        let mut tail = Circuit::new(2);
        tail.gates = full.gates[cut..].to_vec();
        let m = calibrated();
        let (eh, et, ef) = (
            estimate_resources(&head, &m).unwrap(),
            estimate_resources(&tail, &m).unwrap(),
            estimate_resources(&full, &m).unwrap(),
        );
        prop_assert!((eh.fidelity * et.fidelity - ef.fidelity).abs() < 1e-12);
        prop_assert!((eh.duration + et.duration - ef.duration).abs() < 1e-12);
        let q = exp_q1_circuit(alpha);
        prop_assert!(q.gates.iter().all(Gate::is_native));
    }
}
