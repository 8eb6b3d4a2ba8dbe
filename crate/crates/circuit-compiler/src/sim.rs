use ndarray::Array2;
use quoct_algebra::linalg::c;
use quoct_algebra::{QuoctBasis, C64};

use crate::ir::{Circuit, Gate, GateName, Slot};

fn bit(k: usize, s: Slot) -> usize {
    (k >> (2 - s.index())) & 1
}

fn flip(k: usize, s: Slot) -> usize {
    k ^ (1 << (2 - s.index()))
}

/// Images of |k⟩ (e n m bits, e most significant) under an intra-quoct gate.
fn local_column(g: &Gate, k: usize) -> Vec<(usize, C64)> {
    use GateName::*;
    let s = &g.slots;
    let one = c(1.0, 0.0);
    let r = std::f64::consts::FRAC_1_SQRT_2;
    match g.name {
        X => vec![(flip(k, s[0]), one)],
        H => {
            let sign = if bit(k, s[0]) == 1 { -r } else { r };
            let k0 = k & !(1 << (2 - s[0].index()));
            vec![(k0, c(r, 0.0)), (flip(k0, s[0]), c(sign, 0.0))]
        }
        Z => {
            let a = g.angle.unwrap_or(0.0);
            vec![(k, if bit(k, s[0]) == 1 { c(0.0, a).exp() } else { one })]
        }
        Cnot => vec![(if bit(k, s[0]) == 1 { flip(k, s[1]) } else { k }, one)],
        Swap => {
            let t = if bit(k, s[0]) != bit(k, s[1]) { flip(flip(k, s[0]), s[1]) } else { k };
            vec![(t, one)]
        }
        Cz => vec![(k, if bit(k, s[0]) & bit(k, s[1]) == 1 { -one } else { one })],
        Ccz => vec![(k, if k == 7 { -one } else { one })],
        RotSwap => {
            let a = g.angle.unwrap_or(0.0);
            let sign = if bit(k, Slot::M) == 1 { -1.0 } else { 1.0 };
            let swapped = if bit(k, Slot::E) != bit(k, Slot::N) { flip(flip(k, Slot::E), Slot::N) } else { k };
            vec![(k, c((a / 2.0).cos(), 0.0)), (swapped, c(0.0, -(a / 2.0).sin() * sign))]
        }
        CantiCz => unreachable!("inter-quoct gate"),
    }
}

/// Full unitary of one gate on `n_quocts` quocts in the |e n m⟩ product
/// basis, quoct 0 the most significant digit.
pub fn gate_unitary(g: &Gate, n_quocts: usize) -> Array2<C64> {
    let dim = 8usize.pow(n_quocts as u32);
    let digit = |i: usize, q: usize| (i / 8usize.pow((n_quocts - 1 - q) as u32)) % 8;
    let with_digit = |i: usize, q: usize, v: usize| {
        let p = 8usize.pow((n_quocts - 1 - q) as u32);
        i - digit(i, q) * p + v * p
    };
    let mut u = Array2::zeros((dim, dim));
    for j in 0..dim {
        if g.name == GateName::CantiCz {
            let (a, b) = (digit(j, g.quoct), digit(j, g.partner.expect("partner")));
            let hit = bit(a, Slot::E) == 1 && bit(a, Slot::N) == 0 && bit(b, Slot::E) == 1;
            u[[j, j]] = c(if hit { -1.0 } else { 1.0 }, 0.0);
            continue;
        }
        for (k, amp) in local_column(g, digit(j, g.quoct)) {
            u[[with_digit(j, g.quoct, k), j]] += amp;
        }
    }
    u
}

/// Product of the gates (later gates on the left) times the global phase.
pub fn circuit_unitary(circuit: &Circuit) -> Array2<C64> {
    let dim = 8usize.pow(circuit.n_quocts as u32);
    let mut u: Array2<C64> = Array2::eye(dim);
    for g in &circuit.gates {
        u = gate_unitary(g, circuit.n_quocts).dot(&u);
    }
    let ph = c(0.0, circuit.global_phase).exp();
    u.mapv_inplace(|x| x * ph);
    u
}

/// [`circuit_unitary`] re-indexed into the lattice storage basis.
pub fn circuit_unitary_storage(circuit: &Circuit, basis: &QuoctBasis) -> Array2<C64> {
    let u = circuit_unitary(circuit);
    let p = basis.enm_permutation_sites(circuit.n_quocts);
    Array2::from_shape_fn(u.dim(), |(i, j)| u[[p[i], p[j]]])
}
