use std::f64::consts::PI;

use lattice_hamiltonian::LatticeParams;
use ndarray::Array2;
use quoct_algebra::linalg::c;
use quoct_algebra::{annihilator, Color, QuoctBasis, C64};

use crate::build::Builder;
use crate::ir::{Circuit, Slot};
use crate::CompileError;

fn slot_of(basis: &QuoctBasis, color: Color) -> Slot {
    Slot::from_index(basis.enm_map()[color.index()])
}

/// Occupations of the two other colors (as slots) for which c̃_color
/// carries a minus sign.
fn sign_patterns(basis: &QuoctBasis, color: Color) -> Vec<[(Slot, bool); 2]> {
    let a = annihilator(color).to_dense();
    let others: Vec<Color> = Color::ALL.into_iter().filter(|&o| o != color).collect();
    let mut out = Vec::new();
    for j in 0..8 {
        if !basis.occupied(j, color) {
            continue;
        }
        let i = (0..8).find(|&i| a[[i, j]].norm() > 0.5).expect("c̃ removes the color");
        if a[[i, j]].re < 0.0 {
            out.push([0, 1].map(|k| (slot_of(basis, others[k]), basis.occupied(j, others[k]))));
        }
    }
    out
}

type SignTable = [bool; 8];

fn table(f: impl Fn([bool; 3]) -> bool) -> SignTable {
    std::array::from_fn(|k| f([k & 4 != 0, k & 2 != 0, k & 1 != 0]))
}

fn emit_frame(b: &mut Builder, frame: &[SignTable; 2]) {
    for (q, t) in frame.iter().enumerate() {
        b.diagonal_sign(q, &|bits: [bool; 3]| t[(bits[0] as usize) << 2 | (bits[1] as usize) << 1 | bits[2] as usize]);
    }
}

fn xor(a: &[SignTable; 2], b: &[SignTable; 2]) -> [SignTable; 2] {
    std::array::from_fn(|q| std::array::from_fn(|k| a[q][k] ^ b[q][k]))
}

/// W = ctrl_c(S Z_o) on quoct 0 and V = ctrl_c(S) on quoct 1, with S the
/// sign c̃_c picks up from the other two colors, so that
/// K_c = (1/4a)(W⊗V)(X_cX_c − Y_cY_c)(W⊗V).
fn kinetic_frame(color: Color, basis: &QuoctBasis) -> [SignTable; 2] {
    let c = slot_of(basis, color);
    let others: Vec<Slot> = Slot::ALL.into_iter().filter(|&s| s != c).collect();
    let patterns = sign_patterns(basis, color);
    let string = |bits: [bool; 3]| patterns.iter().any(|pat| pat.iter().all(|&(s, v)| bits[s.index()] == v));
    let odd = |bits: [bool; 3]| others.iter().filter(|s| bits[s.index()]).count() % 2 == 1;
    [table(|b| b[c.index()] && (string(b) != odd(b))), table(|b| b[c.index()] && string(b))]
}

/// exp(−iθ(X_cX_c − Y_cY_c)): exp(−iπ/4 X) on both sides turns YY into ZZ,
/// and a CNOT pair reduces the rest to single-qubit rotations. The color is
/// first moved onto e of both quocts.
fn kinetic_core(b: &mut Builder, c: Slot, theta: f64) {
    let e = Slot::E;
    for q in 0..2 {
        b.swap(q, e, c);
    }
    b.exp_x(0, e, -PI / 4.0);
    b.exp_x(1, e, -PI / 4.0);
    b.inter_cnot(0, e, 1, e);
    b.exp_x(0, e, -theta);
    b.exp_z(1, e, theta);
    b.inter_cnot(0, e, 1, e);
    b.exp_x(0, e, PI / 4.0);
    b.exp_x(1, e, PI / 4.0);
    for q in 0..2 {
        b.swap(q, e, c);
    }
}

/// exp(−i dt K_c) for one color on the single link of two quocts.
pub fn compile_kinetic(color: Color, dt: f64, a: f64, basis: &QuoctBasis) -> Circuit {
    compile_kinetic_colors(&[color], dt, a, basis)
}

/// Product of the per-color kinetic exponentials in the given order; the
/// sign frames of neighbouring colors are merged into one diagonal.
pub fn compile_kinetic_colors(colors: &[Color], dt: f64, a: f64, basis: &QuoctBasis) -> Circuit {
    let mut b = Builder::new(2);
    let theta = dt / (4.0 * a);
    if theta == 0.0 {
        return b.finish();
    }
    let mut pending = [[false; 8]; 2];
    for &color in colors {
        let frame = kinetic_frame(color, basis);
        emit_frame(&mut b, &xor(&pending, &frame));
        kinetic_core(&mut b, slot_of(basis, color), theta);
        pending = frame;
    }
    emit_frame(&mut b, &pending);
    Builder::peephole(&b.finish())
}

/// exp(−i dt (m ± μ) n) on every qubit of one site; + on even sites.
pub fn compile_mass_chem(dt: f64, m: f64, mu: f64, site: usize, n_quocts: usize) -> Circuit {
    let coef = if site.is_multiple_of(2) { m + mu } else { m - mu };
    let mut b = Builder::new(n_quocts);
    for s in Slot::ALL {
        b.z(site, s, -coef * dt);
    }
    b.finish()
}

/// exp(−i (a g²/6)(3 − Z_eZ_n − Z_nZ_m − Z_eZ_m) dt) on quoct 0 of the link.
pub fn compile_electric_l1(dt: f64, a: f64, g: f64) -> Circuit {
    let gamma = a * g * g * dt / 6.0;
    let mut b = Builder::new(2);
    if gamma != 0.0 {
        b.phase(-3.0 * gamma);
        for (p, q) in [(Slot::E, Slot::N), (Slot::N, Slot::M), (Slot::E, Slot::M)] {
            b.cnot(0, p, q);
            b.exp_z(0, q, gamma);
            b.cnot(0, p, q);
        }
    }
    Builder::peephole(&b.finish())
}

/// Kinetic (r, g, b), mass/chemical potential, then electric, matching the
/// E·M·K order of the lattice Trotter step.
pub fn compile_trotter_step(params: &LatticeParams, dt: f64, basis: &QuoctBasis) -> Result<Circuit, CompileError> {
    if params.l != 1 {
        return Err(CompileError::Unsupported(format!("electric term for L = {} has no native compilation", params.l)));
    }
    if params.penalty_weight != 0.0 {
        return Err(CompileError::Unsupported("Gauss-law penalty term".into()));
    }
    let mut out = Circuit::new(2);
    out.append(&compile_kinetic_colors(&Color::ALL, dt, params.a, basis));
    for site in 0..2 {
        out.append(&compile_mass_chem(dt, params.m, params.mu, site, 2));
    }
    out.append(&compile_electric_l1(dt, params.a, params.g));
    Ok(Builder::peephole(&out))
}

/// |100⟩⟨010| + |010⟩⟨100| − |101⟩⟨011| − |011⟩⟨101| in the |e n m⟩ basis.
pub fn q1_matrix() -> Array2<C64> {
    let mut q = Array2::zeros((8, 8));
    for (i, j, v) in [(0b100, 0b010, 1.0), (0b101, 0b011, -1.0)] {
        q[[i, j]] = c(v, 0.0);
        q[[j, i]] = c(v, 0.0);
    }
    q
}

/// exp(iα Q̃¹) = (SWAP_en Z_m)(−2α) · exp(−iα/2 Z_m) · exp(−iα/2 Z_eZ_nZ_m).
/// The two phase factors undo the rotated SWAP on the e = n block.
pub fn exp_q1_circuit(alpha: f64) -> Circuit {
    let mut b = Builder::new(1);
    if alpha != 0.0 {
        b.exp_z(0, Slot::M, -alpha / 2.0);
        b.cnot(0, Slot::E, Slot::N);
        b.cnot(0, Slot::N, Slot::M);
        b.exp_z(0, Slot::M, -alpha / 2.0);
        b.cnot(0, Slot::N, Slot::M);
        b.cnot(0, Slot::E, Slot::N);
        b.rot_swap(0, -2.0 * alpha);
    }
    Builder::peephole(&b.finish())
}
