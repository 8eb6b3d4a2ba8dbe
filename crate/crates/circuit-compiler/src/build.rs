use std::f64::consts::PI;

use crate::ir::{Circuit, Gate, GateName, Slot};

/// Emits native gates for logical operations on arbitrary slots, moving
/// qubits with SWAPs where the native gate set needs fixed positions.
#[derive(Clone, Debug)]
pub struct Builder {
    circuit: Circuit,
}

fn other(a: Slot, b: Slot) -> Slot {
    Slot::ALL.into_iter().find(|&s| s != a && s != b).expect("three slots")
}

fn ordered(a: Slot, b: Slot) -> Vec<Slot> {
    if a < b {
        vec![a, b]
    } else {
        vec![b, a]
    }
}

impl Builder {
    pub fn new(n_quocts: usize) -> Self {
        Self { circuit: Circuit::new(n_quocts) }
    }

    pub fn finish(self) -> Circuit {
        self.circuit
    }

    pub fn phase(&mut self, phi: f64) {
        self.circuit.global_phase += phi;
    }

    fn push(&mut self, name: GateName, quoct: usize, partner: Option<usize>, slots: Vec<Slot>, angle: Option<f64>) {
        let g = Gate { name, quoct, partner, slots, angle };
        debug_assert!(g.is_native(), "{g}");
        self.circuit.gates.push(g);
    }

    pub fn swap(&mut self, q: usize, a: Slot, b: Slot) {
        if a != b {
            self.push(GateName::Swap, q, None, ordered(a, b), None);
        }
    }

    fn on_e_or_n(&mut self, name: GateName, q: usize, s: Slot) {
        if s == Slot::M {
            self.swap(q, Slot::E, Slot::M);
            self.push(name, q, None, vec![Slot::E], None);
            self.swap(q, Slot::E, Slot::M);
        } else {
            self.push(name, q, None, vec![s], None);
        }
    }

    pub fn x(&mut self, q: usize, s: Slot) {
        self.on_e_or_n(GateName::X, q, s);
    }

    pub fn h(&mut self, q: usize, s: Slot) {
        self.on_e_or_n(GateName::H, q, s);
    }

    /// diag(1, e^{iα}).
    pub fn z(&mut self, q: usize, s: Slot, alpha: f64) {
        if alpha != 0.0 {
            self.push(GateName::Z, q, None, vec![s], Some(alpha));
        }
    }

    /// exp(iα Z_s), exactly.
    pub fn exp_z(&mut self, q: usize, s: Slot, alpha: f64) {
        self.phase(alpha);
        self.z(q, s, -2.0 * alpha);
    }

    /// exp(iα X_s), exactly.
    pub fn exp_x(&mut self, q: usize, s: Slot, alpha: f64) {
        self.h(q, s);
        self.exp_z(q, s, alpha);
        self.h(q, s);
    }

    /// exp(iα Y_s), exactly.
    pub fn exp_y(&mut self, q: usize, s: Slot, alpha: f64) {
        self.z(q, s, -PI / 2.0);
        self.exp_x(q, s, alpha);
        self.z(q, s, PI / 2.0);
    }

    pub fn cz(&mut self, q: usize, a: Slot, b: Slot) {
        match other(a, b) {
            Slot::N => self.push(GateName::Cz, q, None, vec![Slot::E, Slot::M], None),
            Slot::M => {
                self.swap(q, Slot::N, Slot::M);
                self.cz(q, Slot::E, Slot::M);
                self.swap(q, Slot::N, Slot::M);
            }
            Slot::E => {
                self.swap(q, Slot::E, Slot::N);
                self.cz(q, Slot::E, Slot::M);
                self.swap(q, Slot::E, Slot::N);
            }
        }
    }

    pub fn cnot(&mut self, q: usize, ctrl: Slot, tgt: Slot) {
        let spare = other(ctrl, tgt);
        if spare == Slot::M {
            self.push(GateName::Cnot, q, None, vec![ctrl, tgt], None);
            return;
        }
        // move whichever of the pair sits on m into the spare slot
        let moved = |s: Slot| if s == Slot::M { spare } else { s };
        self.swap(q, spare, Slot::M);
        self.push(GateName::Cnot, q, None, vec![moved(ctrl), moved(tgt)], None);
        self.swap(q, spare, Slot::M);
    }

    pub fn ccz(&mut self, q: usize) {
        self.push(GateName::Ccz, q, None, Vec::new(), None);
    }

    /// −1 when every listed slot of `q` matches its bit; the remaining slot
    /// acts as a control only if listed.
    pub fn phase_flip_pattern(&mut self, q: usize, pattern: &[(Slot, bool)]) {
        for &(s, v) in pattern {
            if !v {
                self.x(q, s);
            }
        }
        match pattern {
            [(a, _)] => {
                self.z(q, *a, PI);
            }
            [(a, _), (b, _)] => self.cz(q, *a, *b),
            [_, _, _] => self.ccz(q),
            _ => panic!("pattern over one to three slots"),
        }
        for &(s, v) in pattern {
            if !v {
                self.x(q, s);
            }
        }
    }

    /// Diagonal ±1 gate, −1 where `f` holds, from the algebraic normal form of
    /// `f`: each monomial becomes a Z, CZ or CCZ (the constant one a phase).
    pub fn diagonal_sign(&mut self, q: usize, f: &dyn Fn([bool; 3]) -> bool) {
        let bits = |k: usize| [k & 4 != 0, k & 2 != 0, k & 1 != 0];
        let mut anf: Vec<bool> = (0..8).map(|k| f(bits(k))).collect();
        for i in 0..3 {
            let bit = 4 >> i;
            for k in 0..8 {
                if k & bit != 0 {
                    anf[k] ^= anf[k ^ bit];
                }
            }
        }
        for (k, &on) in anf.iter().enumerate() {
            if !on {
                continue;
            }
            let s: Vec<Slot> = Slot::ALL.into_iter().filter(|s| bits(k)[s.index()]).collect();
            match s.as_slice() {
                [] => self.phase(PI),
                [a] => self.z(q, *a, PI),
                [a, b] => self.cz(q, *a, *b),
                _ => self.ccz(q),
            }
        }
    }

    /// CNOT from slot `sa` of `a` onto slot `sb` of `b`.
    pub fn inter_cnot(&mut self, a: usize, sa: Slot, b: usize, sb: Slot) {
        self.h(b, sb);
        self.inter_cz(a, sa, b, sb);
        self.h(b, sb);
    }

    pub fn rot_swap(&mut self, q: usize, alpha: f64) {
        if alpha != 0.0 {
            self.push(GateName::RotSwap, q, None, Vec::new(), Some(alpha));
        }
    }

    /// SWAPs placing `wanted[k]` at E, N in order; returns them for undoing.
    fn route(&mut self, q: usize, wanted: &[Slot]) -> Vec<(Slot, Slot)> {
        let mut pos = Slot::ALL; // pos[i] = logical qubit now at physical slot i
        let mut done = Vec::new();
        for (k, &w) in wanted.iter().enumerate() {
            let target = Slot::from_index(k);
            let at = Slot::from_index(pos.iter().position(|&s| s == w).expect("slot"));
            if at != target {
                self.swap(q, target, at);
                pos.swap(target.index(), at.index());
                done.push((target, at));
            }
        }
        done
    }

    fn unroute(&mut self, q: usize, swaps: Vec<(Slot, Slot)>) {
        for (a, b) in swaps.into_iter().rev() {
            self.swap(q, a, b);
        }
    }

    /// C-anti-C-Z: −1 when `a` has e=1, n=0 and `b` has e=1.
    pub fn canti_cz(&mut self, a: usize, b: usize) {
        self.push(GateName::CantiCz, a, Some(b), Vec::new(), None);
    }

    /// Controlled-Z between slot `sa` of quoct `a` and slot `sb` of quoct `b`.
    pub fn inter_cz(&mut self, a: usize, sa: Slot, b: usize, sb: Slot) {
        let ra = self.route(a, &[sa]);
        let rb = self.route(b, &[sb]);
        self.canti_cz(a, b);
        self.x(a, Slot::N);
        self.canti_cz(a, b);
        self.x(a, Slot::N);
        self.unroute(b, rb);
        self.unroute(a, ra);
    }

    /// −1 when slot `sa` of `a` and both `sb` slots of `b` are 1.
    pub fn inter_ccz(&mut self, a: usize, sa: Slot, b: usize, sb: [Slot; 2]) {
        let rb = self.route(b, &sb);
        let ra = self.route(a, &[sa]);
        self.x(b, Slot::N);
        self.canti_cz(b, a);
        self.x(b, Slot::N);
        self.unroute(a, ra);
        self.unroute(b, rb);
    }

    /// Drops adjacent inverse pairs and merges adjacent Z rotations, where
    /// adjacent means no gate in between acts on any of the same qubits.
    pub fn peephole(circuit: &Circuit) -> Circuit {
        let mut gates: Vec<Gate> = Vec::new();
        for g in &circuit.gates {
            let sg = support(g);
            let prev = gates.iter().rposition(|p| support(p).iter().any(|x| sg.contains(x)));
            if let Some(i) = prev {
                let p = &gates[i];
                let same = p.name == g.name && p.slots == g.slots && p.quoct == g.quoct && p.partner == g.partner;
                if same && p.is_involution() {
                    gates.remove(i);
                    continue;
                }
                if same && g.name == GateName::Z {
                    let a = (p.angle.unwrap_or(0.0) + g.angle.unwrap_or(0.0)).rem_euclid(2.0 * PI);
                    if a.abs() < 1e-15 || (2.0 * PI - a).abs() < 1e-15 {
                        gates.remove(i);
                    } else {
                        gates[i].angle = Some(a);
                    }
                    continue;
                }
            }
            gates.push(g.clone());
        }
        Circuit { n_quocts: circuit.n_quocts, gates, global_phase: circuit.global_phase }
    }
}

/// (quoct, slot) pairs a gate acts on.
fn support(g: &Gate) -> Vec<(usize, Slot)> {
    match g.name {
        GateName::Ccz | GateName::RotSwap => Slot::ALL.iter().map(|&s| (g.quoct, s)).collect(),
        GateName::CantiCz => vec![(g.quoct, Slot::E), (g.quoct, Slot::N), (g.partner.expect("partner"), Slot::E)],
        _ => g.slots.iter().map(|&s| (g.quoct, s)).collect(),
    }
}
