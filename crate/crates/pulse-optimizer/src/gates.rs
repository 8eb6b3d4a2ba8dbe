use std::f64::consts::PI;

use atom_model::{Polarization, Sideband};
use ndarray::Array2;
use quoct_algebra::linalg::c;
use quoct_algebra::C64;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GateKind {
    SwapEm,
    CzEm,
    Ccz,
    ShelveEm,
}

impl GateKind {
    pub const ALL: [GateKind; 4] = [GateKind::SwapEm, GateKind::CzEm, GateKind::Ccz, GateKind::ShelveEm];

    pub fn name(self) -> &'static str {
        match self {
            GateKind::SwapEm => "SWAP_em",
            GateKind::CzEm => "CZ_em",
            GateKind::Ccz => "CCZ",
            GateKind::ShelveEm => "SHELVE_em",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        let k = s.to_ascii_lowercase().replace(['_', '-'], "");
        Some(match k.as_str() {
            "swapem" | "swap" => GateKind::SwapEm,
            "czem" | "cz" => GateKind::CzEm,
            "ccz" => GateKind::Ccz,
            "shelveem" | "shelve" => GateKind::ShelveEm,
            _ => return None,
        })
    }

    pub fn sideband(self) -> Sideband {
        match self {
            GateKind::ShelveEm => Sideband::Blue,
            _ => Sideband::Red,
        }
    }

    pub fn polarization(self) -> Polarization {
        match self {
            GateKind::Ccz => Polarization::SigmaMinus,
            _ => Polarization::Pi,
        }
    }

    pub fn target(self) -> GateTarget {
        match self {
            GateKind::SwapEm => GateTarget::swap_em(),
            GateKind::CzEm => GateTarget::cz_em(),
            GateKind::Ccz => GateTarget::ccz(),
            GateKind::ShelveEm => GateTarget::shelve_em(),
        }
    }

    /// Rabi frequency (rad/s) used when none is requested.
    pub fn default_rabi(self) -> f64 {
        let khz = match self {
            GateKind::SwapEm => 4.0,
            GateKind::CzEm => 6.0,
            GateKind::Ccz => 15.0,
            GateKind::ShelveEm => 3.0,
        };
        2.0 * PI * khz * 1e3
    }

    /// Light-shift compensation caps CCZ near F = 0.97.
    pub fn default_compensated(self) -> bool {
        self != GateKind::Ccz
    }
}

/// Target unitary restricted to the listed (e, n, m) states.
#[derive(Clone, Debug)]
pub struct GateTarget {
    pub labels: Vec<(usize, usize, usize)>,
    pub u0: Array2<C64>,
}

fn computational() -> Vec<(usize, usize, usize)> {
    let mut v = Vec::new();
    for e in 0..2 {
        for n in 0..2 {
            for m in 0..2 {
                v.push((e, n, m));
            }
        }
    }
    v
}

impl GateTarget {
    fn position(&self, l: (usize, usize, usize)) -> usize {
        self.labels.iter().position(|&x| x == l).expect("label in subspace")
    }

    fn diagonal(flip: impl Fn((usize, usize, usize)) -> bool) -> Self {
        let labels = computational();
        let d = Array2::from_diag(&labels.iter().map(|&l| if flip(l) { c(-1.0, 0.0) } else { c(1.0, 0.0) }).collect::<ndarray::Array1<C64>>());
        Self { labels, u0: d }
    }

    /// |0n1⟩ ↔ |1n0⟩.
    pub fn swap_em() -> Self {
        let labels = computational();
        let mut t = Self { u0: Array2::zeros((8, 8)), labels };
        for n in 0..2 {
            for m in 0..2 {
                for e in 0..2 {
                    let (from, to) = if e != m { ((e, n, m), (m, n, e)) } else { ((e, n, m), (e, n, m)) };
                    let (i, j) = (t.position(to), t.position(from));
                    t.u0[[i, j]] = c(1.0, 0.0);
                }
            }
        }
        t
    }

    /// −1 on |1n1⟩.
    pub fn cz_em() -> Self {
        Self::diagonal(|(e, _, m)| e == 1 && m == 1)
    }

    /// −1 on |111⟩.
    pub fn ccz() -> Self {
        Self::diagonal(|(e, n, m)| e == 1 && n == 1 && m == 1)
    }

    /// |0n1⟩ → |1n2⟩ and |1n2⟩ → −|0n1⟩; identity on |0n0⟩, |1n0⟩, |1n1⟩.
    pub fn shelve_em() -> Self {
        let mut labels = Vec::new();
        for n in 0..2 {
            for (e, m) in [(0, 0), (0, 1), (1, 0), (1, 1), (1, 2)] {
                labels.push((e, n, m));
            }
        }
        let mut t = Self { u0: Array2::eye(labels.len()), labels };
        for n in 0..2 {
            let (a, b) = (t.position((0, n, 1)), t.position((1, n, 2)));
            t.u0[[a, a]] = c(0.0, 0.0);
            t.u0[[b, b]] = c(0.0, 0.0);
            t.u0[[b, a]] = c(1.0, 0.0);
            t.u0[[a, b]] = c(-1.0, 0.0);
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }
}

/// Reference pulse angles and phase corrections, all in units of π.
#[derive(Clone, Copy, Debug)]
pub struct ReferenceSequence {
    pub theta: [f64; 3],
    pub phi: [f64; 3],
    pub alpha: f64,
    pub beta: Option<f64>,
    pub gamma: f64,
    pub fidelity: f64,
}

pub fn reference_sequence(gate: GateKind) -> ReferenceSequence {
    match gate {
        GateKind::SwapEm => ReferenceSequence {
            theta: [1.498, 1.498, 1.123],
            phi: [1.908, 1.196, 1.583],
            alpha: 1.338,
            beta: None,
            gamma: 1.415,
            fidelity: 0.9925,
        },
        GateKind::CzEm => ReferenceSequence {
            theta: [1.036, 1.620, 1.036],
            phi: [0.138, 0.417, 0.695],
            alpha: 1.299,
            beta: None,
            gamma: 0.377,
            fidelity: 0.9929,
        },
        GateKind::Ccz => ReferenceSequence {
            theta: [1.972, 1.066, 0.613],
            phi: [0.103, 0.122, 0.150],
            alpha: 1.966,
            beta: Some(1.966),
            gamma: 1.986,
            fidelity: 0.9814,
        },
        GateKind::ShelveEm => ReferenceSequence {
            theta: [1.277, 1.277, 0.694],
            phi: [0.398, 0.616, 1.845],
            alpha: 0.811,
            beta: None,
            gamma: 0.503,
            fidelity: 0.9907,
        },
    }
}
