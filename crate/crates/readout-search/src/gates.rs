use std::f64::consts::PI;
use std::fmt;

use ndarray::Array2;
use quoct_algebra::linalg::c;
use quoct_algebra::C64;
use serde::{Deserialize, Serialize};

use crate::ReadoutError;

/// |e n m⟩ with m ≤ 2, index (e·2 + n)·3 + m.
pub fn state_index(e: usize, n: usize, m: usize) -> usize {
    (e * 2 + n) * 3 + m
}

pub fn label(i: usize) -> (usize, usize, usize) {
    (i / 6, (i / 3) % 2, i % 3)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum NativeGate {
    Xe,
    He,
    Xn,
    Hn,
    Ze(f64),
    Zn(f64),
    Zm(f64),
    /// e flipped when n = 1.
    CnotNE,
    /// n flipped when e = 1.
    CnotEN,
    SwapEn,
    SwapEm,
    SwapNm,
    CzEm,
    Ccz,
    ShelveEm,
}

impl fmt::Display for NativeGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z = |f: &mut fmt::Formatter<'_>, q: &str, a: f64| write!(f, "Z_{q}({:.4}pi)", a / PI);
        match self {
            NativeGate::Xe => write!(f, "X_e"),
            NativeGate::He => write!(f, "H_e"),
            NativeGate::Xn => write!(f, "X_n"),
            NativeGate::Hn => write!(f, "H_n"),
            NativeGate::Ze(a) => z(f, "e", *a),
            NativeGate::Zn(a) => z(f, "n", *a),
            NativeGate::Zm(a) => z(f, "m", *a),
            NativeGate::CnotNE => write!(f, "CNOT^n_e"),
            NativeGate::CnotEN => write!(f, "CNOT^e_n"),
            NativeGate::SwapEn => write!(f, "SWAP_en"),
            NativeGate::SwapEm => write!(f, "SWAP_em"),
            NativeGate::SwapNm => write!(f, "SWAP_nm"),
            NativeGate::CzEm => write!(f, "CZ_em"),
            NativeGate::Ccz => write!(f, "CCZ"),
            NativeGate::ShelveEm => write!(f, "SHELVE_em"),
        }
    }
}

impl std::str::FromStr for NativeGate {
    type Err = ReadoutError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix("Z_") {
            let (q, arg) = rest.split_once('(').ok_or_else(|| ReadoutError::UnknownGate(s.into()))?;
            let a: f64 = arg
                .trim_end_matches(')')
                .trim_end_matches("pi")
                .parse()
                .map_err(|_| ReadoutError::UnknownGate(s.into()))?;
            return match q {
                "e" => Ok(NativeGate::Ze(a * PI)),
                "n" => Ok(NativeGate::Zn(a * PI)),
                "m" => Ok(NativeGate::Zm(a * PI)),
                _ => Err(ReadoutError::UnknownGate(s.into())),
            };
        }
        gate_alphabet()
            .into_iter()
            .find(|g| g.to_string() == t)
            .ok_or_else(|| ReadoutError::UnknownGate(s.into()))
    }
}

/// Gates the search draws from; Z angles restricted to π/2 and π.
pub fn gate_alphabet() -> Vec<NativeGate> {
    use NativeGate::*;
    let mut v = vec![Xe, He, Xn, Hn, CnotNE, CnotEN, SwapEn, SwapEm, SwapNm, CzEm, Ccz, ShelveEm];
    for a in [PI / 2.0, PI] {
        v.extend([Ze(a), Zn(a), Zm(a)]);
    }
    v
}

type Qubits = (usize, usize, usize);

fn from_map(f: impl Fn(Qubits) -> Vec<(Qubits, C64)>) -> Array2<C64> {
    let mut u = Array2::zeros((12, 12));
    for j in 0..12 {
        let (e, n, m) = label(j);
        if m == 2 {
            u[[j, j]] = c(1.0, 0.0);
            continue;
        }
        for ((e2, n2, m2), a) in f((e, n, m)) {
            u[[state_index(e2, n2, m2), j]] += a;
        }
    }
    u
}

fn one(v: usize, hadamard: bool) -> Vec<(usize, C64)> {
    if hadamard {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        vec![(0, c(s, 0.0)), (1, c(if v == 0 { s } else { -s }, 0.0))]
    } else {
        vec![(1 - v, c(1.0, 0.0))]
    }
}

fn phase(on: bool, a: f64) -> C64 {
    if on {
        c(0.0, a).exp()
    } else {
        c(1.0, 0.0)
    }
}

impl NativeGate {
    /// Unitary on the twelve (e, n, m ≤ 2) states. Only SHELVE_em touches
    /// m = 2; every other gate is the identity there.
    pub fn unitary(&self) -> Array2<C64> {
        let id = |q: Qubits| vec![(q, c(1.0, 0.0))];
        match *self {
            NativeGate::Xe | NativeGate::He => {
                let h = matches!(self, NativeGate::He);
                from_map(|(e, n, m)| one(e, h).into_iter().map(|(e2, a)| ((e2, n, m), a)).collect())
            }
            NativeGate::Xn | NativeGate::Hn => {
                let h = matches!(self, NativeGate::Hn);
                from_map(|(e, n, m)| one(n, h).into_iter().map(|(n2, a)| ((e, n2, m), a)).collect())
            }
            NativeGate::Ze(a) => from_map(|(e, n, m)| vec![((e, n, m), phase(e == 1, a))]),
            NativeGate::Zn(a) => from_map(|(e, n, m)| vec![((e, n, m), phase(n == 1, a))]),
            NativeGate::Zm(a) => from_map(|(e, n, m)| vec![((e, n, m), phase(m == 1, a))]),
            NativeGate::CnotNE => from_map(|(e, n, m)| vec![((if n == 1 { 1 - e } else { e }, n, m), c(1.0, 0.0))]),
            NativeGate::CnotEN => from_map(|(e, n, m)| vec![((e, if e == 1 { 1 - n } else { n }, m), c(1.0, 0.0))]),
            NativeGate::SwapEn => from_map(|(e, n, m)| vec![((n, e, m), c(1.0, 0.0))]),
            NativeGate::SwapEm => from_map(|(e, n, m)| vec![((m, n, e), c(1.0, 0.0))]),
            NativeGate::SwapNm => from_map(|(e, n, m)| vec![((e, m, n), c(1.0, 0.0))]),
            NativeGate::CzEm => from_map(|(e, n, m)| vec![((e, n, m), phase(e == 1 && m == 1, PI))]),
            NativeGate::Ccz => from_map(|(e, n, m)| vec![((e, n, m), phase(e == 1 && n == 1 && m == 1, PI))]),
            NativeGate::ShelveEm => {
                let mut u = from_map(id);
                for n in 0..2 {
                    let (a, b) = (state_index(0, n, 1), state_index(1, n, 2));
                    u[[a, a]] = c(0.0, 0.0);
                    u[[b, b]] = c(0.0, 0.0);
                    u[[b, a]] = c(1.0, 0.0);
                    u[[a, b]] = c(-1.0, 0.0);
                }
                u
            }
        }
    }
}
