use std::collections::BTreeMap;

use crate::basis::QuoctBasis;
use crate::operator::QuoctOperator;
use crate::{AlgebraError, C64};

/// One term c·σ of a Pauli expansion. `label` has one of `IXYZ` per qubit,
/// ordered (e, n, m) for site 0, then site 1, and so on.
#[derive(Clone, Debug, PartialEq)]
pub struct PauliTerm {
    pub coeff: f64,
    pub label: String,
}

impl PauliTerm {
    /// Label with colors spelled out, e.g. `Z_r0 Z_g0`; `1` for the identity.
    pub fn colored(&self, basis: &QuoctBasis) -> String {
        let map = basis.enm_map();
        let names = ["r", "g", "b"];
        let mut parts = Vec::new();
        for (q, ch) in self.label.chars().enumerate() {
            if ch == 'I' {
                continue;
            }
            let site = q / 3;
            let slot = q % 3;
            let color = (0..3).find(|&c| map[c] == slot).unwrap();
            parts.push(format!("{ch}_{}{site}", names[color]));
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

fn walsh_hadamard(v: &mut [C64]) {
    let n = v.len();
    let mut h = 1;
    while h < n {
        for start in (0..n).step_by(2 * h) {
            for k in start..start + h {
                let (a, b) = (v[k], v[k + h]);
                v[k] = a + b;
                v[k + h] = a - b;
            }
        }
        h *= 2;
    }
}

/// Expands a hermitian operator over Pauli strings of its 3·sites qubits
/// using the default color-to-qubit map. Terms below 1e-12 are dropped.
pub fn pauli_decompose(op: &QuoctOperator) -> Result<Vec<PauliTerm>, AlgebraError> {
    pauli_decompose_with(op, &QuoctBasis::default())
}

pub fn pauli_decompose_with(op: &QuoctOperator, basis: &QuoctBasis) -> Result<Vec<PauliTerm>, AlgebraError> {
    let herm = op.hermiticity_error();
    if herm > 1e-10 {
        return Err(AlgebraError::NotHermitian(herm));
    }
    let nq = 3 * op.sites();
    let dim = op.dim();
    let a = op.permuted(&basis.enm_permutation_sites(op.sites()));

    // g_x(k) = A[k, k ^ x]; Tr(P_{x,z} A) = i^{|x&z|} Σ_k (-1)^{z·k} g_x(k)
    let mut by_x: BTreeMap<usize, Vec<C64>> = BTreeMap::new();
    for (i, row) in a.matrix().outer_iterator().enumerate() {
        for (j, &v) in row.iter() {
            by_x.entry(i ^ j).or_insert_with(|| vec![C64::new(0.0, 0.0); dim])[i] = v;
        }
    }
    let mut terms = Vec::new();
    for (x, mut g) in by_x {
        walsh_hadamard(&mut g);
        for (z, w) in g.into_iter().enumerate() {
            let ph = match (x & z).count_ones() % 4 {
                0 => C64::new(1.0, 0.0),
                1 => C64::new(0.0, 1.0),
                2 => C64::new(-1.0, 0.0),
                _ => C64::new(0.0, -1.0),
            };
            let c = (ph * w).re / dim as f64;
            if c.abs() < 1e-12 {
                continue;
            }
            let label: String = (0..nq)
                .map(|q| {
                    let bit = 1 << (nq - 1 - q);
                    match (x & bit != 0, z & bit != 0) {
                        (false, false) => 'I',
                        (true, false) => 'X',
                        (true, true) => 'Y',
                        (false, true) => 'Z',
                    }
                })
                .collect();
            terms.push(PauliTerm { coeff: c, label });
        }
    }
    terms.sort_by(|a, b| a.label.cmp(&b.label));
    Ok(terms)
}
