use std::collections::BTreeMap;

use ndarray::Array2;
use quoct_algebra::linalg::null_space;
use quoct_algebra::{charge_op, number_op, QuoctOperator, SiteKind, C64};

use crate::terms::total_casimir;

/// Eigenvalues of the diagonal conserved charges, scaled to integers:
/// 3·n_B, 2·Q³_tot and 2√3·Q⁸_tot.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SectorKey {
    pub baryon3: i32,
    pub q3x2: i32,
    pub q8x: i32,
}

impl SectorKey {
    pub fn baryon_number(&self) -> f64 {
        self.baryon3 as f64 / 3.0
    }

    pub fn is_color_neutral(&self) -> bool {
        self.q3x2 == 0 && self.q8x == 0
    }
}

/// Basis states sharing one [`SectorKey`]; every Hamiltonian term is block
/// diagonal over sectors.
#[derive(Clone, Debug)]
pub struct Sector {
    pub key: SectorKey,
    pub indices: Vec<usize>,
}

impl Sector {
    pub fn dim(&self) -> usize {
        self.indices.len()
    }

    pub fn restrict(&self, op: &QuoctOperator) -> Array2<C64> {
        op.restrict(&self.indices)
    }
}

struct SiteTables {
    number: [i32; 8],
    q3x2: [[i32; 8]; 2],
    q8x: [[i32; 8]; 2],
}

fn site_tables() -> SiteTables {
    let number: [i32; 8] = std::array::from_fn(|i| number_op().get(i, i).re.round() as i32);
    let mut q3x2 = [[0; 8]; 2];
    let mut q8x = [[0; 8]; 2];
    for (k, kind) in [SiteKind::Even, SiteKind::Odd].into_iter().enumerate() {
        let q3 = charge_op(3, kind).unwrap();
        let q8 = charge_op(8, kind).unwrap();
        for i in 0..8 {
            q3x2[k][i] = (2.0 * q3.get(i, i).re).round() as i32;
            q8x[k][i] = (2.0 * 3f64.sqrt() * q8.get(i, i).re).round() as i32;
        }
    }
    SiteTables { number, q3x2, q8x }
}

fn digits(mut idx: usize, n_sites: usize) -> Vec<usize> {
    let mut d = vec![0; n_sites];
    for k in (0..n_sites).rev() {
        d[k] = idx % 8;
        idx /= 8;
    }
    d
}

fn key_of(t: &SiteTables, d: &[usize]) -> SectorKey {
    let mut key = SectorKey { baryon3: 0, q3x2: 0, q8x: 0 };
    for (n, &s) in d.iter().enumerate() {
        let k = n % 2;
        key.baryon3 += if k == 0 { t.number[s] } else { -t.number[s] };
        key.q3x2 += t.q3x2[k][s];
        key.q8x += t.q8x[k][s];
    }
    key
}

/// Partition of the 8^(2L) basis by (n_B, Q³_tot, Q⁸_tot).
pub fn hamiltonian_sectors(l: usize) -> Vec<Sector> {
    let ns = 2 * l;
    let t = site_tables();
    let mut map: BTreeMap<SectorKey, Vec<usize>> = BTreeMap::new();
    for idx in 0..8usize.pow(ns as u32) {
        map.entry(key_of(&t, &digits(idx, ns))).or_default().push(idx);
    }
    map.into_iter().map(|(key, indices)| Sector { key, indices }).collect()
}

/// Orthonormal color-singlet vectors (columns) inside the span of `indices`,
/// expressed in the local coordinates of that index list. The total Casimir
/// conserves every site occupation and Q³, Q⁸, so it is diagonalized block
/// by block over those labels.
pub fn singlet_basis(l: usize, indices: &[usize]) -> Array2<C64> {
    let ns = 2 * l;
    let t = site_tables();
    let cas = total_casimir(ns);
    let mut blocks: BTreeMap<(Vec<i32>, SectorKey), Vec<usize>> = BTreeMap::new();
    for (local, &idx) in indices.iter().enumerate() {
        let d = digits(idx, ns);
        let occ: Vec<i32> = d.iter().map(|&s| t.number[s]).collect();
        blocks.entry((occ, key_of(&t, &d))).or_default().push(local);
    }
    let mut cols: Vec<Vec<(usize, C64)>> = Vec::new();
    for (_, locals) in blocks {
        let global: Vec<usize> = locals.iter().map(|&k| indices[k]).collect();
        let ns_block = null_space(&cas.restrict(&global), 1e-9);
        for c in 0..ns_block.ncols() {
            cols.push(locals.iter().enumerate().map(|(r, &k)| (k, ns_block[[r, c]])).collect());
        }
    }
    let mut out = Array2::zeros((indices.len(), cols.len()));
    for (c, col) in cols.iter().enumerate() {
        for &(k, v) in col {
            out[[k, c]] = v;
        }
    }
    out
}

/// Projector onto the null space of the total Casimir.
pub fn singlet_projector(l: usize) -> QuoctOperator {
    let ns = 2 * l;
    let all: Vec<usize> = (0..8usize.pow(ns as u32)).collect();
    let v = singlet_basis(l, &all);
    let mut entries = Vec::new();
    // singlet vectors live inside small blocks, so V V† is sparse
    let supports: Vec<Vec<(usize, C64)>> = (0..v.ncols())
        .map(|c| (0..v.nrows()).filter(|&r| v[[r, c]].norm() > 1e-14).map(|r| (r, v[[r, c]])).collect())
        .collect();
    for s in &supports {
        for &(i, a) in s {
            for &(j, b) in s {
                entries.push((i, j, a * b.conj()));
            }
        }
    }
    QuoctOperator::from_triplets(ns, &entries, false).pruned(1e-14)
}
