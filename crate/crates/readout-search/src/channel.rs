use ndarray::Array2;
use quoct_algebra::linalg::c;
use quoct_algebra::C64;

use crate::gates::{label, state_index};

pub const DIM: usize = 12;
const LEVELS: usize = 3;

/// One measurement outcome: probability and normalized post-state.
#[derive(Clone, Debug)]
pub struct Branch {
    pub probability: f64,
    pub state: Array2<C64>,
}

pub fn basis_density(e: usize, n: usize, m: usize) -> Array2<C64> {
    let mut r = Array2::zeros((DIM, DIM));
    let i = state_index(e, n, m);
    r[[i, i]] = c(1.0, 0.0);
    r
}

fn project(rho: &Array2<C64>, keep: impl Fn(usize) -> bool) -> (f64, Array2<C64>) {
    let k: Vec<bool> = (0..DIM).map(keep).collect();
    let out = Array2::from_shape_fn((DIM, DIM), |(i, j)| if k[i] && k[j] { rho[[i, j]] } else { c(0.0, 0.0) });
    let p = (0..DIM).filter(|&i| k[i]).map(|i| rho[[i, i]].re).sum::<f64>();
    (p, out)
}

/// Motion of the e = 0 block traced out and replaced by the uniform mixture
/// over m ≤ 2; n coherences survive, everything linking e = 0 to e = 1 is
/// dropped.
pub fn scramble(rho: &Array2<C64>) -> Array2<C64> {
    let mut out = rho.clone();
    let mut sigma = [[c(0.0, 0.0); 2]; 2];
    for n in 0..2 {
        for n2 in 0..2 {
            for m in 0..LEVELS {
                sigma[n][n2] += rho[[state_index(0, n, m), state_index(0, n2, m)]];
            }
        }
    }
    for i in 0..DIM {
        for j in 0..DIM {
            let (ei, ni, mi) = label(i);
            let (ej, nj, mj) = label(j);
            if ei == 0 && ej == 0 {
                out[[i, j]] = if mi == mj { sigma[ni][nj] / LEVELS as f64 } else { c(0.0, 0.0) };
            } else if ei == 0 || ej == 0 {
                out[[i, j]] = c(0.0, 0.0);
            }
        }
    }
    out
}

fn branches(rho: &Array2<C64>, bright: impl Fn(usize) -> bool) -> (Branch, Branch) {
    let (pb, rb) = project(rho, &bright);
    let (pd, rd) = project(rho, |i| !bright(i));
    let norm = |p: f64, r: Array2<C64>| if p > 0.0 { r.mapv(|x| x / p) } else { r };
    (
        Branch { probability: pb, state: scramble(&norm(pb, rb)) },
        Branch { probability: pd, state: norm(pd, rd) },
    )
}

/// Photons scattered from every e = 0 state: (bright, dark).
pub fn e_readout(rho: &Array2<C64>) -> (Branch, Branch) {
    branches(rho, |i| label(i).0 == 0)
}

/// Photons scattered only from |00m⟩: (bright, dark).
pub fn n_partial_readout(rho: &Array2<C64>) -> (Branch, Branch) {
    branches(rho, |i| {
        let (e, n, _) = label(i);
        e == 0 && n == 0
    })
}
