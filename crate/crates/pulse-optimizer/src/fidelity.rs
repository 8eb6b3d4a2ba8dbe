use std::f64::consts::PI;

use ndarray::Array2;
use quoct_algebra::linalg::c;
use quoct_algebra::C64;
use serde::{Deserialize, Serialize};

use crate::PulseError;

/// Phase-corrected gate fidelity and the correcting Z angles.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZFidelity {
    pub fidelity: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

/// Diagonal of Z_m(γ) Z_n(β) Z_e(α) on the given (e, n, m) labels.
pub fn z_phases(labels: &[(usize, usize, usize)], alpha: f64, beta: f64, gamma: f64) -> Vec<C64> {
    labels
        .iter()
        .map(|&(e, n, m)| c(0.0, alpha * e as f64 + beta * n as f64 + gamma * m as f64).exp())
        .collect()
}

const MAX_M: usize = 2;

// coefficients t[e][n][m] with Tr(U0† Z U) = Σ t e^{i(αe + βn + γm)}
type Coeffs = [[[C64; MAX_M + 1]; 2]; 2];

// Damped Newton ascent of |T|² in (α, β, γ). Flat directions (a spectator
// qubit) just carry zero gradient.
fn ascend(t: &Coeffs, start: [f64; 3]) -> (f64, [f64; 3]) {
    let mut terms = Vec::new();
    for e in 0..2 {
        for n in 0..2 {
            for m in 0..=MAX_M {
                if t[e][n][m] != c(0.0, 0.0) {
                    terms.push(([e as f64, n as f64, m as f64], t[e][n][m]));
                }
            }
        }
    }
    let eval = |v: &[f64; 3]| {
        let mut tv = c(0.0, 0.0);
        let mut d = [c(0.0, 0.0); 3];
        let mut dd = [[c(0.0, 0.0); 3]; 3];
        for (q, w) in &terms {
            let z = *w * c(0.0, q[0] * v[0] + q[1] * v[1] + q[2] * v[2]).exp();
            tv += z;
            for a in 0..3 {
                d[a] += c(0.0, q[a]) * z;
                for b in 0..3 {
                    dd[a][b] -= z * (q[a] * q[b]);
                }
            }
        }
        let f = tv.norm_sqr();
        let g: [f64; 3] = std::array::from_fn(|a| 2.0 * (tv.conj() * d[a]).re);
        let h: [[f64; 3]; 3] =
            std::array::from_fn(|a| std::array::from_fn(|b| 2.0 * (d[a].conj() * d[b] + tv.conj() * dd[a][b]).re));
        (f, g, h)
    };
    let mut v = start;
    let (mut f, mut g, mut h) = eval(&v);
    let scale = f.max(1e-300);
    let mut mu = 1e-9 * scale;
    for _ in 0..100 {
        if g.iter().map(|x| x * x).sum::<f64>().sqrt() < 1e-13 * scale {
            break;
        }
        let mut moved = false;
        for _ in 0..60 {
            let m: [[f64; 3]; 3] = std::array::from_fn(|a| std::array::from_fn(|b| -h[a][b] + if a == b { mu } else { 0.0 }));
            if let Some(step) = solve_spd(m, g) {
                let vn: [f64; 3] = std::array::from_fn(|a| v[a] + step[a]);
                let (fnew, gn, hn) = eval(&vn);
                if fnew >= f {
                    moved = fnew > f;
                    v = vn;
                    (f, g, h) = (fnew, gn, hn);
                    mu = (mu * 0.1).max(1e-12 * scale);
                    break;
                }
            }
            mu *= 10.0;
        }
        if !moved {
            break;
        }
    }
    (f, v.map(|x| x.rem_euclid(2.0 * PI)))
}

// Cholesky solve; None unless positive definite.
fn solve_spd(m: [[f64; 3]; 3], b: [f64; 3]) -> Option<[f64; 3]> {
    let mut l = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..=i {
            let s: f64 = m[i][j] - (0..j).map(|k| l[i][k] * l[j][k]).sum::<f64>();
            if i == j {
                if s <= 0.0 {
                    return None;
                }
                l[i][i] = s.sqrt();
            } else {
                l[i][j] = s / l[j][j];
            }
        }
    }
    let mut y = [0.0; 3];
    for i in 0..3 {
        y[i] = (b[i] - (0..i).map(|k| l[i][k] * y[k]).sum::<f64>()) / l[i][i];
    }
    let mut x = [0.0; 3];
    for i in (0..3).rev() {
        x[i] = (y[i] - (i + 1..3).map(|k| l[k][i] * x[k]).sum::<f64>()) / l[i][i];
    }
    Some(x)
}

/// F = max over (α, β, γ) of |Tr(U0† Z U)|² / d², where `u_target` and
/// `u_actual` are the restrictions to `labels` (d of them).
pub fn fidelity(
    u_target: &Array2<C64>,
    u_actual: &Array2<C64>,
    labels: &[(usize, usize, usize)],
) -> Result<ZFidelity, PulseError> {
    let d = labels.len();
    for u in [u_target, u_actual] {
        if u.dim() != (d, d) {
            return Err(PulseError::DimensionMismatch { target: d, actual: u.nrows() });
        }
    }
    let mut t: Coeffs = [[[c(0.0, 0.0); MAX_M + 1]; 2]; 2];
    for (i, &(e, n, m)) in labels.iter().enumerate() {
        assert!(m <= MAX_M, "Z gauge only covers m ≤ {MAX_M}");
        let w: C64 = (0..d).map(|j| u_target[[i, j]].conj() * u_actual[[i, j]]).sum();
        t[e][n][m] += w;
    }
    // α is eliminated exactly, max_α |A + B e^{iα}| = |A| + |B|, leaving a
    // coarse (β, γ) grid to seed the coordinate ascent
    let k = 32;
    let h = 2.0 * PI / k as f64;
    let ph: Vec<C64> = (0..k).map(|i| c(0.0, i as f64 * h).exp()).collect();
    let mut top = [(f64::NEG_INFINITY, 0usize, 0usize); 3];
    let mut sums = Vec::with_capacity(k);
    for i in 0..k {
        let (g1, g2) = (ph[i], ph[(2 * i) % k]);
        let s: [[C64; 2]; 2] = std::array::from_fn(|e| std::array::from_fn(|n| t[e][n][0] + t[e][n][1] * g1 + t[e][n][2] * g2));
        for j in 0..k {
            let v = (s[0][0] + s[0][1] * ph[j]).norm() + (s[1][0] + s[1][1] * ph[j]).norm();
            if v > top[2].0 {
                top[2] = (v, i, j);
                top.sort_by(|x, y| y.0.total_cmp(&x.0));
            }
        }
        sums.push(s);
    }
    let mut best = (f64::NEG_INFINITY, [0.0; 3]);
    for &(_, i, j) in &top {
        let s = sums[i];
        let (a, b) = (s[0][0] + s[0][1] * ph[j], s[1][0] + s[1][1] * ph[j]);
        let alpha = if a.norm() > 0.0 && b.norm() > 0.0 { a.arg() - b.arg() } else { 0.0 };
        let r = ascend(&t, [alpha, j as f64 * h, i as f64 * h]);
        if r.0 > best.0 {
            best = r;
        }
    }
    let norm = (d * d) as f64;
    Ok(ZFidelity { fidelity: best.0 / norm, alpha: best.1[0], beta: best.1[1], gamma: best.1[2] })
}
