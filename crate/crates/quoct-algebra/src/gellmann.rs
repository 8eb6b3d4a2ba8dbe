use ndarray::Array2;

use crate::C64;

/// SU(3) generators T^a = λ^a / 2 and structure constants f^{abc}.
#[derive(Clone, Debug)]
pub struct GellMannSet {
    pub t: Vec<Array2<C64>>,
    /// `f[a][b][c]`, zero-based generator indices.
    pub f: [[[f64; 8]; 8]; 8],
}

impl Default for GellMannSet {
    fn default() -> Self {
        Self::new()
    }
}

impl GellMannSet {
    pub fn new() -> Self {
        let z = C64::new(0.0, 0.0);
        let one = C64::new(1.0, 0.0);
        let i = C64::new(0.0, 1.0);
        let mut l = vec![Array2::from_elem((3, 3), z); 8];
        l[0][[0, 1]] = one;
        l[0][[1, 0]] = one;
        l[1][[0, 1]] = -i;
        l[1][[1, 0]] = i;
        l[2][[0, 0]] = one;
        l[2][[1, 1]] = -one;
        l[3][[0, 2]] = one;
        l[3][[2, 0]] = one;
        l[4][[0, 2]] = -i;
        l[4][[2, 0]] = i;
        l[5][[1, 2]] = one;
        l[5][[2, 1]] = one;
        l[6][[1, 2]] = -i;
        l[6][[2, 1]] = i;
        let s = 1.0 / 3f64.sqrt();
        l[7][[0, 0]] = one * s;
        l[7][[1, 1]] = one * s;
        l[7][[2, 2]] = one * (-2.0 * s);
        let t: Vec<Array2<C64>> = l.into_iter().map(|m| m.mapv(|x| x * 0.5)).collect();

        // f^{abc} = -2i Tr([T^a, T^b] T^c)
        let mut f = [[[0.0; 8]; 8]; 8];
        for a in 0..8 {
            for b in 0..8 {
                let comm = t[a].dot(&t[b]) - t[b].dot(&t[a]);
                for c in 0..8 {
                    let tr: C64 = comm.dot(&t[c]).diag().sum();
                    let v = (C64::new(0.0, -2.0) * tr).re;
                    f[a][b][c] = if v.abs() < 1e-15 { 0.0 } else { v };
                }
            }
        }
        Self { t, f }
    }

    /// Antifundamental generator -(T^a)^*.
    pub fn tbar(&self, a: usize) -> Array2<C64> {
        self.t[a].mapv(|x| -x.conj())
    }
}
