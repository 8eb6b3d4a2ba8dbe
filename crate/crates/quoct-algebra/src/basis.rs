use std::fmt;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    R,
    G,
    B,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::R, Color::G, Color::B];

    pub fn index(self) -> usize {
        match self {
            Color::R => 0,
            Color::G => 1,
            Color::B => 2,
        }
    }

    pub fn from_index(k: usize) -> Option<Self> {
        Self::ALL.get(k).copied()
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Color::R => "r",
            Color::G => "g",
            Color::B => "b",
        };
        write!(f, "{s}")
    }
}

/// Occupations (r, g, b) of the eight quoct states in storage order.
const OCC: [[bool; 3]; 8] = [
    [false, false, false],
    [true, false, false],
    [false, true, false],
    [false, false, true],
    [false, true, true],
    [true, false, true],
    [true, true, false],
    [true, true, true],
];

const LABELS: [&str; 8] = ["∅", "r", "g", "b", "gb", "rb", "rg", "rgb"];

/// Storage order of the quoct basis plus the assignment of colors to the
/// (e, n, m) qubits of the atom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuoctBasis {
    /// `enm_map[c]` is the qubit slot (0 = e, 1 = n, 2 = m) holding color `c`.
    enm_map: [usize; 3],
}

impl Default for QuoctBasis {
    fn default() -> Self {
        Self { enm_map: [0, 1, 2] }
    }
}

impl QuoctBasis {
    pub fn with_map(enm_map: [usize; 3]) -> Option<Self> {
        let mut seen = [false; 3];
        for &q in &enm_map {
            if q > 2 || seen[q] {
                return None;
            }
            seen[q] = true;
        }
        Some(Self { enm_map })
    }

    pub fn enm_map(&self) -> [usize; 3] {
        self.enm_map
    }

    pub fn labels(&self) -> [&'static str; 8] {
        LABELS
    }

    pub fn label(&self, i: usize) -> &'static str {
        LABELS[i]
    }

    pub fn occupation(&self, i: usize) -> [bool; 3] {
        OCC[i]
    }

    pub fn occupied(&self, i: usize, c: Color) -> bool {
        OCC[i][c.index()]
    }

    pub fn fermion_number(&self, i: usize) -> usize {
        OCC[i].iter().filter(|&&o| o).count()
    }

    /// Storage index from color occupations.
    pub fn index_of(&self, occ: [bool; 3]) -> usize {
        OCC.iter().position(|&o| o == occ).unwrap()
    }

    /// Computational index |e n m> (e most significant) of storage index `i`.
    pub fn enm_index(&self, i: usize) -> usize {
        let mut k = 0;
        for c in 0..3 {
            if OCC[i][c] {
                k |= 1 << (2 - self.enm_map[c]);
            }
        }
        k
    }

    /// Inverse of [`Self::enm_index`].
    pub fn storage_index(&self, enm: usize) -> usize {
        (0..8).find(|&i| self.enm_index(i) == enm).unwrap()
    }

    /// `perm[i]` is the computational index of storage index `i`.
    pub fn enm_permutation(&self) -> [usize; 8] {
        std::array::from_fn(|i| self.enm_index(i))
    }

    /// Permutation for `sites` quocts, each site mapped independently.
    pub fn enm_permutation_sites(&self, sites: usize) -> Vec<usize> {
        let p = self.enm_permutation();
        let dim = 8usize.pow(sites as u32);
        (0..dim)
            .map(|mut i| {
                let mut out = 0;
                let mut scale = 1;
                for _ in 0..sites {
                    out += p[i % 8] * scale;
                    i /= 8;
                    scale *= 8;
                }
                out
            })
            .collect()
    }
}
