use std::ops::{Add, Mul, Neg, Sub};

use ndarray::{Array1, Array2};
use sprs::{CsMat, TriMat};

use crate::{AlgebraError, C64};

/// Operator on `sites` quocts (dimension 8^sites), stored sparse in CSR form.
///
/// `fermionic` marks operators odd in the ladder operators; only those pick
/// up parity strings when embedded into a multi-site space.
#[derive(Clone, Debug)]
pub struct QuoctOperator {
    sites: usize,
    fermionic: bool,
    matrix: CsMat<C64>,
}

pub fn site_dim(sites: usize) -> usize {
    8usize.pow(sites as u32)
}

impl QuoctOperator {
    pub fn from_sparse(sites: usize, matrix: CsMat<C64>, fermionic: bool) -> Result<Self, AlgebraError> {
        let dim = site_dim(sites);
        if matrix.rows() != dim || matrix.cols() != dim {
            return Err(AlgebraError::DimensionMismatch { expected: dim, got: matrix.rows() });
        }
        let matrix = if matrix.is_csr() { matrix } else { matrix.to_csr() };
        Ok(Self { sites, fermionic, matrix })
    }

    pub fn from_dense(sites: usize, dense: &Array2<C64>, fermionic: bool) -> Result<Self, AlgebraError> {
        let dim = site_dim(sites);
        if dense.nrows() != dim || dense.ncols() != dim {
            return Err(AlgebraError::DimensionMismatch { expected: dim, got: dense.nrows() });
        }
        let mut tri = TriMat::new((dim, dim));
        for ((i, j), &v) in dense.indexed_iter() {
            if v.norm() > 0.0 {
                tri.add_triplet(i, j, v);
            }
        }
        Ok(Self { sites, fermionic, matrix: tri.to_csr() })
    }

    /// Builds from (row, col, value) triplets; repeated entries are summed.
    pub fn from_triplets(sites: usize, entries: &[(usize, usize, C64)], fermionic: bool) -> Self {
        let dim = site_dim(sites);
        let mut tri = TriMat::new((dim, dim));
        for &(i, j, v) in entries {
            tri.add_triplet(i, j, v);
        }
        Self { sites, fermionic, matrix: tri.to_csr() }
    }

    pub fn from_diagonal(sites: usize, diag: &[C64]) -> Self {
        let entries: Vec<_> = diag
            .iter()
            .enumerate()
            .filter(|(_, v)| v.norm() > 0.0)
            .map(|(i, &v)| (i, i, v))
            .collect();
        Self::from_triplets(sites, &entries, false)
    }

    pub fn identity(sites: usize) -> Self {
        Self { sites, fermionic: false, matrix: CsMat::eye(site_dim(sites)) }
    }

    pub fn zeros(sites: usize) -> Self {
        let dim = site_dim(sites);
        Self { sites, fermionic: false, matrix: CsMat::zero((dim, dim)) }
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_fermionic(&self) -> bool {
        self.fermionic
    }

    pub fn with_fermionic(mut self, fermionic: bool) -> Self {
        self.fermionic = fermionic;
        self
    }

    pub fn matrix(&self) -> &CsMat<C64> {
        &self.matrix
    }

    pub fn nnz(&self) -> usize {
        self.matrix.nnz()
    }

    pub fn to_dense(&self) -> Array2<C64> {
        self.matrix.to_dense()
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.matrix.get(i, j).copied().unwrap_or_default()
    }

    pub fn diagonal(&self) -> Vec<C64> {
        (0..self.dim()).map(|i| self.get(i, i)).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        self.matrix
            .outer_iterator()
            .enumerate()
            .all(|(i, row)| row.iter().all(|(j, v)| i == j || v.norm() == 0.0))
    }

    pub fn adjoint(&self) -> Self {
        let t = self.matrix.transpose_view().to_csr();
        Self { sites: self.sites, fermionic: self.fermionic, matrix: t.map(|x| x.conj()) }
    }

    pub fn scale(&self, s: C64) -> Self {
        Self { sites: self.sites, fermionic: self.fermionic, matrix: self.matrix.map(|&x| x * s) }
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.scale(C64::new(s, 0.0))
    }

    /// Matrix product; fermion parity of the product is the sum of parities.
    pub fn dot(&self, other: &Self) -> Self {
        assert_eq!(self.sites, other.sites, "site count mismatch");
        let m = &self.matrix * &other.matrix;
        Self { sites: self.sites, fermionic: self.fermionic ^ other.fermionic, matrix: m }.pruned(0.0)
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let m = sprs::kronecker_product(self.matrix.view(), other.matrix.view());
        Self {
            sites: self.sites + other.sites,
            fermionic: self.fermionic ^ other.fermionic,
            matrix: if m.is_csr() { m } else { m.to_csr() },
        }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &self.dot(other) - &other.dot(self)
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        &self.dot(other) + &other.dot(self)
    }

    /// Drops stored entries with magnitude ≤ `tol`.
    pub fn pruned(self, tol: f64) -> Self {
        let dim = self.dim();
        let mut tri = TriMat::new((dim, dim));
        for (i, row) in self.matrix.outer_iterator().enumerate() {
            for (j, &v) in row.iter() {
                if v.norm() > tol {
                    tri.add_triplet(i, j, v);
                }
            }
        }
        Self { sites: self.sites, fermionic: self.fermionic, matrix: tri.to_csr() }
    }

    pub fn max_abs(&self) -> f64 {
        self.matrix.data().iter().fold(0.0, |m, v| m.max(v.norm()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self - other).max_abs()
    }

    pub fn hermiticity_error(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_error() <= tol
    }

    pub fn trace(&self) -> C64 {
        self.diagonal().into_iter().sum()
    }

    pub fn apply(&self, v: &Array1<C64>) -> Array1<C64> {
        assert_eq!(v.len(), self.dim(), "vector dimension mismatch");
        let mut out = Array1::zeros(self.dim());
        for (i, row) in self.matrix.outer_iterator().enumerate() {
            let mut acc = C64::new(0.0, 0.0);
            for (j, &a) in row.iter() {
                acc += a * v[j];
            }
            out[i] = acc;
        }
        out
    }

    /// Dense block on the given basis indices.
    pub fn restrict(&self, idx: &[usize]) -> Array2<C64> {
        let mut pos = vec![usize::MAX; self.dim()];
        for (k, &i) in idx.iter().enumerate() {
            pos[i] = k;
        }
        let mut out = Array2::zeros((idx.len(), idx.len()));
        for (k, &i) in idx.iter().enumerate() {
            if let Some(row) = self.matrix.outer_view(i) {
                for (j, &v) in row.iter() {
                    if pos[j] != usize::MAX {
                        out[[k, pos[j]]] = v;
                    }
                }
            }
        }
        out
    }

    /// Relabels basis states: entry (i, j) moves to (perm[i], perm[j]).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(self.nnz());
        for (i, row) in self.matrix.outer_iterator().enumerate() {
            for (j, &v) in row.iter() {
                entries.push((perm[i], perm[j], v));
            }
        }
        Self::from_triplets(self.sites, &entries, self.fermionic)
    }

    /// Places a single-site operator on `site` of `total` sites. Fermionic
    /// operators get parity factors on every site to the left.
    pub fn embed(&self, site: usize, total: usize) -> Result<Self, AlgebraError> {
        if site >= total {
            return Err(AlgebraError::SiteOutOfRange { site, total });
        }
        if self.sites != 1 {
            return Err(AlgebraError::DimensionMismatch { expected: 8, got: self.dim() });
        }
        let left = if self.fermionic { crate::site::parity() } else { Self::identity(1) };
        let mut out: Option<Self> = None;
        for k in 0..total {
            let factor = if k < site {
                left.clone()
            } else if k == site {
                self.clone()
            } else {
                Self::identity(1)
            };
            out = Some(match out {
                None => factor,
                Some(acc) => acc.tensor(&factor),
            });
        }
        Ok(out.unwrap().with_fermionic(self.fermionic))
    }
}

impl Add for &QuoctOperator {
    type Output = QuoctOperator;
    fn add(self, rhs: &QuoctOperator) -> QuoctOperator {
        assert_eq!(self.sites, rhs.sites, "site count mismatch");
        QuoctOperator { sites: self.sites, fermionic: self.fermionic, matrix: &self.matrix + &rhs.matrix }
    }
}

impl Sub for &QuoctOperator {
    type Output = QuoctOperator;
    fn sub(self, rhs: &QuoctOperator) -> QuoctOperator {
        assert_eq!(self.sites, rhs.sites, "site count mismatch");
        QuoctOperator { sites: self.sites, fermionic: self.fermionic, matrix: &self.matrix - &rhs.matrix }
    }
}

impl Neg for &QuoctOperator {
    type Output = QuoctOperator;
    fn neg(self) -> QuoctOperator {
        self.scale_re(-1.0)
    }
}

impl Mul for &QuoctOperator {
    type Output = QuoctOperator;
    fn mul(self, rhs: &QuoctOperator) -> QuoctOperator {
        self.dot(rhs)
    }
}

/// Sum of operators, or `None` for an empty list.
pub fn sum<'a>(ops: impl IntoIterator<Item = &'a QuoctOperator>) -> Option<QuoctOperator> {
    ops.into_iter().fold(None, |acc, op| match acc {
        None => Some(op.clone()),
        Some(a) => Some(&a + op),
    })
}

/// Fermionic operator on `site` of `total` sites.
pub fn string_embed(op: &QuoctOperator, site: usize, total: usize) -> Result<QuoctOperator, AlgebraError> {
    op.embed(site, total)
}
