//! Exact matrices over [`Scalar`].
//!
//! Storage is row-sparse: each row keeps its nonzero entries sorted by column.
//! The coboundary matrices of the cochain module are dominated by zeros (a
//! group-algebra coboundary has a handful of nonzeros per column), so this
//! keeps the degree-2 complexes of the larger catalog entries in memory.

use std::collections::BTreeMap;
use std::fmt;

use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Sparse vector: `(index, value)` pairs, strictly increasing indices, no zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Dense vector, used for functionals and kernel vectors.
pub type Vector = Vec<Scalar>;

pub fn sparse_from_dense(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| (k, x.clone()))
        .collect()
}

pub fn dense_from_sparse(v: &SparseVec, len: usize) -> Vector {
    let mut out = vec![Scalar::zero(); len];
    for (k, x) in v {
        out[*k] = x.clone();
    }
    out
}

/// `a + factor·b` on sorted sparse vectors.
pub fn axpy(a: &SparseVec, factor: &Scalar, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, factor * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + &(factor * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sparse_dot(a: &SparseVec, b: &SparseVec) -> Scalar {
    let (mut i, mut j) = (0, 0);
    let mut acc = Scalar::zero();
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc += &(&a[i].1 * &b[j].1);
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix { rows: n, cols: n, data: (0..n).map(|i| vec![(i, Scalar::one())]).collect() }
    }

    /// Sums duplicate positions and drops zeros.
    pub fn from_triplets<I>(rows: usize, cols: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); rows];
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "triplet ({r}, {c}) outside {rows}x{cols}");
            if v.is_zero() {
                continue;
            }
            *acc[r].entry(c).or_default() += &v;
        }
        let data = acc
            .into_iter()
            .map(|row| row.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Matrix { rows, cols, data }
    }

    pub fn from_sparse_rows(cols: usize, data: Vec<SparseVec>) -> Self {
        debug_assert!(data.iter().all(|r| r.windows(2).all(|w| w[0].0 < w[1].0)));
        debug_assert!(data.iter().all(|r| r.iter().all(|(c, v)| *c < cols && !v.is_zero())));
        Matrix { rows: data.len(), cols, data }
    }

    pub fn from_sparse_columns(rows: usize, columns: &[SparseVec]) -> Self {
        let mut data: Vec<SparseVec> = vec![Vec::new(); rows];
        for (c, col) in columns.iter().enumerate() {
            for (r, v) in col {
                data[*r].push((c, v.clone()));
            }
        }
        Matrix { rows, cols: columns.len(), data }
    }

    /// Build from dense rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                op: "from_rows",
                left: (rows.len(), cols),
                right: (1, bad.len()),
            });
        }
        let data = rows.iter().map(|r| sparse_from_dense(r)).collect();
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect())
            .expect("ragged integer rows")
    }

    pub fn column_vector(v: &[Scalar]) -> Self {
        Matrix::from_triplets(v.len(), 1, v.iter().enumerate().map(|(i, x)| (i, 0, x.clone())))
    }

    pub fn row_vector(v: &[Scalar]) -> Self {
        Matrix { rows: 1, cols: v.len(), data: vec![sparse_from_dense(v)] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn row(&self, r: usize) -> &SparseVec {
        &self.data[r]
    }

    pub fn sparse_rows(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn into_sparse_rows(self) -> Vec<SparseVec> {
        self.data
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        match self.data[r].binary_search_by_key(&c, |(k, _)| *k) {
            Ok(pos) => self.data[r][pos].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        self.data.iter().map(|r| dense_from_sparse(r, self.cols)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut data: Vec<SparseVec> = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                data[*c].push((r, v.clone()));
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    /// Entrywise complex conjugate of the transpose.
    pub fn adjoint(&self) -> Matrix {
        let mut t = self.transpose();
        for row in &mut t.data {
            for (_, v) in row.iter_mut() {
                *v = v.conj();
            }
        }
        t
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().data
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        if s.is_zero() {
            return Matrix::zeros(self.rows, self.cols);
        }
        let data = self
            .data
            .iter()
            .map(|row| row.iter().map(|(c, v)| (*c, v * s)).collect())
            .collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn checked_add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other, "add")?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| axpy(a, &Scalar::one(), b))
            .collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn checked_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other, "sub")?;
        let minus = -Scalar::one();
        let data = self.data.iter().zip(&other.data).map(|(a, b)| axpy(a, &minus, b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    /// `self + factor·other`, in place.
    pub fn add_scaled(&mut self, factor: &Scalar, other: &Matrix) -> Result<()> {
        self.check_same_shape(other, "add_scaled")?;
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_empty() {
                *a = axpy(a, factor, b);
            }
        }
        Ok(())
    }

    fn check_same_shape(&self, other: &Matrix, op: &'static str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch { op, left: self.shape(), right: other.shape() });
        }
        Ok(())
    }

    /// Matrix product `self · other`.
    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (k, a) in row {
                    for (c, b) in &other.data[*k] {
                        *acc.entry(*c).or_default() += &(a * b);
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        Ok(Matrix { rows: self.rows, cols: other.cols, data })
    }

    /// Product with a dense vector.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                op: "apply",
                left: self.shape(),
                right: (v.len(), 1),
            });
        }
        Ok(self
            .data
            .iter()
            .map(|row| {
                let mut acc = Scalar::zero();
                for (c, a) in row {
                    if !v[*c].is_zero() {
                        acc += &(a * &v[*c]);
                    }
                }
                acc
            })
            .collect())
    }

    /// Row vector times matrix: `yᵀ·self`.
    pub fn left_apply(&self, y: &[Scalar]) -> Result<Vector> {
        if y.len() != self.rows {
            return Err(Error::DimensionMismatch {
                op: "left_apply",
                left: (1, y.len()),
                right: self.shape(),
            });
        }
        let mut out = vec![Scalar::zero(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            if y[r].is_zero() {
                continue;
            }
            for (c, a) in row {
                out[*c] += &(&y[r] * a);
            }
        }
        Ok(out)
    }

    pub fn apply_sparse(&self, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        let t = self.transpose();
        for (c, x) in v {
            for (r, a) in &t.data[*c] {
                *acc.entry(*r).or_default() += &(a * x);
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    /// Kronecker product under the row-major tensor convention:
    /// `(a⊗b)[(i₁,i₂),(j₁,j₂)] = a[i₁,j₁]·b[i₂,j₂]` with flat index `i₁·rows(b)+i₂`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut data = Vec::with_capacity(rows);
        for ra in &self.data {
            for rb in &other.data {
                let mut row = Vec::with_capacity(ra.len() * rb.len());
                for (ca, a) in ra {
                    for (cb, b) in rb {
                        row.push((ca * other.cols + cb, a * b));
                    }
                }
                data.push(row);
            }
        }
        Matrix { rows, cols, data }
    }

    /// Block-diagonal `I_n ⊗ self` without materialising the identity.
    pub fn kron_identity_left(&self, n: usize) -> Matrix {
        Matrix::identity(n).kron(self)
    }

    pub fn kron_identity_right(&self, n: usize) -> Matrix {
        self.kron(&Matrix::identity(n))
    }

    /// First position where two same-shaped matrices differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        if self.shape() != other.shape() {
            return Some((0, 0));
        }
        for r in 0..self.rows {
            if self.data[r] != other.data[r] {
                let (a, b) = (&self.data[r], &other.data[r]);
                let c = a
                    .iter()
                    .zip(b.iter())
                    .find(|(x, y)| x != y)
                    .map(|(x, y)| x.0.min(y.0))
                    .unwrap_or_else(|| a.get(b.len()).or(b.get(a.len())).map_or(0, |e| e.0));
                return Some((r, c));
            }
        }
        None
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.adjoint()
    }

    /// Is every column a standard basis vector, with each row hit exactly once?
    pub fn is_permutation(&self) -> bool {
        self.is_square()
            && self.data.iter().all(|r| r.len() == 1 && r[0].1.is_one())
            && {
                let mut seen = vec![false; self.cols];
                self.data.iter().all(|r| !std::mem::replace(&mut seen[r[0].0], true))
            }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        if self.rows * self.cols <= 400 {
            for row in self.to_dense() {
                let cells: Vec<String> = row.iter().map(|s| s.to_string()).collect();
                writeln!(f, "  [{}]", cells.join(", "))?;
            }
        } else {
            writeln!(f, "  {} nonzeros", self.nnz())?;
        }
        write!(f, "]")
    }
}
