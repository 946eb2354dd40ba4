//! Exact Gaussian elimination on sparse rows.
//!
//! [`Echelon`] grows a row-echelon basis one vector at a time. With tracking
//! enabled every stored row remembers how it was formed from the inserted
//! vectors, which is what produces preimages and inconsistency certificates.

use super::matrix::{axpy, dense_from_sparse, Matrix, SparseVec, Vector};
use super::scalar::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Echelon {
    width: usize,
    rows: Vec<SparseVec>,
    combos: Option<Vec<SparseVec>>,
    pivot_row: Vec<Option<usize>>,
    inserted: usize,
}

/// Outcome of [`Echelon::insert`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insertion {
    /// The vector was independent; it now owns this pivot column.
    Pivot(usize),
    /// The vector was already in the span. With tracking, `combo` expresses
    /// it through earlier inserted vectors (indexed by insertion order).
    Dependent { combo: Option<SparseVec> },
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Echelon { width, rows: Vec::new(), combos: None, pivot_row: vec![None; width], inserted: 0 }
    }

    pub fn with_tracking(width: usize) -> Self {
        Echelon { combos: Some(Vec::new()), ..Echelon::new(width) }
    }

    pub fn from_rows<'a, I: IntoIterator<Item = &'a SparseVec>>(width: usize, rows: I) -> Self {
        let mut e = Echelon::new(width);
        for r in rows {
            e.insert(r.clone());
        }
        e
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.width).filter(|&c| self.pivot_row[c].is_some()).collect()
    }

    pub fn pivot_vector(&self, col: usize) -> Option<&SparseVec> {
        self.pivot_row[col].map(|r| &self.rows[r])
    }

    /// Reduce `v` until its leading column is not a pivot. Returns the
    /// remainder and, when tracking, the combination of stored rows that was
    /// subtracted, already expanded into inserted-vector coordinates.
    fn reduce(&self, mut v: SparseVec, mut combo: Option<SparseVec>) -> (SparseVec, Option<SparseVec>) {
        while let Some((lead, coeff)) = v.first().cloned() {
            let Some(r) = self.pivot_row[lead] else { break };
            let factor = -coeff;
            v = axpy(&v, &factor, &self.rows[r]);
            if let (Some(c), Some(all)) = (combo.as_mut(), self.combos.as_ref()) {
                *c = axpy(c, &factor, &all[r]);
            }
        }
        (v, combo)
    }

    pub fn insert(&mut self, v: SparseVec) -> Insertion {
        debug_assert!(v.iter().all(|(c, _)| *c < self.width));
        let source = self.inserted;
        self.inserted += 1;
        let combo = self.combos.as_ref().map(|_| vec![(source, Scalar::one())]);
        let (rest, combo) = self.reduce(v, combo);
        let Some((lead, coeff)) = rest.first().cloned() else {
            // rest = v − Σ … = 0, so v = −(combo without the source term).
            let combo = combo.map(|c| {
                c.into_iter()
                    .filter(|(k, _)| *k != source)
                    .map(|(k, x)| (k, -x))
                    .collect()
            });
            return Insertion::Dependent { combo };
        };
        let inv = coeff.inv();
        let row: SparseVec = rest.into_iter().map(|(c, x)| (c, &x * &inv)).collect();
        if let (Some(all), Some(c)) = (self.combos.as_mut(), combo) {
            all.push(c.into_iter().map(|(k, x)| (k, &x * &inv)).collect());
        }
        self.pivot_row[lead] = Some(self.rows.len());
        self.rows.push(row);
        Insertion::Pivot(lead)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone(), None).0.is_empty()
    }

    /// Express `v` through the inserted vectors, if it lies in their span.
    /// Requires tracking.
    pub fn express(&self, v: &SparseVec) -> Option<SparseVec> {
        assert!(self.combos.is_some(), "express() needs a tracking echelon");
        let (rest, combo) = self.reduce(v.clone(), Some(Vec::new()));
        if !rest.is_empty() {
            return None;
        }
        Some(combo.unwrap().into_iter().map(|(k, x)| (k, -x)).collect())
    }

    /// The combination of inserted vectors that produced the row owning `col`.
    pub fn pivot_combo(&self, col: usize) -> Option<&SparseVec> {
        let r = self.pivot_row[col]?;
        self.combos.as_ref().map(|c| &c[r])
    }

    /// Back-substitute for `x` with `Σ_c row[c]·x[c] = row[rhs_col]` on every
    /// stored row, treating column `rhs_col` as the right-hand side and free
    /// columns as zero.
    fn back_substitute(&self, rhs_col: usize) -> Vector {
        let mut x = vec![Scalar::zero(); rhs_col];
        for col in (0..rhs_col).rev() {
            let Some(r) = self.pivot_row[col] else { continue };
            let mut val = Scalar::zero();
            for (c, a) in &self.rows[r] {
                if *c == rhs_col {
                    val += a;
                } else if *c > col && !x[*c].is_zero() {
                    val -= &(a * &x[*c]);
                }
            }
            x[col] = val;
        }
        x
    }

    /// Fully reduced row-echelon form.
    pub fn into_rref(self) -> Rref {
        let width = self.width;
        let mut order: Vec<(usize, usize)> = self
            .pivot_row
            .iter()
            .enumerate()
            .filter_map(|(c, r)| r.map(|r| (c, r)))
            .collect();
        order.sort_unstable();
        let mut rows = self.rows;
        let pivot_row = self.pivot_row;
        for &(col, r) in order.iter().rev() {
            let targets: Vec<(usize, Scalar)> = rows[r]
                .iter()
                .filter(|(c, _)| *c != col && pivot_row[*c].is_some())
                .cloned()
                .collect();
            let mut row = std::mem::take(&mut rows[r]);
            for (c, a) in targets {
                let other = pivot_row[c].unwrap();
                row = axpy(&row, &-a, &rows[other]);
            }
            rows[r] = row;
        }
        let pivots: Vec<usize> = order.iter().map(|&(c, _)| c).collect();
        let rows = order.iter().map(|&(_, r)| std::mem::take(&mut rows[r])).collect();
        Rref { width, pivots, rows }
    }
}

/// Reduced row-echelon form: `rows[i]` has a 1 at `pivots[i]` and zeros in
/// every other pivot column; pivots increase.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub width: usize,
    pub pivots: Vec<usize>,
    pub rows: Vec<SparseVec>,
}

impl Rref {
    pub fn of(m: &Matrix) -> Rref {
        Echelon::from_rows(m.cols(), m.sparse_rows()).into_rref()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.width];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.width).filter(|&c| !is_pivot[c]).collect()
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_sparse_rows(self.width, self.rows.clone())
    }

    pub fn dense_rows(&self) -> Vec<Vector> {
        self.rows.iter().map(|r| dense_from_sparse(r, self.width)).collect()
    }
}

pub fn image_rank(m: &Matrix) -> usize {
    // Eliminate along the shorter side; rank is the same either way.
    if m.rows() <= m.cols() {
        Echelon::from_rows(m.cols(), m.sparse_rows()).rank()
    } else {
        let t = m.transpose();
        Echelon::from_rows(t.cols(), t.sparse_rows()).rank()
    }
}

/// Canonical kernel basis: the rows of the RREF of any basis of `ker m`.
pub fn kernel_basis(m: &Matrix) -> Vec<Vector> {
    canonical_basis(m.cols(), kernel_sparse(m)).dense_rows()
}

/// Kernel vectors straight from the RREF of `m` (one per free column).
pub fn kernel_sparse(m: &Matrix) -> Vec<SparseVec> {
    let rref = Rref::of(m);
    let free = rref.free_columns();
    let mut slot = vec![usize::MAX; m.cols()];
    for (k, &f) in free.iter().enumerate() {
        slot[f] = k;
    }
    let mut vecs: Vec<Vec<(usize, Scalar)>> = free.iter().map(|&f| vec![(f, Scalar::one())]).collect();
    for (row, &p) in rref.rows.iter().zip(&rref.pivots) {
        for (c, a) in row {
            if *c != p {
                vecs[slot[*c]].push((p, -a.clone()));
            }
        }
    }
    for v in &mut vecs {
        v.sort_unstable_by_key(|(c, _)| *c);
    }
    vecs
}

/// RREF of the span of `vectors`.
pub fn canonical_basis(width: usize, vectors: Vec<SparseVec>) -> Rref {
    let mut e = Echelon::new(width);
    for v in vectors {
        e.insert(v);
    }
    e.into_rref()
}

/// Result of [`solve`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    /// A particular solution with every free variable set to zero.
    Solved(Vector),
    /// `y` with `yᵀm = 0` and `yᵀrhs ≠ 0`.
    Inconsistent(Vector),
}

impl Solution {
    pub fn ok(self) -> Option<Vector> {
        match self {
            Solution::Solved(x) => Some(x),
            Solution::Inconsistent(_) => None,
        }
    }
}

pub fn solve(m: &Matrix, rhs: &[Scalar]) -> Result<Solution> {
    if rhs.len() != m.rows() {
        return Err(Error::DimensionMismatch {
            op: "solve",
            left: m.shape(),
            right: (rhs.len(), 1),
        });
    }
    let cols = m.cols();
    let mut e = Echelon::with_tracking(cols + 1);
    for (r, row) in m.sparse_rows().iter().enumerate() {
        let mut aug = row.clone();
        if !rhs[r].is_zero() {
            aug.push((cols, rhs[r].clone()));
        }
        e.insert(aug);
    }
    if let Some(combo) = e.pivot_combo(cols) {
        return Ok(Solution::Inconsistent(dense_from_sparse(combo, m.rows())));
    }
    Ok(Solution::Solved(e.back_substitute(cols)))
}

/// Check an inconsistency certificate exactly.
pub fn verify_inconsistency(m: &Matrix, rhs: &[Scalar], y: &[Scalar]) -> bool {
    let Ok(ym) = m.left_apply(y) else { return false };
    let yb: Scalar = y.iter().zip(rhs).map(|(a, b)| a * b).sum();
    ym.iter().all(Scalar::is_zero) && !yb.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::sparse_from_dense;

    #[test]
    fn zero_matrix_kernel_is_standard_basis() {
        let k = kernel_basis(&Matrix::zeros(3, 3));
        let expected: Vec<Vector> =
            (0..3).map(|i| (0..3).map(|j| Scalar::int((i == j) as i64)).collect()).collect();
        assert_eq!(k, expected);
    }

    #[test]
    fn identity_has_full_rank() {
        for n in 0..6 {
            assert_eq!(image_rank(&Matrix::identity(n)), n);
        }
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = Matrix::from_int_rows(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.apply(v).unwrap().iter().all(Scalar::is_zero));
        }
        let again = canonical_basis(4, k.iter().map(|v| sparse_from_dense(v)).collect());
        assert_eq!(again.dense_rows(), k);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = Matrix::from_int_rows(&[&[1, 1], &[1, -1], &[2, 0]]);
        let rhs = vec![Scalar::int(3), Scalar::int(1), Scalar::int(4)];
        let x = solve(&m, &rhs).unwrap().ok().unwrap();
        assert_eq!(x, vec![Scalar::int(2), Scalar::int(1)]);

        let bad = vec![Scalar::int(3), Scalar::int(1), Scalar::int(5)];
        match solve(&m, &bad).unwrap() {
            Solution::Inconsistent(y) => assert!(verify_inconsistency(&m, &bad, &y)),
            other => panic!("expected inconsistency, got {other:?}"),
        }
    }

    #[test]
    fn express_tracks_combinations() {
        let vs = [vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 2]];
        let mut e = Echelon::with_tracking(3);
        for v in &vs {
            e.insert(sparse_from_dense(&v.iter().map(|&x| Scalar::int(x)).collect::<Vec<_>>()));
        }
        assert_eq!(e.rank(), 2);
        let target = sparse_from_dense(&[Scalar::int(2), Scalar::int(-1), Scalar::int(1)]);
        let combo = e.express(&target).unwrap();
        let mut rebuilt = vec![Scalar::zero(); 3];
        for (k, c) in combo {
            for (j, x) in vs[k].iter().enumerate() {
                rebuilt[j] += &(&c * &Scalar::int(*x));
            }
        }
        assert_eq!(sparse_from_dense(&rebuilt), target);
        assert!(e.express(&sparse_from_dense(&[Scalar::int(0), Scalar::int(0), Scalar::int(1)])).is_none());
    }
}
