use super::complex::CochainComplex;
use crate::error::{Error, Result};
use crate::linalg::echelon::{canonical_basis, image_rank, kernel_sparse, solve, Echelon, Insertion, Solution};
use crate::linalg::matrix::{dense_from_sparse, Matrix, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyResult {
    pub degree: usize,
    pub dim_cochains: usize,
    pub dim_kernel: usize,
    pub dim_image_prev: usize,
    pub dim_h: usize,
    /// Cocycles whose classes form a basis of `Hⁿ`. Each was checked to be
    /// killed by `D_n` and to raise the rank when added to `Im D_{n−1}`.
    pub representatives: Vec<Vector>,
}

/// `Hⁿ = Ker D_n / Im D_{n−1}` with canonical representatives: the RREF
/// kernel basis is scanned in order and a vector is kept when it is
/// independent of the image and of the vectors kept before it.
pub fn cohomology(cx: &CochainComplex, n: usize) -> Result<CohomologyResult> {
    if n > cx.top() {
        return Err(Error::InvalidArgument(format!("degree {n} needs D_{n}, complex stops at D_{}", cx.top())));
    }
    let dn = cx.boundary(n);
    let width = dn.cols();
    let kernel = canonical_basis(width, kernel_sparse(dn));
    let mut image = Echelon::new(width);
    if n > 0 {
        for col in cx.boundary(n - 1).columns() {
            image.insert(col);
        }
    }
    let dim_image_prev = image.rank();
    let mut representatives = Vec::new();
    for row in &kernel.rows {
        if let Insertion::Pivot(_) = image.insert(row.clone()) {
            let v = dense_from_sparse(row, width);
            if dn.apply(&v)?.iter().any(|x| !x.is_zero()) {
                return Err(Error::NotCocycle { degree: n });
            }
            representatives.push(v);
        }
    }
    let dim_kernel = kernel.rank();
    debug_assert_eq!(dim_kernel - dim_image_prev, representatives.len());
    Ok(CohomologyResult {
        degree: n,
        dim_cochains: width,
        dim_kernel,
        dim_image_prev,
        dim_h: dim_kernel - dim_image_prev,
        representatives,
    })
}

/// Dimensions only: `dim Ker D_n − rank D_{n−1}`.
pub fn cohomology_dim(cx: &CochainComplex, n: usize) -> usize {
    let dn = cx.boundary(n);
    let kernel = dn.cols() - image_rank(dn);
    let image = if n == 0 { 0 } else { image_rank(cx.boundary(n - 1)) };
    kernel - image
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Preimage {
    /// `x` with `D_{n−1}·x = v`, verified.
    Found(Vector),
    /// `y` with `yᵀ·D_{n−1} = 0` and `yᵀv ≠ 0`: `v` is not a coboundary.
    NotExact(Vector),
}

/// Decide whether the degree-`n` cochain `v` is a coboundary.
pub fn coboundary_preimage(cx: &CochainComplex, n: usize, v: &[crate::linalg::Scalar]) -> Result<Preimage> {
    if n == 0 {
        return Ok(if v.iter().all(|x| x.is_zero()) {
            Preimage::Found(Vec::new())
        } else {
            Preimage::NotExact(v.to_vec())
        });
    }
    preimage_under(cx.boundary(n - 1), v)
}

pub fn preimage_under(m: &Matrix, v: &[crate::linalg::Scalar]) -> Result<Preimage> {
    match solve(m, v)? {
        Solution::Solved(x) => {
            if m.apply(&x)? != v {
                return Err(Error::HomotopyFailed { degree: 0, reason: "solver returned a wrong preimage".into() });
            }
            Ok(Preimage::Found(x))
        }
        Solution::Inconsistent(y) => Ok(Preimage::NotExact(y)),
    }
}

pub fn is_cocycle(cx: &CochainComplex, n: usize, v: &[crate::linalg::Scalar]) -> bool {
    cx.boundary(n).apply(v).map(|r| r.iter().all(|x| x.is_zero())).unwrap_or(false)
}
