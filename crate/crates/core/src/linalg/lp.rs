//! Exact feasibility for `A·x = b, x ≥ 0` over the rationals.
//!
//! The main solver is a phase-I simplex with Bland's rule, which always
//! terminates. On infeasible input it returns a Farkas vector `y` with
//! `yᵀA ≥ 0` and `yᵀb < 0`. [`vertex_search`] is a brute-force oracle over
//! column subsets, usable at small sizes to cross-check the simplex.

use num_traits::{One, Signed, Zero};

use super::echelon::{solve, Solution};
use super::matrix::Matrix;
use super::scalar::{Rational, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    /// A basic feasible point.
    Feasible(Vec<Rational>),
    /// Farkas vector: `yᵀA ≥ 0` entrywise and `yᵀb < 0`.
    Infeasible(Vec<Rational>),
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }

    pub fn point(&self) -> Option<&[Rational]> {
        match self {
            Feasibility::Feasible(x) => Some(x),
            Feasibility::Infeasible(_) => None,
        }
    }
}

fn check_shape(a: &[Vec<Rational>], b: &[Rational]) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch { op: "lp", left: (a.len(), 0), right: (b.len(), 1) });
    }
    let n = a.first().map_or(0, Vec::len);
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidArgument("ragged constraint matrix".into()));
    }
    Ok(n)
}

/// Phase-I simplex with Bland's rule.
pub fn find_feasible(a: &[Vec<Rational>], b: &[Rational]) -> Result<Feasibility> {
    let n = check_shape(a, b)?;
    let m = a.len();
    let width = n + m + 1;
    let rhs = n + m;
    let mut signs = Vec::with_capacity(m);
    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        let s = if bi.is_negative() { -Rational::one() } else { Rational::one() };
        let mut t = vec![Rational::zero(); width];
        for (j, v) in row.iter().enumerate() {
            t[j] = v * &s;
        }
        t[n + i] = Rational::one();
        t[rhs] = bi * &s;
        signs.push(s);
        tab.push(t);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    // Cost 1 on artificials; reduced cost row and objective kept explicitly.
    let cost = |j: usize| if j >= n && j < n + m { Rational::one() } else { Rational::zero() };
    let mut reduced: Vec<Rational> = (0..width).map(|j| {
        let s: Rational = tab.iter().map(|r| r[j].clone()).sum();
        if j == rhs { s } else { cost(j) - s }
    }).collect();

    loop {
        let Some(enter) = (0..n + m).find(|&j| reduced[j].is_negative()) else { break };
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if tab[i][enter].is_positive() {
                let ratio = &tab[i][rhs] / &tab[i][enter];
                let better = match &leave {
                    None => true,
                    Some((k, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*k]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // Phase I is bounded below by zero, so a leaving row always exists.
        let (row, _) = leave.expect("phase-I objective is bounded");
        let piv = tab[row][enter].clone();
        for v in tab[row].iter_mut() {
            *v /= &piv;
        }
        let prow = tab[row].clone();
        for (i, t) in tab.iter_mut().enumerate() {
            if i != row && !t[enter].is_zero() {
                let f = t[enter].clone();
                for (v, p) in t.iter_mut().zip(&prow) {
                    if !p.is_zero() {
                        *v -= &f * p;
                    }
                }
            }
        }
        let f = reduced[enter].clone();
        for (j, p) in prow.iter().enumerate() {
            if !p.is_zero() {
                // The objective entry tracks Σ c_B·x_B, which decreases.
                if j == rhs {
                    reduced[j] += &f * p;
                } else {
                    reduced[j] -= &f * p;
                }
            }
        }
        basis[row] = enter;
    }

    let objective: Rational = basis
        .iter()
        .enumerate()
        .map(|(i, &j)| cost(j) * &tab[i][rhs])
        .sum();
    if objective.is_zero() {
        let mut x = vec![Rational::zero(); n];
        for (i, &j) in basis.iter().enumerate() {
            if j < n {
                x[j] = tab[i][rhs].clone();
            }
        }
        return Ok(Feasibility::Feasible(x));
    }
    // Simplex multipliers y = c_Bᵀ·B⁻¹; B⁻¹ sits in the artificial columns.
    let y: Vec<Rational> = (0..m)
        .map(|k| basis.iter().enumerate().map(|(i, &j)| cost(j) * &tab[i][n + k]).sum())
        .collect();
    let farkas = y.iter().zip(&signs).map(|(yk, s)| -(yk * s)).collect();
    Ok(Feasibility::Infeasible(farkas))
}

pub fn verify_feasible(a: &[Vec<Rational>], b: &[Rational], x: &[Rational]) -> bool {
    x.iter().all(|v| !v.is_negative())
        && a.iter().zip(b).all(|(row, bi)| {
            row.len() == x.len() && row.iter().zip(x).map(|(r, v)| r * v).sum::<Rational>() == *bi
        })
}

pub fn verify_farkas(a: &[Vec<Rational>], b: &[Rational], y: &[Rational]) -> bool {
    if y.len() != a.len() {
        return false;
    }
    let n = a.first().map_or(0, Vec::len);
    let ya_nonneg = (0..n).all(|j| !a.iter().zip(y).map(|(r, yi)| &r[j] * yi).sum::<Rational>().is_negative());
    let yb: Rational = y.iter().zip(b).map(|(yi, bi)| yi * bi).sum();
    ya_nonneg && yb.is_negative()
}

/// Brute-force search over supports: a feasible system has a basic feasible
/// point whose support columns are independent, so trying every column
/// subset decides feasibility. Exponential; meant for at most a dozen
/// variables.
pub fn vertex_search(a: &[Vec<Rational>], b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    let n = check_shape(a, b)?;
    if n > 20 {
        return Err(Error::InvalidArgument(format!("vertex search over {n} variables is too large")));
    }
    let rhs: Vec<Scalar> = b.iter().cloned().map(Scalar::real).collect();
    for mask in 0u32..(1u32 << n) {
        let cols: Vec<usize> = (0..n).filter(|j| mask >> j & 1 == 1).collect();
        let sub = Matrix::from_triplets(
            a.len(),
            cols.len(),
            a.iter().enumerate().flat_map(|(i, row)| {
                cols.iter()
                    .enumerate()
                    .filter(move |(_, &j)| !row[j].is_zero())
                    .map(move |(k, &j)| (i, k, Scalar::real(row[j].clone())))
            }),
        );
        if super::echelon::image_rank(&sub) < cols.len() {
            continue;
        }
        if let Solution::Solved(x) = solve(&sub, &rhs)? {
            if x.iter().all(|v| !v.re().is_negative()) {
                let mut point = vec![Rational::zero(); n];
                for (k, &j) in cols.iter().enumerate() {
                    point[j] = x[k].re().clone();
                }
                return Ok(Some(point));
            }
        }
    }
    Ok(None)
}
