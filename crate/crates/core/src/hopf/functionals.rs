//! Counits and Haar states as exact linear problems.

use super::algebra::{Family, HopfStarAlgebra};
use crate::linalg::echelon::{kernel_sparse, solve, Solution};
use crate::linalg::lp::{find_feasible, Feasibility};
use crate::linalg::matrix::{Matrix, Vector};
use crate::linalg::psd::{psd_check, PsdReport};
use crate::linalg::scalar::{Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounitSearch {
    /// A solution of `(ε⊗id)∘δ = id`.
    pub counit: Option<Vector>,
    /// The left law has exactly one solution.
    pub unique: bool,
    /// The solution also satisfies `(id⊗ε)∘δ = id`.
    pub two_sided: bool,
    /// When the left law is unsolvable: `y` with `yᵀA = 0`, `yᵀb ≠ 0`.
    pub certificate: Option<Vector>,
    /// The linear system `A·ε = b` that was solved.
    pub system: (Matrix, Vector),
}

/// Rows of `(f⊗id)∘δ` as a linear function of `f`: entry `((u, k), i)` is
/// the coefficient of `f_i` in the `k`-th coordinate of `(f⊗id)δ(e_u)`.
fn left_leg_system(h: &HopfStarAlgebra) -> Matrix {
    let d = h.dim();
    let mut entries = Vec::new();
    for (row, vals) in h.comult().sparse_rows().iter().enumerate() {
        let (i, k) = (row / d, row % d);
        for (u, v) in vals {
            entries.push((u * d + k, i, v.clone()));
        }
    }
    Matrix::from_triplets(d * d, d, entries)
}

fn right_leg_system(h: &HopfStarAlgebra) -> Matrix {
    let d = h.dim();
    let mut entries = Vec::new();
    for (row, vals) in h.comult().sparse_rows().iter().enumerate() {
        let (k, i) = (row / d, row % d);
        for (u, v) in vals {
            entries.push((u * d + k, i, v.clone()));
        }
    }
    Matrix::from_triplets(d * d, d, entries)
}

fn identity_rhs(d: usize) -> Vector {
    (0..d * d).map(|r| if r / d == r % d { Scalar::one() } else { Scalar::zero() }).collect()
}

/// Solve the left counit law, then test whether the right law follows.
pub fn counit_find(h: &HopfStarAlgebra) -> CounitSearch {
    let d = h.dim();
    let a = left_leg_system(h);
    let b = identity_rhs(d);
    let sol = solve(&a, &b).expect("counit system shape");
    let unique = kernel_sparse(&a).is_empty();
    match sol {
        Solution::Solved(e) => {
            let right = right_leg_system(h).apply(&e).expect("shape");
            CounitSearch { two_sided: right == b, counit: Some(e), unique, certificate: None, system: (a, b) }
        }
        Solution::Inconsistent(y) => {
            CounitSearch { counit: None, unique, two_sided: false, certificate: Some(y), system: (a, b) }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Positivity {
    /// Nonnegative coordinates on a function algebra.
    Coordinatewise,
    /// `[φ(λ_{g⁻¹h})]` checked positive semidefinite on a group algebra.
    PositiveDefinite(PsdReport),
    /// No positivity notion is implemented for this family.
    Unchecked,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HaarSearch {
    Found { state: Vector, positivity: Positivity },
    /// For linear systems: `y` with `yᵀA = 0`, `yᵀb ≠ 0`. For the positive
    /// search on function algebras: a Farkas vector.
    Absent { certificate: Vector },
}

impl HaarSearch {
    pub fn state(&self) -> Option<&Vector> {
        match self {
            HaarSearch::Found { state, .. } => Some(state),
            HaarSearch::Absent { .. } => None,
        }
    }
}

/// Equations `(φ⊗id)∘δ = φ(·)1` and `φ(1) = 1`, stacked as `A·φ = b`.
pub fn haar_system(h: &HopfStarAlgebra) -> (Matrix, Vector) {
    let d = h.dim();
    let mut rows = left_leg_system(h).into_sparse_rows();
    for (r, row) in rows.iter_mut().enumerate() {
        let (u, k) = (r / d, r % d);
        let unit_k = &h.unit()[k];
        if !unit_k.is_zero() {
            let pos = row.iter().position(|(c, _)| *c == u);
            match pos {
                Some(p) => {
                    let v = &row[p].1 - unit_k;
                    if v.is_zero() {
                        row.remove(p);
                    } else {
                        row[p].1 = v;
                    }
                }
                None => {
                    row.push((u, -unit_k.clone()));
                    row.sort_unstable_by_key(|(c, _)| *c);
                }
            }
        }
    }
    rows.push(h.unit().iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(c, v)| (c, v.clone())).collect());
    let mut b = vec![Scalar::zero(); d * d];
    b.push(Scalar::one());
    (Matrix::from_sparse_rows(d, rows), b)
}

/// Left Haar state. On function algebras the search runs over nonnegative
/// weights; on group algebras the linear solution is checked for positive
/// definiteness.
pub fn haar_state(h: &HopfStarAlgebra) -> HaarSearch {
    let (a, b) = haar_system(h);
    match h.family() {
        Family::Function(_) => {
            let rows: Vec<Vec<Rational>> = a.to_dense().into_iter().map(|r| r.into_iter().map(|v| v.re().clone()).collect()).collect();
            let rhs: Vec<Rational> = b.iter().map(|v| v.re().clone()).collect();
            match find_feasible(&rows, &rhs).expect("haar LP shape") {
                Feasibility::Feasible(w) => HaarSearch::Found {
                    state: w.into_iter().map(Scalar::real).collect(),
                    positivity: Positivity::Coordinatewise,
                },
                Feasibility::Infeasible(y) => {
                    HaarSearch::Absent { certificate: y.into_iter().map(Scalar::real).collect() }
                }
            }
        }
        family => match solve(&a, &b).expect("haar system shape") {
            Solution::Inconsistent(y) => HaarSearch::Absent { certificate: y },
            Solution::Solved(phi) => {
                let positivity = match family {
                    Family::Group(g) => {
                        let n = g.order();
                        let gram = Matrix::from_triplets(
                            n,
                            n,
                            (0..n).flat_map(|i| {
                                let phi = &phi;
                                (0..n).map(move |j| (i, j, phi[g.mul(g.inverse(i), j)].clone()))
                            }),
                        );
                        match psd_check(&gram) {
                            Ok(report) => Positivity::PositiveDefinite(report),
                            Err(_) => Positivity::Unchecked,
                        }
                    }
                    _ => Positivity::Unchecked,
                };
                HaarSearch::Found { state: phi, positivity }
            }
        },
    }
}
