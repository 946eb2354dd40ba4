//! Codiagonals: functionals `F` on `S⊗S` with `F∘δ = ε` and
//! `(F⊗id)(id⊗δ) = (id⊗F)(δ⊗id)`.

use crate::error::{Error, Result};
use crate::hopf::{Family, FiniteGroup, HopfStarAlgebra};
use crate::linalg::echelon::{kernel_sparse, solve, Solution};
use crate::linalg::matrix::{Matrix, Vector};
use crate::linalg::psd::{psd_check, PsdReport};
use crate::linalg::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodiagonalPositivity {
    /// Nonnegative values on the delta basis of a function algebra.
    Coordinatewise(bool),
    /// `[F((rᵢ,sᵢ)⁻¹(rⱼ,sⱼ))]` over all of `Γ×Γ`.
    PositiveDefinite(PsdReport),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodiagonalCertificate {
    /// `F(e_i⊗e_j)` at index `i·d+j`.
    pub functional: Vector,
    /// `F∘δ − ε`, must be all zero.
    pub counit_residual: Vector,
    /// `(F⊗id)(id⊗δ) − (id⊗F)(δ⊗id)` on every `e_a⊗e_b`, must be all zero.
    pub module_residual: Vector,
    /// Reported, never required.
    pub positivity: Option<CodiagonalPositivity>,
}

impl CodiagonalCertificate {
    pub fn holds(&self) -> bool {
        self.counit_residual.iter().all(Scalar::is_zero) && self.module_residual.iter().all(Scalar::is_zero)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodiagonalSearch {
    /// A canonical solution and the dimension of the affine solution set.
    Found { certificate: CodiagonalCertificate, solution_dim: usize },
    /// `y` with `yᵀA = 0`, `yᵀb ≠ 0` for the stacked system.
    Absent { certificate: Vector },
}

impl CodiagonalSearch {
    pub fn certificate(&self) -> Option<&CodiagonalCertificate> {
        match self {
            CodiagonalSearch::Found { certificate, .. } => Some(certificate),
            CodiagonalSearch::Absent { .. } => None,
        }
    }
}

/// Stack both identities as `A·F = b`. Rows `0..d` encode `F∘δ = ε`; row
/// `d + (a·d+b)·d + m` is the `e_m` coefficient of the second identity on
/// `e_a⊗e_b`.
pub fn codiagonal_system(h: &HopfStarAlgebra) -> Result<(Matrix, Vector)> {
    let eps = h.counit().ok_or(Error::MissingCounit)?;
    let d = h.dim();
    let mut entries = Vec::new();
    for (pair, vals) in h.comult().sparse_rows().iter().enumerate() {
        for (k, v) in vals {
            entries.push((*k, pair, v.clone()));
        }
    }
    for (pair, vals) in h.comult().sparse_rows().iter().enumerate() {
        let (first, second) = (pair / d, pair % d);
        for (src, v) in vals {
            // (F⊗id)(id⊗δ)(e_a⊗e_b): src = b, (c, m) = (first, second), unknown F(a, c).
            for a in 0..d {
                entries.push((d + (a * d + src) * d + second, a * d + first, v.clone()));
            }
            // (id⊗F)(δ⊗id)(e_a⊗e_b): src = a, (m, e) = (first, second), unknown F(e, b).
            for b in 0..d {
                entries.push((d + (src * d + b) * d + first, second * d + b, -v.clone()));
            }
        }
    }
    let a = Matrix::from_triplets(d + d * d * d, d * d, entries);
    let mut rhs = eps.clone();
    rhs.extend(std::iter::repeat_n(Scalar::zero(), d * d * d));
    Ok((a, rhs))
}

fn positivity(h: &HopfStarAlgebra, f: &[Scalar]) -> Option<CodiagonalPositivity> {
    match h.family() {
        Family::Function(_) => Some(CodiagonalPositivity::Coordinatewise(
            f.iter().all(|v| v.is_real() && !num_traits::Signed::is_negative(v.re())),
        )),
        Family::Group(g) => psd_check(&pair_gram(g, f)).ok().map(CodiagonalPositivity::PositiveDefinite),
        _ => None,
    }
}

/// `[F((rᵢ,sᵢ)⁻¹(rⱼ,sⱼ))]` over all pairs, pair `(r,s)` at index `r·|Γ|+s`.
pub fn pair_gram(g: &FiniteGroup, f: &[Scalar]) -> Matrix {
    let n = g.order();
    let mut entries = Vec::new();
    for i in 0..n * n {
        let (ri, si) = (i / n, i % n);
        for j in 0..n * n {
            let (rj, sj) = (j / n, j % n);
            let r = g.mul(g.inverse(ri), rj);
            let s = g.mul(g.inverse(si), sj);
            entries.push((i, j, f[r * n + s].clone()));
        }
    }
    Matrix::from_triplets(n * n, n * n, entries)
}

/// Residuals of both identities for a candidate `F`.
pub fn verify_codiagonal(h: &HopfStarAlgebra, f: &[Scalar]) -> Result<CodiagonalCertificate> {
    let d = h.dim();
    if f.len() != d * d {
        return Err(Error::DimensionMismatch { op: "codiagonal", left: (f.len(), 1), right: (d * d, 1) });
    }
    let (a, b) = codiagonal_system(h)?;
    let values = a.apply(f)?;
    let residual: Vector = values.iter().zip(&b).map(|(x, y)| x - y).collect();
    Ok(CodiagonalCertificate {
        functional: f.to_vec(),
        counit_residual: residual[..d].to_vec(),
        module_residual: residual[d..].to_vec(),
        positivity: positivity(h, f),
    })
}

pub fn find_codiagonal(h: &HopfStarAlgebra) -> Result<CodiagonalSearch> {
    let (a, b) = codiagonal_system(h)?;
    match solve(&a, &b)? {
        Solution::Solved(f) => {
            let certificate = verify_codiagonal(h, &f)?;
            debug_assert!(certificate.holds());
            Ok(CodiagonalSearch::Found { certificate, solution_dim: kernel_sparse(&a).len() })
        }
        Solution::Inconsistent(y) => Ok(CodiagonalSearch::Absent { certificate: y }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KroneckerCodiagonal {
    pub certificate: CodiagonalCertificate,
    pub gram: Matrix,
    pub psd: PsdReport,
    /// Classes of `(r,s) ∼ (u,v) ⇔ sr⁻¹ = vu⁻¹`, as pair indices.
    pub classes: Vec<Vec<usize>>,
    /// The Gram matrix is 1 exactly within classes and 0 across them.
    pub block_structure: bool,
}

/// `F₀(λ_r⊗λ_s) = δ_{r,s}` on the group algebra of `g`.
pub fn kronecker_codiagonal(g: &FiniteGroup) -> Result<KroneckerCodiagonal> {
    let h = crate::hopf::group_algebra(g);
    let n = g.order();
    let f: Vector = (0..n * n).map(|i| if i / n == i % n { Scalar::one() } else { Scalar::zero() }).collect();
    let certificate = verify_codiagonal(&h, &f)?;
    let gram = pair_gram(g, &f);
    let psd = psd_check(&gram)?;
    let key = |i: usize| g.mul(i % n, g.inverse(i / n));
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n * n {
        classes[key(i)].push(i);
    }
    let block_structure = (0..n * n).all(|i| {
        (0..n * n).all(|j| gram.get(i, j) == if key(i) == key(j) { Scalar::one() } else { Scalar::zero() })
    });
    Ok(KroneckerCodiagonal { certificate, gram, psd, classes, block_structure })
}
