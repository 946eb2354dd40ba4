//! Chain-level comparisons between complexes.

use super::cohomology::cohomology_dim;
use super::complex::{bar_coboundary, dual_coboundary, natural_coboundary, CochainComplex, ComplexKind};
use crate::comodule::{dual_bicomodule, Bicomodule};
use crate::error::Result;
use crate::linalg::matrix::Matrix;
use crate::linalg::scalar::Scalar;
use crate::linalg::tensor::{flip, power};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualNaturalDegree {
    pub degree: usize,
    /// `δₙ` on `X*` equals `(−1)ⁿ⁺¹∂ₙ` on `X`, entry by entry.
    pub sign_identity: bool,
    /// First differing entry when the identity fails.
    pub witness: Option<(usize, usize)>,
    /// `dim Hⁿ_d(S; X)`.
    pub dual_dim: usize,
    /// `dim Hⁿ(S; X*)`.
    pub natural_dim: usize,
}

/// Compare the dual complex of `X` with the natural complex of the dual
/// bicomodule `X*` in degrees `0..=top`. The coordinate of `e_x*⊗e_J` and of
/// the dual cochain entry `T(e_x)_J` coincide, so no reindexing is needed.
pub fn identify_dual_natural(b: &Bicomodule, top: usize, cap: usize) -> Result<Vec<DualNaturalDegree>> {
    let dual = dual_bicomodule(b)?;
    let dual_cx = CochainComplex::build(b, ComplexKind::Dual, top, cap)?;
    let nat_cx = CochainComplex::build(&dual, ComplexKind::Natural, top, cap)?;
    let mut out = Vec::new();
    for n in 0..=top {
        let sign = if n % 2 == 0 { -Scalar::one() } else { Scalar::one() };
        let expected = dual_cx.boundary(n).scale(&sign);
        let witness = nat_cx.boundary(n).first_difference(&expected);
        out.push(DualNaturalDegree {
            degree: n,
            sign_identity: witness.is_none(),
            witness,
            dual_dim: cohomology_dim(&dual_cx, n),
            natural_dim: cohomology_dim(&nat_cx, n),
        });
    }
    Ok(out)
}

/// Reorder `X⊗Sⁿ` coordinates `x·dⁿ+J` to `Sⁿ⊗X` coordinates `J·dim X+x`.
pub fn operator_flattening(dx: usize, d: usize, n: usize) -> Matrix {
    flip(dx, power(d, n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorDegree {
    pub degree: usize,
    /// `Pₙ₊₁·∂ₙ·Pₙᵀ = dₙ₊₁ᵀ` exactly.
    pub identical: bool,
    pub witness: Option<(usize, usize)>,
}

/// Compare `∂ₙ` with the transposed bar differential `dₙ₊₁ᵀ` under
/// `f_T(ω₁⊗…⊗ωₙ⊗x) = T(x)(ω₁⊗…⊗ωₙ)`.
pub fn identify_operator_cohomology(b: &Bicomodule, top: usize, cap: usize) -> Result<Vec<OperatorDegree>> {
    let d = b.hopf().dim();
    let dx = b.space_dim();
    let mut out = Vec::new();
    for n in 0..=top {
        let partial = dual_coboundary(b, n, cap)?;
        let moved = operator_flattening(dx, d, n + 1)
            .checked_mul(&partial)?
            .checked_mul(&operator_flattening(dx, d, n).transpose())?;
        let witness = moved.first_difference(&bar_coboundary(b, n, cap)?);
        out.push(OperatorDegree { degree: n, identical: witness.is_none(), witness });
    }
    Ok(out)
}

/// Natural coboundary of the dual bicomodule, exposed for direct comparisons.
pub fn dual_side_natural(b: &Bicomodule, n: usize, cap: usize) -> Result<Matrix> {
    natural_coboundary(&dual_bicomodule(b)?, n, cap)
}
