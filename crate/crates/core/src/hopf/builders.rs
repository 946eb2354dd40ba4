use super::algebra::{Family, HopfStarAlgebra};
use super::monoid::{FiniteGroup, FiniteMonoid};
use crate::error::{Error, Result};
use crate::linalg::matrix::Matrix;
use crate::linalg::scalar::Scalar;

/// Functions on `m` with pointwise product and `δ(f)(s, t) = f(st)`:
/// `δ(δ_u) = Σ_{st=u} δ_s⊗δ_t`. The counit is evaluation at the identity
/// and is absent when `m` has none.
pub fn function_algebra(m: &FiniteMonoid) -> HopfStarAlgebra {
    let d = m.order();
    let mult = Matrix::from_triplets(d, d * d, (0..d).map(|u| (u, u * d + u, Scalar::one())));
    let comult = Matrix::from_triplets(
        d * d,
        d,
        (0..d).flat_map(|s| (0..d).map(move |t| (s * d + t, m.mul(s, t), Scalar::one()))),
    );
    let unit = vec![Scalar::one(); d];
    let counit = m.identity().map(|e| (0..d).map(|k| if k == e { Scalar::one() } else { Scalar::zero() }).collect());
    let labels = m.labels().iter().map(|l| format!("δ_{l}")).collect();
    HopfStarAlgebra::new(
        format!("function_algebra:{}", m.name()),
        labels,
        mult,
        unit,
        comult,
        counit,
        Some(Matrix::identity(d)),
        Family::Function(m.clone()),
    )
    .expect("function algebra shapes")
}

/// Group algebra with `λ_rλ_s = λ_{rs}`, `δ(λ_r) = λ_r⊗λ_r`, `λ_r* = λ_{r⁻¹}`.
pub fn group_algebra(g: &FiniteGroup) -> HopfStarAlgebra {
    let d = g.order();
    let mult = Matrix::from_triplets(
        d,
        d * d,
        (0..d).flat_map(|r| (0..d).map(move |s| (g.mul(r, s), r * d + s, Scalar::one()))),
    );
    let comult = Matrix::from_triplets(d * d, d, (0..d).map(|r| (r * d + r, r, Scalar::one())));
    let mut unit = vec![Scalar::zero(); d];
    unit[0] = Scalar::one();
    let counit = Some(vec![Scalar::one(); d]);
    let star = Matrix::from_triplets(d, d, (0..d).map(|r| (g.inverse(r), r, Scalar::one())));
    let labels = g.labels().iter().map(|l| format!("λ_{l}")).collect();
    HopfStarAlgebra::new(
        format!("group_algebra:{}", g.name()),
        labels,
        mult,
        unit,
        comult,
        counit,
        Some(star),
        Family::Group(g.clone()),
    )
    .expect("group algebra shapes")
}

/// The dual algebra `S*` in the dual basis: product `(f·g) = (f⊗g)∘δ`, so
/// the product matrix is `comultᵀ`; coproduct is `multᵀ`; unit and counit
/// swap. No involution is recorded since the natural one needs an antipode.
pub fn dual_hopf(h: &HopfStarAlgebra) -> Result<HopfStarAlgebra> {
    let counit = h.counit().ok_or(Error::MissingCounit)?;
    let labels = h.labels().iter().map(|l| format!("{l}*")).collect();
    HopfStarAlgebra::new(
        format!("dual({})", h.name()),
        labels,
        h.comult().transpose(),
        counit.clone(),
        h.mult().transpose(),
        Some(h.unit().clone()),
        None,
        Family::Dual,
    )
}
