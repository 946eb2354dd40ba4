//! Coboundary matrices.
//!
//! Natural cochains live in `X⊗Sⁿ`. Dual cochains `T: X → Sⁿ` are stored as
//! the `dⁿ × dim X` matrix of `T` flattened column by column, so the entry
//! `T(e_x)_J` sits at `x·dⁿ + J`, the same index as `e_x⊗e_J` in `X⊗Sⁿ`.
//! Bar cochains are functionals on `Bⁿ⊗V`, indexed `J·dim V + v`.

use crate::comodule::ops::{left_action_matrix, right_action_matrix};
use crate::comodule::Bicomodule;
use crate::error::{Error, Result};
use crate::linalg::matrix::Matrix;
use crate::linalg::scalar::Scalar;
use crate::linalg::tensor::{permute_factors, power, rotation_sigma};

pub const DEFAULT_DEGREE_CAP: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComplexKind {
    /// `X⊗Sⁿ` with `δₙ`.
    Natural,
    /// `Hom(X, Sⁿ)` with `∂ₙ`.
    Dual,
    /// `(Bⁿ⊗V)*` with the transposed bar differential, `B` the dual algebra.
    Bar,
    /// Dual complex of a right comodule with `γ = 1⊗id`.
    Restricted,
}

impl ComplexKind {
    pub fn name(self) -> &'static str {
        match self {
            ComplexKind::Natural => "natural",
            ComplexKind::Dual => "dual",
            ComplexKind::Bar => "bar",
            ComplexKind::Restricted => "restricted",
        }
    }
}

fn cap_check(n: usize, cap: usize) -> Result<()> {
    if n + 1 > cap {
        return Err(Error::DegreeCapExceeded { degree: n + 1, cap });
    }
    Ok(())
}

fn sign(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

/// `δₙ: X⊗Sⁿ → X⊗Sⁿ⁺¹`,
/// `δₙ = β⊗idⁿ + Σₖ (−1)ᵏ id_X⊗idᵏ⁻¹⊗δ⊗idⁿ⁻ᵏ + (−1)ⁿ⁺¹ σ_{n+1,1}∘(γ⊗idⁿ)`.
pub fn natural_coboundary(b: &Bicomodule, n: usize, cap: usize) -> Result<Matrix> {
    cap_check(n, cap)?;
    let h = b.hopf();
    let d = h.dim();
    let dx = b.space_dim();
    let mut acc = b.beta().kron_identity_right(power(d, n));
    for k in 1..=n {
        let term = Matrix::identity(dx * power(d, k - 1)).kron(h.comult()).kron_identity_right(power(d, n - k));
        acc.add_scaled(&sign(k), &term)?;
    }
    let sigma = rotation_sigma(n + 1, 1, dx, d)?;
    let gamma_leg = sigma.checked_mul(&b.gamma().kron_identity_right(power(d, n)))?;
    acc.add_scaled(&sign(n + 1), &gamma_leg)?;
    Ok(acc)
}

/// `∂ₙ(T) = (T⊗id)β + Σₖ (−1)ᵏ (idⁿ⁻ᵏ⊗δ⊗idᵏ⁻¹)T + (−1)ⁿ⁺¹ (id⊗T)γ`,
/// built entry by entry rather than through Kronecker products.
pub fn dual_coboundary(b: &Bicomodule, n: usize, cap: usize) -> Result<Matrix> {
    cap_check(n, cap)?;
    let h = b.hopf();
    let d = h.dim();
    let dx = b.space_dim();
    let dn = power(d, n);
    let dn1 = dn * d;
    let mut entries: Vec<(usize, usize, Scalar)> = Vec::new();
    for (row, vals) in b.beta().sparse_rows().iter().enumerate() {
        let (y, j) = (row / d, row % d);
        for (x, v) in vals {
            for big_j in 0..dn {
                entries.push((x * dn1 + big_j * d + j, y * dn + big_j, v.clone()));
            }
        }
    }
    // (id^{n-k}⊗δ⊗id^{k-1}) applied to the Sⁿ leg of every column.
    let comult_t = h.comult().transpose();
    for k in 1..=n {
        let (outer, inner) = (power(d, n - k), power(d, k - 1));
        let s = sign(k);
        for x in 0..dx {
            for a in 0..outer {
                for m in 0..d {
                    for c in 0..inner {
                        let col = x * dn + (a * d + m) * inner + c;
                        for (pair, v) in comult_t.row(m) {
                            let row = x * dn1 + (a * d * d + pair) * inner + c;
                            entries.push((row, col, &s * v));
                        }
                    }
                }
            }
        }
    }
    let s = sign(n + 1);
    for (row, vals) in b.gamma().sparse_rows().iter().enumerate() {
        let (j, y) = (row / dx, row % dx);
        for (x, v) in vals {
            let v = &s * v;
            for big_j in 0..dn {
                entries.push((x * dn1 + j * dn + big_j, y * dn + big_j, v.clone()));
            }
        }
    }
    Ok(Matrix::from_triplets(dx * dn1, dx * dn, entries))
}

/// Bar differential `dₙ: Bⁿ⊗V → Bⁿ⁻¹⊗V` (`n ≥ 1`) for the dual algebra `B`
/// acting on `V = X` by `ω·x = (id⊗ω)β(x)` and `x·ω = (ω⊗id)γ(x)`:
/// `dₙ(a₁…aₙ⊗v) = a₁…aₙ₋₁⊗aₙ·v + Σᵢ (−1)ⁿ⁻ⁱ a₁…aᵢaᵢ₊₁…aₙ⊗v + (−1)ⁿ a₂…aₙ⊗v·a₁`.
pub fn bar_differential(b: &Bicomodule, n: usize, cap: usize) -> Result<Matrix> {
    if n == 0 {
        return Err(Error::InvalidArgument("the bar differential starts at degree 1".into()));
    }
    cap_check(n - 1, cap)?;
    let h = b.hopf();
    let d = h.dim();
    let dx = b.space_dim();
    let left = left_action_matrix(b.right());
    let right = right_action_matrix(b.left());
    let dual_mult = h.comult().transpose();
    let mut acc = Matrix::identity(power(d, n - 1)).kron(&left);
    for i in 1..n {
        let term = Matrix::identity(power(d, i - 1))
            .kron(&dual_mult)
            .kron_identity_right(power(d, n - i - 1) * dx);
        acc.add_scaled(&sign(n - i), &term)?;
    }
    // Move a₁ behind v, then act on the right.
    let mut dims = vec![d; n];
    dims.push(dx);
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.push(0);
    let rotate = permute_factors(&dims, &perm)?;
    let last = Matrix::identity(power(d, n - 1)).kron(&right).checked_mul(&rotate)?;
    acc.add_scaled(&sign(n), &last)?;
    Ok(acc)
}

/// Degree-`n` coboundary of the dual bar complex: `dₙ₊₁ᵀ`.
pub fn bar_coboundary(b: &Bicomodule, n: usize, cap: usize) -> Result<Matrix> {
    Ok(bar_differential(b, n + 1, cap)?.transpose())
}

#[derive(Clone, Debug)]
pub struct CochainComplex {
    pub kind: ComplexKind,
    pub label: String,
    /// `dims[n] = dim Cⁿ`, one more entry than `boundaries`.
    pub dims: Vec<usize>,
    /// `boundaries[n]: Cⁿ → Cⁿ⁺¹`.
    pub boundaries: Vec<Matrix>,
}

impl CochainComplex {
    /// Build `D_0 … D_top` of the requested kind.
    pub fn build(b: &Bicomodule, kind: ComplexKind, top: usize, cap: usize) -> Result<Self> {
        let mut boundaries = Vec::with_capacity(top + 1);
        for n in 0..=top {
            boundaries.push(match kind {
                ComplexKind::Natural => natural_coboundary(b, n, cap)?,
                ComplexKind::Dual | ComplexKind::Restricted => dual_coboundary(b, n, cap)?,
                ComplexKind::Bar => bar_coboundary(b, n, cap)?,
            });
        }
        let mut dims: Vec<usize> = boundaries.iter().map(Matrix::cols).collect();
        dims.push(boundaries.last().map_or(0, Matrix::rows));
        let label = format!("{}/{}", b.hopf().name(), b.label());
        Ok(CochainComplex { kind, label, dims, boundaries })
    }

    pub fn top(&self) -> usize {
        self.boundaries.len() - 1
    }

    pub fn boundary(&self, n: usize) -> &Matrix {
        &self.boundaries[n]
    }

    /// For every `n` with both maps built: is `D_{n+1}·D_n` exactly zero?
    pub fn chain_property(&self) -> Vec<(usize, bool)> {
        self.boundaries
            .windows(2)
            .enumerate()
            .map(|(n, w)| (n, w[1].checked_mul(&w[0]).map(|p| p.is_zero()).unwrap_or(false)))
            .collect()
    }
}
