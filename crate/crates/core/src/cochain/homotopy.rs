//! Explicit primitives for cocycles, from a counit, a Haar state or a
//! codiagonal.
//!
//! Every function takes a degree-`n` cocycle `T` (`n ≥ 1`), builds the
//! candidate primitive `P` from the closed formula, applies `D_{n−1}` and
//! reports the sign `σ` with `D_{n−1}(P) = σ·T`. Failure to hit `±T` is an
//! error, never a silent result.

use super::complex::{dual_coboundary, natural_coboundary};
use crate::comodule::Bicomodule;
use crate::error::{Error, Result};
use crate::linalg::matrix::Vector;
use crate::linalg::scalar::Scalar;
use crate::linalg::tensor::power;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homotopy {
    pub degree: usize,
    pub primitive: Vector,
    /// `D_{n−1}(primitive) = sign·T`.
    pub sign: i8,
    /// The sign the closed formula predicts.
    pub expected_sign: i8,
}

impl Homotopy {
    pub fn sign_matches(&self) -> bool {
        self.sign == self.expected_sign
    }
}

fn parity(k: usize) -> i8 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn require_cocycle(d_n: &crate::linalg::Matrix, t: &[Scalar], n: usize) -> Result<()> {
    if d_n.apply(t)?.iter().any(|x| !x.is_zero()) {
        return Err(Error::NotCocycle { degree: n });
    }
    Ok(())
}

fn certify(image: Vector, t: &[Scalar], n: usize, primitive: Vector, expected_sign: i8) -> Result<Homotopy> {
    let sign = if image == t {
        1
    } else if image.iter().zip(t).all(|(a, b)| *a == -b) {
        -1
    } else {
        return Err(Error::HomotopyFailed { degree: n, reason: "D(primitive) is not ±T".into() });
    };
    Ok(Homotopy { degree: n, primitive, sign, expected_sign })
}

fn check_degree(n: usize, t: &[Scalar], expected_len: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("homotopies start in degree 1".into()));
    }
    if t.len() != expected_len {
        return Err(Error::DimensionMismatch { op: "cochain", left: (t.len(), 1), right: (expected_len, 1) });
    }
    Ok(())
}

/// Apply a functional `φ` to the first `S` leg of a dual cochain:
/// `(φ⊗idⁿ⁻¹)∘T`.
fn contract_first_leg(t: &[Scalar], phi: &[Scalar], dx: usize, d: usize, n: usize) -> Vector {
    let (dn, rest) = (power(d, n), power(d, n - 1));
    let mut out = vec![Scalar::zero(); dx * rest];
    for x in 0..dx {
        for (j, p) in phi.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for r in 0..rest {
                let v = &t[x * dn + j * rest + r];
                if !v.is_zero() {
                    out[x * rest + r] += &(p * v);
                }
            }
        }
    }
    out
}

/// Dual side, `γ = 0`: `F = (ε⊗idⁿ⁻¹)∘T` with `∂ₙ₋₁F = (−1)ⁿ⁻¹T`.
pub fn homotopy_from_counit(b: &Bicomodule, n: usize, t: &[Scalar], cap: usize) -> Result<Homotopy> {
    let h = b.hopf();
    let eps = h.counit().ok_or(Error::MissingCounit)?;
    let (d, dx) = (h.dim(), b.space_dim());
    check_degree(n, t, dx * power(d, n))?;
    require_cocycle(&dual_coboundary(b, n, cap)?, t, n)?;
    let f = contract_first_leg(t, eps, dx, d, n);
    let image = dual_coboundary(b, n - 1, cap)?.apply(&f)?;
    certify(image, t, n, f, parity(n - 1))
}

/// Natural side, `γ = 0`: `m_ε = (id_X⊗idⁿ⁻¹⊗ε)(m)` with
/// `δₙ₋₁(m_ε) = (−1)ⁿ⁻¹m`.
pub fn natural_homotopy_from_counit(b: &Bicomodule, n: usize, m: &[Scalar], cap: usize) -> Result<Homotopy> {
    let h = b.hopf();
    let eps = h.counit().ok_or(Error::MissingCounit)?;
    let (d, dx) = (h.dim(), b.space_dim());
    check_degree(n, m, dx * power(d, n))?;
    require_cocycle(&natural_coboundary(b, n, cap)?, m, n)?;
    let rest = dx * power(d, n - 1);
    let mut p = vec![Scalar::zero(); rest];
    for (r, slot) in p.iter_mut().enumerate() {
        for (j, e) in eps.iter().enumerate() {
            if !e.is_zero() {
                *slot += &(e * &m[r * d + j]);
            }
        }
    }
    let image = natural_coboundary(b, n - 1, cap)?.apply(&p)?;
    certify(image, m, n, p, parity(n - 1))
}

/// Dual side with `γ = 1⊗id` and a left Haar state `φ`:
/// `F = (φ⊗idⁿ⁻¹)∘T` with `∂ₙ₋₁F = (−1)ⁿT`.
pub fn homotopy_from_haar(b: &Bicomodule, n: usize, t: &[Scalar], phi: &[Scalar], cap: usize) -> Result<Homotopy> {
    let h = b.hopf();
    let (d, dx) = (h.dim(), b.space_dim());
    check_degree(n, t, dx * power(d, n))?;
    require_cocycle(&dual_coboundary(b, n, cap)?, t, n)?;
    let f = contract_first_leg(t, phi, dx, d, n);
    let image = dual_coboundary(b, n - 1, cap)?.apply(&f)?;
    certify(image, t, n, f, parity(n))
}

/// Which coaction the codiagonal homotopy contracts against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CodiagonalSide {
    /// `R = (idⁿ⁻¹⊗F)∘(T⊗id)∘β`.
    Right,
    /// `R = (F⊗idⁿ⁻¹)∘(id⊗T)∘γ`.
    Left,
}

/// Codiagonal `F` on `S⊗S` (index `i·d+j`). The right formula gives
/// `∂ₙ₋₁R = T`, the left one `∂ₙ₋₁R = (−1)ⁿT`: mirroring the argument moves
/// `T` into the `γ` term, which carries the sign `(−1)ⁿ⁺¹`.
pub fn homotopy_from_codiagonal(
    b: &Bicomodule,
    n: usize,
    t: &[Scalar],
    codiagonal: &[Scalar],
    side: CodiagonalSide,
    cap: usize,
) -> Result<Homotopy> {
    let h = b.hopf();
    let (d, dx) = (h.dim(), b.space_dim());
    check_degree(n, t, dx * power(d, n))?;
    if codiagonal.len() != d * d {
        return Err(Error::DimensionMismatch { op: "codiagonal", left: (codiagonal.len(), 1), right: (d * d, 1) });
    }
    require_cocycle(&dual_coboundary(b, n, cap)?, t, n)?;
    let (dn, rest) = (power(d, n), power(d, n - 1));
    let mut r_out = vec![Scalar::zero(); dx * rest];
    match side {
        CodiagonalSide::Right => {
            // R[J'',x] = Σ F[jₙ, j]·T[(J'',jₙ), y]·B[(y,j), x]
            for (row, vals) in b.beta().sparse_rows().iter().enumerate() {
                let (y, j) = (row / d, row % d);
                for (x, bv) in vals {
                    for jn in 0..d {
                        let f = &codiagonal[jn * d + j];
                        if f.is_zero() {
                            continue;
                        }
                        let fb = f * bv;
                        for jj in 0..rest {
                            let tv = &t[y * dn + jj * d + jn];
                            if !tv.is_zero() {
                                r_out[x * rest + jj] += &(&fb * tv);
                            }
                        }
                    }
                }
            }
        }
        CodiagonalSide::Left => {
            // R[J'',x] = Σ F[j, j₁]·G[(j,y), x]·T[(j₁,J''), y]
            for (row, vals) in b.gamma().sparse_rows().iter().enumerate() {
                let (j, y) = (row / dx, row % dx);
                for (x, gv) in vals {
                    for j1 in 0..d {
                        let f = &codiagonal[j * d + j1];
                        if f.is_zero() {
                            continue;
                        }
                        let fg = f * gv;
                        for jj in 0..rest {
                            let tv = &t[y * dn + j1 * rest + jj];
                            if !tv.is_zero() {
                                r_out[x * rest + jj] += &(&fg * tv);
                            }
                        }
                    }
                }
            }
        }
    }
    let expected = match side {
        CodiagonalSide::Right => 1,
        CodiagonalSide::Left => parity(n),
    };
    let image = dual_coboundary(b, n - 1, cap)?.apply(&r_out)?;
    certify(image, t, n, r_out, expected)
}
