//! Right and left coactions and bicomodules.
//!
//! A right coaction on `X` is a `(dim X·d) × dim X` matrix for `X → X⊗S`;
//! a left coaction is `(d·dim X) × dim X` for `X → S⊗X`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::HopfStarAlgebra;
use crate::linalg::echelon::Echelon;
use crate::linalg::matrix::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightCoaction {
    hopf: Arc<HopfStarAlgebra>,
    space_dim: usize,
    beta: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftCoaction {
    hopf: Arc<HopfStarAlgebra>,
    space_dim: usize,
    gamma: Matrix,
}

/// Span-equality results for `X⊗S` (or `S⊗X`) under multiplication on the
/// `S` leg.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Nondegeneracy {
    pub left: bool,
    pub right: bool,
}

impl Nondegeneracy {
    pub fn either(&self) -> bool {
        self.left || self.right
    }
}

fn span_is_full(width: usize, vectors: impl IntoIterator<Item = Vec<(usize, crate::linalg::Scalar)>>) -> bool {
    let mut e = Echelon::new(width);
    for v in vectors {
        e.insert(v);
        if e.rank() == width {
            return true;
        }
    }
    e.rank() == width
}

impl RightCoaction {
    /// Build and verify `(β⊗id)β = (id⊗δ)β`.
    pub fn new(hopf: Arc<HopfStarAlgebra>, space_dim: usize, beta: Matrix) -> Result<Self> {
        let c = RightCoaction { hopf, space_dim, beta };
        c.check_shape()?;
        if let Some(x) = c.identity_witness() {
            return Err(Error::CoactionIdentity(format!(
                "(β⊗id)β ≠ (id⊗δ)β on basis vector {x}"
            )));
        }
        Ok(c)
    }

    fn check_shape(&self) -> Result<()> {
        let want = (self.space_dim * self.hopf.dim(), self.space_dim);
        if self.beta.shape() != want {
            return Err(Error::DimensionMismatch { op: "right coaction", left: self.beta.shape(), right: want });
        }
        Ok(())
    }

    /// First basis vector on which the coaction identity fails.
    pub fn identity_witness(&self) -> Option<usize> {
        let d = self.hopf.dim();
        let lhs = self.beta.kron_identity_right(d).checked_mul(&self.beta).expect("shape");
        let rhs = self.hopf.comult().kron_identity_left(self.space_dim).checked_mul(&self.beta).expect("shape");
        lhs.transpose().first_difference(&rhs.transpose()).map(|(x, _)| x)
    }

    /// `β(x) = x⊗1`.
    pub fn trivial(hopf: Arc<HopfStarAlgebra>, space_dim: usize) -> Result<Self> {
        let beta = Matrix::identity(space_dim).kron(&Matrix::column_vector(hopf.unit()));
        Self::new(hopf, space_dim, beta)
    }

    /// `X = S`, `β = δ`.
    pub fn regular(hopf: Arc<HopfStarAlgebra>) -> Result<Self> {
        let d = hopf.dim();
        let beta = hopf.comult().clone();
        Self::new(hopf, d, beta)
    }

    pub fn zero(hopf: Arc<HopfStarAlgebra>, space_dim: usize) -> Self {
        let d = hopf.dim();
        RightCoaction { hopf, space_dim, beta: Matrix::zeros(space_dim * d, space_dim) }
    }

    pub fn hopf(&self) -> &Arc<HopfStarAlgebra> {
        &self.hopf
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    pub fn matrix(&self) -> &Matrix {
        &self.beta
    }

    /// Right: span of `β(x)·s` is `X⊗S`. Left: span of `(1⊗s)·β(x)`.
    pub fn check_nondegenerate(&self) -> Nondegeneracy {
        let h = &self.hopf;
        let d = h.dim();
        let width = self.space_dim * d;
        let image = |op: Matrix| op.kron_identity_left(self.space_dim).checked_mul(&self.beta).expect("shape");
        let right = span_is_full(width, (0..d).flat_map(|s| image(h.right_multiplication(s)).columns()));
        let left = span_is_full(width, (0..d).flat_map(|s| image(h.left_multiplication(s)).columns()));
        Nondegeneracy { left, right }
    }

    pub fn is_injective(&self) -> bool {
        crate::linalg::image_rank(&self.beta) == self.space_dim
    }
}

impl LeftCoaction {
    /// Build and verify `(id⊗γ)γ = (δ⊗id)γ`.
    pub fn new(hopf: Arc<HopfStarAlgebra>, space_dim: usize, gamma: Matrix) -> Result<Self> {
        let c = LeftCoaction { hopf, space_dim, gamma };
        let want = (space_dim * c.hopf.dim(), space_dim);
        if c.gamma.shape() != want {
            return Err(Error::DimensionMismatch { op: "left coaction", left: c.gamma.shape(), right: want });
        }
        if let Some(x) = c.identity_witness() {
            return Err(Error::CoactionIdentity(format!(
                "(id⊗γ)γ ≠ (δ⊗id)γ on basis vector {x}"
            )));
        }
        Ok(c)
    }

    pub fn identity_witness(&self) -> Option<usize> {
        let d = self.hopf.dim();
        let lhs = self.gamma.kron_identity_left(d).checked_mul(&self.gamma).expect("shape");
        let rhs = self.hopf.comult().kron_identity_right(self.space_dim).checked_mul(&self.gamma).expect("shape");
        lhs.transpose().first_difference(&rhs.transpose()).map(|(x, _)| x)
    }

    /// `γ(x) = 1⊗x`. Needs a unit, which every algebra here carries.
    pub fn trivial(hopf: Arc<HopfStarAlgebra>, space_dim: usize) -> Result<Self> {
        let gamma = Matrix::column_vector(hopf.unit()).kron(&Matrix::identity(space_dim));
        Self::new(hopf, space_dim, gamma)
    }

    pub fn regular(hopf: Arc<HopfStarAlgebra>) -> Result<Self> {
        let d = hopf.dim();
        let gamma = hopf.comult().clone();
        Self::new(hopf, d, gamma)
    }

    pub fn zero(hopf: Arc<HopfStarAlgebra>, space_dim: usize) -> Self {
        let d = hopf.dim();
        LeftCoaction { hopf, space_dim, gamma: Matrix::zeros(d * space_dim, space_dim) }
    }

    pub fn hopf(&self) -> &Arc<HopfStarAlgebra> {
        &self.hopf
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    pub fn matrix(&self) -> &Matrix {
        &self.gamma
    }

    /// Mirror of the right-coaction notion, with the `S` leg first:
    /// right = span of `(s⊗1)`-right-multiples, left = span of left multiples.
    pub fn check_nondegenerate(&self) -> Nondegeneracy {
        let h = &self.hopf;
        let d = h.dim();
        let width = self.space_dim * d;
        let image = |op: Matrix| op.kron_identity_right(self.space_dim).checked_mul(&self.gamma).expect("shape");
        let right = span_is_full(width, (0..d).flat_map(|s| image(h.right_multiplication(s)).columns()));
        let left = span_is_full(width, (0..d).flat_map(|s| image(h.left_multiplication(s)).columns()));
        Nondegeneracy { left, right }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicomodule {
    label: String,
    right: RightCoaction,
    left: LeftCoaction,
}

impl Bicomodule {
    /// Pair two coactions on one space and verify `(id⊗β)γ = (γ⊗id)β`.
    pub fn new(label: impl Into<String>, right: RightCoaction, left: LeftCoaction) -> Result<Self> {
        if right.space_dim != left.space_dim || right.hopf != left.hopf {
            return Err(Error::InvalidArgument("coactions live on different spaces or algebras".into()));
        }
        let b = Bicomodule { label: label.into(), right, left };
        if let Some(x) = b.compatibility_witness() {
            return Err(Error::CoactionIdentity(format!("(id⊗β)γ ≠ (γ⊗id)β on basis vector {x}")));
        }
        Ok(b)
    }

    pub fn compatibility_witness(&self) -> Option<usize> {
        let d = self.hopf().dim();
        let beta = self.right.matrix();
        let gamma = self.left.matrix();
        let lhs = beta.kron_identity_left(d).checked_mul(gamma).expect("shape");
        let rhs = gamma.kron_identity_right(d).checked_mul(beta).expect("shape");
        lhs.transpose().first_difference(&rhs.transpose()).map(|(x, _)| x)
    }

    /// Right comodule with `γ = 0`.
    pub fn one_sided(label: impl Into<String>, right: RightCoaction) -> Self {
        let left = LeftCoaction::zero(right.hopf.clone(), right.space_dim);
        Bicomodule { label: label.into(), right, left }
    }

    /// Right comodule with `γ = 1⊗id`.
    pub fn left_trivial(label: impl Into<String>, right: RightCoaction) -> Result<Self> {
        let left = LeftCoaction::trivial(right.hopf.clone(), right.space_dim)?;
        Self::new(label, right, left)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn hopf(&self) -> &Arc<HopfStarAlgebra> {
        &self.right.hopf
    }

    pub fn space_dim(&self) -> usize {
        self.right.space_dim
    }

    pub fn right(&self) -> &RightCoaction {
        &self.right
    }

    pub fn left(&self) -> &LeftCoaction {
        &self.left
    }

    pub fn beta(&self) -> &Matrix {
        self.right.matrix()
    }

    pub fn gamma(&self) -> &Matrix {
        self.left.matrix()
    }

    /// Does either coaction satisfy either non-degeneracy condition?
    pub fn has_nondegenerate_side(&self) -> bool {
        self.right.check_nondegenerate().either() || self.left.check_nondegenerate().either()
    }
}
