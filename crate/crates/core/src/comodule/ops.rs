//! Constructions on coactions: quotients, gradings, duals, the module
//! picture, and the built-in bicomodule catalog.

use std::sync::Arc;

use super::coaction::{Bicomodule, LeftCoaction, RightCoaction};
use crate::error::{Error, Result};
use crate::hopf::{Family, HopfStarAlgebra};
use crate::linalg::echelon::{canonical_basis, Rref};
use crate::linalg::matrix::{dense_from_sparse, sparse_from_dense, Matrix, Vector};
use crate::linalg::scalar::Scalar;

/// `X/Y` with the pivot-complement section.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub coaction: RightCoaction,
    /// RREF basis of `Y`.
    pub subspace: Rref,
    /// Projection `q: X → X/Y` (`dim X/Y × dim X`).
    pub projection: Matrix,
    /// Section `s: X/Y → X` onto the non-pivot coordinates, `q∘s = id`.
    pub section: Matrix,
}

pub fn quotient_comodule(c: &RightCoaction, y_basis: &[Vector]) -> Result<Quotient> {
    let dx = c.space_dim();
    if let Some(v) = y_basis.iter().find(|v| v.len() != dx) {
        return Err(Error::DimensionMismatch { op: "quotient", left: (v.len(), 1), right: (dx, 1) });
    }
    let rref = canonical_basis(dx, y_basis.iter().map(|v| sparse_from_dense(v)).collect());
    let free = rref.free_columns();
    let mut slot = vec![None; dx];
    for (k, &f) in free.iter().enumerate() {
        slot[f] = Some(k);
    }
    let mut entries = Vec::new();
    for (k, &f) in free.iter().enumerate() {
        entries.push((k, f, Scalar::one()));
    }
    for (row, &p) in rref.rows.iter().zip(&rref.pivots) {
        for (col, v) in row {
            if let Some(k) = slot[*col] {
                entries.push((k, p, -v.clone()));
            }
        }
    }
    let q = Matrix::from_triplets(free.len(), dx, entries);
    let s = Matrix::from_triplets(dx, free.len(), free.iter().enumerate().map(|(k, &f)| (f, k, Scalar::one())));
    let d = c.hopf().dim();
    let q_id = q.kron_identity_right(d);
    let pushed = q_id.checked_mul(c.matrix())?;
    for (i, row) in rref.rows.iter().enumerate() {
        let y = dense_from_sparse(row, dx);
        if pushed.apply(&y)?.iter().any(|v| !v.is_zero()) {
            return Err(Error::NotSubcomodule { witness: i });
        }
    }
    let beta = pushed.checked_mul(&s)?;
    let coaction = RightCoaction::new(c.hopf().clone(), free.len(), beta)?;
    Ok(Quotient { coaction, subspace: rref, projection: q, section: s })
}

/// `S/ℂ·1` with the coaction induced by `δ`.
pub fn unit_quotient(hopf: Arc<HopfStarAlgebra>) -> Result<Quotient> {
    let regular = RightCoaction::regular(hopf.clone())?;
    quotient_comodule(&regular, &[hopf.unit().clone()])
}

#[derive(Clone, Debug)]
pub struct GradeDecomposition {
    /// `(r, basis of X_r)` for every group element, RREF bases.
    pub components: Vec<(usize, Vec<Vector>)>,
    pub total_dim: usize,
    /// Each `(id⊗φ_r)β` is idempotent and they annihilate one another.
    pub projections_orthogonal: bool,
}

/// `(id⊗φ_r)∘β` where `φ_r(λ_t) = δ_{r,t}`.
pub fn grade_projection(c: &RightCoaction, r: usize) -> Matrix {
    let d = c.hopf().dim();
    let mut phi = vec![Scalar::zero(); d];
    phi[r] = Scalar::one();
    Matrix::identity(c.space_dim()).kron(&Matrix::row_vector(&phi)).checked_mul(c.matrix()).expect("shape")
}

pub fn grade_decomposition(c: &RightCoaction) -> Result<GradeDecomposition> {
    let Family::Group(g) = c.hopf().family() else {
        return Err(Error::NotGroupAlgebra(c.hopf().name().to_string()));
    };
    let d = g.order();
    let dx = c.space_dim();
    let projections: Vec<Matrix> = (0..d).map(|r| grade_projection(c, r)).collect();
    let mut components = Vec::new();
    let mut total_dim = 0;
    for (r, p) in projections.iter().enumerate() {
        let basis = canonical_basis(dx, p.columns()).dense_rows();
        for x in &basis {
            let mut lambda = vec![Scalar::zero(); d];
            lambda[r] = Scalar::one();
            let expect = Matrix::column_vector(x).kron(&Matrix::column_vector(&lambda)).column(0);
            if c.matrix().apply(x)? != expect {
                return Err(Error::CoactionIdentity(format!("graded component {r} is not homogeneous")));
            }
        }
        total_dim += basis.len();
        components.push((r, basis));
    }
    let mut orthogonal = true;
    for (r, p) in projections.iter().enumerate() {
        for (s, q) in projections.iter().enumerate() {
            let prod = p.checked_mul(q)?;
            let ok = if r == s { prod == *p } else { prod.is_zero() };
            orthogonal &= ok;
        }
    }
    Ok(GradeDecomposition { components, total_dim, projections_orthogonal: orthogonal })
}

/// Left coaction on `X*` from a right coaction on `X`:
/// `β̌(f) = Σ_j e_j ⊗ f((id⊗e_j*)β(·))`, i.e. `Ǧ[(j,x),y] = B[(y,j),x]`.
pub fn dual_coaction(c: &RightCoaction) -> Result<LeftCoaction> {
    let d = c.hopf().dim();
    let dx = c.space_dim();
    let mut entries = Vec::new();
    for (row, vals) in c.matrix().sparse_rows().iter().enumerate() {
        let (y, j) = (row / d, row % d);
        for (x, v) in vals {
            entries.push((j * dx + x, y, v.clone()));
        }
    }
    LeftCoaction::new(c.hopf().clone(), dx, Matrix::from_triplets(d * dx, dx, entries))
}

/// Right coaction on `X*` from a left coaction on `X`: `B̌[(x,j),y] = G[(j,y),x]`.
pub fn dual_left_coaction(c: &LeftCoaction) -> Result<RightCoaction> {
    let d = c.hopf().dim();
    let dx = c.space_dim();
    let mut entries = Vec::new();
    for (row, vals) in c.matrix().sparse_rows().iter().enumerate() {
        let (j, y) = (row / dx, row % dx);
        for (x, v) in vals {
            entries.push((x * d + j, y, v.clone()));
        }
    }
    RightCoaction::new(c.hopf().clone(), dx, Matrix::from_triplets(dx * d, dx, entries))
}

/// `(X*, γ̌, β̌)`: the dual of `γ` acts on the right, the dual of `β` on the left.
pub fn dual_bicomodule(b: &Bicomodule) -> Result<Bicomodule> {
    let right = dual_left_coaction(b.left())?;
    let left = dual_coaction(b.right())?;
    Bicomodule::new(format!("{}*", b.label()), right, left)
}

/// Left action of the dual algebra: `ω·x = (id⊗ω)β(x)`, as a
/// `dim X × (d·dim X)` matrix on `S*⊗X` in the dual basis.
pub fn module_from_coaction(c: &RightCoaction) -> Result<Matrix> {
    if c.hopf().counit().is_none() {
        return Err(Error::MissingCounit);
    }
    Ok(left_action_matrix(c))
}

pub(crate) fn left_action_matrix(c: &RightCoaction) -> Matrix {
    let d = c.hopf().dim();
    let dx = c.space_dim();
    let mut entries = Vec::new();
    for (row, vals) in c.matrix().sparse_rows().iter().enumerate() {
        let (y, j) = (row / d, row % d);
        for (x, v) in vals {
            entries.push((y, j * dx + x, v.clone()));
        }
    }
    Matrix::from_triplets(dx, d * dx, entries)
}

/// Right action of the dual algebra: `x·ω = (ω⊗id)γ(x)`, a
/// `dim X × (dim X·d)` matrix on `X⊗S*`.
pub(crate) fn right_action_matrix(c: &LeftCoaction) -> Matrix {
    let d = c.hopf().dim();
    let dx = c.space_dim();
    let mut entries = Vec::new();
    for (row, vals) in c.matrix().sparse_rows().iter().enumerate() {
        let (j, y) = (row / dx, row % dx);
        for (x, v) in vals {
            entries.push((y, x * d + j, v.clone()));
        }
    }
    Matrix::from_triplets(dx, dx * d, entries)
}

/// Inverse of [`module_from_coaction`].
pub fn coaction_from_module(hopf: Arc<HopfStarAlgebra>, space_dim: usize, action: &Matrix) -> Result<RightCoaction> {
    let d = hopf.dim();
    let want = (space_dim, d * space_dim);
    if action.shape() != want {
        return Err(Error::DimensionMismatch { op: "module action", left: action.shape(), right: want });
    }
    let mut entries = Vec::new();
    for (y, vals) in action.sparse_rows().iter().enumerate() {
        for (col, v) in vals {
            let (j, x) = (col / space_dim, col % space_dim);
            entries.push((y * d + j, x, v.clone()));
        }
    }
    RightCoaction::new(hopf, space_dim, Matrix::from_triplets(space_dim * d, space_dim, entries))
}

/// `X` with basis `x_{s,t}` (index `s·|Γ|+t`), `β(x_{s,t}) = x_{s,t}⊗λ_s`
/// and `γ(x_{s,t}) = λ_t⊗x_{s,t}`.
pub fn pair_graded(hopf: Arc<HopfStarAlgebra>) -> Result<Bicomodule> {
    if !matches!(hopf.family(), Family::Group(_)) {
        return Err(Error::NotGroupAlgebra(hopf.name().to_string()));
    }
    let n = hopf.dim();
    let dx = n * n;
    let beta = Matrix::from_triplets(dx * n, dx, (0..dx).map(|x| (x * n + x / n, x, Scalar::one())));
    let gamma = Matrix::from_triplets(n * dx, dx, (0..dx).map(|x| ((x % n) * dx + x, x, Scalar::one())));
    let right = RightCoaction::new(hopf.clone(), dx, beta)?;
    let left = LeftCoaction::new(hopf, dx, gamma)?;
    Bicomodule::new("pair-graded", right, left)
}

/// `X = ℂ^Γ`, `β(x_r) = x_r⊗λ_r`.
pub fn graded_right(hopf: Arc<HopfStarAlgebra>) -> Result<RightCoaction> {
    if !matches!(hopf.family(), Family::Group(_)) {
        return Err(Error::NotGroupAlgebra(hopf.name().to_string()));
    }
    let n = hopf.dim();
    let beta = Matrix::from_triplets(n * n, n, (0..n).map(|r| (r * n + r, r, Scalar::one())));
    RightCoaction::new(hopf, n, beta)
}

/// Built-in bicomodules over `hopf`. Constructions whose identities fail
/// for this algebra are skipped, as are zero-dimensional spaces.
pub fn catalog_bicomodules(hopf: &Arc<HopfStarAlgebra>) -> Vec<Bicomodule> {
    let mut out = Vec::new();
    let h = hopf.clone();
    if let (Ok(r), Ok(l)) = (RightCoaction::regular(h.clone()), LeftCoaction::regular(h.clone())) {
        if let Ok(b) = Bicomodule::new("regular", r.clone(), l) {
            out.push(b);
        }
        out.push(Bicomodule::one_sided("right-regular", r.clone()));
        if let Ok(b) = Bicomodule::left_trivial("restricted-regular", r) {
            out.push(b);
        }
    }
    if let (Ok(r), Ok(l)) = (RightCoaction::trivial(h.clone(), 1), LeftCoaction::trivial(h.clone(), 1)) {
        if let Ok(b) = Bicomodule::new("trivial", r, l) {
            out.push(b);
        }
    }
    if hopf.dim() > 1 {
        if let Ok(q) = unit_quotient(h.clone()) {
            if let Ok(b) = Bicomodule::left_trivial("unit-quotient", q.coaction) {
                out.push(b);
            }
        }
    }
    if let Ok(b) = pair_graded(h.clone()) {
        out.push(b);
    }
    if let Ok(r) = graded_right(h) {
        out.push(Bicomodule::one_sided("graded", r));
    }
    out
}
