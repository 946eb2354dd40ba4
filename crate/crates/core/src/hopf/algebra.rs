//! Finite-dimensional Hopf *-algebras as structure constants.
//!
//! Shapes: `mult` is `d × d²` (S⊗S → S), `comult` is `d² × d`, functionals
//! are length-`d` vectors. The involution is `x* = J·conj(x)` for the stored
//! matrix `J`.

use serde::{Deserialize, Serialize};

use super::monoid::{FiniteGroup, FiniteMonoid};
use crate::error::{Error, Result};
use crate::linalg::matrix::{Matrix, Vector};
use crate::linalg::scalar::Scalar;
use crate::linalg::tensor::flip;
use crate::linalg::echelon::Echelon;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// Functions on a finite semigroup, delta-function basis.
    Function(FiniteMonoid),
    /// Group algebra, basis `λ_r`.
    Group(FiniteGroup),
    /// Dual of another algebra, dual basis.
    Dual,
    Explicit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfStarAlgebra {
    name: String,
    labels: Vec<String>,
    mult: Matrix,
    unit: Vector,
    comult: Matrix,
    counit: Option<Vector>,
    star: Option<Matrix>,
    family: Family,
}

/// One axiom with its verdict. `witness` is an input basis index (flat, in
/// the domain of the two maps compared) where they differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub holds: bool,
    pub witness: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Saturation {
    /// span δ(S)(1⊗S) = S⊗S
    pub left: bool,
    /// span δ(S)(S⊗1) = S⊗S
    pub right: bool,
    pub left_rank: usize,
    pub right_rank: usize,
}

fn compare(axiom: &str, lhs: &Matrix, rhs: &Matrix) -> AxiomCheck {
    let witness = lhs.transpose().first_difference(&rhs.transpose()).map(|(col, _)| col);
    AxiomCheck { axiom: axiom.to_string(), holds: witness.is_none(), witness }
}

fn conj(m: &Matrix) -> Matrix {
    m.adjoint().transpose()
}

impl HopfStarAlgebra {
    /// Assemble an algebra from structure constants. Only shapes are checked;
    /// use [`HopfStarAlgebra::check_axioms`] for the identities.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        mult: Matrix,
        unit: Vector,
        comult: Matrix,
        counit: Option<Vector>,
        star: Option<Matrix>,
        family: Family,
    ) -> Result<Self> {
        let d = labels.len();
        let shape = |op: &'static str, m: &Matrix, want: (usize, usize)| {
            if m.shape() == want {
                Ok(())
            } else {
                Err(Error::DimensionMismatch { op, left: m.shape(), right: want })
            }
        };
        shape("mult", &mult, (d, d * d))?;
        shape("comult", &comult, (d * d, d))?;
        if unit.len() != d {
            return Err(Error::DimensionMismatch { op: "unit", left: (unit.len(), 1), right: (d, 1) });
        }
        if let Some(e) = &counit {
            if e.len() != d {
                return Err(Error::DimensionMismatch { op: "counit", left: (1, e.len()), right: (1, d) });
            }
        }
        if let Some(j) = &star {
            shape("star", j, (d, d))?;
        }
        Ok(HopfStarAlgebra { name: name.into(), labels, mult, unit, comult, counit, star, family })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mult(&self) -> &Matrix {
        &self.mult
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn comult(&self) -> &Matrix {
        &self.comult
    }

    pub fn counit(&self) -> Option<&Vector> {
        self.counit.as_ref()
    }

    pub fn star(&self) -> Option<&Matrix> {
        self.star.as_ref()
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn with_comult(&self, comult: Matrix) -> Result<Self> {
        Self::new(
            self.name.clone(),
            self.labels.clone(),
            self.mult.clone(),
            self.unit.clone(),
            comult,
            self.counit.clone(),
            self.star.clone(),
            Family::Explicit,
        )
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn product(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let ab = Matrix::column_vector(a).kron(&Matrix::column_vector(b));
        self.mult.apply(&ab.column(0)).expect("product shape")
    }

    /// `t ↦ t·s`.
    pub fn right_multiplication(&self, s: usize) -> Matrix {
        let d = self.dim();
        let cols: Vec<_> = (0..d).map(|t| self.mult_column(t * d + s)).collect();
        Matrix::from_sparse_columns(d, &cols)
    }

    /// `t ↦ s·t`.
    pub fn left_multiplication(&self, s: usize) -> Matrix {
        let d = self.dim();
        let cols: Vec<_> = (0..d).map(|t| self.mult_column(s * d + t)).collect();
        Matrix::from_sparse_columns(d, &cols)
    }

    /// Right multiplication by an arbitrary element.
    pub fn right_multiplication_by(&self, v: &[Scalar]) -> Matrix {
        let mut acc = Matrix::zeros(self.dim(), self.dim());
        for (s, c) in v.iter().enumerate() {
            if !c.is_zero() {
                acc.add_scaled(c, &self.right_multiplication(s)).expect("same shape");
            }
        }
        acc
    }

    fn mult_column(&self, col: usize) -> Vec<(usize, Scalar)> {
        self.mult
            .sparse_rows()
            .iter()
            .enumerate()
            .filter_map(|(r, row)| row.iter().find(|(c, _)| *c == col).map(|(_, v)| (r, v.clone())))
            .collect()
    }

    /// Product on S⊗S: `(a⊗b)(c⊗d) = ac⊗bd`, as a map S⊗S⊗S⊗S → S⊗S.
    pub fn tensor_square_mult(&self) -> Matrix {
        let d = self.dim();
        let middle = Matrix::identity(d).kron(&flip(d, d)).kron(&Matrix::identity(d));
        self.mult.kron(&self.mult).checked_mul(&middle).expect("tensor square shape")
    }

    pub fn check_axioms(&self) -> AxiomReport {
        let d = self.dim();
        let id = Matrix::identity(d);
        let m = &self.mult;
        let c = &self.comult;
        let u = Matrix::column_vector(&self.unit);
        let mul = |a: &Matrix, b: &Matrix| a.checked_mul(b).expect("axiom shapes");
        let mut checks = vec![
            compare("associativity", &mul(m, &m.kron(&id)), &mul(m, &id.kron(m))),
            compare("left unit", &mul(m, &u.kron(&id)), &id),
            compare("right unit", &mul(m, &id.kron(&u)), &id),
            compare("coassociativity", &mul(&c.kron(&id), c), &mul(&id.kron(c), c)),
            compare("comultiplicative", &mul(c, m), &mul(&self.tensor_square_mult(), &c.kron(c))),
            compare("counital comult", &mul(c, &u), &u.kron(&u)),
        ];
        if let Some(j) = &self.star {
            checks.push(compare("involutive star", &mul(j, &conj(j)), &id));
            checks.push(compare(
                "antimultiplicative star",
                &mul(j, &conj(m)),
                &mul(&mul(m, &j.kron(j)), &flip(d, d)),
            ));
            checks.push(compare("star-preserving comult", &mul(c, j), &mul(&j.kron(j), &conj(c))));
        }
        if let Some(e) = &self.counit {
            let e = Matrix::row_vector(e);
            checks.push(compare("left counit", &mul(&e.kron(&id), c), &id));
            checks.push(compare("right counit", &mul(&id.kron(&e), c), &id));
        }
        AxiomReport { checks }
    }

    pub fn check_saturated(&self) -> Saturation {
        let d = self.dim();
        let unit_right = self.right_multiplication_by(&self.unit);
        let span_rank = |mults: &dyn Fn(usize) -> Matrix| {
            let mut e = Echelon::new(d * d);
            for t in 0..d {
                let op = mults(t);
                let image = op.checked_mul(&self.comult).expect("saturation shape");
                for col in image.columns() {
                    e.insert(col);
                }
            }
            e.rank()
        };
        let left_rank = span_rank(&|t| unit_right.kron(&self.right_multiplication(t)));
        let right_rank = span_rank(&|t| self.right_multiplication(t).kron(&unit_right));
        Saturation { left: left_rank == d * d, right: right_rank == d * d, left_rank, right_rank }
    }

    /// Evaluate a functional.
    pub fn pair(&self, f: &[Scalar], x: &[Scalar]) -> Scalar {
        f.iter().zip(x).map(|(a, b)| a * b).sum()
    }
}
