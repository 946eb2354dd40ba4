use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseScalarError {
    #[error("malformed scalar `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch { op: &'static str, left: (usize, usize), right: (usize, usize) },

    #[error("matrix is not Hermitian (entry ({row}, {col}))")]
    NotHermitian { row: usize, col: usize },

    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("algebra has no counit")]
    MissingCounit,

    #[error("algebra has no unit")]
    MissingUnit,

    #[error("{0} is not a group algebra")]
    NotGroupAlgebra(String),

    #[error("coaction identity fails: {0}")]
    CoactionIdentity(String),

    #[error("subspace is not a subcomodule: (q⊗id)β(y) ≠ 0 for basis vector {witness} of Y")]
    NotSubcomodule { witness: usize },

    #[error("degree {degree} exceeds the degree cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },

    #[error("input is not a cocycle in degree {degree}")]
    NotCocycle { degree: usize },

    #[error("homotopy certificate failed in degree {degree}: {reason}")]
    HomotopyFailed { degree: usize, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
