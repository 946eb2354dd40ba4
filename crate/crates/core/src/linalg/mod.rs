//! Exact Gaussian-rational linear algebra.

pub mod echelon;
pub mod lp;
pub mod matrix;
pub mod psd;
pub mod scalar;
pub mod tensor;

pub use echelon::{canonical_basis, image_rank, kernel_basis, solve, verify_inconsistency, Echelon, Rref, Solution};
pub use matrix::{Matrix, SparseVec, Vector};
pub use psd::{psd_check, PsdCertificate, PsdReport};
pub use scalar::{rat, rat_int, Rational, Scalar};
pub use tensor::{flip, permute_factors, power, rotation_sigma, TensorSpace};
