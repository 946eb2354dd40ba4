//! Exact cohomology of finite-dimensional Hopf *-algebras with coefficients
//! in bicomodules, plus the codiagonal and invariant-mean solvers that decide
//! when that cohomology vanishes.

pub mod amenability;
pub mod cochain;
pub mod comodule;
pub mod error;
pub mod hopf;
pub mod linalg;

pub use error::{Error, Result};
