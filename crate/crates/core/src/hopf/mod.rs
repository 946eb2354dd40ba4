//! Finite-dimensional Hopf *-algebras: monoids and groups, structure
//! constants, axiom checks, counits and Haar states.

pub mod algebra;
pub mod builders;
pub mod catalog;
pub mod functionals;
pub mod monoid;

pub use algebra::{AxiomCheck, AxiomReport, Family, HopfStarAlgebra, Saturation};
pub use builders::{dual_hopf, function_algebra, group_algebra};
pub use catalog::{algebra_by_name, catalog_algebras, group_by_name, monoid_by_name};
pub use functionals::{counit_find, haar_state, CounitSearch, HaarSearch, Positivity};
pub use monoid::{FiniteGroup, FiniteMonoid};
