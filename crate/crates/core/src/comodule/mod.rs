//! Coactions, bicomodules and constructions on them.

pub mod coaction;
pub mod ops;

pub use coaction::{Bicomodule, LeftCoaction, Nondegeneracy, RightCoaction};
pub use ops::{
    catalog_bicomodules, coaction_from_module, dual_bicomodule, dual_coaction, dual_left_coaction,
    grade_decomposition, graded_right, module_from_coaction, pair_graded, quotient_comodule, unit_quotient,
    GradeDecomposition, Quotient,
};
