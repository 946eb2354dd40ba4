//! Codiagonals, invariant means, and the amenability checks built on them.

pub mod codiagonal;
pub mod mean;
pub mod theorems;

pub use codiagonal::{
    codiagonal_system, find_codiagonal, kronecker_codiagonal, pair_gram, verify_codiagonal, CodiagonalCertificate,
    CodiagonalPositivity, CodiagonalSearch, KroneckerCodiagonal,
};
pub use mean::{find_invariant_mean, mean_system, MeanSearch};
pub use theorems::{
    check_codiagonal_vanishing, check_invariant_mean_criterion, check_pair_graded, CodiagonalVanishingReport,
    CounitStatus, MeanCriterionReport, PairGradedReport, VanishingEntry,
};
