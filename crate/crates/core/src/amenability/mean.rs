//! Right-invariant means on finite monoids, as an exact LP.

use num_traits::{One, Zero};

use crate::error::Result;
use crate::hopf::FiniteMonoid;
use crate::linalg::lp::{find_feasible, verify_farkas, verify_feasible, vertex_search, Feasibility};
use crate::linalg::scalar::Rational;

/// Largest order for which the brute-force oracle is run as a cross-check.
pub const ORACLE_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeanSearch {
    pub monoid: String,
    /// Rows `r·n + t`: `Σ_{m: m·r = t} w_m − w_t = 0`; last row `Σ w = 1`.
    pub system: (Vec<Vec<Rational>>, Vec<Rational>),
    /// Weights `w` or a Farkas vector for `system`.
    pub outcome: Feasibility,
    /// The returned certificate was re-checked exactly.
    pub certificate_valid: bool,
    /// Verdict of the vertex-enumeration oracle, when the monoid is small.
    pub oracle_feasible: Option<bool>,
}

impl MeanSearch {
    pub fn exists(&self) -> bool {
        self.outcome.is_feasible()
    }

    pub fn weights(&self) -> Option<&[Rational]> {
        self.outcome.point()
    }

    /// Simplex and oracle agree, and the certificate checks.
    pub fn consistent(&self) -> bool {
        self.certificate_valid && self.oracle_feasible.is_none_or(|o| o == self.exists())
    }
}

pub fn mean_system(m: &FiniteMonoid) -> (Vec<Vec<Rational>>, Vec<Rational>) {
    let n = m.order();
    let mut a = Vec::with_capacity(n * n + 1);
    for r in 0..n {
        for t in 0..n {
            let mut row = vec![Rational::zero(); n];
            for (k, slot) in row.iter_mut().enumerate() {
                if m.mul(k, r) == t {
                    *slot += Rational::one();
                }
            }
            row[t] -= Rational::one();
            a.push(row);
        }
    }
    a.push(vec![Rational::one(); n]);
    let mut b = vec![Rational::zero(); n * n];
    b.push(Rational::one());
    (a, b)
}

/// Decide whether `m` carries a right-invariant mean: weights `w ≥ 0`,
/// `Σ w = 1`, with `Σ_{k: kr = t} w_k = w_t` for all `r, t`.
pub fn find_invariant_mean(m: &FiniteMonoid) -> Result<MeanSearch> {
    let (a, b) = mean_system(m);
    let outcome = find_feasible(&a, &b)?;
    let certificate_valid = match &outcome {
        Feasibility::Feasible(w) => verify_feasible(&a, &b, w),
        Feasibility::Infeasible(y) => verify_farkas(&a, &b, y),
    };
    let oracle_feasible = if m.order() <= ORACLE_LIMIT { Some(vertex_search(&a, &b)?.is_some()) } else { None };
    Ok(MeanSearch { monoid: m.name().to_string(), system: (a, b), outcome, certificate_valid, oracle_feasible })
}
