//! Tensor-index conventions.
//!
//! Every tensor product in the crate uses one convention: the flat index of
//! `e_{i₁}⊗…⊗e_{iₖ}` is the mixed-radix number with `i₁` most significant
//! (row-major). [`Matrix::kron`] follows it, and every factor permutation is
//! built from [`TensorSpace::flat_index`].

use super::matrix::Matrix;
use super::scalar::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorSpace {
    factors: Vec<usize>,
}

impl TensorSpace {
    pub fn new(factors: Vec<usize>) -> Self {
        TensorSpace { factors }
    }

    /// `X ⊗ Sⁿ`.
    pub fn coefficient_power(x_dim: usize, s_dim: usize, n: usize) -> Self {
        let mut factors = vec![x_dim];
        factors.extend(std::iter::repeat_n(s_dim, n));
        TensorSpace { factors }
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn total_dim(&self) -> usize {
        self.factors.iter().product()
    }

    pub fn flat_index(&self, multi: &[usize]) -> usize {
        debug_assert_eq!(multi.len(), self.factors.len());
        multi.iter().zip(&self.factors).fold(0, |acc, (&i, &d)| {
            debug_assert!(i < d);
            acc * d + i
        })
    }

    pub fn multi_index(&self, mut flat: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (slot, &d) in out.iter_mut().zip(&self.factors).rev() {
            *slot = flat % d;
            flat /= d;
        }
        out
    }

    /// Iterate multi-indices in flat order.
    pub fn indices(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.total_dim()).map(move |k| self.multi_index(k))
    }
}

/// `dⁿ`, with `d⁰ = 1`.
pub fn power(d: usize, n: usize) -> usize {
    d.pow(n as u32)
}

/// Permutation matrix reordering tensor factors.
///
/// The input space has factor dimensions `dims`; output factor `j` is input
/// factor `perm[j]`. So `e_{i₀}⊗…⊗e_{i_{k-1}}` maps to
/// `e_{i_{perm[0]}}⊗…⊗e_{i_{perm[k-1]}}`.
pub fn permute_factors(dims: &[usize], perm: &[usize]) -> Result<Matrix> {
    let k = dims.len();
    let mut seen = vec![false; k];
    if perm.len() != k || perm.iter().any(|&p| p >= k || std::mem::replace(&mut seen[p], true)) {
        return Err(Error::InvalidArgument(format!(
            "{perm:?} is not a permutation of {k} factors"
        )));
    }
    let input = TensorSpace::new(dims.to_vec());
    let output = TensorSpace::new(perm.iter().map(|&p| dims[p]).collect());
    let n = input.total_dim();
    let entries = (0..n).map(|col| {
        let idx = input.multi_index(col);
        let out: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
        (output.flat_index(&out), col, Scalar::one())
    });
    Ok(Matrix::from_triplets(n, n, entries))
}

/// The rotation `σ_{n,k}: Sᵏ⊗X⊗Sⁿ⁻ᵏ → X⊗Sⁿ` sending
/// `s_{n−k+1}⊗…⊗s_n⊗x⊗s_1⊗…⊗s_{n−k}` to `x⊗s_1⊗…⊗s_n`.
pub fn rotation_sigma(n: usize, k: usize, x_dim: usize, s_dim: usize) -> Result<Matrix> {
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("rotation σ needs 1 ≤ k ≤ n, got n={n}, k={k}")));
    }
    let mut dims = vec![s_dim; n + 1];
    dims[k] = x_dim;
    // Input positions: 0..k hold s_{n-k+1}..s_n, k holds x, k+1..=n hold s_1..s_{n-k}.
    let mut perm = Vec::with_capacity(n + 1);
    perm.push(k);
    perm.extend(k + 1..=n);
    perm.extend(0..k);
    permute_factors(&dims, &perm)
}

/// Swap of two factors: `A⊗B → B⊗A`.
pub fn flip(a_dim: usize, b_dim: usize) -> Matrix {
    permute_factors(&[a_dim, b_dim], &[1, 0]).expect("two-factor flip")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_index_round_trip() {
        let t = TensorSpace::new(vec![3, 2, 4]);
        assert_eq!(t.total_dim(), 24);
        assert_eq!(t.flat_index(&[1, 0, 3]), 8 + 3);
        for k in 0..24 {
            assert_eq!(t.flat_index(&t.multi_index(k)), k);
        }
    }

    #[test]
    fn sigma_one_one_is_flip() {
        assert_eq!(rotation_sigma(1, 1, 3, 2).unwrap(), flip(2, 3));
    }

    #[test]
    fn sigma_rejects_bad_k() {
        assert!(rotation_sigma(2, 0, 2, 2).is_err());
        assert!(rotation_sigma(2, 3, 2, 2).is_err());
    }
}
