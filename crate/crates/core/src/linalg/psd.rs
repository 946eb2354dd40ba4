//! Exact positive-semidefiniteness test by LDL* with diagonal pivoting.

use num_traits::{Signed, Zero};

use super::matrix::{Matrix, Vector};
use super::scalar::{Rational, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PsdCertificate {
    /// Pivot order and the (positive) diagonal of D; every index not listed
    /// was left in a zero Schur complement.
    Factorization { pivots: Vec<usize>, diagonal: Vec<Rational> },
    /// `v` with `v*·m·v = value < 0`.
    Witness { vector: Vector, value: Rational },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsdReport {
    pub is_psd: bool,
    pub certificate: PsdCertificate,
}

/// `v*·m·v` (real for Hermitian `m`).
pub fn hermitian_form(m: &Matrix, v: &[Scalar]) -> Result<Scalar> {
    let mv = m.apply(v)?;
    Ok(v.iter().zip(&mv).map(|(a, b)| &a.conj() * b).sum())
}

pub fn psd_check(m: &Matrix) -> Result<PsdReport> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch { op: "psd_check", left: m.shape(), right: m.shape() });
    }
    if let Some((row, col)) = m.first_difference(&m.adjoint()) {
        return Err(Error::NotHermitian { row, col });
    }
    let n = m.rows();
    let mut work = m.to_dense();
    let mut active: Vec<usize> = (0..n).collect();
    // (pivot index, pivot value, pivot row restricted to the then-active set)
    let mut eliminated: Vec<(usize, Scalar, Vec<(usize, Scalar)>)> = Vec::new();

    let witness = loop {
        if let Some(&i) = active.iter().find(|&&i| work[i][i].re().is_negative()) {
            let mut w = vec![Scalar::zero(); n];
            w[i] = Scalar::one();
            break Some(w);
        }
        if let Some(pos) = active.iter().position(|&i| !work[i][i].is_zero()) {
            let p = active.remove(pos);
            let d = work[p][p].clone();
            let row: Vec<(usize, Scalar)> =
                active.iter().map(|&j| (j, work[p][j].clone())).filter(|(_, v)| !v.is_zero()).collect();
            for (j, mjp_conj) in &row {
                // work[j][p] = conj(work[p][j])
                let mjp = mjp_conj.conj();
                let f = &mjp / &d;
                for (k, mpk) in &row {
                    let delta = &f * mpk;
                    work[*j][*k] -= &delta;
                }
            }
            eliminated.push((p, d, row));
            continue;
        }
        // All remaining diagonal entries vanish: PSD only if the block is zero.
        let offending = active
            .iter()
            .flat_map(|&i| active.iter().map(move |&j| (i, j)))
            .find(|&(i, j)| !work[i][j].is_zero());
        match offending {
            None => break None,
            Some((i, j)) => {
                // v = e_j + t·e_i with t = −(c+1)·a/(2|a|²), a = m_ij, c = m_jj.
                let a = work[i][j].clone();
                let c = work[j][j].clone();
                let scale = Scalar::real(-(c.re() + Rational::from_integer(1.into())) / (a.norm_sqr() * Rational::from_integer(2.into())));
                let t = &a * &scale;
                let mut w = vec![Scalar::zero(); n];
                w[j] = Scalar::one();
                w[i] = t;
                break Some(w);
            }
        }
    };

    match witness {
        None => Ok(PsdReport {
            is_psd: true,
            certificate: PsdCertificate::Factorization {
                pivots: eliminated.iter().map(|(p, _, _)| *p).collect(),
                diagonal: eliminated.iter().map(|(_, d, _)| d.re().clone()).collect(),
            },
        }),
        Some(mut v) => {
            for (p, d, row) in eliminated.iter().rev() {
                let s: Scalar = row.iter().map(|(j, mpj)| mpj * &v[*j]).sum();
                v[*p] = -(&s / d);
            }
            let value = hermitian_form(m, &v)?;
            debug_assert!(value.is_real() && value.re().is_negative());
            Ok(PsdReport {
                is_psd: false,
                certificate: PsdCertificate::Witness { vector: v, value: value.re().clone() },
            })
        }
    }
}

impl PsdReport {
    /// Re-check the certificate against `m`.
    pub fn verify(&self, m: &Matrix) -> bool {
        match &self.certificate {
            PsdCertificate::Factorization { diagonal, .. } => {
                self.is_psd && diagonal.iter().all(|d| d.is_positive() || d.is_zero())
            }
            PsdCertificate::Witness { vector, value } => {
                !self.is_psd
                    && value.is_negative()
                    && hermitian_form(m, vector).map(|v| v == Scalar::real(value.clone())).unwrap_or(false)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_psd() {
        let r = psd_check(&Matrix::identity(4)).unwrap();
        assert!(r.is_psd && r.verify(&Matrix::identity(4)));
    }

    #[test]
    fn diag_one_minus_one_has_witness_e2() {
        let m = Matrix::from_int_rows(&[&[1, 0], &[0, -1]]);
        let r = psd_check(&m).unwrap();
        assert!(!r.is_psd);
        match &r.certificate {
            PsdCertificate::Witness { vector, .. } => {
                assert_eq!(vector, &vec![Scalar::zero(), Scalar::one()]);
            }
            other => panic!("{other:?}"),
        }
        assert!(r.verify(&m));
    }

    #[test]
    fn zero_diagonal_with_offdiagonal_is_indefinite() {
        let m = Matrix::from_int_rows(&[&[0, 2], &[2, 3]]);
        let r = psd_check(&m).unwrap();
        assert!(!r.is_psd && r.verify(&m));
    }

    #[test]
    fn singular_psd_and_hidden_negative() {
        let ones = Matrix::from_int_rows(&[&[1, 1], &[1, 1]]);
        assert!(psd_check(&ones).unwrap().is_psd);
        // Positive diagonal but negative determinant.
        let m = Matrix::from_int_rows(&[&[1, 2, 0], &[2, 1, 0], &[0, 0, 5]]);
        let r = psd_check(&m).unwrap();
        assert!(!r.is_psd && r.verify(&m));
    }

    #[test]
    fn complex_hermitian() {
        let i = Scalar::i();
        let m = Matrix::from_rows(vec![
            vec![Scalar::int(2), i.clone()],
            vec![-i.clone(), Scalar::int(2)],
        ])
        .unwrap();
        assert!(psd_check(&m).unwrap().is_psd);
        let bad = Matrix::from_rows(vec![vec![Scalar::int(1), i.clone()], vec![i, Scalar::int(1)]]).unwrap();
        assert!(matches!(psd_check(&bad), Err(Error::NotHermitian { .. })));
    }
}
