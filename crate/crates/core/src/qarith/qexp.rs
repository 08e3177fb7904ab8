use super::laurent::QExp;
use super::qnum::qfactorial;
use super::scalar::ExactScalar;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::SparseMatrix;
use crate::operator::SparseOperator;

/// Which q-exponential: exp_q or exp_{q^{-1}}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QExpVariant {
    Q,
    QInverse,
}

/// exp_{q^{±1}}(A) = Σ_n q^{±n(n-1)/2} A^n / [n]! for a nilpotent matrix.
pub fn qexp_matrix(variant: QExpVariant, a: &SparseMatrix<ExactScalar>) -> Result<SparseMatrix<ExactScalar>> {
    assert!(a.is_square(), "q-exponential of a non-square matrix");
    let dim = a.rows();
    let mut result = SparseMatrix::identity(dim);
    let mut power = SparseMatrix::identity(dim);
    for n in 1..=dim as i64 + 1 {
        power = power.matmul(a);
        if power.is_zero() {
            return Ok(result);
        }
        let e = n * (n - 1) / 2;
        let e = match variant {
            QExpVariant::Q => e,
            QExpVariant::QInverse => -e,
        };
        let coeff = &ExactScalar::q_pow(QExp::from_integer(e)) / &qfactorial(n as u32);
        result = result.add(&power.scale(&coeff));
    }
    if power.matmul(a).is_zero() {
        Ok(result)
    } else {
        Err(Error::NotNilpotent { bound: dim + 1 })
    }
}

/// q-exponential of a nilpotent operator on a single basis.
pub fn qexp_nilpotent(
    variant: QExpVariant,
    a: &SparseOperator<ExactScalar>,
) -> Result<SparseOperator<ExactScalar>> {
    if !a.is_square() {
        return Err(Error::Dimension("q-exponential needs an endomorphism".into()));
    }
    let m = qexp_matrix(variant, &a.matrix)?;
    SparseOperator::new(a.domain.clone(), a.codomain.clone(), m)
}

/// Ordinary exponential Σ A^n/n! of a nilpotent matrix over any exact field.
pub fn exp_nilpotent<T: Field>(a: &SparseMatrix<T>) -> Result<SparseMatrix<T>> {
    assert!(a.is_square(), "exponential of a non-square matrix");
    let dim = a.rows();
    let mut result = SparseMatrix::identity(dim);
    let mut term = SparseMatrix::identity(dim);
    for n in 1..=dim as i64 + 1 {
        let inv = T::from_i64(n).inverse().expect("nonzero integer");
        term = term.matmul(a).scale(&inv);
        if term.is_zero() {
            return Ok(result);
        }
        result = result.add(&term);
    }
    if term.matmul(a).is_zero() {
        Ok(result)
    } else {
        Err(Error::NotNilpotent { bound: dim + 1 })
    }
}
