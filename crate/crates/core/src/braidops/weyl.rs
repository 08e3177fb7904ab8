use std::sync::Arc;

use num_integer::Integer;

use crate::basis::MonomialBasis;
use crate::error::{Error, Result};
use crate::glrep::Side;
use crate::linalg::SparseMatrix;
use crate::operator::SparseOperator;
use crate::qarith::{qexp_matrix, ExactScalar, QExpVariant};
use crate::qmatspace::{uq_endomorphism, QGenerator};

use super::{BraidLabel, BraidOperator};

/// Integer value of a constant scalar.
pub(crate) fn as_integer(x: &ExactScalar) -> Option<i64> {
    let r = if x.is_laurent() {
        let num = x.numerator();
        match num.terms() {
            [] => return Some(0),
            [(e, c)] if *e == num_rational::Ratio::from_integer(0) => c.clone(),
            _ => return None,
        }
    } else {
        return None;
    };
    if r.is_integer() {
        num_traits::ToPrimitive::to_i64(&r.to_integer())
    } else {
        None
    }
}

/// S = exp_{q^{-1}}(q^{-1} E q^{-H}) exp_{q^{-1}}(-F) exp_{q^{-1}}(q E q^{H}) q^{H(H+1)/2}.
pub fn weyl_element_sl2_matrix(
    e: &SparseMatrix<ExactScalar>,
    f: &SparseMatrix<ExactScalar>,
    h: &SparseMatrix<ExactScalar>,
) -> Result<SparseMatrix<ExactScalar>> {
    let diag = h
        .as_diagonal()
        .ok_or_else(|| Error::Contract("H is not diagonal".into()))?;
    let hv: Vec<i64> = diag
        .iter()
        .map(|x| as_integer(x).ok_or_else(|| Error::Contract(format!("H eigenvalue {x} is not an integer"))))
        .collect::<Result<_>>()?;
    let qh = |c: i64| SparseMatrix::diagonal(hv.iter().map(|&x| ExactScalar::q_int(c * x)).collect());
    let a1 = e.matmul(&qh(-1)).scale(&ExactScalar::q_int(-1));
    let a3 = e.matmul(&qh(1)).scale(&ExactScalar::q_int(1));
    let cartan = SparseMatrix::diagonal(
        hv.iter()
            .map(|&x| {
                debug_assert!((x * (x + 1)).is_even());
                ExactScalar::q_int(x * (x + 1) / 2)
            })
            .collect(),
    );
    let s = qexp_matrix(QExpVariant::QInverse, &a1)?
        .matmul(&qexp_matrix(QExpVariant::QInverse, &f.neg())?)
        .matmul(&qexp_matrix(QExpVariant::QInverse, &a3)?)
        .matmul(&cartan);
    Ok(s)
}

/// Quantum Weyl group element of the sl2 triple (E, F, H) acting on one basis.
pub fn weyl_element_sl2(
    e: &SparseOperator<ExactScalar>,
    f: &SparseOperator<ExactScalar>,
    h: &SparseOperator<ExactScalar>,
) -> Result<SparseOperator<ExactScalar>> {
    if !(e.is_square() && f.is_square() && h.is_square()) {
        return Err(Error::Contract("E, F, H must be endomorphisms of one basis".into()));
    }
    let s = weyl_element_sl2_matrix(&e.matrix, &f.matrix, &h.matrix)?;
    SparseOperator::new(Arc::clone(&e.domain), Arc::clone(&e.domain), s)
}

/// S_j for the column action on `basis` (0-based j), which must be closed
/// under E_j and F_j (a graded piece or a transposition closure).
pub fn weyl_element_j(j: usize, basis: &Arc<MonomialBasis>) -> Result<BraidOperator> {
    if j + 1 >= basis.n() {
        return Err(Error::Index(format!("generator {j} for n = {}", basis.n())));
    }
    let e = uq_endomorphism(Side::N, QGenerator::E(j), basis)?;
    let f = uq_endomorphism(Side::N, QGenerator::F(j), basis)?;
    let h = SparseOperator::diagonal(Arc::clone(basis), |m| {
        let d = m.column_degrees();
        ExactScalar::from_int(d[j] as i64 - d[j + 1] as i64)
    });
    let op = weyl_element_sl2(&e, &f, &h)?;
    Ok(BraidOperator {
        label: BraidLabel::WeylS,
        index: j,
        op,
    })
}

/// True if S H S^{-1} = -H, checked as S H + H S = 0.
pub fn reverses_cartan(s: &SparseMatrix<ExactScalar>, h: &SparseMatrix<ExactScalar>) -> bool {
    s.matmul(h).add(&h.matmul(s)).is_zero()
}
