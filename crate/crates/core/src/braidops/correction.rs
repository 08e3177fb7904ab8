use std::sync::Arc;

use crate::basis::{MatrixMonomial, MonomialBasis};
use crate::error::{Error, Result};
use crate::operator::SparseOperator;
use crate::qarith::{ExactScalar, QExp};

use super::{BraidLabel, BraidOperator};

/// Diagonal factor (-1)^{d_j} q^{-(d_j + d_j d_{j+1}/k)} relating R∨_j and S_j.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorrectionFactor {
    pub j: usize,
    pub k: usize,
}

impl CorrectionFactor {
    /// Exponent of q on a monomial with column degrees `d`.
    pub fn exponent(&self, d: &[u32]) -> QExp {
        let (a, b) = (d[self.j] as i64, d[self.j + 1] as i64);
        -(QExp::from_integer(a) + QExp::new(a * b, self.k as i64))
    }

    pub fn parity(&self, d: &[u32]) -> i64 {
        d[self.j] as i64
    }

    pub fn coefficient(&self, m: &MatrixMonomial) -> ExactScalar {
        let d = m.column_degrees();
        ExactScalar::signed_q_pow(self.parity(&d), self.exponent(&d))
    }

    pub fn operator(&self, basis: &Arc<MonomialBasis>) -> BraidOperator {
        BraidOperator {
            label: BraidLabel::Correction,
            index: self.j,
            op: SparseOperator::diagonal(Arc::clone(basis), |m| self.coefficient(m)),
        }
    }
}

/// Correction factor for generator `j` (0-based) on `basis`.
pub fn correction_factor(j: usize, k: usize, basis: &Arc<MonomialBasis>) -> Result<BraidOperator> {
    if j + 1 >= basis.n() || k == 0 {
        return Err(Error::Index(format!("generator {j} for n = {}, k = {k}", basis.n())));
    }
    Ok(CorrectionFactor { j, k }.operator(basis))
}
