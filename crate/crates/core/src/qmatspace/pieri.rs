use std::collections::BTreeSet;
use std::sync::Arc;

use super::action::{uq_action, QGenerator};
use super::poly::{QMatMonomial, QPolynomial};
use crate::basis::MonomialBasis;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::glrep::{raising_kernel, Side};
use crate::linalg::SparseVec;
use crate::qarith::{qbinomial, ExactScalar, QExp};

/// Highest-weight vector v_i^{μ1,μ2} of the i-th two-row component of the
/// (μ1, μ2) block of S_q(k,2):
///
/// v_i = Σ_{a=0}^{i} (-1)^a [i choose a] q^{a(μ2-a+1)} X^{m_a},
/// m_a = [[μ1-i+a, μ2-a], [i-a, a]] padded with zero rows.
pub fn hw_vector(k: usize, mu1: u32, mu2: u32, i: u32) -> Result<QPolynomial> {
    if i > mu1.min(mu2) {
        return Err(Error::Index(format!("i = {i} exceeds min({mu1}, {mu2})")));
    }
    if k < 2 && i > 0 {
        return Err(Error::Contract(format!("two-row vector i = {i} needs k ≥ 2")));
    }
    let mut p = QPolynomial::zero(k, 2);
    for a in 0..=i {
        let mut m = QMatMonomial::zero(k, 2);
        m.set(0, 0, mu1 - i + a);
        m.set(0, 1, mu2 - a);
        if k > 1 {
            m.set(1, 0, i - a);
            m.set(1, 1, a);
        }
        let (a, i_, mu2_) = (a as i64, i as i64, mu2 as i64);
        let c = qbinomial(i_, a).mul_ref(&ExactScalar::signed_q_pow(a, QExp::from_integer(a * (mu2_ - a + 1))));
        p.add_term(m, &c);
    }
    Ok(p)
}

/// Joint kernel of the row raising operators on the (μ1, μ2) block of S_q(k,2).
pub fn pieri_kernel(k: usize, mu1: u32, mu2: u32) -> Result<(Arc<MonomialBasis>, Vec<SparseVec<ExactScalar>>)> {
    let basis = Arc::new(MonomialBasis::block(k, 2, &[mu1, mu2])?);
    let weights: BTreeSet<Vec<u32>> = basis.elements().iter().map(QMatMonomial::row_sums).collect();
    let mut out = Vec::new();
    for w in weights {
        out.extend(raising_kernel(&basis, &[mu1, mu2], &w, |a, m| {
            uq_action(Side::K, QGenerator::E(a), m)
        }));
    }
    Ok((basis, out))
}

/// Number of two-row shapes in S^{μ1} ⊗ S^{μ2} of gl_k: min(μ1, μ2) + 1 for k ≥ 2.
pub fn pieri_expected_count(k: usize, mu1: u32, mu2: u32) -> usize {
    if k >= 2 {
        mu1.min(mu2) as usize + 1
    } else {
        1
    }
}

/// True when every row raising generator annihilates `p`.
pub fn is_row_highest(p: &QPolynomial) -> bool {
    (0..p.k().saturating_sub(1)).all(|a| p.apply(|m| uq_action(Side::K, QGenerator::E(a), m)).is_zero())
}
