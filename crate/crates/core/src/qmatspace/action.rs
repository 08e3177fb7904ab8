use std::sync::Arc;

use super::poly::{QMatMonomial, QPolynomial};
use crate::basis::MonomialBasis;
use crate::error::{Error, Result};
use crate::glrep::Side;
use crate::operator::SparseOperator;
use crate::qarith::{qnumber, ExactScalar};

/// Chevalley generator of U_q(gl_p), 0-based: D_i for i < p, E_i and F_i for i < p-1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QGenerator {
    D(usize),
    E(usize),
    F(usize),
}

impl std::fmt::Display for QGenerator {
    /// 1-based label such as `E_2`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            QGenerator::D(i) => write!(f, "D_{}", i + 1),
            QGenerator::E(i) => write!(f, "E_{}", i + 1),
            QGenerator::F(i) => write!(f, "F_{}", i + 1),
        }
    }
}

type QTerms = Vec<(QMatMonomial, ExactScalar)>;

/// Rank p of the acting algebra U_q(gl_p).
pub fn side_rank(side: Side, k: usize, n: usize) -> usize {
    match side {
        Side::K => k,
        Side::N => n,
    }
}

fn check_generator(side: Side, g: QGenerator, k: usize, n: usize) -> Result<()> {
    let p = side_rank(side, k, n);
    let ok = match g {
        QGenerator::D(i) => i < p,
        QGenerator::E(i) | QGenerator::F(i) => i + 1 < p,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Index(format!("{g} for rank {p}")))
    }
}

/// Action of a generator on X^m, as a list of terms.
///
/// Row side (U_q(gl_k)):
/// - D_i X^m = (Σ_j m_ij) X^m
/// - E_i X^m = Σ_j [m_{i+1,j}] Π_{j'>j} q^{m_{ij'} - m_{i+1,j'}} X^{m + ε_ij - ε_{i+1,j}}
/// - F_i X^m = Σ_j [m_ij] Π_{j'<j} q^{-(m_{ij'} - m_{i+1,j'})} X^{m - ε_ij + ε_{i+1,j}}
///
/// Column side (U_q(gl_n)) is the same with rows and columns exchanged.
pub fn uq_action(side: Side, g: QGenerator, m: &QMatMonomial) -> QTerms {
    let (k, n) = (m.rows(), m.cols());
    // Entry accessor with (line, position) where lines are rows for the k-side.
    let get = |line: usize, pos: usize| -> i64 {
        match side {
            Side::K => m.get(line, pos) as i64,
            Side::N => m.get(pos, line) as i64,
        }
    };
    let cell = |line: usize, pos: usize| -> (usize, usize) {
        match side {
            Side::K => (line, pos),
            Side::N => (pos, line),
        }
    };
    let positions = match side {
        Side::K => n,
        Side::N => k,
    };
    match g {
        QGenerator::D(i) => {
            let s: i64 = (0..positions).map(|p| get(i, p)).sum();
            if s == 0 {
                Vec::new()
            } else {
                vec![(m.clone(), ExactScalar::from_int(s))]
            }
        }
        QGenerator::E(i) => (0..positions)
            .filter(|&p| get(i + 1, p) > 0)
            .map(|p| {
                let e: i64 = (p + 1..positions).map(|p2| get(i, p2) - get(i + 1, p2)).sum();
                let c = qnumber(get(i + 1, p)).mul_ref_q(e);
                (m.moved(cell(i + 1, p), cell(i, p)).unwrap(), c)
            })
            .collect(),
        QGenerator::F(i) => (0..positions)
            .filter(|&p| get(i, p) > 0)
            .map(|p| {
                let e: i64 = (0..p).map(|p2| get(i, p2) - get(i + 1, p2)).sum();
                let c = qnumber(get(i, p)).mul_ref_q(-e);
                (m.moved(cell(i, p), cell(i + 1, p)).unwrap(), c)
            })
            .collect(),
    }
}

trait ShiftQ {
    fn mul_ref_q(self, e: i64) -> Self;
}

impl ShiftQ for ExactScalar {
    fn mul_ref_q(self, e: i64) -> Self {
        if e == 0 {
            self
        } else {
            &self * &ExactScalar::q_int(e)
        }
    }
}

/// U_q(gl_k) generator applied to X^m.
pub fn uq_gl_k_action(g: QGenerator, m: &QMatMonomial) -> Result<QPolynomial> {
    check_generator(Side::K, g, m.rows(), m.cols())?;
    Ok(QPolynomial::from_terms(m.rows(), m.cols(), uq_action(Side::K, g, m)))
}

/// U_q(gl_n) generator applied to X^m.
pub fn uq_gl_n_action(g: QGenerator, m: &QMatMonomial) -> Result<QPolynomial> {
    check_generator(Side::N, g, m.rows(), m.cols())?;
    Ok(QPolynomial::from_terms(m.rows(), m.cols(), uq_action(Side::N, g, m)))
}

/// Generator applied to a polynomial.
pub fn uq_apply(side: Side, g: QGenerator, p: &QPolynomial) -> Result<QPolynomial> {
    check_generator(side, g, p.k(), p.n())?;
    Ok(p.apply(|m| uq_action(side, g, m)))
}

/// Codomain of a generator acting on `basis`.
pub fn generator_codomain(side: Side, g: QGenerator, basis: &Arc<MonomialBasis>) -> Result<Arc<MonomialBasis>> {
    match (side, g) {
        (Side::K, _) | (Side::N, QGenerator::D(_)) => Ok(Arc::clone(basis)),
        (Side::N, QGenerator::E(j)) => basis.shifted(j, j + 1),
        (Side::N, QGenerator::F(j)) => basis.shifted(j + 1, j),
    }
}

/// Matrix of a generator on `basis`.
pub fn uq_operator(side: Side, g: QGenerator, basis: &Arc<MonomialBasis>) -> Result<SparseOperator<ExactScalar>> {
    check_generator(side, g, basis.k(), basis.n())?;
    let codomain = generator_codomain(side, g, basis)?;
    SparseOperator::from_action(Arc::clone(basis), codomain, |m| uq_action(side, g, m))
}

/// Matrix of a generator as an endomorphism of `basis`, which must be closed under it.
pub fn uq_endomorphism(side: Side, g: QGenerator, basis: &Arc<MonomialBasis>) -> Result<SparseOperator<ExactScalar>> {
    check_generator(side, g, basis.k(), basis.n())?;
    SparseOperator::from_action(Arc::clone(basis), Arc::clone(basis), |m| uq_action(side, g, m))
}

/// Diagonal q^{c·H_i} with H_i = D_i - D_{i+1}.
pub fn q_cartan_power(side: Side, i: usize, c: i64, basis: &Arc<MonomialBasis>) -> SparseOperator<ExactScalar> {
    SparseOperator::diagonal(Arc::clone(basis), |m| {
        let d = match side {
            Side::K => m.row_sums(),
            Side::N => m.column_degrees(),
        };
        ExactScalar::q_int(c * (d[i] as i64 - d[i + 1] as i64))
    })
}
