use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

use super::action::{side_rank, uq_action, uq_operator, QGenerator};
use super::poly::QPolynomial;
use crate::basis::MonomialBasis;
use crate::error::{Error, Result};
use crate::glrep::{gl_dimension, Side, YoungDiagram};
use crate::linalg::{EchelonBasis, SparseVec};
use crate::operator::SparseOperator;
use crate::qarith::ExactScalar;

/// Basis of a cyclic submodule together with the generator words producing it.
#[derive(Clone, Debug)]
pub struct Component {
    pub side: Side,
    pub lambda: YoungDiagram,
    pub basis: Arc<MonomialBasis>,
    pub vectors: Vec<SparseVec<ExactScalar>>,
    /// `words[t]` applied (rightmost letter first) to the start vector gives `vectors[t]`.
    pub words: Vec<Vec<QGenerator>>,
}

impl Component {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

/// Independent vectors and the generator word that produced each.
pub type Span = (Vec<SparseVec<ExactScalar>>, Vec<Vec<QGenerator>>);

/// Breadth-first span of `start` under `gens`, reduced to an independent set.
///
/// Every kept vector is expanded, so the result spans the cyclic submodule
/// unless `max_len` cuts the search. `basis` must be closed under `gens`.
pub fn span_closure(
    side: Side,
    start: &SparseVec<ExactScalar>,
    gens: &[QGenerator],
    basis: &Arc<MonomialBasis>,
    max_len: Option<usize>,
) -> Result<Span> {
    let ops: Vec<SparseOperator<ExactScalar>> = gens
        .iter()
        .map(|&g| uq_operator(side, g, basis))
        .collect::<Result<_>>()?;
    if ops.iter().any(|o| !o.is_square()) {
        return Err(Error::Contract("basis is not closed under the generators".into()));
    }
    let mut echelon = EchelonBasis::new();
    let mut vectors = Vec::new();
    let mut words: Vec<Vec<QGenerator>> = Vec::new();
    if start.is_empty() {
        return Ok((vectors, words));
    }
    echelon.insert(start);
    vectors.push(start.clone());
    words.push(Vec::new());
    let mut queue = VecDeque::from([0usize]);
    while let Some(t) = queue.pop_front() {
        if max_len.is_some_and(|l| words[t].len() >= l) {
            continue;
        }
        for (g, op) in gens.iter().zip(&ops) {
            let v = op.apply(&vectors[t]);
            if v.is_empty() || !echelon.insert(&v) {
                continue;
            }
            let mut w = vec![*g];
            w.extend(words[t].iter().copied());
            vectors.push(v);
            words.push(w);
            queue.push_back(vectors.len() - 1);
        }
    }
    Ok((vectors, words))
}

fn side_weight(side: Side, p: &QPolynomial) -> Option<Vec<u32>> {
    let mut ws = p.terms().keys().map(|m| match side {
        Side::K => m.row_sums(),
        Side::N => m.column_degrees(),
    });
    let w = ws.next()?;
    ws.all(|x| x == w).then_some(w)
}

fn killed_by_raising(side: Side, p: &QPolynomial) -> bool {
    let rank = side_rank(side, p.k(), p.n());
    (0..rank.saturating_sub(1)).all(|a| p.apply(|m| uq_action(side, QGenerator::E(a), m)).is_zero())
}

fn other(side: Side) -> Side {
    match side {
        Side::K => Side::N,
        Side::N => Side::K,
    }
}

/// Irreducible U_q(gl) submodule generated by a highest-weight vector.
///
/// The start vector must be a weight vector killed by the raising generators
/// of `side` or of the opposite side; the highest weight λ is read off from
/// whichever side it is highest for. The span is closed under all E and F of
/// `side` (words up to `weight_bound` letters) and its dimension is checked
/// against the hook-content value dim V_λ.
pub fn generate_component(hw: &QPolynomial, side: Side, weight_bound: Option<usize>) -> Result<Component> {
    let d = hw
        .degree()
        .ok_or_else(|| Error::Contract("start vector is zero or not homogeneous".into()))?;
    let (k, n) = (hw.k(), hw.n());
    let lambda_side = if killed_by_raising(side, hw) {
        side
    } else if killed_by_raising(other(side), hw) {
        other(side)
    } else {
        return Err(Error::Contract("start vector is not a highest-weight vector".into()));
    };
    let weight = side_weight(lambda_side, hw)
        .ok_or_else(|| Error::Contract("start vector is not a weight vector".into()))?;
    let lambda = YoungDiagram::new(&weight)?;
    let basis = Arc::new(match side {
        Side::K => {
            let blocks: BTreeSet<Vec<u32>> = hw.terms().keys().map(|m| m.column_degrees()).collect();
            MonomialBasis::from_blocks(k, n, blocks)?
        }
        Side::N => MonomialBasis::graded(k, n, d)?,
    });
    let rank = side_rank(side, k, n);
    let gens: Vec<QGenerator> = (0..rank.saturating_sub(1))
        .flat_map(|a| [QGenerator::F(a), QGenerator::E(a)])
        .collect();
    let start = hw.to_vector(&basis)?;
    let (vectors, words) = span_closure(side, &start, &gens, &basis, weight_bound)?;
    let expected = gl_dimension(&lambda, rank) as usize;
    if vectors.len() != expected {
        return Err(Error::ComponentDimension {
            found: vectors.len(),
            expected,
            context: format!("λ = {lambda} on the rank-{rank} side"),
        });
    }
    Ok(Component {
        side,
        lambda,
        basis,
        vectors,
        words,
    })
}
