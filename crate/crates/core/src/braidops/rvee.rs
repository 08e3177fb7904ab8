use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::basis::{MatrixMonomial, MonomialBasis};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::glrep::Side;
use crate::linalg::{inverse, SparseMatrix, SparseVec};
use crate::operator::SparseOperator;
use crate::qarith::{qnumber, ExactScalar, QExp};
use crate::qmatspace::{hw_vector, span_closure, uq_operator, QGenerator};

/// Eigen-coefficient of R∨ on v_i: (-1)^i q^{(μ1-i)(μ2-i) - i - μ1μ2/k}.
pub fn rvee_coefficient(mu1: u32, mu2: u32, i: u32, k: usize) -> ExactScalar {
    let (m1, m2, i_) = (mu1 as i64, mu2 as i64, i as i64);
    let e = QExp::from_integer((m1 - i_) * (m2 - i_) - i_) - QExp::new(m1 * m2, k as i64);
    ExactScalar::signed_q_pow(i_, e)
}

fn apply_word(
    word: &[QGenerator],
    v: &SparseVec<ExactScalar>,
    ops: &BTreeMap<QGenerator, SparseOperator<ExactScalar>>,
) -> SparseVec<ExactScalar> {
    word.iter().rev().fold(v.clone(), |acc, g| ops[g].apply(&acc))
}

/// R∨ from the (μ1, μ2) block of S_q(k,2) to the (μ2, μ1) block.
///
/// Defined on each highest-weight vector v_i^{μ1,μ2} by R∨ v_i^{μ1,μ2} =
/// c_i v_i^{μ2,μ1} and extended by U_q(gl_k)-equivariance: a lowering word w
/// sends w·v_i^{μ1,μ2} to c_i w·v_i^{μ2,μ1}. The matrix is then solved one row
/// weight space at a time.
pub fn rvee_equivariant(mu1: u32, mu2: u32, k: usize) -> Result<SparseOperator<ExactScalar>> {
    if k < 2 {
        return Err(Error::Contract("the equivariant construction needs k ≥ 2".into()));
    }
    let dom = Arc::new(MonomialBasis::block(k, 2, &[mu1, mu2])?);
    let cod = if mu1 == mu2 {
        Arc::clone(&dom)
    } else {
        Arc::new(MonomialBasis::block(k, 2, &[mu2, mu1])?)
    };
    let lowering: Vec<QGenerator> = (0..k - 1).map(QGenerator::F).collect();
    let cod_ops: BTreeMap<QGenerator, SparseOperator<ExactScalar>> = lowering
        .iter()
        .map(|&g| Ok((g, uq_operator(Side::K, g, &cod)?)))
        .collect::<Result<_>>()?;

    // (source vector in dom, image vector in cod)
    let mut pairs: Vec<(SparseVec<ExactScalar>, SparseVec<ExactScalar>)> = Vec::new();
    for i in 0..=mu1.min(mu2) {
        let v = hw_vector(k, mu1, mu2, i)?.to_vector(&dom)?;
        let c = rvee_coefficient(mu1, mu2, i, k);
        let v_img: SparseVec<ExactScalar> = hw_vector(k, mu2, mu1, i)?
            .to_vector(&cod)?
            .into_iter()
            .map(|(r, x)| (r, x.mul_ref(&c)))
            .collect();
        let (vectors, words) = span_closure(Side::K, &v, &lowering, &dom, None)?;
        for (src, w) in vectors.into_iter().zip(words) {
            let img = apply_word(&w, &v_img, &cod_ops);
            pairs.push((src, img));
        }
    }
    if pairs.len() != dom.len() {
        return Err(Error::ComponentDimension {
            found: pairs.len(),
            expected: dom.len(),
            context: format!("equivariant bases of the ({mu1},{mu2}) block, k = {k}"),
        });
    }

    let mut by_weight: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
    for (t, (src, _)) in pairs.iter().enumerate() {
        let first = *src.keys().next().expect("nonzero vector");
        by_weight.entry(dom.element(first).row_sums()).or_default().push(t);
    }
    let mut trip = Vec::new();
    for (w, ts) in by_weight {
        let dpos = dom.weight_space(&[mu1, mu2], &w);
        let cpos = cod.weight_space(&[mu2, mu1], &w);
        if dpos.len() != ts.len() || cpos.len() != ts.len() {
            return Err(Error::ComponentDimension {
                found: ts.len(),
                expected: dpos.len(),
                context: format!("row weight {w:?} of the ({mu1},{mu2}) block"),
            });
        }
        let u: Vec<Vec<ExactScalar>> = dpos
            .iter()
            .map(|p| ts.iter().map(|&t| pairs[t].0.get(p).cloned().unwrap_or_else(ExactScalar::zero)).collect())
            .collect();
        let uinv = inverse(&u)?;
        for p_img in &cpos {
            let row: Vec<ExactScalar> = ts
                .iter()
                .map(|&t| pairs[t].1.get(p_img).cloned().unwrap_or_else(ExactScalar::zero))
                .collect();
            for (dj, p_src) in dpos.iter().enumerate() {
                let mut s = ExactScalar::zero();
                for (x, inv_row) in row.iter().zip(&uinv) {
                    if !x.is_zero() && !inv_row[dj].is_zero() {
                        s = s.add_ref(&x.mul_ref(&inv_row[dj]));
                    }
                }
                if !s.is_zero() {
                    trip.push((*p_img, *p_src, s));
                }
            }
        }
    }
    SparseOperator::new(
        Arc::clone(&dom),
        Arc::clone(&cod),
        SparseMatrix::from_triplets(cod.len(), dom.len(), trip),
    )
}

/// R∨ for k = 2 straight from the universal R-matrix of U_q(sl_2):
/// R = q^{H⊗H/2} exp_q((q - q^{-1}) E⊗F), followed by the flip of the two columns.
pub fn rmatrix_direct_k2(mu1: u32, mu2: u32) -> Result<SparseOperator<ExactScalar>> {
    let dom = Arc::new(MonomialBasis::block(2, 2, &[mu1, mu2])?);
    let cod = if mu1 == mu2 {
        Arc::clone(&dom)
    } else {
        Arc::new(MonomialBasis::block(2, 2, &[mu2, mu1])?)
    };
    let qq = crate::qarith::q_minus_q_inverse();
    SparseOperator::from_action(Arc::clone(&dom), Arc::clone(&cod), |m| {
        let mut terms: Vec<(MatrixMonomial, ExactScalar)> = Vec::new();
        let (a, b, c, d) = (m.get(0, 0), m.get(1, 0), m.get(0, 1), m.get(1, 1));
        for t in 0..=b.min(c) {
            // (E⊗F)^t / [t]! with E raising column 1 and F lowering column 2.
            let mut coeff = ExactScalar::one();
            for s in 0..t {
                coeff = coeff
                    .mul_ref(&qnumber((b - s) as i64))
                    .mul_ref(&qnumber((c - s) as i64));
            }
            let tt = t as i64;
            coeff = &coeff.mul_ref(&ExactScalar::q_int(tt * (tt - 1) / 2)).mul_ref(&qq.powi(tt))
                / &crate::qarith::qfactorial(t);
            let out = MatrixMonomial::from_rows(&[vec![a + t, c - t], vec![b - t, d + t]]);
            let h1 = out.get(0, 0) as i64 - out.get(1, 0) as i64;
            let h2 = out.get(0, 1) as i64 - out.get(1, 1) as i64;
            coeff = coeff.mul_ref(&ExactScalar::q_frac(h1 * h2, 2));
            terms.push((out.swap_columns(0), coeff));
        }
        terms
    })
}

/// R∨_j on a union of blocks of S_q(k,n): R∨ on columns j, j+1 through the
/// exact identification X^m ↔ (columns j, j+1) ⊗ (other columns).
pub fn rvee_on_basis<F>(
    j: usize,
    domain: &Arc<MonomialBasis>,
    mut local: F,
) -> Result<SparseOperator<ExactScalar>>
where
    F: FnMut(u32, u32) -> Result<Arc<SparseOperator<ExactScalar>>>,
{
    let codomain = domain.column_swapped(j)?;
    let mut trip = Vec::new();
    let mut cache: BTreeMap<(u32, u32), Arc<SparseOperator<ExactScalar>>> = BTreeMap::new();
    for (c, m) in domain.elements().iter().enumerate() {
        let deg = m.column_degrees();
        let key = (deg[j], deg[j + 1]);
        if let std::collections::btree_map::Entry::Vacant(e) = cache.entry(key) {
            e.insert(local(key.0, key.1)?);
        }
        let r2 = &cache[&key];
        let pair = m.column_pair(j);
        let col = r2.domain.index_of(&pair).expect("pair lies in its block");
        for (r, x) in r2.matrix.column(col) {
            let img = m.with_column_pair(j, r2.codomain.element(*r));
            let row = codomain.index_of(&img).ok_or_else(|| Error::OutsideBasis {
                monomial: img.to_string(),
            })?;
            trip.push((row, c, x.clone()));
        }
    }
    SparseOperator::new(
        Arc::clone(domain),
        Arc::clone(&codomain),
        SparseMatrix::from_triplets(codomain.len(), domain.len(), trip),
    )
}
