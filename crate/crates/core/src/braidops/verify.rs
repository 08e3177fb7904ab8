use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::basis::MonomialBasis;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::operator::SparseOperator;
use crate::qarith::ExactScalar;
use crate::report::{block_label, CheckRecord};

use super::correction::CorrectionFactor;
use super::rvee::{rvee_equivariant, rvee_on_basis};
use super::weyl::weyl_element_j;
use super::{BraidLabel, BraidOperator};

type RveeCache = Mutex<HashMap<(u32, u32, usize), Arc<SparseOperator<ExactScalar>>>>;

fn rvee_cache() -> &'static RveeCache {
    static CACHE: OnceLock<RveeCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// R∨ on the (μ1, μ2) block of S_q(k, 2), memoized per process.
pub fn cached_rvee(mu1: u32, mu2: u32, k: usize) -> Result<Arc<SparseOperator<ExactScalar>>> {
    if let Some(op) = rvee_cache().lock().expect("cache lock").get(&(mu1, mu2, k)) {
        return Ok(Arc::clone(op));
    }
    let op = Arc::new(rvee_equivariant(mu1, mu2, k)?);
    rvee_cache()
        .lock()
        .expect("cache lock")
        .insert((mu1, mu2, k), Arc::clone(&op));
    Ok(op)
}

/// R∨_j on `basis`; the codomain is the column-swapped basis.
pub fn rvee_j(j: usize, basis: &Arc<MonomialBasis>) -> Result<BraidOperator> {
    if j + 1 >= basis.n() {
        return Err(Error::Index(format!("generator {j} for n = {}", basis.n())));
    }
    let k = basis.k();
    let op = rvee_on_basis(j, basis, |a, b| cached_rvee(a, b, k))?;
    Ok(BraidOperator {
        label: BraidLabel::RVee,
        index: j,
        op,
    })
}

fn certificate<T: Field>(residual: &SparseOperator<T>) -> Option<String> {
    residual
        .first_nonzero()
        .map(|(r, c, x)| format!("<{r}| residual |{c}> = {x}"))
}

/// Checks R∨_j = S_j · C_j on every block of the transposition closure of `mu`.
pub fn verify_rs_block(k: usize, n: usize, mu: &[u32], j: usize) -> Result<Vec<CheckRecord>> {
    let closure = Arc::new(MonomialBasis::transposition_closure(k, n, mu, j)?);
    let r = rvee_j(j, &closure)?.op;
    let s = weyl_element_j(j, &closure)?.op;
    let c = CorrectionFactor { j, k }.operator(&closure).op;
    let residual = r.sub(&s.compose(&c)?)?;
    let identity = format!("Rv_{0} = S_{0} C_{0}", j + 1);
    closure
        .blocks()
        .iter()
        .map(|b| {
            let mut swapped = b.clone();
            swapped.swap(j, j + 1);
            let dom = Arc::new(MonomialBasis::block(k, n, b)?);
            let cod = Arc::new(MonomialBasis::block(k, n, &swapped)?);
            let part = residual.restrict(Arc::clone(&dom), cod)?;
            Ok(CheckRecord::exact(
                identity.clone(),
                block_label(k, n, b),
                dom.len(),
                certificate(&part),
            ))
        })
        .collect()
}

/// R = S on S_q(k, n) for every j and every bidegree with μ_j + μ_{j+1} ≤ `degree_bound`.
///
/// For n > 2 the remaining columns carry degree 0 or 1.
pub fn verify_rs(k: usize, n: usize, degree_bound: u32, parallel: bool) -> Result<Vec<CheckRecord>> {
    if n < 2 {
        return Err(Error::Contract("verify_rs needs n >= 2".into()));
    }
    let mut jobs = Vec::new();
    for j in 0..n - 1 {
        for spect in 0..(1u32 << (n - 2)) {
            for s in 0..=degree_bound {
                let mut mu = vec![0u32; n];
                let mut bit = 0;
                for (l, x) in mu.iter_mut().enumerate() {
                    if l == j || l == j + 1 {
                        continue;
                    }
                    *x = (spect >> bit) & 1;
                    bit += 1;
                }
                mu[j] = s;
                jobs.push((mu, j));
            }
        }
    }
    let run = |(mu, j): &(Vec<u32>, usize)| verify_rs_block(k, n, mu, *j);
    let parts: Vec<Result<Vec<CheckRecord>>> = if parallel {
        jobs.par_iter().map(run).collect()
    } else {
        jobs.iter().map(run).collect()
    };
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

/// S_0, …, S_{n-2} on a basis closed under the column algebra.
pub fn weyl_family(basis: &Arc<MonomialBasis>) -> Result<Vec<BraidOperator>> {
    (0..basis.n().saturating_sub(1))
        .map(|j| weyl_element_j(j, basis))
        .collect()
}

/// R∨_0, …, R∨_{n-2} on a basis stable under all column swaps.
pub fn rvee_family(basis: &Arc<MonomialBasis>) -> Result<Vec<BraidOperator>> {
    (0..basis.n().saturating_sub(1)).map(|j| rvee_j(j, basis)).collect()
}

/// Braid relations A_i A_{i+1} A_i = A_{i+1} A_i A_{i+1} and A_i A_l = A_l A_i
/// for |i - l| ≥ 2, exactly. All operators act on one common basis.
pub fn verify_braid_relations<T: Field>(
    ops: &[SparseOperator<T>],
    family: &str,
    block: &str,
) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for i in 0..ops.len() {
        for l in i + 1..ops.len() {
            let (a, b) = (&ops[i], &ops[l]);
            let dim = a.domain.len();
            let (identity, residual) = if l == i + 1 {
                let lhs = a.compose(b)?.compose(a)?;
                let rhs = b.compose(a)?.compose(b)?;
                (
                    format!("{family}_{0}{family}_{1}{family}_{0} = {family}_{1}{family}_{0}{family}_{1}", i + 1, l + 1),
                    lhs.sub(&rhs)?,
                )
            } else {
                (
                    format!("{family}_{0}{family}_{1} = {family}_{1}{family}_{0}", i + 1, l + 1),
                    a.commutator(b)?,
                )
            };
            out.push(CheckRecord::exact(identity, block, dim, certificate(&residual)));
        }
    }
    Ok(out)
}
