use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use crate::basis::{MatrixMonomial, MonomialBasis};
use crate::error::{Error, Result};
use crate::field::{int, rat};
use crate::operator::SparseOperator;

/// Which factor of gl_k × gl_n acts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// gl_k, acting on rows.
    K,
    /// gl_n, acting on columns.
    N,
}

/// gl form Ω̃ or sl form Ω of the column operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OmegaVariant {
    Gl,
    Sl,
}

/// Terms of a linear combination of monomials.
pub type Terms = Vec<(MatrixMonomial, BigRational)>;

/// E_ab on a monomial: Σ_j x_aj ∂_bj (k-side) or Σ_c x_ca ∂_cb (n-side).
pub fn gl_action(side: Side, a: usize, b: usize, m: &MatrixMonomial) -> Terms {
    let mut out = Vec::new();
    match side {
        Side::K => {
            for j in 0..m.cols() {
                let c = m.get(b, j);
                if c > 0 {
                    out.push((m.moved((b, j), (a, j)).unwrap(), int(c as i64)));
                }
            }
        }
        Side::N => {
            for r in 0..m.rows() {
                let c = m.get(r, b);
                if c > 0 {
                    out.push((m.moved((r, b), (r, a)).unwrap(), int(c as i64)));
                }
            }
        }
    }
    out
}

/// Applies a monomial action to every term of a combination and collects.
pub fn apply_to_terms<F>(terms: &[(MatrixMonomial, BigRational)], action: F) -> Terms
where
    F: Fn(&MatrixMonomial) -> Terms,
{
    let mut acc: BTreeMap<MatrixMonomial, BigRational> = BTreeMap::new();
    for (m, c) in terms {
        for (m2, c2) in action(m) {
            *acc.entry(m2).or_insert_with(BigRational::zero) += c * c2;
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn check_rank(side: Side, a: usize, b: usize, basis: &MonomialBasis) -> Result<()> {
    let rank = match side {
        Side::K => basis.k(),
        Side::N => basis.n(),
    };
    if a >= rank || b >= rank {
        return Err(Error::Index(format!("generator ({a},{b}) for rank {rank}")));
    }
    Ok(())
}

/// Matrix of E_ab^{(k)} or E_ab^{(n)} on `basis`.
///
/// On the n-side the codomain is the basis with shifted column degrees
/// (the same basis when it is a full graded piece).
pub fn gl_generator(
    side: Side,
    a: usize,
    b: usize,
    basis: &Arc<MonomialBasis>,
) -> Result<SparseOperator<BigRational>> {
    check_rank(side, a, b, basis)?;
    let codomain = match side {
        Side::K => Arc::clone(basis),
        Side::N => basis.shifted(a, b)?,
    };
    SparseOperator::from_action(Arc::clone(basis), codomain, |m| gl_action(side, a, b, m))
}

/// κ_ij = E_ij E_ji + E_ji E_ij on the n-side, as an endomorphism of `basis`.
pub fn casimir_truncated(i: usize, j: usize, basis: &Arc<MonomialBasis>) -> Result<SparseOperator<BigRational>> {
    check_rank(Side::N, i, j, basis)?;
    SparseOperator::from_action(Arc::clone(basis), Arc::clone(basis), |m| {
        let one = [(m.clone(), int(1))];
        let mut t = apply_to_terms(&apply_to_terms(&one, |x| gl_action(Side::N, j, i, x)), |x| {
            gl_action(Side::N, i, j, x)
        });
        t.extend(apply_to_terms(
            &apply_to_terms(&one, |x| gl_action(Side::N, i, j, x)),
            |x| gl_action(Side::N, j, i, x),
        ));
        apply_to_terms(&t, |x| vec![(x.clone(), int(1))])
    })
}

/// Ω̃_ij = Σ_{a,b} x_ai ∂_bi x_bj ∂_aj, or its sl form Ω_ij = Ω̃_ij - (1/k) d_i d_j.
pub fn omega_operators(
    i: usize,
    j: usize,
    basis: &Arc<MonomialBasis>,
    variant: OmegaVariant,
) -> Result<SparseOperator<BigRational>> {
    check_rank(Side::N, i, j, basis)?;
    let k = basis.k();
    SparseOperator::from_action(Arc::clone(basis), Arc::clone(basis), |m| {
        let mut terms = Vec::new();
        for a in 0..k {
            for b in 0..k {
                let cj = m.get(a, j);
                if cj == 0 {
                    continue;
                }
                let m1 = m.moved((a, j), (b, j)).unwrap();
                let ci = m1.get(b, i);
                if ci == 0 {
                    continue;
                }
                let m2 = m1.moved((b, i), (a, i)).unwrap();
                terms.push((m2, int(cj as i64 * ci as i64)));
            }
        }
        if variant == OmegaVariant::Sl {
            let d = m.column_degrees();
            terms.push((m.clone(), -rat(d[i] as i64 * d[j] as i64, k as i64)));
        }
        apply_to_terms(&terms, |x| vec![(x.clone(), int(1))])
    })
}
