use std::collections::HashMap;
use std::sync::Arc;

use num_rational::BigRational;

use super::howe::YoungDiagram;
use super::ops::{gl_action, Side};
use crate::basis::{MatrixMonomial, MonomialBasis};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{kernel, SparseVec};

/// Joint kernel of the raising maps inside one (column degrees, row sums) weight space.
///
/// `raise(a, m)` returns the image of monomial `m` under the a-th raising
/// generator, for a in 0..k-1. Returned vectors are in `basis` coordinates.
pub fn raising_kernel<T, F>(
    basis: &MonomialBasis,
    col_degrees: &[u32],
    row_weight: &[u32],
    raise: F,
) -> Vec<SparseVec<T>>
where
    T: Field,
    F: Fn(usize, &MatrixMonomial) -> Vec<(MatrixMonomial, T)>,
{
    let positions = basis.weight_space(col_degrees, row_weight);
    if positions.is_empty() {
        return Vec::new();
    }
    let mut row_index: HashMap<(usize, MatrixMonomial), usize> = HashMap::new();
    let mut entries: Vec<(usize, usize, T)> = Vec::new();
    for (c, &p) in positions.iter().enumerate() {
        let m = basis.element(p);
        for a in 0..basis.k().saturating_sub(1) {
            for (img, x) in raise(a, m) {
                let next = row_index.len();
                let r = *row_index.entry((a, img)).or_insert(next);
                entries.push((r, c, x));
            }
        }
    }
    let mut dense = vec![vec![T::zero(); positions.len()]; row_index.len()];
    for (r, c, x) in entries {
        dense[r][c] = dense[r][c].add_ref(&x);
    }
    kernel(dense, positions.len())
        .into_iter()
        .map(|v| {
            positions
                .iter()
                .zip(v)
                .filter(|(_, x)| !x.is_zero())
                .map(|(&p, x)| (p, x))
                .collect()
        })
        .collect()
}

/// Vectors of k-side highest weight λ inside the block of column degrees μ.
#[derive(Clone, Debug)]
pub struct HighestWeightSpace {
    pub lambda: YoungDiagram,
    pub mu: Vec<u32>,
    pub basis: Arc<MonomialBasis>,
    pub vectors: Vec<SparseVec<BigRational>>,
}

impl HighestWeightSpace {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

/// Basis of M_λ^μ: the joint kernel of the E^{(k)}_{a,a+1} on the k-weight λ
/// subspace of the μ block. Its dimension is the weight multiplicity dim V_λ^{(n)}[μ].
pub fn highest_weight_subspace(
    lambda: &YoungDiagram,
    mu: &[u32],
    basis: &Arc<MonomialBasis>,
) -> Result<HighestWeightSpace> {
    if lambda.size() != mu.iter().sum::<u32>() {
        return Err(Error::Contract(format!(
            "|λ| = {} differs from |μ| = {}",
            lambda.size(),
            mu.iter().sum::<u32>()
        )));
    }
    if !basis.blocks().contains(mu) {
        return Err(Error::Contract(format!("basis does not contain the block {mu:?}")));
    }
    let vectors = if lambda.rows() > basis.k() {
        Vec::new()
    } else {
        let weight = lambda.padded(basis.k())?;
        raising_kernel(basis, mu, &weight, |a, m| gl_action(Side::K, a, a + 1, m))
    };
    Ok(HighestWeightSpace {
        lambda: lambda.clone(),
        mu: mu.to_vec(),
        basis: Arc::clone(basis),
        vectors,
    })
}
