use std::sync::Arc;

use num_rational::BigRational;

use super::ops::{gl_generator, Side};
use crate::basis::MonomialBasis;
use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;
use crate::operator::SparseOperator;
use crate::qarith::exp_nilpotent;

/// exp(E_{j,j+1}) exp(-E_{j+1,j}) exp(E_{j,j+1}) on ℂⁿ (0-based j): the identity
/// except for the block [[0,1],[-1,0]] on coordinates j, j+1.
pub fn sigma_matrix(j: usize, n: usize) -> Result<Vec<Vec<i64>>> {
    if j + 1 >= n {
        return Err(Error::Index(format!("generator {j} for n = {n}")));
    }
    let mut m: Vec<Vec<i64>> = (0..n)
        .map(|r| (0..n).map(|c| i64::from(r == c)).collect())
        .collect();
    m[j][j] = 0;
    m[j + 1][j + 1] = 0;
    m[j][j + 1] = 1;
    m[j + 1][j] = -1;
    Ok(m)
}

/// exp(E) exp(-F) exp(E) for nilpotent E, F on a common space.
pub fn sigma_from_pair(
    e: &SparseMatrix<BigRational>,
    f: &SparseMatrix<BigRational>,
) -> Result<SparseMatrix<BigRational>> {
    let ee = exp_nilpotent(e)?;
    let ef = exp_nilpotent(&f.neg())?;
    Ok(ee.matmul(&ef).matmul(&ee))
}

/// σ(T_j) on polynomials in `basis`, which must be closed under E^{(n)}_{j,j+1} and E^{(n)}_{j+1,j}.
pub fn sigma_operator(j: usize, basis: &Arc<MonomialBasis>) -> Result<SparseOperator<BigRational>> {
    let e = gl_generator(Side::N, j, j + 1, basis)?;
    let f = gl_generator(Side::N, j + 1, j, basis)?;
    if !e.is_square() || !f.is_square() {
        return Err(Error::Contract(format!(
            "basis is not closed under the sl2 triple of generator {j}"
        )));
    }
    let s = sigma_from_pair(&e.matrix, &f.matrix)?;
    SparseOperator::new(Arc::clone(basis), Arc::clone(basis), s)
}
