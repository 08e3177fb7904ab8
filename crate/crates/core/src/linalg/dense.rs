use std::collections::BTreeMap;

use super::sparse::{accumulate, SparseMatrix, SparseVec};
use crate::error::{Error, Result};
use crate::field::Field;

/// Reduced row echelon form of a dense matrix.
pub struct Rref<T> {
    pub rows: Vec<Vec<T>>,
    pub pivots: Vec<usize>,
}

/// Gauss-Jordan elimination over an exact field.
///
/// Within each column the pivot is the nonzero entry with the smallest
/// [`Field::weight`], which keeps rational-function entries short.
pub fn rref<T: Field>(mut m: Vec<Vec<T>>, ncols: usize) -> Rref<T> {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows)
            .filter(|&i| !m[i][c].is_zero())
            .min_by_key(|&i| m[i][c].weight())
        else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inverse().expect("nonzero pivot");
        for x in m[r].iter_mut().skip(c) {
            *x = x.mul_ref(&inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x = x.sub_ref(&f.mul_ref(p));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r.max(pivots.len()));
    m.retain(|row| row.iter().any(|x| !x.is_zero()));
    Rref { rows: m, pivots }
}

pub fn rank<T: Field>(m: Vec<Vec<T>>, ncols: usize) -> usize {
    rref(m, ncols).pivots.len()
}

/// Basis of the null space; each vector has a 1 in its free coordinate.
pub fn kernel<T: Field>(m: Vec<Vec<T>>, ncols: usize) -> Vec<Vec<T>> {
    let Rref { rows, pivots } = rref(m, ncols);
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; ncols];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![T::zero(); ncols];
            v[free] = T::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            v
        })
        .collect()
}

/// Inverse of a square dense matrix.
pub fn inverse<T: Field>(m: &[Vec<T>]) -> Result<Vec<Vec<T>>> {
    let n = m.len();
    let aug: Vec<Vec<T>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "inverse of a non-square matrix");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { T::one() } else { T::zero() }));
            r
        })
        .collect();
    let Rref { rows, pivots } = rref(aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::Singular(format!("{n}x{n} matrix has rank below {n}")));
    }
    Ok(rows.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Indices of a maximal set of linearly independent rows of `b` (given as columns).
///
/// `vectors` are the columns of a tall matrix; the returned row indices make
/// the square restriction invertible.
pub fn pivot_rows<T: Field>(vectors: &[SparseVec<T>], nrows: usize) -> Vec<usize> {
    let dense: Vec<Vec<T>> = vectors
        .iter()
        .map(|v| {
            let mut row = vec![T::zero(); nrows];
            for (i, x) in v {
                row[*i] = x.clone();
            }
            row
        })
        .collect();
    rref(dense, nrows).pivots
}

/// Matrix `C` with `op * B = B * C` where the columns of `B` are `basis`.
///
/// Fails if the span of `basis` is not invariant under `op`.
pub fn restrict_to_subspace<T: Field>(
    op: &SparseMatrix<T>,
    basis: &[SparseVec<T>],
) -> Result<SparseMatrix<T>> {
    let m = basis.len();
    let rows = pivot_rows(basis, op.cols());
    if rows.len() != m {
        return Err(Error::Singular("subspace basis is linearly dependent".into()));
    }
    let square: Vec<Vec<T>> = rows
        .iter()
        .map(|&r| basis.iter().map(|v| v.get(&r).cloned().unwrap_or_else(T::zero)).collect())
        .collect();
    let inv = inverse(&square)?;
    let images: Vec<SparseVec<T>> = basis.iter().map(|v| op.apply(v)).collect();
    let mut cols = Vec::with_capacity(m);
    for img in &images {
        let rhs: Vec<T> = rows
            .iter()
            .map(|r| img.get(r).cloned().unwrap_or_else(T::zero))
            .collect();
        let mut coeffs = BTreeMap::new();
        for (i, inv_row) in inv.iter().enumerate() {
            let mut s = T::zero();
            for (a, b) in inv_row.iter().zip(&rhs) {
                if !a.is_zero() && !b.is_zero() {
                    s = s.add_ref(&a.mul_ref(b));
                }
            }
            if !s.is_zero() {
                coeffs.insert(i, s);
            }
        }
        let mut check = img.clone();
        for (i, c) in &coeffs {
            for (r, x) in &basis[*i] {
                accumulate(&mut check, *r, &(-x.mul_ref(c)));
            }
        }
        if !check.is_empty() {
            return Err(Error::NotInvariant(format!(
                "image leaves the span at coordinate {}",
                check.keys().next().unwrap()
            )));
        }
        cols.push(coeffs);
    }
    Ok(SparseMatrix::from_columns(m, cols))
}

/// Echelon basis of a growing subspace, used for incremental independence tests.
#[derive(Clone, Debug)]
pub struct EchelonBasis<T> {
    rows: BTreeMap<usize, SparseVec<T>>,
}

impl<T: Field> Default for EchelonBasis<T> {
    fn default() -> Self {
        Self {
            rows: BTreeMap::new(),
        }
    }
}

impl<T: Field> EchelonBasis<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after elimination against the stored rows.
    pub fn reduce(&self, v: &SparseVec<T>) -> SparseVec<T> {
        let mut v = v.clone();
        let mut cursor = 0usize;
        while let Some((&k, x)) = v.range(cursor..).next() {
            if let Some(row) = self.rows.get(&k) {
                let f = x.clone();
                for (r, y) in row {
                    accumulate(&mut v, *r, &(-f.mul_ref(y)));
                }
            }
            cursor = k + 1;
        }
        v
    }

    /// Adds `v` if it is independent; returns whether it was added.
    pub fn insert(&mut self, v: &SparseVec<T>) -> bool {
        let r = self.reduce(v);
        let Some((&p, lead)) = r.iter().next() else {
            return false;
        };
        let inv = lead.inverse().expect("nonzero lead");
        let row: SparseVec<T> = r.iter().map(|(i, x)| (*i, x.mul_ref(&inv))).collect();
        self.rows.insert(p, row);
        true
    }

    pub fn contains(&self, v: &SparseVec<T>) -> bool {
        self.reduce(v).is_empty()
    }
}
