use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::field::Field;

/// Sparse column vector keyed by row index.
pub type SparseVec<T> = BTreeMap<usize, T>;

/// Column-major sparse matrix with no stored zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<T> {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, T)>>,
}

impl<T: Field> SparseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal((0..n).map(|_| T::one()).collect())
    }

    pub fn diagonal(entries: Vec<T>) -> Self {
        let n = entries.len();
        let columns = entries
            .into_iter()
            .enumerate()
            .map(|(i, x)| if x.is_zero() { Vec::new() } else { vec![(i, x)] })
            .collect();
        Self {
            rows: n,
            cols: n,
            columns,
        }
    }

    /// Sums duplicate entries and drops zeros.
    pub fn from_triplets<I: IntoIterator<Item = (usize, usize, T)>>(
        rows: usize,
        cols: usize,
        triplets: I,
    ) -> Self {
        let mut acc: Vec<SparseVec<T>> = vec![BTreeMap::new(); cols];
        for (r, c, x) in triplets {
            assert!(r < rows && c < cols, "triplet ({r},{c}) outside {rows}x{cols}");
            accumulate(&mut acc[c], r, &x);
        }
        Self::from_columns(rows, acc)
    }

    pub fn from_columns(rows: usize, columns: Vec<SparseVec<T>>) -> Self {
        let cols = columns.len();
        let columns = columns
            .into_iter()
            .map(|c| c.into_iter().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        Self {
            rows,
            cols,
            columns,
        }
    }

    pub fn from_dense(rows: &[Vec<T>], ncols: usize) -> Self {
        let nrows = rows.len();
        Self::from_triplets(
            nrows,
            ncols,
            rows.iter()
                .enumerate()
                .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, x)| (r, c, x.clone()))),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn column(&self, c: usize) -> &[(usize, T)] {
        &self.columns[c]
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&T> {
        let col = &self.columns[c];
        col.binary_search_by_key(&r, |e| e.0).ok().map(|i| &col[i].1)
    }

    /// Entry or zero.
    pub fn entry(&self, r: usize, c: usize) -> T {
        self.get(r, c).cloned().unwrap_or_else(T::zero)
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, x)| (*r, c, x)))
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// Product `self * rhs`.
    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matmul dimension mismatch");
        let columns = rhs
            .columns
            .iter()
            .map(|col| {
                let mut acc = BTreeMap::new();
                for (k, b) in col {
                    for (r, a) in &self.columns[*k] {
                        accumulate(&mut acc, *r, &a.mul_ref(b));
                    }
                }
                acc.into_iter().collect()
            })
            .collect();
        Self {
            rows: self.rows,
            cols: rhs.cols,
            columns,
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.combine(rhs, false)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.combine(rhs, true)
    }

    fn combine(&self, rhs: &Self, negate: bool) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        let columns = self
            .columns
            .iter()
            .zip(&rhs.columns)
            .map(|(a, b)| {
                let mut acc: SparseVec<T> = a.iter().cloned().collect();
                for (r, x) in b {
                    let x = if negate { -x.clone() } else { x.clone() };
                    accumulate(&mut acc, *r, &x);
                }
                acc.into_iter().collect()
            })
            .collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            columns,
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        if s.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        self.map(|x| x.mul_ref(s))
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    /// Entrywise map; zeros produced by `f` are dropped.
    pub fn map<U: Field, F: Fn(&T) -> U>(&self, f: F) -> SparseMatrix<U> {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            columns: self
                .columns
                .iter()
                .map(|col| {
                    col.iter()
                        .map(|(r, x)| (*r, f(x)))
                        .filter(|(_, x)| !x.is_zero())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_triplets(
            self.cols,
            self.rows,
            self.triplets().map(|(r, c, x)| (c, r, x.clone())),
        )
    }

    /// Diagonal entries if the matrix is square and diagonal.
    pub fn as_diagonal(&self) -> Option<Vec<T>> {
        if !self.is_square() {
            return None;
        }
        let mut d = vec![T::zero(); self.rows];
        for (r, c, x) in self.triplets() {
            if r != c {
                return None;
            }
            d[r] = x.clone();
        }
        Some(d)
    }

    /// `self * v` for a sparse vector.
    pub fn apply(&self, v: &SparseVec<T>) -> SparseVec<T> {
        let mut acc = BTreeMap::new();
        for (k, b) in v {
            for (r, a) in &self.columns[*k] {
                accumulate(&mut acc, *r, &a.mul_ref(b));
            }
        }
        acc
    }

    /// Rows and columns selected by index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut pos = vec![usize::MAX; self.rows];
        for (i, r) in rows.iter().enumerate() {
            pos[*r] = i;
        }
        let columns = cols
            .iter()
            .map(|c| {
                let mut v: Vec<(usize, T)> = self.columns[*c]
                    .iter()
                    .filter(|(r, _)| pos[*r] != usize::MAX)
                    .map(|(r, x)| (pos[*r], x.clone()))
                    .collect();
                v.sort_by_key(|e| e.0);
                v
            })
            .collect();
        Self {
            rows: rows.len(),
            cols: cols.len(),
            columns,
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let mut d = vec![vec![T::zero(); self.cols]; self.rows];
        for (r, c, x) in self.triplets() {
            d[r][c] = x.clone();
        }
        d
    }

    /// Commutator `self * rhs - rhs * self`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.matmul(rhs).sub(&rhs.matmul(self))
    }

    /// Coordinate-list text: one `row col scalar` line per stored entry, row-major.
    pub fn coordinate_list(&self) -> String {
        let mut entries: Vec<(usize, usize, &T)> = self.triplets().collect();
        entries.sort_by_key(|e| (e.0, e.1));
        let mut out = String::new();
        for (r, c, x) in entries {
            let _ = writeln!(out, "{r} {c} {x}");
        }
        out
    }

    /// First nonzero entry in row-major order, if any.
    pub fn first_nonzero(&self) -> Option<(usize, usize, T)> {
        self.triplets()
            .map(|(r, c, x)| (r, c, x.clone()))
            .min_by_key(|e| (e.0, e.1))
    }
}

/// Adds `x` into `acc[r]`, removing the entry if it cancels.
pub fn accumulate<T: Field>(acc: &mut SparseVec<T>, r: usize, x: &T) {
    if x.is_zero() {
        return;
    }
    match acc.get_mut(&r) {
        Some(y) => {
            let s = y.add_ref(x);
            if s.is_zero() {
                acc.remove(&r);
            } else {
                *y = s;
            }
        }
        None => {
            acc.insert(r, x.clone());
        }
    }
}
