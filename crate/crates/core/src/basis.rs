//! Monomials in the entries of a k×n matrix and ordered bases built from them.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default cap on the number of basis elements.
pub const DEFAULT_BASIS_CAP: usize = 1_000_000;

/// Exponent matrix of a monomial in k×n matrix entries, stored row-major.
///
/// Indices are 0-based. Ordering is lexicographic on the flattened matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatrixMonomial {
    rows: usize,
    cols: usize,
    exps: Vec<u32>,
}

impl MatrixMonomial {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            exps: vec![0; rows * cols],
        }
    }

    /// Builds from nested rows; all rows must have equal length.
    pub fn from_rows(rows: &[Vec<u32>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|x| x.len() == c), "ragged exponent matrix");
        Self {
            rows: r,
            cols: c,
            exps: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.exps[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.exps[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Column sums (degrees in each column).
    pub fn column_degrees(&self) -> Vec<u32> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j)).sum())
            .collect()
    }

    /// Row sums.
    pub fn row_sums(&self) -> Vec<u32> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).sum())
            .collect()
    }

    /// Moves one unit from entry `from` to entry `to`; `None` if `from` is empty.
    pub fn moved(&self, from: (usize, usize), to: (usize, usize)) -> Option<Self> {
        if self.get(from.0, from.1) == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[from.0 * self.cols + from.1] -= 1;
        m.exps[to.0 * self.cols + to.1] += 1;
        Some(m)
    }

    /// Adds one unit at (i, j).
    pub fn incremented(&self, i: usize, j: usize) -> Self {
        let mut m = self.clone();
        m.exps[i * self.cols + j] += 1;
        m
    }

    /// The k×2 monomial formed by columns j and j+1.
    pub fn column_pair(&self, j: usize) -> Self {
        let mut m = Self::zero(self.rows, 2);
        for i in 0..self.rows {
            m.set(i, 0, self.get(i, j));
            m.set(i, 1, self.get(i, j + 1));
        }
        m
    }

    /// Replaces columns j and j+1 by the two columns of `pair`.
    pub fn with_column_pair(&self, j: usize, pair: &Self) -> Self {
        let mut m = self.clone();
        for i in 0..self.rows {
            m.set(i, j, pair.get(i, 0));
            m.set(i, j + 1, pair.get(i, 1));
        }
        m
    }

    /// Exchanges columns j and j+1.
    pub fn swap_columns(&self, j: usize) -> Self {
        let mut m = self.clone();
        for i in 0..self.rows {
            m.set(i, j, self.get(i, j + 1));
            m.set(i, j + 1, self.get(i, j));
        }
        m
    }

    /// Letters (i, j) in normal order: column-major, each repeated by its exponent.
    pub fn normal_word(&self) -> Vec<(usize, usize)> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        for j in 0..self.cols {
            for i in 0..self.rows {
                for _ in 0..self.get(i, j) {
                    w.push((i, j));
                }
            }
        }
        w
    }
}

impl fmt::Display for MatrixMonomial {
    /// Normal-ordered product with 1-based indices, `1` for the empty monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for j in 0..self.cols {
            for i in 0..self.rows {
                match self.get(i, j) {
                    0 => {}
                    1 => parts.push(format!("X[{},{}]", i + 1, j + 1)),
                    e => parts.push(format!("X[{},{}]^{}", i + 1, j + 1, e)),
                }
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// All compositions of `total` into `parts` nonnegative parts, lexicographically decreasing.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn rec(total: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=total).rev() {
            prefix.push(first);
            rec(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, parts, &mut Vec::new(), &mut out);
    out
}

/// Binomial coefficient as u128.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Ordered basis of monomials: a union of column-degree blocks.
///
/// A block is the set of all k×n monomials whose column sums equal a fixed
/// vector μ. Elements are sorted lexicographically on the flattened matrix.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    k: usize,
    n: usize,
    blocks: BTreeSet<Vec<u32>>,
    elements: Vec<MatrixMonomial>,
    index: HashMap<MatrixMonomial, usize>,
}

impl PartialEq for MonomialBasis {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.n == other.n && self.blocks == other.blocks
    }
}

impl Eq for MonomialBasis {}

impl MonomialBasis {
    /// Union of the given column-degree blocks, subject to `cap` elements.
    pub fn from_blocks_with_cap<I: IntoIterator<Item = Vec<u32>>>(
        k: usize,
        n: usize,
        blocks: I,
        cap: usize,
    ) -> Result<Self> {
        let blocks: BTreeSet<Vec<u32>> = blocks.into_iter().collect();
        let mut size: u128 = 0;
        for mu in &blocks {
            if mu.len() != n {
                return Err(Error::Dimension(format!(
                    "column-degree vector of length {} for n = {n}",
                    mu.len()
                )));
            }
            size += mu
                .iter()
                .map(|&d| binomial(k as u64 + d as u64 - 1, d as u64))
                .product::<u128>();
        }
        if size > cap as u128 {
            return Err(Error::Capacity {
                size: size.min(usize::MAX as u128) as usize,
                cap,
            });
        }
        let mut elements = Vec::with_capacity(size as usize);
        for mu in &blocks {
            let columns: Vec<Vec<Vec<u32>>> = mu.iter().map(|&d| compositions(d, k)).collect();
            if k == 0 {
                continue;
            }
            let mut idx = vec![0usize; n];
            'odometer: loop {
                let mut m = MatrixMonomial::zero(k, n);
                for j in 0..n {
                    for i in 0..k {
                        m.set(i, j, columns[j][idx[j]][i]);
                    }
                }
                elements.push(m);
                let mut j = n;
                loop {
                    if j == 0 {
                        break 'odometer;
                    }
                    j -= 1;
                    idx[j] += 1;
                    if idx[j] < columns[j].len() {
                        continue 'odometer;
                    }
                    idx[j] = 0;
                }
            }
        }
        elements.sort();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Ok(Self {
            k,
            n,
            blocks,
            elements,
            index,
        })
    }

    pub fn from_blocks<I: IntoIterator<Item = Vec<u32>>>(k: usize, n: usize, blocks: I) -> Result<Self> {
        Self::from_blocks_with_cap(k, n, blocks, DEFAULT_BASIS_CAP)
    }

    /// Single block with column degrees `mu`.
    pub fn block(k: usize, n: usize, mu: &[u32]) -> Result<Self> {
        Self::from_blocks(k, n, [mu.to_vec()])
    }

    /// All monomials of total degree `d`.
    pub fn graded(k: usize, n: usize, d: u32) -> Result<Self> {
        Self::from_blocks(k, n, compositions(d, n))
    }

    /// Blocks reachable from `mu` by moving degree between columns j and j+1.
    pub fn transposition_closure(k: usize, n: usize, mu: &[u32], j: usize) -> Result<Self> {
        let s = mu[j] + mu[j + 1];
        Self::from_blocks(
            k,
            n,
            (0..=s).map(|a| {
                let mut v = mu.to_vec();
                v[j] = a;
                v[j + 1] = s - a;
                v
            }),
        )
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[MatrixMonomial] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &MatrixMonomial {
        &self.elements[i]
    }

    pub fn index_of(&self, m: &MatrixMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn blocks(&self) -> &BTreeSet<Vec<u32>> {
        &self.blocks
    }

    /// The unique block, if the basis consists of exactly one.
    pub fn single_block(&self) -> Option<&Vec<u32>> {
        if self.blocks.len() == 1 {
            self.blocks.iter().next()
        } else {
            None
        }
    }

    /// True when the basis contains every block of its total degree.
    pub fn is_graded(&self) -> bool {
        let Some(first) = self.blocks.iter().next() else {
            return false;
        };
        let d: u32 = first.iter().sum();
        self.blocks.iter().all(|b| b.iter().sum::<u32>() == d)
            && self.blocks.len() as u128 == binomial((d as usize + self.n - 1) as u64, d as u64)
    }

    /// Codomain for an operator moving one unit of column degree from `minus` to `plus`.
    pub fn shifted(self: &Arc<Self>, plus: usize, minus: usize) -> Result<Arc<Self>> {
        if plus == minus || self.is_graded() {
            return Ok(Arc::clone(self));
        }
        let blocks: Vec<Vec<u32>> = self
            .blocks
            .iter()
            .filter(|b| b[minus] > 0)
            .map(|b| {
                let mut v = b.clone();
                v[minus] -= 1;
                v[plus] += 1;
                v
            })
            .collect();
        Ok(Arc::new(Self::from_blocks(self.k, self.n, blocks)?))
    }

    /// Basis with columns j and j+1 of every block exchanged.
    pub fn column_swapped(self: &Arc<Self>, j: usize) -> Result<Arc<Self>> {
        let blocks: BTreeSet<Vec<u32>> = self
            .blocks
            .iter()
            .map(|b| {
                let mut v = b.clone();
                v.swap(j, j + 1);
                v
            })
            .collect();
        if blocks == self.blocks {
            return Ok(Arc::clone(self));
        }
        Ok(Arc::new(Self::from_blocks(self.k, self.n, blocks)?))
    }

    /// Positions of the monomials with the given column degrees and row sums.
    pub fn weight_space(&self, col_degrees: &[u32], row_sums: &[u32]) -> Vec<usize> {
        self.elements
            .iter()
            .enumerate()
            .filter(|(_, m)| m.column_degrees() == col_degrees && m.row_sums() == row_sums)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Enumerates the block of k×n monomials with column degrees `mu`.
pub fn enumerate_basis(k: usize, n: usize, mu: &[u32]) -> Result<MonomialBasis> {
    MonomialBasis::block(k, n, mu)
}
