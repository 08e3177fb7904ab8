use std::fmt::Write as _;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::transport::IntegratorStats;
use crate::error::{Error, Result};

/// Eigenvalues of a complex square matrix from its Schur form.
pub fn eigenvalues(m: &DMatrix<Complex64>) -> Result<Vec<Complex64>> {
    if !m.is_square() {
        return Err(Error::Dimension(format!("{}x{} matrix has no spectrum", m.nrows(), m.ncols())));
    }
    if m.nrows() == 0 {
        return Ok(Vec::new());
    }
    let schur = nalgebra::linalg::Schur::try_new(m.clone(), 1e-15, 100_000)
        .ok_or_else(|| Error::Singular("Schur iteration did not converge".into()))?;
    schur
        .eigenvalues()
        .map(|v| v.iter().copied().collect())
        .ok_or_else(|| Error::Singular("Schur form is not triangular".into()))
}

/// Bijection between two eigenvalue multisets with its largest distance.
#[derive(Clone, Debug, PartialEq)]
pub struct Matching {
    /// `pairs[i]` is the index in the second list matched to entry i of the first.
    pub pairs: Vec<usize>,
    pub deviation: f64,
}

fn sort_key(z: &Complex64) -> (f64, f64) {
    (z.arg(), z.norm())
}

/// Greedy matching in order of (argument, modulus), then pairwise swaps while
/// they lower the larger of the two distances involved.
pub fn match_spectra(a: &[Complex64], b: &[Complex64]) -> Result<Matching> {
    if a.len() != b.len() {
        return Err(Error::Dimension(format!("spectra of sizes {} and {}", a.len(), b.len())));
    }
    let mut order: Vec<usize> = (0..a.len()).collect();
    order.sort_by(|&x, &y| sort_key(&a[x]).partial_cmp(&sort_key(&a[y])).unwrap_or(std::cmp::Ordering::Equal));
    let mut used = vec![false; b.len()];
    let mut pairs = vec![0; a.len()];
    for &i in &order {
        let j = (0..b.len())
            .filter(|&j| !used[j])
            .min_by(|&x, &y| (a[i] - b[x]).norm().total_cmp(&(a[i] - b[y]).norm()))
            .expect("equal sizes");
        used[j] = true;
        pairs[i] = j;
    }
    let d = |i: usize, j: usize| (a[i] - b[j]).norm();
    let mut improved = true;
    while improved {
        improved = false;
        for i in 0..a.len() {
            for l in i + 1..a.len() {
                let now = d(i, pairs[i]).max(d(l, pairs[l]));
                let swapped = d(i, pairs[l]).max(d(l, pairs[i]));
                if swapped + 1e-15 < now {
                    pairs.swap(i, l);
                    improved = true;
                }
            }
        }
    }
    let deviation = (0..a.len()).map(|i| d(i, pairs[i])).fold(0.0, f64::max);
    Ok(Matching { pairs, deviation })
}

/// Complex number as a JSON pair.
pub type Pair = [f64; 2];

fn pair(z: Complex64) -> Pair {
    [z.re, z.im]
}

/// Outcome of comparing one monodromy matrix with a target.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct MonodromyReport {
    /// 1-based generator index.
    pub generator: usize,
    pub h: Pair,
    pub matrix: Vec<Vec<Pair>>,
    pub eigenvalues: Vec<Pair>,
    pub target: Vec<Pair>,
    /// Target eigenvalue matched to each entry of `eigenvalues`.
    pub matched: Vec<Pair>,
    pub deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub integrator: IntegratorStats,
}

impl MonodromyReport {
    /// CSV with columns re, im, matched_re, matched_im, deviation.
    pub fn eigenvalue_csv(&self) -> String {
        let mut s = String::from("re,im,matched_re,matched_im,deviation\n");
        for (e, m) in self.eigenvalues.iter().zip(&self.matched) {
            let dev = ((e[0] - m[0]).powi(2) + (e[1] - m[1]).powi(2)).sqrt();
            let _ = writeln!(s, "{:.17e},{:.17e},{:.17e},{:.17e},{:.3e}", e[0], e[1], m[0], m[1], dev);
        }
        s
    }
}

/// Spectral comparison of a monodromy matrix `a` with target eigenvalues.
pub fn spectral_compare_eigenvalues(
    generator: usize,
    h: Complex64,
    a: &DMatrix<Complex64>,
    target: &[Complex64],
    tol: f64,
    integrator: IntegratorStats,
) -> Result<MonodromyReport> {
    let ea = eigenvalues(a)?;
    let m = match_spectra(&ea, target)?;
    Ok(MonodromyReport {
        generator: generator + 1,
        h: pair(h),
        matrix: (0..a.nrows()).map(|r| (0..a.ncols()).map(|c| pair(a[(r, c)])).collect()).collect(),
        eigenvalues: ea.iter().copied().map(pair).collect(),
        target: target.iter().copied().map(pair).collect(),
        matched: m.pairs.iter().map(|&j| pair(target[j])).collect(),
        deviation: m.deviation,
        tolerance: tol,
        passed: m.deviation.is_finite() && m.deviation < tol,
        integrator,
    })
}

/// Spectral comparison of two square matrices.
pub fn spectral_compare(
    a: &DMatrix<Complex64>,
    b: &DMatrix<Complex64>,
    tol: f64,
) -> Result<MonodromyReport> {
    if a.shape() != b.shape() {
        return Err(Error::Dimension(format!("shapes {:?} and {:?}", a.shape(), b.shape())));
    }
    spectral_compare_eigenvalues(0, Complex64::new(0.0, 0.0), a, &eigenvalues(b)?, tol, IntegratorStats::default())
}

/// |tr(w(A)) - tr(w(B))| for a word given as generator indices applied left to right.
pub fn word_trace_gap(a: &[DMatrix<Complex64>], b: &[DMatrix<Complex64>], word: &[usize]) -> f64 {
    let prod = |ms: &[DMatrix<Complex64>]| {
        word.iter()
            .fold(DMatrix::identity(ms[0].nrows(), ms[0].ncols()), |acc, &i| acc * &ms[i])
    };
    (prod(a).trace() - prod(b).trace()).norm()
}
