use std::collections::HashMap;

use num_traits::{One, Zero};

use super::poly::{QPolynomial, QWord};
use crate::basis::MatrixMonomial;
use crate::field::Field;
use crate::qarith::{q_minus_q_inverse, ExactScalar};

/// Which adjacent inversion to rewrite first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Position of a letter in the normal order: column-major, then by row.
fn key(letter: (usize, usize)) -> (usize, usize) {
    (letter.1, letter.0)
}

fn find_inversion(w: &[(usize, usize)], strategy: Strategy) -> Option<usize> {
    let mut it = (0..w.len().saturating_sub(1)).filter(|&p| key(w[p]) > key(w[p + 1]));
    match strategy {
        Strategy::Leftmost => it.next(),
        Strategy::Rightmost => it.next_back(),
    }
}

/// Rewrites the adjacent pair X_kl X_ij at position `p`, where X_ij precedes X_kl
/// in the normal order. Returns the replacement words with their coefficients.
///
/// - same column (l = j, k > i): X_kj X_ij = q X_ij X_kj
/// - same row (k = i, l > j):    X_il X_ij = q X_ij X_il
/// - l > j, k < i:               X_kl X_ij = X_ij X_kl
/// - l > j, k > i:               X_kl X_ij = X_ij X_kl + (q - q^{-1}) X_kj X_il
fn rewrite(w: &[(usize, usize)], p: usize) -> Vec<(Vec<(usize, usize)>, ExactScalar)> {
    let (k, l) = w[p];
    let (i, j) = w[p + 1];
    let mut swapped = w.to_vec();
    swapped[p] = (i, j);
    swapped[p + 1] = (k, l);
    if l == j || k == i {
        return vec![(swapped, ExactScalar::q_int(1))];
    }
    if k < i {
        return vec![(swapped, ExactScalar::one())];
    }
    let mut cross = w.to_vec();
    cross[p] = (k, j);
    cross[p + 1] = (i, l);
    vec![(swapped, ExactScalar::one()), (cross, q_minus_q_inverse())]
}

/// Expresses a word in the generators X_ij in the ordered monomial basis.
///
/// Termination: every rewrite strictly decreases the pair (number of
/// inversions between letters of different columns, total number of
/// inversions) in lexicographic order. Commuting and same-row/column swaps
/// remove one inversion; the cross term X_kj X_il keeps the columns of the
/// pair in order and lowers the column-inversion count of the whole word.
pub fn straighten(k: usize, n: usize, word: &QWord, strategy: Strategy) -> QPolynomial {
    let mut result = QPolynomial::zero(k, n);
    let mut pending: HashMap<Vec<(usize, usize)>, ExactScalar> = HashMap::new();
    pending.insert(word.0.clone(), ExactScalar::one());
    while !pending.is_empty() {
        let mut next: HashMap<Vec<(usize, usize)>, ExactScalar> = HashMap::new();
        for (w, c) in pending.drain() {
            match find_inversion(&w, strategy) {
                None => {
                    let mut m = MatrixMonomial::zero(k, n);
                    for &(i, j) in &w {
                        m = m.incremented(i, j);
                    }
                    result.add_term(m, &c);
                }
                Some(p) => {
                    for (w2, c2) in rewrite(&w, p) {
                        let x = c.mul_ref(&c2);
                        let e = next.entry(w2).or_insert_with(ExactScalar::zero);
                        *e = e.add_ref(&x);
                    }
                }
            }
        }
        next.retain(|_, c| !c.is_zero());
        pending = next;
    }
    result
}

impl QPolynomial {
    /// Product in quantum matrix space, computed by straightening concatenated words.
    pub fn mul(&self, rhs: &Self) -> Self {
        let (k, n) = (self.k(), self.n());
        let mut out = QPolynomial::zero(k, n);
        for (a, ca) in self.terms() {
            for (b, cb) in rhs.terms() {
                let mut w = a.normal_word();
                w.extend(b.normal_word());
                let s = straighten(k, n, &QWord(w), Strategy::Leftmost);
                out = out.add(&s.scale(&ca.mul_ref(cb)));
            }
        }
        out
    }
}
