use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::basis::{MatrixMonomial, MonomialBasis};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::SparseVec;
use crate::qarith::ExactScalar;

/// Monomial X^m of quantum matrix space, indexed by its exponent matrix.
pub type QMatMonomial = MatrixMonomial;

/// Product X_{i1 j1} ... X_{id jd} of generators, 0-based (row, column) letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QWord(pub Vec<(usize, usize)>);

impl QWord {
    pub fn letters(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Finite combination Σ c_m X^m with no zero coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct QPolynomial {
    k: usize,
    n: usize,
    terms: BTreeMap<QMatMonomial, ExactScalar>,
}

impl QPolynomial {
    pub fn zero(k: usize, n: usize) -> Self {
        Self {
            k,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(m: QMatMonomial, c: ExactScalar) -> Self {
        let mut p = Self::zero(m.rows(), m.cols());
        p.add_term(m, &c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (QMatMonomial, ExactScalar)>>(k: usize, n: usize, terms: I) -> Self {
        let mut p = Self::zero(k, n);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<QMatMonomial, ExactScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &QMatMonomial) -> ExactScalar {
        self.terms.get(m).cloned().unwrap_or_else(ExactScalar::zero)
    }

    /// Adds c X^m.
    pub fn add_term(&mut self, m: QMatMonomial, c: &ExactScalar) {
        assert_eq!((m.rows(), m.cols()), (self.k, self.n), "monomial shape mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                let s = x.add_ref(c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut p = self.clone();
        for (m, c) in &rhs.terms {
            p.add_term(m.clone(), c);
        }
        p
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&-ExactScalar::one()))
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        Self::from_terms(
            self.k,
            self.n,
            self.terms.iter().map(|(m, c)| (m.clone(), c.mul_ref(s))),
        )
    }

    /// Degrees of the terms, if all equal.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(QMatMonomial::degree);
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    /// Applies a monomial-level linear action.
    pub fn apply<F>(&self, action: F) -> Self
    where
        F: Fn(&QMatMonomial) -> Vec<(QMatMonomial, ExactScalar)>,
    {
        let mut p = Self::zero(self.k, self.n);
        for (m, c) in &self.terms {
            for (m2, c2) in action(m) {
                p.add_term(m2, &c.mul_ref(&c2));
            }
        }
        p
    }

    /// Coordinates in `basis`.
    pub fn to_vector(&self, basis: &MonomialBasis) -> Result<SparseVec<ExactScalar>> {
        self.terms
            .iter()
            .map(|(m, c)| {
                basis
                    .index_of(m)
                    .map(|i| (i, c.clone()))
                    .ok_or_else(|| Error::OutsideBasis {
                        monomial: m.to_string(),
                    })
            })
            .collect()
    }

    pub fn from_vector(basis: &Arc<MonomialBasis>, v: &SparseVec<ExactScalar>) -> Self {
        Self::from_terms(
            basis.k(),
            basis.n(),
            v.iter().map(|(i, c)| (basis.element(*i).clone(), c.clone())),
        )
    }
}

impl fmt::Display for QPolynomial {
    /// `coef * X[i,j]^e ...` terms in normal order, joined by ` + `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("({c}) * {m}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
