use std::collections::BTreeMap;

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive, Zero};

/// Exponent of q: an exact rational.
pub type QExp = Ratio<i64>;

/// Finite sum of rational multiples of rational powers of q.
///
/// Terms are kept sorted by exponent with zero coefficients pruned, so the
/// representation is unique.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(QExp, BigRational)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, QExp::zero())
    }

    pub fn monomial(c: BigRational, e: QExp) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(e, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms, merging equal exponents.
    pub fn from_terms<I: IntoIterator<Item = (QExp, BigRational)>>(terms: I) -> Self {
        let mut map: BTreeMap<QExp, BigRational> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert_with(BigRational::zero) += c;
        }
        Self {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(QExp, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_zero() && self.terms[0].1.is_one()
    }

    pub fn as_monomial(&self) -> Option<(QExp, &BigRational)> {
        if self.terms.len() == 1 {
            Some((self.terms[0].0, &self.terms[0].1))
        } else {
            None
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<QExp> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exponent(&self) -> Option<QExp> {
        self.terms.last().map(|t| t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.terms.last().map(|t| &t.1)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.merge(rhs, false)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.merge(rhs, true)
    }

    fn merge(&self, rhs: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &rhs.terms;
        let sign = |c: &BigRational| if negate { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, sign(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(e, c)| (*e, sign(c))));
        Self { terms: out }
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplies by q^e.
    pub fn shift(&self, e: QExp) -> Self {
        Self {
            terms: self.terms.iter().map(|(x, c)| (*x + e, c.clone())).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if let Some((e, c)) = rhs.as_monomial() {
            return self.shift(e).scale(c);
        }
        if let Some((e, c)) = self.as_monomial() {
            return rhs.shift(e).scale(c);
        }
        let mut map: BTreeMap<QExp, BigRational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                *map.entry(*ea + *eb).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        Self {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Replaces q by q^{-1}.
    pub fn invert_variable(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (-*e, c.clone())))
    }

    /// Least common denominator of all exponents.
    pub fn exponent_denominator(&self) -> i64 {
        self.terms.iter().fold(1i64, |acc, (e, _)| acc.lcm(e.denom()))
    }

    /// Value at q = 1.
    pub fn eval_at_one(&self) -> BigRational {
        self.terms
            .iter()
            .fold(BigRational::zero(), |acc, (_, c)| acc + c)
    }

    /// Value at q = exp(log_q), computing q^e as exp(e * log_q).
    pub fn evaluate_log(&self, log_q: Complex64) -> Complex64 {
        self.terms.iter().fold(Complex64::new(0.0, 0.0), |acc, (e, c)| {
            let ef = *e.numer() as f64 / *e.denom() as f64;
            acc + (log_q * ef).exp() * c.to_f64().unwrap_or(f64::NAN)
        })
    }

    /// Dense coefficients in u = q^{1/d}: returns (lowest u-power, coefficients ascending).
    fn to_dense(&self, d: i64) -> (i64, Vec<BigRational>) {
        if self.terms.is_empty() {
            return (0, Vec::new());
        }
        let upow = |e: &QExp| (*e * d).to_integer();
        let lo = upow(&self.terms[0].0);
        let hi = upow(&self.terms[self.terms.len() - 1].0);
        let mut v = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(upow(e) - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    fn from_dense(d: i64, lo: i64, coeffs: &[BigRational]) -> Self {
        Self {
            terms: coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (QExp::new(lo + i as i64, d), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / rhs` when it is again a Laurent polynomial.
    pub fn exact_div(&self, rhs: &Self) -> Option<Self> {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((e, c)) = rhs.as_monomial() {
            return Some(self.shift(-e).scale(&c.recip()));
        }
        let d = self.exponent_denominator().lcm(&rhs.exponent_denominator());
        let (la, a) = self.to_dense(d);
        let (lb, b) = rhs.to_dense(d);
        let (q, r) = dense_divrem(&a, &b);
        if r.iter().all(Zero::is_zero) {
            Some(Self::from_dense(d, la - lb, &q))
        } else {
            None
        }
    }

    /// Monic greatest common divisor with lowest exponent zero.
    pub fn gcd(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.monic_normalized();
        }
        if rhs.is_zero() {
            return self.monic_normalized();
        }
        let d = self.exponent_denominator().lcm(&rhs.exponent_denominator());
        let (_, a) = self.to_dense(d);
        let (_, b) = rhs.to_dense(d);
        let g = dense_gcd(a, b);
        Self::from_dense(d, 0, &g)
    }

    fn monic_normalized(&self) -> Self {
        match (self.min_exponent(), self.leading_coefficient()) {
            (Some(e), Some(c)) => self.shift(-e).scale(&c.recip()),
            _ => Self::zero(),
        }
    }

    /// Text form as a sum of `c * q^(p/D)` terms.
    pub fn canonical_text(&self, d: i64) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(e, c)| format!("{} * q^({}/{})", c, (*e * d).to_integer(), d))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn dense_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r: Vec<BigRational> = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    let lb = b.len();
    if r.len() < lb {
        return (Vec::new(), r);
    }
    let lead_inv = b[lb - 1].recip();
    let mut q = vec![BigRational::zero(); r.len() - lb + 1];
    while r.len() >= lb && !r.is_empty() {
        let shift = r.len() - lb;
        let c = &r[r.len() - 1] * &lead_inv;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &c * bi;
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    (q, r)
}

fn dense_gcd(mut a: Vec<BigRational>, mut b: Vec<BigRational>) -> Vec<BigRational> {
    trim(&mut a);
    trim(&mut b);
    // Strip common powers of u so the result has lowest exponent zero.
    let low = |v: &Vec<BigRational>| v.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let (la, lb) = (low(&a), low(&b));
    a.drain(..la);
    b.drain(..lb);
    while !b.is_empty() {
        let (_, r) = dense_divrem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().cloned() {
        let inv = lead.recip();
        for c in a.iter_mut() {
            *c *= &inv;
        }
    }
    a
}
