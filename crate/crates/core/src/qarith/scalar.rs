use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::laurent::{LaurentPoly, QExp};
use crate::error::{Error, Result};
use crate::field::Field;

/// Magnitude below which an evaluated denominator counts as a pole.
pub const POLE_THRESHOLD: f64 = 1e-300;

/// Rational function in fractional powers of q with exact rational coefficients.
///
/// Stored as numerator over denominator, both [`LaurentPoly`]. After every
/// operation the pair is reduced: a monomial denominator is absorbed, and
/// otherwise common factors are cancelled and the denominator is made monic
/// with lowest exponent zero. The representation is therefore canonical.
#[derive(Clone, Debug)]
pub struct ExactScalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// How q^e was evaluated numerically.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Branch {
    /// q^e = exp(e * Log q) with the principal logarithm.
    Principal,
    /// q = exp(hbar) and q^e = exp(e * hbar), continuous in hbar.
    Hbar { re: f64, im: f64 },
}

/// Numeric value together with the branch convention used.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    pub re: f64,
    pub im: f64,
    pub branch: Branch,
}

impl Evaluation {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

impl ExactScalar {
    fn reduced(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "division by zero");
        if num.is_zero() {
            return Self::zero();
        }
        if let Some((e, c)) = den.as_monomial() {
            return Self {
                num: num.shift(-e).scale(&c.recip()),
                den: LaurentPoly::one(),
            };
        }
        if let Some(q) = num.exact_div(&den) {
            return Self {
                num: q,
                den: LaurentPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.len() > 1 {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        } else {
            (num, den)
        };
        let emin = den.min_exponent().expect("nonzero denominator");
        let lead = den.leading_coefficient().expect("nonzero denominator").recip();
        Self {
            num: num.shift(-emin).scale(&lead),
            den: den.shift(-emin).scale(&lead),
        }
    }

    /// Laurent polynomial viewed as a scalar.
    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    /// Quotient of two Laurent polynomials. Panics if `den` is zero.
    pub fn from_fraction(num: LaurentPoly, den: LaurentPoly) -> Self {
        Self::reduced(num, den)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    /// c * q^e.
    pub fn monomial(c: BigRational, e: QExp) -> Self {
        Self::from_poly(LaurentPoly::monomial(c, e))
    }

    /// q^e for a rational exponent.
    pub fn q_pow(e: QExp) -> Self {
        Self::monomial(BigRational::one(), e)
    }

    /// q^n for an integer exponent.
    pub fn q_int(n: i64) -> Self {
        Self::q_pow(QExp::from_integer(n))
    }

    /// q^(n/d).
    pub fn q_frac(n: i64, d: i64) -> Self {
        Self::q_pow(QExp::new(n, d))
    }

    /// ±q^e with the sign given by the parity of `parity`.
    pub fn signed_q_pow(parity: i64, e: QExp) -> Self {
        let c = if parity.is_odd() { -BigRational::one() } else { BigRational::one() };
        Self::monomial(c, e)
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    /// True when the value is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Integer power, negative exponents allowed for nonzero values.
    pub fn powi(&self, n: i64) -> Self {
        let base = if n < 0 {
            self.inverse().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut acc = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul_ref(&base);
        }
        acc
    }

    /// Replaces q by q^{-1}.
    pub fn bar(&self) -> Self {
        Self::reduced(self.num.invert_variable(), self.den.invert_variable())
    }

    /// Least common denominator of every exponent in the representation.
    pub fn exponent_denominator(&self) -> i64 {
        self.num
            .exponent_denominator()
            .lcm(&self.den.exponent_denominator())
    }

    /// Exact value at q = 1, `None` at a pole.
    pub fn eval_at_one(&self) -> Option<BigRational> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval_at_one() / d)
        }
    }

    /// Numeric value at `q_value` using the principal branch of q^e.
    pub fn evaluate(&self, q_value: Complex64) -> Result<Evaluation> {
        if q_value.norm() == 0.0 {
            return Err(Error::Contract("evaluation at q = 0".into()));
        }
        self.evaluate_with(q_value.ln(), Branch::Principal, q_value)
    }

    /// Numeric value at q = exp(hbar), with q^e = exp(e * hbar).
    pub fn evaluate_hbar(&self, hbar: Complex64) -> Result<Evaluation> {
        self.evaluate_with(
            hbar,
            Branch::Hbar {
                re: hbar.re,
                im: hbar.im,
            },
            hbar.exp(),
        )
    }

    fn evaluate_with(&self, log_q: Complex64, branch: Branch, q: Complex64) -> Result<Evaluation> {
        let den = self.den.evaluate_log(log_q);
        if den.norm() < POLE_THRESHOLD {
            return Err(Error::Pole {
                magnitude: den.norm(),
                q: format!("{q}"),
            });
        }
        let v = self.num.evaluate_log(log_q) / den;
        Ok(Evaluation {
            re: v.re,
            im: v.im,
            branch,
        })
    }

    /// Canonical text with every exponent written over the denominator `d`.
    ///
    /// Fails when some exponent does not have a denominator dividing `d`.
    pub fn canonical_text(&self, d: i64) -> Result<String> {
        let own = self.exponent_denominator();
        if d % own != 0 {
            return Err(Error::Contract(format!(
                "exponent denominator {own} does not divide {d}"
            )));
        }
        Ok(if self.den.is_one() {
            self.num.canonical_text(d)
        } else {
            format!(
                "({}) / ({})",
                self.num.canonical_text(d),
                self.den.canonical_text(d)
            )
        })
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.exponent_denominator();
        f.write_str(&self.canonical_text(d).expect("own denominator"))
    }
}

impl PartialEq for ExactScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            self.num == other.num
        } else {
            self.num.mul(&other.den) == other.num.mul(&self.den)
        }
    }
}

impl Zero for ExactScalar {
    fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for ExactScalar {
    fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }
}

impl<'a> Add<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        if rhs.num.is_zero() {
            return self.clone();
        }
        if self.num.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return ExactScalar::from_poly(self.num.add(&rhs.num));
            }
            return ExactScalar::reduced(self.num.add(&rhs.num), self.den.clone());
        }
        ExactScalar::reduced(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl<'a> Sub<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        if self.num.is_zero() || rhs.num.is_zero() {
            return ExactScalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return ExactScalar::from_poly(self.num.mul(&rhs.num));
        }
        ExactScalar::reduced(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl<'a> Div<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn div(self, rhs: &ExactScalar) -> ExactScalar {
        assert!(!rhs.num.is_zero(), "division by zero");
        ExactScalar::reduced(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

macro_rules! by_value {
    ($tr:ident, $m:ident) => {
        impl $tr for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, rhs: ExactScalar) -> ExactScalar {
                (&self).$m(&rhs)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);
by_value!(Div, div);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

impl Field for ExactScalar {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inverse(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Self::reduced(self.den.clone(), self.num.clone()))
        }
    }
    fn from_i64(n: i64) -> Self {
        Self::from_int(n)
    }
    fn weight(&self) -> usize {
        self.num.len() + self.den.len()
    }
}

impl From<BigRational> for ExactScalar {
    fn from(c: BigRational) -> Self {
        Self::from_rational(c)
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}
