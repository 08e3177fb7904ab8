use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::{LaurentPoly, QExp};
use super::scalar::ExactScalar;
use crate::field::Field;

/// Symmetric q-integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}, with [-n] = -[n].
pub fn qnumber(n: i64) -> ExactScalar {
    let sign = if n < 0 { -BigRational::one() } else { BigRational::one() };
    let m = n.abs();
    ExactScalar::from_poly(LaurentPoly::from_terms(
        (0..m).map(|t| (QExp::from_integer(m - 1 - 2 * t), sign.clone())),
    ))
}

/// q-factorial [n]! = [1][2]...[n] for n ≥ 0.
pub fn qfactorial(n: u32) -> ExactScalar {
    (1..=n as i64).fold(ExactScalar::one(), |acc, i| acc.mul_ref(&qnumber(i)))
}

/// q-binomial [n]!/([k]![n-k]!), zero outside 0 ≤ k ≤ n.
pub fn qbinomial(n: i64, k: i64) -> ExactScalar {
    if n < 0 || k < 0 || k > n {
        return ExactScalar::zero();
    }
    // Product formula keeps every intermediate a Laurent polynomial.
    let mut acc = ExactScalar::one();
    for i in 0..k {
        acc = acc.mul_ref(&qnumber(n - i));
    }
    &acc / &qfactorial(k as u32)
}

/// An integer with its q-analogue.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QInteger(pub i64);

impl QInteger {
    pub fn value(self) -> i64 {
        self.0
    }

    /// The q-number [n].
    pub fn expansion(self) -> ExactScalar {
        qnumber(self.0)
    }
}

/// q - q^{-1}.
pub fn q_minus_q_inverse() -> ExactScalar {
    ExactScalar::q_int(1).sub_ref(&ExactScalar::q_int(-1))
}
