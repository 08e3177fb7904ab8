//! Exact scalars in fractional powers of q, q-combinatorics, q-exponentials
//! of nilpotent operators and numeric evaluation.
//!
//! - [`ExactScalar`]: rational function in q^{1/D} over the rationals.
//! - [`qnumber`], [`qfactorial`], [`qbinomial`]: symmetric q-integers.
//! - [`qexp_nilpotent`]: terminating q-exponential series.
//! - [`ExactScalar::evaluate`] / [`ExactScalar::evaluate_hbar`]: complex values.

mod laurent;
mod qexp;
mod qnum;
mod scalar;

pub use laurent::{LaurentPoly, QExp};
pub use qexp::{exp_nilpotent, qexp_matrix, qexp_nilpotent, QExpVariant};
pub use qnum::{q_minus_q_inverse, qbinomial, qfactorial, qnumber, QInteger};
pub use scalar::{Branch, Evaluation, ExactScalar, POLE_THRESHOLD};
