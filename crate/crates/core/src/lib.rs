//! Exact and numerical verification of the quantum Weyl group description of
//! Casimir connection monodromy for gl_n, via quantum matrix space.
//!
//! Modules, bottom up:
//! - [`qarith`]: exact scalars in fractional powers of q and q-combinatorics.
//! - [`linalg`], [`basis`], [`operator`]: exact sparse linear algebra on monomial bases.
//! - [`glrep`]: classical gl_k × gl_n action on polynomials in k×n matrix entries.
//! - [`qmatspace`]: quantum matrix space, straightening and the quantum dual-pair actions.
//! - [`braidops`]: R-matrix and quantum Weyl group braid operators.
//! - [`monodromy`]: Casimir and KZ connections, parallel transport, spectral comparison.
//! - [`report`]: serializable check records.

pub mod basis;
pub mod braidops;
pub mod error;
pub mod field;
pub mod glrep;
pub mod linalg;
pub mod monodromy;
pub mod operator;
pub mod qarith;
pub mod qmatspace;
pub mod report;

pub use basis::{MatrixMonomial, MonomialBasis};
pub use error::{Error, Result};
pub use field::Field;
pub use operator::SparseOperator;
pub use qarith::ExactScalar;
