//! Quantum matrix space S_q(k,n): the algebra on X_ij (0-based) subject to
//! the relations, for (i,j) before (k,l) in the column-major normal order,
//!
//! - X_kj X_ij = q X_ij X_kj (same column, k > i)
//! - X_il X_ij = q X_ij X_il (same row, l > j)
//! - X_kl X_ij = X_ij X_kl (k < i, l > j)
//! - X_kl X_ij = X_ij X_kl + (q - q^{-1}) X_kj X_il (k > i, l > j)
//!
//! Ordered monomials X^m form a basis. Both U_q(gl_k) and U_q(gl_n) act on
//! them by explicit formulas; the two actions commute.

mod action;
mod component;
mod pieri;
mod poly;
mod serre;
mod straighten;

pub use action::{
    generator_codomain, q_cartan_power, side_rank, uq_action, uq_apply, uq_endomorphism, uq_gl_k_action, uq_gl_n_action,
    uq_operator, QGenerator,
};
pub use component::{generate_component, span_closure, Component};
pub use pieri::{hw_vector, is_row_highest, pieri_expected_count, pieri_kernel};
pub use poly::{QMatMonomial, QPolynomial, QWord};
pub use serre::{classical_limit, serre_on_basis, verify_dual_pair, verify_serre};
pub use straighten::{straighten, Strategy};
