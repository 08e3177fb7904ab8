//! Classical gl_k × gl_n acting on polynomials in the entries of a k×n matrix.
//!
//! E^{(k)}_{ab} acts as Σ_j x_aj ∂_bj and E^{(n)}_{ij} as Σ_a x_ai ∂_aj. On top of
//! these: truncated Casimirs κ_ij, the column operators Ω̃_ij / Ω_ij, Howe
//! decomposition bookkeeping, highest-weight subspaces and the lift σ of the
//! braid generators. All indices are 0-based.

mod highest;
mod howe;
mod ops;
mod sigma;

pub use crate::basis::{enumerate_basis, MatrixMonomial, MonomialBasis};
pub use crate::operator::SparseOperator;
pub use highest::{highest_weight_subspace, raising_kernel, HighestWeightSpace};
pub use howe::{gl_dimension, howe_components, ssyt_count, weight_multiplicity, HoweComponent, YoungDiagram};
pub use ops::{apply_to_terms, casimir_truncated, gl_action, gl_generator, omega_operators, OmegaVariant, Side, Terms};
pub use sigma::{sigma_from_pair, sigma_matrix, sigma_operator};
