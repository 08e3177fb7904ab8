//! Braid group actions on quantum matrix space.
//!
//! Two families of operators act on S_q(k, n) through the column algebra:
//! the R-matrix operators R∨_j on columns j, j+1 and the quantum Weyl group
//! elements S_j of U_q(gl_n). They agree up to a diagonal correction
//! (-1)^{d_j} q^{-(d_j + d_j d_{j+1}/k)}, where d_l is the degree of column l.
//! Indices are 0-based throughout.

mod correction;
mod identities;
mod rvee;
mod verify;
mod weyl;

use crate::operator::SparseOperator;
use crate::qarith::ExactScalar;

pub use correction::{correction_factor, CorrectionFactor};
pub use identities::{s_mu_alpha_identity, s_mu_alpha_recursion_residual};
pub use rvee::{rmatrix_direct_k2, rvee_coefficient, rvee_equivariant, rvee_on_basis};
pub use verify::{
    cached_rvee, rvee_j, verify_braid_relations, verify_rs, verify_rs_block, weyl_family,
    rvee_family,
};
pub use weyl::{reverses_cartan, weyl_element_j, weyl_element_sl2, weyl_element_sl2_matrix};


/// Which braid operator a [`BraidOperator`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BraidLabel {
    RVee,
    WeylS,
    Correction,
    Sigma,
}

impl std::fmt::Display for BraidLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            BraidLabel::RVee => "Rv",
            BraidLabel::WeylS => "S",
            BraidLabel::Correction => "C",
            BraidLabel::Sigma => "sigma",
        })
    }
}

/// Labelled exact operator for generator `index`.
#[derive(Clone, Debug)]
pub struct BraidOperator {
    pub label: BraidLabel,
    pub index: usize,
    pub op: SparseOperator<ExactScalar>,
}

impl BraidOperator {
    /// Name such as `S_2` (1-based).
    pub fn name(&self) -> String {
        format!("{}_{}", self.label, self.index + 1)
    }
}
