use thiserror::Error;

/// Failures raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("pole: denominator magnitude {magnitude:e} at q = {q} is below the pole threshold")]
    Pole { magnitude: f64, q: String },

    #[error("operator is not nilpotent within {bound} powers")]
    NotNilpotent { bound: usize },

    #[error("basis size {size} exceeds the configured cap {cap}")]
    Capacity { size: usize, cap: usize },

    #[error("index out of range: {0}")]
    Index(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("image monomial {monomial} lies outside the codomain basis")]
    OutsideBasis { monomial: String },

    #[error("matrix is singular: {0}")]
    Singular(String),

    #[error("subspace is not invariant: {0}")]
    NotInvariant(String),

    #[error("path construction failed: {0}")]
    Path(String),

    #[error("integration failed: {0}")]
    Integration(String),

    #[error("component dimension {found} does not match the classical value {expected} for {context}")]
    ComponentDimension {
        found: usize,
        expected: usize,
        context: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
