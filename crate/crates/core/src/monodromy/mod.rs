//! Fuchsian connections on the complement of the sl_n root hyperplanes and
//! their monodromy.
//!
//! A [`ConnectionForm`] is ∇ = d - c Σ_i (dφ_i/φ_i) r_i with exact residues.
//! The Casimir connection has φ = z_i - z_j and r = κ_ij, c = h; the KZ
//! connection has r = Ω_ij, c = ħ̄ = 2h. Monodromy of generator T_j is
//! σ(T_j) · 𝒫, where 𝒫 is parallel transport from the basepoint t to s_j t
//! along a path that passes the hyperplane α_j = 0 by a positive half turn.
//! Comparisons with the quantum Weyl group use ħ = 2πih.

mod connection;
mod fibre;
mod harness;
mod ode;
mod path;
mod spectral;
mod transport;

pub use connection::{
    casimir_connection, codimension_two_families, kohno_flatness, kz_connection, max_abs, root_covector,
    ConnectionForm, ConnectionKind, ConnectionTerm,
};
pub use fibre::{
    casimir_residues, classical_fibre, dominant_weights, evaluate_matrix, kz_residues, quantum_fibre, weight_orbit,
    ClassicalFibre, PairOperators, QuantumFibre,
};
pub use harness::{
    braid_residual, determinant_residual, hbar_of, homotopy_residual, kz_casimir_bridge, kz_coupling,
    main_theorem_harness, monodromy_family, monodromy_generator, reversibility_residual, weight_leakage,
    HarnessConfig, HarnessOutput,
};
pub use ode::{dop853, OdeOptions, OdeStats};
pub use path::{braid_path, default_basepoint, BraidPath, PathPiece, RadiusPolicy};
pub use spectral::{
    eigenvalues, match_spectra, spectral_compare, spectral_compare_eigenvalues, word_trace_gap, Matching,
    MonodromyReport, Pair,
};
pub use transport::{parallel_transport, IntegratorStats, Transport, TransportOptions};
