use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::connection::ConnectionForm;
use super::ode::{dop853, OdeOptions, OdeStats};
use super::path::{BraidPath, PathPiece};
use crate::error::{Error, Result};

/// Integrator settings. `tol` is the relative tolerance; the absolute one is `tol / 100`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TransportOptions {
    pub tol: f64,
    pub max_steps: u64,
}

impl Default for TransportOptions {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            max_steps: 200_000,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct IntegratorStats {
    pub evaluations: u64,
    pub accepted: u64,
    pub rejected: u64,
    pub rtol: f64,
    pub atol: f64,
}

impl IntegratorStats {
    fn absorb(&mut self, s: &OdeStats) {
        self.evaluations += s.evaluations;
        self.accepted += s.accepted;
        self.rejected += s.rejected;
    }

    pub fn merged(mut self, other: &Self) -> Self {
        self.evaluations += other.evaluations;
        self.accepted += other.accepted;
        self.rejected += other.rejected;
        self.rtol = self.rtol.max(other.rtol);
        self.atol = self.atol.max(other.atol);
        self
    }
}

/// Transport matrix with integration statistics.
#[derive(Clone, Debug)]
pub struct Transport {
    pub matrix: DMatrix<Complex64>,
    pub stats: IntegratorStats,
}

/// A(s) = Σ_i (φ_i(γ'(s))/φ_i(γ(s))) r_i on one path piece.
fn coefficient(
    path: &BraidPath,
    piece: &PathPiece,
    covectors: &[Vec<f64>],
    residues: &[DMatrix<Complex64>],
    s: f64,
) -> DMatrix<Complex64> {
    let (z, dz) = piece.eval(s);
    let p = path.point(z);
    let v = path.tangent(dz);
    let dim = residues.first().map_or(0, |r| r.nrows());
    let mut a = DMatrix::zeros(dim, dim);
    for (phi, r) in covectors.iter().zip(residues) {
        let num: Complex64 = phi.iter().zip(&v).map(|(c, x)| x * *c).sum();
        let den: Complex64 = phi.iter().zip(&p).map(|(c, x)| x * *c).sum();
        a += r * (num / den);
    }
    a
}

/// Parallel transport of ∇ along `path`: the fundamental solution of
/// dY = Σ_i (dφ_i/φ_i) coupling·r_i Y with Y(start) = I, evaluated at the end.
pub fn parallel_transport(c: &ConnectionForm, path: &BraidPath, opts: TransportOptions) -> Result<Transport> {
    if c.ambient != path.n {
        return Err(Error::Dimension(format!(
            "connection on ℂ^{} but path in ℂ^{}",
            c.ambient, path.n
        )));
    }
    let n = c.fibre_dim;
    let covectors = c.covectors_f64();
    let residues = c.numeric_residues();
    let rtol = opts.tol;
    let atol = opts.tol / 100.0;
    let mut stats = IntegratorStats {
        rtol,
        atol,
        ..Default::default()
    };
    let ode = OdeOptions {
        rtol,
        atol,
        max_steps: opts.max_steps,
    };
    let mut y = DMatrix::<Complex64>::identity(n, n);
    for piece in &path.pieces {
        let rhs = |s: f64, y: &DMatrix<Complex64>| coefficient(path, piece, &covectors, &residues, s) * y;
        let (yp, s) = dop853(rhs, 0.0, 1.0, DMatrix::identity(n, n), &ode).map_err(|e| {
            Error::Integration(format!(
                "{e}; closest approach of the path to a hyperplane: {:.3e}",
                path.closest_approach(2000)
            ))
        })?;
        stats.absorb(&s);
        y = yp * y;
    }
    Ok(Transport { matrix: y, stats })
}
