//! Serializable records of individual checks.

use serde::{Deserialize, Serialize};

/// Outcome of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One verified identity on one block.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub identity: String,
    pub block: String,
    pub dimension: usize,
    pub status: Status,
    /// Worst numeric residual, absent for exact checks.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual: Option<f64>,
    /// Offending entry or other evidence on failure.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual_certificate: Option<String>,
}

impl CheckRecord {
    /// Exact check: passes iff `certificate` is `None`.
    pub fn exact(
        identity: impl Into<String>,
        block: impl Into<String>,
        dimension: usize,
        certificate: Option<String>,
    ) -> Self {
        Self {
            identity: identity.into(),
            block: block.into(),
            dimension,
            status: if certificate.is_none() {
                Status::Pass
            } else {
                Status::Fail
            },
            residual: None,
            residual_certificate: certificate,
        }
    }

    /// Numeric check: passes iff `residual` is finite and below `tol`.
    pub fn numeric(
        identity: impl Into<String>,
        block: impl Into<String>,
        dimension: usize,
        residual: f64,
        tol: f64,
    ) -> Self {
        let pass = residual.is_finite() && residual < tol;
        Self {
            identity: identity.into(),
            block: block.into(),
            dimension,
            status: if pass { Status::Pass } else { Status::Fail },
            residual: Some(residual),
            residual_certificate: (!pass).then(|| format!("residual {residual:e} exceeds {tol:e}")),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// True when every record passed.
pub fn all_pass(records: &[CheckRecord]) -> bool {
    records.iter().all(CheckRecord::passed)
}

/// Formats a block label such as `k=2 n=3 mu=(1,0,2)`.
pub fn block_label(k: usize, n: usize, mu: &[u32]) -> String {
    let mu: Vec<String> = mu.iter().map(u32::to_string).collect();
    format!("k={k} n={n} mu=({})", mu.join(","))
}
