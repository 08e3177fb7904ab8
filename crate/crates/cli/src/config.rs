//! Run configuration: defaults, optional JSON file, command-line overrides.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// Verification suites the runner knows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Serre,
    Manin,
    HoweDims,
    OmegaKappa,
    QPieri,
    RsIdentity,
    Braid,
    Flatness,
    KzCasimir,
    MainTheorem,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Serre => "serre",
            Suite::Manin => "manin",
            Suite::HoweDims => "howe-dims",
            Suite::OmegaKappa => "omega-kappa",
            Suite::QPieri => "q-pieri",
            Suite::RsIdentity => "rs-identity",
            Suite::Braid => "braid",
            Suite::Flatness => "flatness",
            Suite::KzCasimir => "kz-casimir",
            Suite::MainTheorem => "main-theorem",
        }
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        <Suite as clap::ValueEnum>::from_str(s, false).map_err(|_| CliError::UnknownSuite(s.into()))
    }
}

/// Residues of the connection checked by the flatness suite.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ConnectionType {
    #[default]
    Casimir,
    Kz,
}

/// Settings that may come from a JSON file or from flags. Absent fields fall through.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PartialConfig {
    pub k: Option<usize>,
    pub n: Option<usize>,
    pub deg: Option<u32>,
    pub lambda: Option<Vec<u32>>,
    pub mu: Option<Vec<u32>>,
    /// Complex samples written as "0.05" or "0.03+0.01i".
    pub h: Option<Vec<String>>,
    pub tol_ode: Option<f64>,
    pub tol_spec: Option<f64>,
    pub out: Option<PathBuf>,
    pub seed: Option<u64>,
    pub parallel: Option<bool>,
    #[serde(rename = "type")]
    pub connection: Option<ConnectionType>,
}

impl PartialConfig {
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
        serde_json::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
    }

    /// Fields of `self` win over those of `base`.
    pub fn over(self, base: PartialConfig) -> PartialConfig {
        PartialConfig {
            k: self.k.or(base.k),
            n: self.n.or(base.n),
            deg: self.deg.or(base.deg),
            lambda: self.lambda.or(base.lambda),
            mu: self.mu.or(base.mu),
            h: self.h.or(base.h),
            tol_ode: self.tol_ode.or(base.tol_ode),
            tol_spec: self.tol_spec.or(base.tol_spec),
            out: self.out.or(base.out),
            seed: self.seed.or(base.seed),
            parallel: self.parallel.or(base.parallel),
            connection: self.connection.or(base.connection),
        }
    }
}

/// Fully resolved configuration of one run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub suite: Suite,
    pub k: usize,
    pub n: usize,
    pub deg: u32,
    pub lambda: Vec<u32>,
    pub mu: Vec<u32>,
    pub h: Vec<[f64; 2]>,
    pub tol_ode: f64,
    pub tol_spec: f64,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    pub seed: u64,
    pub parallel: bool,
    #[serde(rename = "type")]
    pub connection: ConnectionType,
}

pub const DEFAULT_SEED: u64 = 20240531;
const MAX_RANK: usize = 6;

pub fn parse_complex(s: &str) -> Result<[f64; 2]> {
    let z = Complex64::from_str(s.trim()).map_err(|_| CliError::Config(format!("not a complex number: {s:?}")))?;
    Ok([z.re, z.im])
}

impl RunConfig {
    /// Fills defaults and checks the tolerance hierarchy tol_ode ≤ tol_spec/100.
    pub fn resolve(suite: Suite, p: PartialConfig) -> Result<Self> {
        let n = p.n.unwrap_or(2);
        let default_k = if suite == Suite::MainTheorem { n.max(2) } else { 2 };
        let k = p.k.unwrap_or(default_k);
        let lambda: Vec<u32> = p.lambda.unwrap_or_else(|| vec![1]);
        let mu = match p.mu {
            Some(mu) => mu,
            None if suite == Suite::MainTheorem => {
                let mut mu: Vec<u32> = lambda.iter().copied().take(n).collect();
                mu.resize(n, 0);
                mu
            }
            None => vec![1; n],
        };
        let h = match p.h {
            Some(list) => list.iter().map(|s| parse_complex(s)).collect::<Result<_>>()?,
            None => vec![[0.05, 0.0]],
        };
        let cfg = RunConfig {
            suite,
            k,
            n,
            deg: p.deg.unwrap_or(3),
            lambda,
            mu,
            h,
            tol_ode: p.tol_ode.unwrap_or(1e-12),
            tol_spec: p.tol_spec.unwrap_or(1e-6),
            out: p.out,
            seed: p.seed.unwrap_or(DEFAULT_SEED),
            parallel: p.parallel.unwrap_or(false),
            connection: p.connection.unwrap_or_default(),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 || self.n == 0 || self.k > MAX_RANK || self.n > MAX_RANK {
            return Err(CliError::Config(format!(
                "k = {} and n = {} must lie in 1..={MAX_RANK}",
                self.k, self.n
            )));
        }
        if !(self.tol_ode > 0.0 && self.tol_spec > 0.0) {
            return Err(CliError::Config("tolerances must be positive".into()));
        }
        if self.tol_ode > self.tol_spec / 100.0 {
            return Err(CliError::Config(format!(
                "integrator tolerance {:e} exceeds spectral tolerance / 100 = {:e}",
                self.tol_ode,
                self.tol_spec / 100.0
            )));
        }
        if self.h.iter().flatten().any(|x| !x.is_finite()) {
            return Err(CliError::Config("h samples must be finite".into()));
        }
        Ok(())
    }

    pub fn h_values(&self) -> Vec<Complex64> {
        self.h.iter().map(|[re, im]| Complex64::new(*re, *im)).collect()
    }
}
