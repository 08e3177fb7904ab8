//! The named verification suites.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use kdweyl_core::braidops::{rvee_family, verify_braid_relations, verify_rs, weyl_family};
use kdweyl_core::field::int;
use kdweyl_core::glrep::{casimir_truncated, gl_generator, howe_components, omega_operators, OmegaVariant, Side};
use kdweyl_core::monodromy::{
    casimir_connection, casimir_residues, kohno_flatness, kz_casimir_bridge, kz_connection, kz_residues,
    main_theorem_harness, HarnessConfig, MonodromyReport, TransportOptions,
};
use kdweyl_core::qmatspace::{hw_vector, is_row_highest, pieri_kernel, straighten, verify_serre, QWord, Strategy};
use kdweyl_core::report::{all_pass, block_label, CheckRecord};
use kdweyl_core::MonomialBasis;

use crate::config::{ConnectionType, RunConfig, Suite};
use crate::error::{CliError, Result};

pub const SCHEMA: u32 = 1;
const MANIN_WORDS: usize = 256;

/// Machine-readable outcome of one run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub suite: String,
    pub config: RunConfig,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub monodromy: Vec<MonodromyReport>,
}

impl Report {
    pub fn new(config: RunConfig, checks: Vec<CheckRecord>, monodromy: Vec<MonodromyReport>) -> Self {
        Report {
            schema: SCHEMA,
            suite: config.suite.name().into(),
            passed: all_pass(&checks) && monodromy.iter().all(|m| m.passed),
            config,
            checks,
            monodromy,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }
}

fn binomial(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn serre(cfg: &RunConfig) -> Result<Vec<CheckRecord>> {
    let mut out = verify_serre(Side::K, cfg.k, cfg.n, cfg.deg)?;
    out.extend(verify_serre(Side::N, cfg.k, cfg.n, cfg.deg)?);
    Ok(out)
}

fn manin(cfg: &RunConfig) -> Result<Vec<CheckRecord>> {
    let (k, n) = (cfg.k, cfg.n);
    let block = format!("k={k} n={n}");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut disagree = None;
    let mut escaped = None;
    for t in 0..MANIN_WORDS {
        let len = rng.gen_range(0..=cfg.deg as usize);
        let word = QWord((0..len).map(|_| (rng.gen_range(0..k), rng.gen_range(0..n))).collect());
        let a = straighten(k, n, &word, Strategy::Leftmost);
        let b = straighten(k, n, &word, Strategy::Rightmost);
        if a != b && disagree.is_none() {
            disagree = Some(format!("word #{t} {:?}", word.0));
        }
        let basis = MonomialBasis::graded(k, n, len as u32)?;
        if escaped.is_none() && a.terms().keys().any(|m| basis.index_of(m).is_none()) {
            escaped = Some(format!("word #{t} {:?}", word.0));
        }
    }
    let mut out = vec![
        CheckRecord::exact("leftmost and rightmost straightening agree", &block, MANIN_WORDS, disagree),
        CheckRecord::exact("straightened words stay in their degree", &block, MANIN_WORDS, escaped),
    ];
    for d in 0..=cfg.deg {
        let got = MonomialBasis::graded(k, n, d)?.len();
        let want = binomial((k * n) as u64 + u64::from(d) - 1, u64::from(d));
        let cert = (got as u128 != want).then(|| format!("basis has {got} elements, expected {want}"));
        out.push(CheckRecord::exact(
            "ordered monomials span the degree piece",
            format!("{block} deg={d}"),
            got,
            cert,
        ));
    }
    Ok(out)
}

fn howe_dims(cfg: &RunConfig) -> Vec<CheckRecord> {
    let (k, n) = (cfg.k, cfg.n);
    (0..=cfg.deg)
        .map(|d| {
            let total: u128 = howe_components(k, n, d).iter().map(|c| c.dim_k * c.dim_n).sum();
            let want = binomial((k * n) as u64 + u64::from(d) - 1, u64::from(d));
            let cert = (total != want).then(|| format!("sum over components {total}, expected {want}"));
            CheckRecord::exact(
                "sum of dim V_lambda(gl_k) dim V_lambda(gl_n) = dim S^d",
                format!("k={k} n={n} deg={d}"),
                want as usize,
                cert,
            )
        })
        .collect()
}

fn omega_kappa(cfg: &RunConfig) -> Result<Vec<CheckRecord>> {
    let two = int(2);
    let mut out = Vec::new();
    for d in 0..=cfg.deg {
        let basis = Arc::new(MonomialBasis::graded(cfg.k, cfg.n, d)?);
        let block = format!("k={} n={} deg={d}", cfg.k, cfg.n);
        for i in 0..cfg.n {
            for j in i + 1..cfg.n {
                let omega = omega_operators(i, j, &basis, OmegaVariant::Gl)?.matrix;
                let kappa = casimir_truncated(i, j, &basis)?.matrix;
                let eii = gl_generator(Side::N, i, i, &basis)?.matrix;
                let ejj = gl_generator(Side::N, j, j, &basis)?.matrix;
                let r = omega.scale(&two).sub(&kappa).add(&eii).add(&ejj);
                let cert = r.first_nonzero().map(|(row, col, x)| {
                    format!("entry {x} at {:?} <- {:?}", basis.element(row), basis.element(col))
                });
                out.push(CheckRecord::exact(
                    format!("2 Omega_{0}{1} - kappa_{0}{1} + E_{0}{0} + E_{1}{1} = 0", i + 1, j + 1),
                    &block,
                    basis.len(),
                    cert,
                ));
            }
        }
    }
    Ok(out)
}

fn q_pieri(cfg: &RunConfig) -> Result<Vec<CheckRecord>> {
    let pairs: Vec<(u32, u32)> = if cfg.mu.len() == 2 {
        vec![(cfg.mu[0], cfg.mu[1])]
    } else {
        (0..=cfg.deg).flat_map(|a| (0..=cfg.deg - a).map(move |b| (a, b))).collect()
    };
    let mut out = Vec::new();
    for (mu1, mu2) in pairs {
        let (basis, kernel) = pieri_kernel(cfg.k, mu1, mu2)?;
        let top = if cfg.k >= 2 { mu1.min(mu2) } else { 0 };
        let want = top as usize + 1;
        let block = block_label(cfg.k, 2, &[mu1, mu2]);
        let cert = (kernel.len() != want).then(|| format!("kernel dimension {}, expected {want}", kernel.len()));
        out.push(CheckRecord::exact("dim ker E = min(mu1, mu2) + 1", &block, basis.len(), cert));
        let mut bad = None;
        for i in 0..=top {
            if bad.is_none() && !is_row_highest(&hw_vector(cfg.k, mu1, mu2, i)?) {
                bad = Some(format!("v_{i} is not annihilated"));
            }
        }
        out.push(CheckRecord::exact("E v_i = 0 for every i", &block, want, bad));
    }
    Ok(out)
}

fn braid(cfg: &RunConfig) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    if cfg.n < 3 {
        let block = format!("k={} n={}", cfg.k, cfg.n);
        out.push(CheckRecord::exact("fewer than two generators: no braid relations", block, 0, None));
    }
    for d in 0..=cfg.deg {
        let basis = Arc::new(MonomialBasis::graded(cfg.k, cfg.n, d)?);
        let block = format!("k={} n={} deg={d}", cfg.k, cfg.n);
        let s: Vec<_> = weyl_family(&basis)?.into_iter().map(|o| o.op).collect();
        out.extend(verify_braid_relations(&s, "S", &block)?);
        if cfg.k >= 2 {
            let r: Vec<_> = rvee_family(&basis)?.into_iter().map(|o| o.op).collect();
            out.extend(verify_braid_relations(&r, "Rv", &block)?);
        }
    }
    Ok(out)
}

fn flatness(cfg: &RunConfig) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    let h = cfg.h_values().first().copied().unwrap_or_default();
    for d in 1..=cfg.deg.max(1) {
        let basis = Arc::new(MonomialBasis::graded(cfg.k, cfg.n, d)?);
        let block = format!("k={} n={} deg={d}", cfg.k, cfg.n);
        let conn = match cfg.connection {
            ConnectionType::Casimir => casimir_connection(cfg.n, casimir_residues(&basis)?, h)?,
            ConnectionType::Kz => kz_connection(cfg.n, kz_residues(&basis)?, h)?,
        };
        let records = kohno_flatness(&conn, &block);
        if records.is_empty() {
            out.push(CheckRecord::exact("no codimension-two intersections", block, basis.len(), None));
        }
        out.extend(records);
    }
    Ok(out)
}

fn kz_casimir(cfg: &RunConfig) -> Result<Vec<CheckRecord>> {
    if cfg.mu.len() != cfg.n {
        return Err(CliError::Config(format!("mu needs {} entries", cfg.n)));
    }
    let opts = TransportOptions {
        tol: cfg.tol_ode,
        ..Default::default()
    };
    let mut out = Vec::new();
    for h in cfg.h_values() {
        out.extend(kz_casimir_bridge(cfg.k, cfg.n, &cfg.mu, h, opts)?);
    }
    Ok(out)
}

fn main_theorem(cfg: &RunConfig) -> Result<(Vec<CheckRecord>, Vec<MonodromyReport>)> {
    let harness = HarnessConfig {
        k: cfg.k,
        n: cfg.n,
        lambda: cfg.lambda.clone(),
        mu: cfg.mu.clone(),
        h_values: cfg.h.clone(),
        ode_tol: cfg.tol_ode,
        spectral_tol: cfg.tol_spec,
        trace_tol: cfg.tol_spec * 10.0,
        parallel: cfg.parallel,
    };
    let out = main_theorem_harness(&harness)?;
    Ok((out.checks, out.reports))
}

/// Runs the configured suite. Check failures are reported, not returned as errors.
pub fn run_suite(cfg: &RunConfig) -> Result<Report> {
    cfg.validate()?;
    let mut monodromy = Vec::new();
    let checks = match cfg.suite {
        Suite::Serre => serre(cfg)?,
        Suite::Manin => manin(cfg)?,
        Suite::HoweDims => howe_dims(cfg),
        Suite::OmegaKappa => omega_kappa(cfg)?,
        Suite::QPieri => q_pieri(cfg)?,
        Suite::RsIdentity => verify_rs(cfg.k, cfg.n, cfg.deg, cfg.parallel)?,
        Suite::Braid => braid(cfg)?,
        Suite::Flatness => flatness(cfg)?,
        Suite::KzCasimir => kz_casimir(cfg)?,
        Suite::MainTheorem => {
            let (checks, reports) = main_theorem(cfg)?;
            monodromy = reports;
            checks
        }
    };
    Ok(Report::new(cfg.clone(), checks, monodromy))
}
