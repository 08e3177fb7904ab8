use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::Parser;

use kdweyl_cli::{report_render, run_suite, ConnectionType, PartialConfig, RunConfig, Suite};

/// Run a verification suite and report every check. Exit status 0 iff all checks pass.
#[derive(Debug, Parser)]
#[command(name = "verify", version)]
struct Args {
    suite: Suite,
    /// JSON file with any of the flag settings; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Degree bound.
    #[arg(long)]
    deg: Option<u32>,
    #[arg(long, value_delimiter = ',')]
    lambda: Option<Vec<u32>>,
    #[arg(long, value_delimiter = ',')]
    mu: Option<Vec<u32>>,
    /// Sample values of h such as 0.05 or 0.03+0.01i; repeat or separate by commas.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    h: Option<Vec<String>>,
    #[arg(long)]
    tol_ode: Option<f64>,
    #[arg(long)]
    tol_spec: Option<f64>,
    /// Path of the JSON report.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    parallel: bool,
    /// Connection for the flatness suite.
    #[arg(long = "type", value_enum)]
    connection: Option<ConnectionType>,
}

impl Args {
    fn partial(&self) -> PartialConfig {
        PartialConfig {
            k: self.k,
            n: self.n,
            deg: self.deg,
            lambda: self.lambda.clone(),
            mu: self.mu.clone(),
            h: self.h.clone(),
            tol_ode: self.tol_ode,
            tol_spec: self.tol_spec,
            out: self.out.clone(),
            seed: self.seed,
            parallel: self.parallel.then_some(true),
            connection: self.connection,
        }
    }
}

fn run(args: Args) -> Result<bool> {
    let file = match &args.config {
        Some(p) => PartialConfig::from_file(p)?,
        None => PartialConfig::default(),
    };
    let cfg = RunConfig::resolve(args.suite, args.partial().over(file))?;
    let report = run_suite(&cfg).with_context(|| format!("suite {}", args.suite.name()))?;
    if let Some(path) = &cfg.out {
        std::fs::write(path, report.to_json()?).with_context(|| format!("writing {}", path.display()))?;
    }
    print!("{}", report_render(&report));
    let failed = report.checks.iter().filter(|c| !c.passed()).count()
        + report.monodromy.iter().filter(|m| !m.passed).count();
    println!(
        "{}: {} checks, {}",
        report.suite,
        report.checks.len() + report.monodromy.len(),
        if report.passed { "all passed".to_string() } else { format!("{failed} failed") }
    );
    Ok(report.passed)
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
