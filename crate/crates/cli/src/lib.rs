//! Command-line driver: config resolution, the six runs, and output files.

pub mod config;
pub mod output;
pub mod suites;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;
use sixvertex_core::Error;

pub use config::{ExperimentConfig, ParamsConfig};
pub use output::{Failure, Outcome, Table};

#[derive(Parser, Debug)]
#[command(name = "sixvertex", version, about = "Stochastic six-vertex model in a half-quadrant: checks, samplers and GUE-corners comparisons")]
pub struct Cli {
    /// JSON experiment config; flags below take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Worker threads (default: all cores). Outputs do not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Transfer-matrix, symmetrization and enumeration agreement; Cauchy, branching, conjugation, counting.
    Identities,
    /// Boundary function by direct summation vs contour integral.
    Boundary,
    /// Asymptotic constants, critical point and steepest-descent contour.
    Constants,
    /// Convergence tables for the rescaled boundary function and its integrand.
    BmConverge,
    /// Exact top-row pmf, sampled Gelfand-Tsetlin patterns and path grids.
    Sample,
    /// KS distances of rescaled top rows against GUE corners.
    GueCompare,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Identities => "identities",
            Command::Boundary => "boundary",
            Command::Constants => "constants",
            Command::BmConverge => "bm-converge",
            Command::Sample => "sample",
            Command::GueCompare => "gue-compare",
        }
    }
}

/// A run that could not start or could not finish.
#[derive(Debug)]
pub struct RunError {
    pub exit_code: i32,
    pub invariant: String,
    pub detail: String,
}

impl RunError {
    fn config(detail: String) -> Self {
        RunError { exit_code: 2, invariant: "config".into(), detail }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "pass": false, "invariant": self.invariant, "detail": self.detail })
    }
}

fn invariant_of(e: &Error) -> &'static str {
    match e {
        Error::InvalidParams(_) => "parameter_admissibility",
        Error::InvalidSignature(_) => "signature_validity",
        Error::InvalidVertex(_) => "vertex_validity",
        Error::InvalidArgument(_) => "argument_validity",
        Error::Numerical(_) => "numerical_convergence",
        Error::Budget(_) => "enumeration_budget",
    }
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        let exit_code = match e {
            Error::InvalidParams(_) | Error::InvalidArgument(_) | Error::InvalidSignature(_) => 2,
            _ => 1,
        };
        RunError { exit_code, invariant: invariant_of(&e).into(), detail: e.to_string() }
    }
}

/// Loads the config file (if any) and applies flag overrides.
pub fn resolve_config(cli: &Cli) -> Result<ExperimentConfig, RunError> {
    let mut cfg = match &cli.config {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| RunError::config(format!("{}: {e}", p.display())))?;
            serde_json::from_str(&text).map_err(|e| RunError::config(format!("{}: {e}", p.display())))?
        }
        None => ExperimentConfig::default(),
    };
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    if let Some(t) = cli.tol {
        cfg.tol = t;
    }
    if let Some(t) = cli.threads {
        cfg.threads = Some(t);
    }
    if let Some(o) = &cli.out {
        cfg.out = o.clone();
    }
    validate(&cfg)?;
    Ok(cfg)
}

fn validate(cfg: &ExperimentConfig) -> Result<(), RunError> {
    let bad = |m: &str| Err(RunError::config(m.into()));
    if !(cfg.tol > 0.0 && cfg.tol < 1.0) {
        return bad("tol must lie in (0, 1)");
    }
    if cfg.k == 0 || cfg.k > 4 {
        return bad("k must be between 1 and 4");
    }
    if cfg.m_grid.is_empty() || cfg.m_grid.contains(&0) {
        return bad("m_grid must be a non-empty list of positive integers");
    }
    if cfg.lambda_max < 1 {
        return bad("lambda_max must be at least 1");
    }
    if cfg.threads == Some(0) {
        return bad("threads must be positive");
    }
    if let Some(x) = &cfg.x {
        if x.len() != cfg.k {
            return bad("x must have k entries");
        }
    }
    Ok(())
}

pub fn run_suite(command: Command, cfg: &ExperimentConfig) -> Result<Outcome, RunError> {
    let params = cfg.params.build()?;
    let out = match command {
        Command::Identities => suites::identities(cfg, &params)?,
        Command::Boundary => suites::boundary(cfg, &params)?,
        Command::Constants => suites::constants(cfg, &params)?,
        Command::BmConverge => suites::bm_converge(cfg, &params)?,
        Command::Sample => suites::sample(cfg, &params)?,
        Command::GueCompare => suites::gue_compare(cfg, &params)?,
    };
    Ok(out)
}

fn io_err(path: &Path, e: std::io::Error) -> RunError {
    RunError { exit_code: 1, invariant: "output".into(), detail: format!("{}: {e}", path.display()) }
}

/// Runs `command` inside a pool of `cfg.threads` workers and writes all files.
/// Returns the sidecar JSON.
pub fn execute(command: Command, cfg: &ExperimentConfig) -> Result<serde_json::Value, RunError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cfg.threads {
        builder = builder.num_threads(t);
    }
    let pool = builder.build().map_err(|e| RunError::config(format!("thread pool: {e}")))?;
    let threads = pool.current_num_threads();
    let start = Instant::now();
    let outcome = pool.install(|| run_suite(command, cfg))?;
    let elapsed = start.elapsed().as_secs_f64();

    let dir = &cfg.out;
    std::fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
    for t in &outcome.tables {
        t.write(dir).map_err(|e| io_err(dir, e))?;
    }
    for (name, doc) in &outcome.documents {
        Outcome::write_json(dir, name, doc).map_err(|e| io_err(dir, e))?;
    }
    let sidecar = json!({
        "subcommand": command.name(),
        "pass": outcome.failures.is_empty(),
        "failures": outcome.failures,
        "summary": outcome.summary,
        "tables": outcome.tables.iter().map(|t| format!("{}.csv", t.name)).collect::<Vec<_>>(),
        "config": cfg,
        "versions": { "sixvertex-cli": env!("CARGO_PKG_VERSION"), "rustc_edition": "2021" },
        "threads": threads,
        "wall_clock_seconds": elapsed,
    });
    Outcome::write_json(dir, &format!("{}.json", command.name()), &sidecar).map_err(|e| io_err(dir, e))?;
    Ok(sidecar)
}
