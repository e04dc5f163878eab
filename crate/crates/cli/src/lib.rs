//! Configuration-driven experiment runner: each experiment writes
//! `report.csv`, `report.json`, and `plot.svg` into its output directory.

pub mod config;
pub mod error;
pub mod experiments;
pub mod output;

use std::path::PathBuf;

use clap::Parser;
use serde_json::json;

pub use config::{ConfigFile, Experiment, ExperimentConfig};
pub use error::CliError;
pub use output::{Artifacts, Check};

#[derive(Debug, Parser)]
#[command(name = "planar-ortho", version, about = "Orthonormal polynomials for planar measures: experiment runner")]
pub struct Args {
    /// Experiment to run.
    #[arg(value_enum)]
    pub name: Option<Experiment>,
    #[arg(long, value_enum, conflicts_with = "name")]
    pub experiment: Option<Experiment>,
    /// JSON configuration; flags override its fields.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub bits: Option<u32>,
    /// Comma-separated ascending degrees.
    #[arg(long, conflicts_with = "degree")]
    pub degrees: Option<String>,
    /// Single degree; shorthand for `--degrees N`.
    #[arg(long)]
    pub degree: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Probe points as `re,im;re,im`.
    #[arg(long, allow_hyphen_values = true)]
    pub probe: Option<String>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Hole center on the real axis.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<f64>,
    /// Hole radius.
    #[arg(long)]
    pub rho: Option<f64>,
}

/// Merges the config file (if any) with command-line overrides.
pub fn resolve(args: &Args) -> Result<ExperimentConfig, CliError> {
    let mut file = match &args.config {
        Some(p) => config::load_config(p)?,
        None => ConfigFile::default(),
    };
    if let Some(e) = args.name.or(args.experiment) {
        file.experiment = Some(e);
    }
    if let Some(b) = args.bits {
        file.precision_bits = Some(b);
    }
    if let Some(d) = &args.degrees {
        file.degrees = Some(config::parse_degrees(d)?);
    }
    if let Some(d) = args.degree {
        file.degrees = Some(vec![d]);
    }
    if let Some(o) = &args.out {
        file.output_dir = Some(o.clone());
    }
    if let Some(p) = &args.probe {
        file.probe_points = Some(config::parse_probes(p)?);
    }
    if args.seed.is_some() {
        file.seed = args.seed;
    }
    if args.a.is_some() {
        file.a = args.a;
    }
    if args.rho.is_some() {
        file.rho = args.rho;
    }
    ExperimentConfig::resolve(file)
}

/// Outcome of a completed run whose artifacts were written.
#[derive(Debug)]
pub struct RunSummary {
    pub written: Vec<PathBuf>,
    pub checks: Vec<Check>,
    pub config_hash: String,
}

/// Runs one experiment and writes its artifacts. Violated checks are
/// reported after the artifacts are on disk.
pub fn run(cfg: &ExperimentConfig) -> Result<RunSummary, CliError> {
    let artifacts = experiments::run_experiment(cfg)?;
    let hash = cfg.hash();
    let doc = json!({
        "experiment": cfg.experiment.name(),
        "config": cfg,
        "config_hash": hash,
        "checks": artifacts.checks,
        "results": artifacts.json,
    });
    let dir = &cfg.output_dir;
    let mut written = vec![
        output::write_atomic(dir, "report.csv", artifacts.csv(&hash).as_bytes())?,
        output::write_atomic(
            dir,
            "report.json",
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("json")).as_bytes(),
        )?,
    ];
    for (name, svg) in &artifacts.plots {
        written.push(output::write_atomic(dir, name, svg.as_bytes())?);
    }
    let failed: Vec<String> = artifacts
        .failed()
        .iter()
        .map(|c| format!("{} ({})", c.name, c.detail))
        .collect();
    if !failed.is_empty() {
        return Err(CliError::Assertion(failed.join("; ")));
    }
    Ok(RunSummary {
        written,
        checks: artifacts.checks,
        config_hash: hash,
    })
}
