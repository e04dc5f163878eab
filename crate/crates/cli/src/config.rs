use std::fmt;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use planar_ortho::measures::{MeasureExpr, DEFAULT_MOMENT_CAP};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Experiment {
    DiskExact,
    LakeRates,
    PsReport,
    Pentagon,
    DiskHoleZeros,
    Sector,
    Toeplitz,
    CircleVsArea,
}

impl Experiment {
    pub const ALL: [Experiment; 8] = [
        Experiment::DiskExact,
        Experiment::LakeRates,
        Experiment::PsReport,
        Experiment::Pentagon,
        Experiment::DiskHoleZeros,
        Experiment::Sector,
        Experiment::Toeplitz,
        Experiment::CircleVsArea,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Experiment::DiskExact => "disk-exact",
            Experiment::LakeRates => "lake-rates",
            Experiment::PsReport => "ps-report",
            Experiment::Pentagon => "pentagon",
            Experiment::DiskHoleZeros => "disk-hole-zeros",
            Experiment::Sector => "sector",
            Experiment::Toeplitz => "toeplitz",
            Experiment::CircleVsArea => "circle-vs-area",
        }
    }

    fn default_bits(self) -> u32 {
        match self {
            Experiment::DiskExact | Experiment::LakeRates | Experiment::CircleVsArea => 212,
            Experiment::DiskHoleZeros => 320,
            Experiment::PsReport | Experiment::Pentagon | Experiment::Toeplitz => 512,
            Experiment::Sector => 1024,
        }
    }

    fn default_degrees(self) -> Vec<usize> {
        match self {
            Experiment::DiskExact => vec![100],
            Experiment::LakeRates | Experiment::Toeplitz | Experiment::CircleVsArea => vec![80],
            Experiment::PsReport => vec![60],
            Experiment::Pentagon => vec![40, 60, 80],
            Experiment::DiskHoleZeros => vec![80, 100, 120],
            Experiment::Sector => vec![120, 140, 160],
        }
    }
}

impl fmt::Display for Experiment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Experiment configuration as read from JSON; absent fields take
/// per-experiment defaults.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub experiment: Option<Experiment>,
    pub precision_bits: Option<u32>,
    pub degrees: Option<Vec<usize>>,
    pub probe_points: Option<Vec<Complex64>>,
    pub output_dir: Option<PathBuf>,
    /// Hole center and radius for the disk-with-hole experiments.
    pub a: Option<f64>,
    pub rho: Option<f64>,
    /// Base and perturbing measures for `ps-report`.
    pub mu1: Option<MeasureExpr>,
    pub mu2: Option<MeasureExpr>,
    pub seed: Option<u64>,
}

/// Fully resolved configuration. Everything except `output_dir` enters the
/// provenance hash.
#[derive(Clone, Debug, Serialize)]
pub struct ExperimentConfig {
    pub experiment: Experiment,
    pub precision_bits: u32,
    pub degrees: Vec<usize>,
    pub probe_points: Option<Vec<Complex64>>,
    pub a: f64,
    pub rho: f64,
    pub mu1: Option<MeasureExpr>,
    pub mu2: Option<MeasureExpr>,
    pub seed: Option<u64>,
    #[serde(skip)]
    pub output_dir: PathBuf,
}

impl ExperimentConfig {
    pub fn resolve(file: ConfigFile) -> Result<Self, CliError> {
        let experiment = file
            .experiment
            .ok_or_else(|| CliError::Config("no experiment given".into()))?;
        let (a_default, rho_default) = match experiment {
            Experiment::LakeRates => (0.0, 0.5),
            _ => (0.2, 0.25),
        };
        let cfg = ExperimentConfig {
            experiment,
            precision_bits: file.precision_bits.unwrap_or_else(|| experiment.default_bits()),
            degrees: file.degrees.unwrap_or_else(|| experiment.default_degrees()),
            probe_points: file.probe_points,
            a: file.a.unwrap_or(a_default),
            rho: file.rho.unwrap_or(rho_default),
            mu1: file.mu1,
            mu2: file.mu2,
            seed: file.seed,
            output_dir: file
                .output_dir
                .unwrap_or_else(|| Path::new("out").join(experiment.name())),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.degrees.is_empty() {
            return Err(CliError::Config("degrees: list is empty".into()));
        }
        if self.degrees.windows(2).any(|w| w[0] >= w[1]) {
            return Err(CliError::Config(format!(
                "degrees: {:?} must be strictly ascending",
                self.degrees
            )));
        }
        if self.degrees[0] == 0 {
            return Err(CliError::Config("degrees: entries must be at least 1".into()));
        }
        let max = self.max_degree();
        if max > DEFAULT_MOMENT_CAP - 1 {
            return Err(CliError::Config(format!(
                "degrees: {max} exceeds the moment cap minus one ({})",
                DEFAULT_MOMENT_CAP - 1
            )));
        }
        if self.precision_bits < 64 {
            return Err(CliError::Config(format!(
                "precision_bits: {} is below 64",
                self.precision_bits
            )));
        }
        if self.mu1.is_some() != self.mu2.is_some() {
            return Err(CliError::Config("mu1 and mu2 must be given together".into()));
        }
        if (self.mu1.is_some()) && self.experiment != Experiment::PsReport {
            return Err(CliError::Config(format!(
                "mu1/mu2 are only used by ps-report, not {}",
                self.experiment
            )));
        }
        Ok(())
    }

    pub fn max_degree(&self) -> usize {
        *self.degrees.last().expect("validated non-empty")
    }

    /// Hex SHA-256 of the canonical JSON form.
    pub fn hash(&self) -> String {
        let canonical = serde_json::to_vec(self).expect("config serializes");
        let digest = Sha256::digest(&canonical);
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Parses a JSON config, reporting the offending field path and position.
pub fn parse_config(text: &str, origin: &str) -> Result<ConfigFile, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|err| {
        let path = err.path().to_string();
        let inner = err.into_inner();
        CliError::Config(format!(
            "{origin}:{}:{}: {}: {inner}",
            inner.line(),
            inner.column(),
            if path == "." { "<root>" } else { &path }
        ))
    })
}

pub fn load_config(path: &Path) -> Result<ConfigFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
    parse_config(&text, &path.display().to_string())
}

/// Parses `"re,im;re,im"`.
pub fn parse_probes(s: &str) -> Result<Vec<Complex64>, CliError> {
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let parts: Vec<&str> = p.split(',').map(str::trim).collect();
            let [re, im] = parts.as_slice() else {
                return Err(CliError::Config(format!("--probe: `{p}` is not `re,im`")));
            };
            let num = |t: &str| {
                t.parse::<f64>()
                    .ok()
                    .filter(|x| x.is_finite())
                    .ok_or_else(|| CliError::Config(format!("--probe: `{t}` is not a finite number")))
            };
            Ok(Complex64::new(num(re)?, num(im)?))
        })
        .collect()
}

pub fn parse_degrees(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Config(format!("--degrees: `{t}` is not a non-negative integer")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_resolve() {
        let cfg = ExperimentConfig::resolve(ConfigFile {
            experiment: Some(Experiment::Sector),
            ..Default::default()
        })
        .unwrap();
        assert_eq!(cfg.precision_bits, 1024);
        assert_eq!(cfg.degrees, vec![120, 140, 160]);
        assert_eq!(cfg.output_dir, Path::new("out/sector"));
    }

    #[test]
    fn field_errors_carry_paths_and_positions() {
        let text = "{\n  \"experiment\": \"pentagon\",\n  \"degrees\": [40, \"x\"]\n}";
        let CliError::Config(msg) = parse_config(text, "cfg.json").unwrap_err() else { panic!() };
        assert!(msg.starts_with("cfg.json:3:"), "{msg}");
        assert!(msg.contains("degrees[1]"), "{msg}");
        let CliError::Config(msg) = parse_config("{\"experimnet\": 1}", "c").unwrap_err() else { panic!() };
        assert!(msg.contains("unknown field"), "{msg}");
    }

    #[test]
    fn degree_lists_are_checked() {
        for degrees in [vec![], vec![60, 40], vec![0, 3], vec![250]] {
            let r = ExperimentConfig::resolve(ConfigFile {
                experiment: Some(Experiment::Pentagon),
                degrees: Some(degrees),
                ..Default::default()
            });
            assert!(matches!(r, Err(CliError::Config(_))));
        }
    }

    #[test]
    fn hash_ignores_output_dir_only() {
        let base = ConfigFile {
            experiment: Some(Experiment::DiskExact),
            ..Default::default()
        };
        let a = ExperimentConfig::resolve(base.clone()).unwrap();
        let b = ExperimentConfig::resolve(ConfigFile {
            output_dir: Some("elsewhere".into()),
            ..base.clone()
        })
        .unwrap();
        let c = ExperimentConfig::resolve(ConfigFile {
            precision_bits: Some(256),
            ..base
        })
        .unwrap();
        assert_eq!(a.hash(), b.hash());
        assert_ne!(a.hash(), c.hash());
        assert_eq!(a.hash().len(), 64);
    }

    #[test]
    fn probe_strings() {
        let p = parse_probes("2,0; 0.5,-1.5").unwrap();
        assert_eq!(p, vec![Complex64::new(2.0, 0.0), Complex64::new(0.5, -1.5)]);
        assert!(parse_probes("2").is_err());
        assert!(parse_probes("a,b").is_err());
    }
}
