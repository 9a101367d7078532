//! Run configuration: defaults, a `key = value` file, then command-line flags.

use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Subcommand {
    VerifyGenus1,
    CocycleCheck,
    Goldman,
    SampleReps,
    PlotData,
}

impl Subcommand {
    pub fn name(&self) -> &'static str {
        match self {
            Subcommand::VerifyGenus1 => "verify-genus1",
            Subcommand::CocycleCheck => "cocycle-check",
            Subcommand::Goldman => "goldman",
            Subcommand::SampleReps => "sample-reps",
            Subcommand::PlotData => "plot-data",
        }
    }

    pub fn is_randomized(&self) -> bool {
        !matches!(self, Subcommand::PlotData)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub subcommand: Subcommand,
    pub seed: Option<u64>,
    /// Lattice grid size `N` (also the curvature quadrature grid).
    pub grid: usize,
    /// Slab grid `(nt, nx, ny)` for the numeric cocycle.
    pub slab_grid: (usize, usize, usize),
    pub genus: usize,
    pub samples: usize,
    /// Largest `|m|`, `|n|` in the cocycle check.
    pub max_mn: i64,
    /// Random points per character in the cocycle check.
    pub points: usize,
    /// Trials in the identity and coboundary batteries.
    pub trials: usize,
    /// Overrides every per-check tolerance when set.
    pub tol: Option<f64>,
    pub out: Option<PathBuf>,
    pub input: Option<PathBuf>,
    pub format: OutputFormat,
    /// `+1` or `−1`.
    pub orientation: i8,
    pub verbosity: u8,
    /// File the values were read from, if any.
    pub config_file: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(subcommand: Subcommand) -> Self {
        RunConfig {
            subcommand,
            seed: Some(7),
            grid: 8,
            slab_grid: (32, 8, 8),
            genus: match subcommand {
                Subcommand::SampleReps => 2,
                _ => 1,
            },
            samples: match subcommand {
                Subcommand::SampleReps => 100,
                Subcommand::Goldman => 50,
                _ => 100,
            },
            max_mn: 3,
            points: 20,
            trials: 100,
            tol: None,
            out: None,
            input: None,
            format: OutputFormat::Json,
            orientation: 1,
            verbosity: 0,
            config_file: None,
        }
    }

    /// `tol` if set, otherwise the check's own default.
    pub fn tolerance(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }

    /// Sets one key; keys use `_` or `-` interchangeably.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        let bad = |what: &str| CliError::Config(format!("invalid {what} value {value:?} for key {key:?}"));
        let value = value.trim();
        match key.trim().replace('-', "_").as_str() {
            "seed" => self.seed = Some(value.parse().map_err(|_| bad("integer"))?),
            "grid" => self.grid = value.parse().map_err(|_| bad("integer"))?,
            "slab_grid" => self.slab_grid = parse_slab_grid(value)?,
            "genus" => self.genus = value.parse().map_err(|_| bad("integer"))?,
            "samples" => self.samples = value.parse().map_err(|_| bad("integer"))?,
            "max_mn" => self.max_mn = value.parse().map_err(|_| bad("integer"))?,
            "points" => self.points = value.parse().map_err(|_| bad("integer"))?,
            "trials" => self.trials = value.parse().map_err(|_| bad("integer"))?,
            "tol" => self.tol = Some(value.parse().map_err(|_| bad("number"))?),
            "out" => self.out = Some(PathBuf::from(value)),
            "input" => self.input = Some(PathBuf::from(value)),
            "format" => {
                self.format = match value {
                    "json" => OutputFormat::Json,
                    "csv" => OutputFormat::Csv,
                    _ => return Err(bad("format")),
                }
            }
            "orientation" => self.orientation = parse_orientation(value)?,
            "verbose" | "verbosity" => self.verbosity = value.parse().map_err(|_| bad("integer"))?,
            other => return Err(CliError::Config(format!("unknown config key {other:?}"))),
        }
        Ok(())
    }

    /// Applies a `key = value` document; `#` starts a comment.
    pub fn apply_text(&mut self, text: &str) -> Result<(), CliError> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Config(format!("line {}: expected key = value, got {raw:?}", lineno + 1))
            })?;
            self.set(key, value)?;
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> Result<(), CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        self.apply_text(&text)?;
        self.config_file = Some(path.to_path_buf());
        Ok(())
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.subcommand.is_randomized() && self.seed.is_none() {
            return Err(CliError::Config(format!("{} needs a seed", self.subcommand.name())));
        }
        if let Some(t) = self.tol {
            if !(t > 0.0 && t.is_finite()) {
                return Err(CliError::Config(format!("tolerance must be positive, got {t}")));
            }
        }
        if self.grid == 0 {
            return Err(CliError::Config("grid must be positive".into()));
        }
        if self.orientation != 1 && self.orientation != -1 {
            return Err(CliError::Config(format!("orientation must be +1 or -1, got {}", self.orientation)));
        }
        if self.max_mn < 0 {
            return Err(CliError::Config("max_mn must be non-negative".into()));
        }
        match self.subcommand {
            Subcommand::Goldman | Subcommand::SampleReps if self.genus == 0 => {
                Err(CliError::Config("genus must be at least 1".into()))
            }
            Subcommand::SampleReps if self.out.is_none() => {
                Err(CliError::Usage("sample-reps needs --out <file>".into()))
            }
            Subcommand::PlotData if self.out.is_none() => {
                Err(CliError::Usage("plot-data needs --out <directory>".into()))
            }
            _ => Ok(()),
        }
    }
}

pub fn parse_slab_grid(s: &str) -> Result<(usize, usize, usize), CliError> {
    let parts: Vec<&str> = s.split(['x', 'X', ',']).map(str::trim).collect();
    let parsed: Option<Vec<usize>> = parts.iter().map(|p| p.parse().ok()).collect();
    match parsed.as_deref() {
        Some([n]) => Ok((*n, *n, *n)),
        Some([t, x, y]) => Ok((*t, *x, *y)),
        _ => Err(CliError::Config(format!("slab grid must be N or NTxNXxNY, got {s:?}"))),
    }
}

pub fn parse_orientation(s: &str) -> Result<i8, CliError> {
    match s.trim() {
        "+" | "+1" | "1" | "positive" => Ok(1),
        "-" | "-1" | "negative" => Ok(-1),
        other => Err(CliError::Config(format!("orientation must be + or -, got {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_then_override() {
        let mut cfg = RunConfig::new(Subcommand::VerifyGenus1);
        cfg.apply_text("# comment\nseed = 11\nslab-grid = 16x8x8\norientation = -\n\n").unwrap();
        assert_eq!(cfg.seed, Some(11));
        assert_eq!(cfg.slab_grid, (16, 8, 8));
        assert_eq!(cfg.orientation, -1);
        cfg.set("seed", "3").unwrap();
        assert_eq!(cfg.seed, Some(3));
    }

    #[test]
    fn rejections() {
        let mut cfg = RunConfig::new(Subcommand::Goldman);
        assert!(cfg.apply_text("nonsense").is_err());
        assert!(cfg.set("colour", "red").is_err());
        assert!(cfg.set("tol", "abc").is_err());
        cfg.tol = Some(-1.0);
        assert!(matches!(cfg.validate(), Err(CliError::Config(_))));
        cfg.tol = None;
        cfg.genus = 0;
        assert!(matches!(cfg.validate(), Err(CliError::Config(_))));
        cfg.genus = 2;
        cfg.seed = None;
        assert!(cfg.validate().is_err());
        let plot = RunConfig::new(Subcommand::PlotData);
        assert!(matches!(plot.validate(), Err(CliError::Usage(_))));
    }

    #[test]
    fn slab_grid_forms() {
        assert_eq!(parse_slab_grid("32").unwrap(), (32, 32, 32));
        assert_eq!(parse_slab_grid("32,8,8").unwrap(), (32, 8, 8));
        assert!(parse_slab_grid("3x4").is_err());
    }
}
