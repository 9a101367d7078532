//! Verification pipelines behind the `csline` command-line tool.
//!
//! Each subcommand takes a [`RunConfig`] and produces a [`VerificationReport`];
//! [`run`] dispatches on the subcommand and writes any requested files.

pub mod commands;
pub mod config;
pub mod error;
pub mod report;

use std::path::PathBuf;

pub use commands::{cmd_cocycle_check, cmd_goldman, cmd_plot_data, cmd_sample_reps, cmd_verify_genus1};
pub use config::{OutputFormat, RunConfig, Subcommand};
pub use error::CliError;
pub use report::{CheckRecord, Comparison, Quantity, VerificationReport};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: VerificationReport,
    pub files: Vec<PathBuf>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.report.passed() {
            EXIT_PASS
        } else {
            EXIT_CHECK_FAILED
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => self.report.to_json(),
            OutputFormat::Csv => self.report.to_csv(),
        }
    }
}

fn write(path: PathBuf, contents: &str) -> Result<PathBuf, CliError> {
    std::fs::write(&path, contents).map_err(|e| CliError::io(&path, e))?;
    Ok(path)
}

/// Runs the configured subcommand. For the verification commands `out` is a
/// directory that receives the report (and the pairing matrix for `goldman`).
pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let (report, mut files, extra) = match cfg.subcommand {
        Subcommand::VerifyGenus1 => (cmd_verify_genus1(cfg)?, Vec::new(), None),
        Subcommand::CocycleCheck => (cmd_cocycle_check(cfg)?, Vec::new(), None),
        Subcommand::Goldman => {
            let g = cmd_goldman(cfg)?;
            (g.report, Vec::new(), Some(g.pairing_csv))
        }
        Subcommand::SampleReps => {
            let files = cfg.out.iter().cloned().collect();
            return Ok(Outcome {
                report: cmd_sample_reps(cfg)?,
                files,
            });
        }
        Subcommand::PlotData => {
            let p = cmd_plot_data(cfg)?;
            return Ok(Outcome {
                report: p.report,
                files: p.files,
            });
        }
    };
    if let Some(dir) = &cfg.out {
        std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
        let (name, body) = match cfg.format {
            OutputFormat::Json => ("report.json", report.to_json()),
            OutputFormat::Csv => ("report.csv", report.to_csv()),
        };
        files.push(write(dir.join(name), &body)?);
        if let Some(csv) = extra.filter(|c| !c.is_empty()) {
            files.push(write(dir.join("pairing.csv"), &csv)?);
        }
    }
    Ok(Outcome { report, files })
}
