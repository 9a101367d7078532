use clap::{Args, Parser, Subcommand as ClapSubcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

use csline_cli::config::{parse_orientation, parse_slab_grid};
use csline_cli::{run, CliError, OutputFormat, RunConfig, Subcommand};

#[derive(Parser)]
#[command(name = "csline", version, about = "Numerical checks for the Chern-Simons line bundle on SU(2) moduli spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(ClapSubcommand)]
enum Command {
    /// Curvature, Chern numbers, covering degree and the degree of the line bundle.
    VerifyGenus1(Common),
    /// Numeric Chern-Simons cocycle against the closed form.
    CocycleCheck(Common),
    /// Twisted cohomology and the symplectic pairing.
    Goldman(Common),
    /// Sample flat representations into a JSON dataset.
    SampleReps(Common),
    /// Emit CSV and SVG plot data.
    PlotData(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct Common {
    /// key = value configuration file; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    /// Lattice and quadrature grid size.
    #[arg(long)]
    grid: Option<usize>,
    /// Slab grid as N or NTxNXxNY.
    #[arg(long)]
    slab_grid: Option<String>,
    #[arg(long)]
    genus: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
    /// Largest |m|, |n| for the cocycle check.
    #[arg(long)]
    max_mn: Option<i64>,
    /// Random points per character for the cocycle check.
    #[arg(long)]
    points: Option<usize>,
    /// Trials for the identity and coboundary batteries.
    #[arg(long)]
    trials: Option<usize>,
    /// Tolerance replacing every per-check default.
    #[arg(long)]
    tol: Option<f64>,
    /// Output file (sample-reps) or directory (other commands).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Representation dataset for plot-data.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// + or -.
    #[arg(long, allow_hyphen_values = true)]
    orientation: Option<String>,
    #[arg(short, action = clap::ArgAction::Count)]
    verbose: u8,
}

fn build_config(sub: Subcommand, c: Common) -> Result<RunConfig, CliError> {
    let mut cfg = RunConfig::new(sub);
    if let Some(path) = &c.config {
        cfg.apply_file(path)?;
    }
    if let Some(v) = c.seed {
        cfg.seed = Some(v);
    }
    if let Some(v) = c.grid {
        cfg.grid = v;
    }
    if let Some(v) = &c.slab_grid {
        cfg.slab_grid = parse_slab_grid(v)?;
    }
    if let Some(v) = c.genus {
        cfg.genus = v;
    }
    if let Some(v) = c.samples {
        cfg.samples = v;
    }
    if let Some(v) = c.max_mn {
        cfg.max_mn = v;
    }
    if let Some(v) = c.points {
        cfg.points = v;
    }
    if let Some(v) = c.trials {
        cfg.trials = v;
    }
    if let Some(v) = c.tol {
        cfg.tol = Some(v);
    }
    if let Some(v) = c.out {
        cfg.out = Some(v);
    }
    if let Some(v) = c.input {
        cfg.input = Some(v);
    }
    if let Some(f) = c.format {
        cfg.format = match f {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
        };
    }
    if let Some(o) = &c.orientation {
        cfg.orientation = parse_orientation(o)?;
    }
    if c.verbose > 0 {
        cfg.verbosity = c.verbose;
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (sub, common) = match cli.command {
        Command::VerifyGenus1(c) => (Subcommand::VerifyGenus1, c),
        Command::CocycleCheck(c) => (Subcommand::CocycleCheck, c),
        Command::Goldman(c) => (Subcommand::Goldman, c),
        Command::SampleReps(c) => (Subcommand::SampleReps, c),
        Command::PlotData(c) => (Subcommand::PlotData, c),
    };
    let result = build_config(sub, common).and_then(|cfg| run(&cfg).map(|o| (cfg, o)));
    match result {
        Ok((cfg, outcome)) => {
            println!("{}", outcome.render(cfg.format).trim_end());
            for f in &outcome.files {
                if cfg.verbosity > 0 {
                    eprintln!("wrote {}", f.display());
                }
            }
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
