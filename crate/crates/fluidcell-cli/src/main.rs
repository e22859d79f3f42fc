//! `fluidcell`: outage, coverage and capacity for hexagonal cellular
//! downlinks, analytically and by Monte Carlo simulation.
//!
//! Exit codes: 0 on success, 2 for configuration or usage errors, 3 for
//! numeric or output failures.

mod config;
mod csvout;
mod run;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::{ExperimentConfig, Mode};
use run::{CliError, Setup};

#[derive(Parser)]
#[command(
    name = "fluidcell",
    version,
    about = "Downlink outage, coverage and capacity for hexagonal cellular networks"
)]
struct Cli {
    /// JSON experiment config; built-in defaults apply when omitted
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Directory for emitted CSV/SVG files (overrides output.dir)
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Simulation seed (overrides sim.seed)
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads for simulation; defaults to all cores
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Analytic outage curves for the configured non-mc modes
    Analytic,
    /// Monte Carlo outage curves for the configured mc modes
    Simulate {
        /// Also write the raw SINR samples per combination
        #[arg(long)]
        dump_samples: bool,
        /// Also write the station layout
        #[arg(long)]
        dump_layout: bool,
    },
    /// All configured modes plus the pairwise comparison report
    Compare,
    /// Largest serving distance meeting an outage target
    Coverage {
        /// SIR threshold in dB
        #[arg(long, default_value_t = -15.0, allow_negative_numbers = true)]
        delta_db: f64,
        /// Outage probability target in (0, 1]
        #[arg(long, default_value_t = 0.1)]
        p_target: f64,
    },
    /// Mean spectral efficiency for the configured analytic modes
    Capacity,
    /// Matched-lognormal moments versus shadowing spread
    MfSweep {
        #[arg(long, default_value_t = 15.0)]
        sigma_max_db: f64,
        #[arg(long, default_value_t = 0.5)]
        sigma_step_db: f64,
    },
    /// Full reference suite: comparison, moment sweep, coverage, capacity
    ReproducePaper,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(CliError::Config("--threads must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Runtime(format!("thread pool: {e}")))?;
    }

    let mut cfg = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                CliError::Config(format!("cannot read {}: {e}", path.display()))
            })?;
            config::parse_config(&text)
                .map_err(|m| CliError::Config(format!("{}: {m}", path.display())))?
        }
        None => match cli.cmd {
            Cmd::ReproducePaper => ExperimentConfig::canonical(),
            _ => ExperimentConfig::default(),
        },
    };
    if let Some(seed) = cli.seed {
        cfg.sim.seed = seed;
    }
    let out_dir = cli
        .out
        .clone()
        .unwrap_or_else(|| PathBuf::from(&cfg.output.dir));

    let setup = Setup::new(cfg, out_dir)?;
    match cli.cmd {
        Cmd::Analytic => {
            let modes: Vec<Mode> = setup
                .cfg
                .modes
                .iter()
                .copied()
                .filter(|m| !m.is_mc())
                .collect();
            run::run_experiment(&setup, &modes, false, false)
        }
        Cmd::Simulate {
            dump_samples,
            dump_layout,
        } => {
            let modes: Vec<Mode> = setup
                .cfg
                .modes
                .iter()
                .copied()
                .filter(|m| m.is_mc())
                .collect();
            run::run_experiment(&setup, &modes, dump_samples, dump_layout)
        }
        Cmd::Compare => run::run_experiment(&setup, &setup.cfg.modes.clone(), false, false),
        Cmd::Coverage { delta_db, p_target } => run::run_coverage(&setup, delta_db, p_target),
        Cmd::Capacity => run::run_capacity(&setup),
        Cmd::MfSweep {
            sigma_max_db,
            sigma_step_db,
        } => run::run_mf_sweep(&setup, sigma_max_db, sigma_step_db),
        Cmd::ReproducePaper => run::run_reproduce(&setup),
    }
}
