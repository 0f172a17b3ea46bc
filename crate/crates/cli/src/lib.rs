//! Command-line front end: parameter sweeps over the width model and the
//! exact simulator, emitted as CSV or JSON for external plotting.

pub mod commands;
pub mod config;
pub mod table;

use clap::{Parser, Subcommand};
use std::path::PathBuf;
use thiserror::Error;

/// Errors surfaced to the user, partitioned by exit code: validation
/// problems (bad flags, config, input files) exit 1, numerical failures
/// (solver or eigendecomposition breakdown, overflow) exit 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),

    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Numerical(_) => 2,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Validation(format!("i/o error: {e}"))
    }
}

impl From<mqwidth_core::phenomodel::ModelError> for CliError {
    fn from(e: mqwidth_core::phenomodel::ModelError) -> Self {
        use mqwidth_core::phenomodel::ModelError::*;
        match e {
            InvalidParams(_) | InvalidInput(_) => CliError::Validation(e.to_string()),
            _ => CliError::Numerical(e.to_string()),
        }
    }
}

impl From<mqwidth_core::exactspin::SpinError> for CliError {
    fn from(e: mqwidth_core::exactspin::SpinError) -> Self {
        use mqwidth_core::exactspin::SpinError::*;
        match e {
            NotHermitian { .. } | EigenFailure => CliError::Numerical(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

/// Output options shared by every subcommand.
#[derive(Debug, clap::Args)]
pub struct CommonArgs {
    /// Flat key=value config file; flags override its entries
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Write the table to a file instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Output format
    #[arg(long, value_enum)]
    pub format: Option<table::Format>,
}

#[derive(Debug, Parser)]
#[command(name = "mqwidth", version, about = "Multiple-quantum spectrum width model and exact small-cluster simulator")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Effective cluster size versus pumping time
    Fig2(commands::Fig2Args),
    /// Squared decoherence rate versus coherence order
    Fig3(commands::Fig3Args),
    /// Effective cluster size trajectories in reduced time
    Fig4(commands::Fig4Args),
    /// Stabilized cluster size versus perturbation strength
    Fig5(commands::Fig5Args),
    /// Exact coherence-order spectra for a small spin cluster
    Exact(commands::ExactArgs),
    /// Least-squares fits of generated or external tables
    Fit(commands::FitArgs),
}

/// Run a parsed invocation end to end.
pub fn run(cli: Cli) -> Result<(), CliError> {
    let (common, table) = match cli.command {
        Command::Fig2(args) => {
            let t = commands::cmd_fig2(&args)?;
            (args.common, t)
        }
        Command::Fig3(args) => {
            let t = commands::cmd_fig3(&args)?;
            (args.common, t)
        }
        Command::Fig4(args) => {
            let t = commands::cmd_fig4(&args)?;
            (args.common, t)
        }
        Command::Fig5(args) => {
            let t = commands::cmd_fig5(&args)?;
            (args.common, t)
        }
        Command::Exact(args) => {
            let t = commands::cmd_exact(&args)?;
            (args.common, t)
        }
        Command::Fit(args) => {
            let t = commands::cmd_fit(&args)?;
            (args.common, t)
        }
    };
    let cfg = config::Config::load(common.config.as_deref())?;
    let format = match common.format {
        Some(f) => f,
        None => match cfg.get_str("format") {
            Some("json") => table::Format::Json,
            Some("csv") | None => table::Format::Csv,
            Some(other) => {
                return Err(CliError::Validation(format!(
                    "config key 'format' must be csv or json, got {other}"
                )))
            }
        },
    };
    let rendered = table.render(format);
    match &common.out {
        Some(path) => std::fs::write(path, rendered)?,
        None => {
            use std::io::Write;
            std::io::stdout().write_all(rendered.as_bytes())?;
        }
    }
    Ok(())
}
