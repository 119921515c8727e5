//! `qtraj` command-line front end: runs the core pipelines and writes
//! plot-ready CSV or JSON.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod commands;
pub mod config;
pub mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};

use clap::Parser;

use commands::Command;
use config::{Layer, RunConfig};
use output::{emit, trajectory_rows, write_csv, write_json, Document, Units};

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Validation(String),
    Numerical(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Numerical(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Validation(m) => write!(f, "invalid configuration: {m}"),
            CliError::Numerical(m) => write!(f, "numerical failure: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "qtraj",
    version,
    about = "Complex quantum trajectories and reflection probabilities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Optional `key = value` file; flags take precedence over it.
    #[arg(long, global = true)]
    pub config: Option<String>,
    #[command(flatten)]
    pub flags: Layer,
}

fn thread_pool() -> Result<(), CliError> {
    let Ok(v) = std::env::var("QTRAJ_THREADS") else {
        return Ok(());
    };
    let n: usize = v.trim().parse().ok().filter(|n| *n > 0).ok_or_else(|| {
        CliError::Validation(format!("QTRAJ_THREADS must be a positive integer, got {v}"))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .or(Ok(()))
}

fn document<T>(command: &str, cfg: &RunConfig, records: Vec<T>) -> Document<T> {
    Document {
        command: command.to_string(),
        config: cfg.clone(),
        units: Units::default(),
        records,
        landmarks: None,
    }
}

/// Runs a parsed command line. `Ok(true)` means output was written but at
/// least one row failed.
pub fn run(cli: Cli) -> Result<bool, CliError> {
    thread_pool()?;
    let file = match &cli.config {
        Some(path) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
            Layer::parse_file(&text)?
        }
        None => Layer::default(),
    };
    let cfg = RunConfig::resolve(cli.flags.over(file))?;
    let name = cli.command.name().to_string();

    let out: Box<dyn Write> = match &cfg.out {
        Some(path) => {
            Box::new(File::create(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?)
        }
        None => Box::new(io::stdout().lock()),
    };
    let mut w = BufWriter::new(out);
    let failed = match cli.command {
        Command::Potential => {
            let rows = commands::potential(&cfg)?;
            emit(
                &mut w,
                cfg.format,
                &document(&name, &cfg, rows),
                commands::POTENTIAL_HEADER,
            )?;
            false
        }
        Command::Reflection | Command::Sweep => {
            if cli.command == Command::Reflection && cfg.energies.len() != 1 {
                return Err(CliError::Validation(
                    "reflection needs a single --energy".into(),
                ));
            }
            let (rows, failed) = commands::sweep(&cfg);
            emit(
                &mut w,
                cfg.format,
                &document(&name, &cfg, rows),
                commands::REFLECTION_HEADER,
            )?;
            failed
        }
        Command::GammaBeta => {
            let (rows, failed) = commands::gamma_beta(&cfg);
            emit(
                &mut w,
                cfg.format,
                &document(&name, &cfg, rows),
                commands::GAMMA_BETA_HEADER,
            )?;
            failed
        }
        Command::Trajectories => {
            let (records, landmarks) = commands::trajectories(&cfg)?;
            match cfg.format {
                config::Format::Csv => {
                    let rows = trajectory_rows(&records, &landmarks);
                    write_csv(&mut w, &name, &cfg, commands::TRAJECTORY_HEADER, &rows)?;
                }
                config::Format::Json => {
                    let mut d = document(&name, &cfg, records);
                    d.landmarks = Some(landmarks);
                    write_json(&mut w, &d)?;
                }
            }
            false
        }
    };
    w.flush().map_err(|e| CliError::Io(e.to_string()))?;
    Ok(failed)
}
