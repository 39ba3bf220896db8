//! `oddcrit`: build extremal graphs, compute distance spectra, check
//! criticality and sweep spectral conditions over graph corpora.
//!
//! Exit status: 0 affirmative, 1 negative verdict, 2 usage or runtime error.

mod commands;
mod config;
mod report;

use std::io::Write;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};

use config::{Format, Options, RunConfig};
use report::{render, round_floats, write_file, Report};

#[derive(Debug, Parser)]
#[command(name = "oddcrit", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    options: Options,
}

#[derive(Debug, Clone, Copy, Subcommand)]
enum Command {
    /// Structural and spectral summary of a graph
    Analyze,
    /// Build an extremal or proof graph and write it as graph6
    Extremal,
    /// Decide whether G - X has a [1,b]-odd factor for every k-set X
    CheckCritical,
    /// Evaluate a spectral condition on every graph of a corpus
    Verify,
    /// Evaluate a condition on a base graph and its single-edge perturbations
    Sweep,
}

fn emit(mut report: Report, cfg: &RunConfig, out_is_report: bool) -> Result<u8> {
    round_floats(&mut report.json);
    report.rows.iter_mut().for_each(round_floats);
    let mut stdout = std::io::stdout().lock();
    match cfg.format {
        Some(format) => stdout.write_all(render(&report, format)?.as_bytes())?,
        None => stdout.write_all(report.table.as_bytes())?,
    }
    if out_is_report {
        if let Some(path) = &cfg.out {
            write_file(path, &render(&report, cfg.format.unwrap_or(Format::Json))?)?;
        }
    }
    Ok(report.verdict.code())
}

fn run(cli: &Cli) -> Result<u8> {
    let cfg = RunConfig::resolve(&cli.options)?;
    match cli.command {
        Command::Analyze => emit(commands::analyze(&cfg)?, &cfg, true),
        Command::Extremal => {
            let built = commands::extremal(&cfg)?;
            if let Some(path) = &cfg.out {
                write_file(path, &format!("{}\n", built.graph6))?;
            }
            emit(built.report, &cfg, false)
        }
        Command::CheckCritical => emit(commands::check_critical(&cfg)?, &cfg, true),
        Command::Verify => emit(commands::verify(&cfg)?, &cfg, true),
        Command::Sweep => emit(commands::sweep(&cfg)?, &cfg, true),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
