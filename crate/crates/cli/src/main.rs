//! `igraphs`: census tables, density reports and oracle checks for I-graphs.
//!
//! Exit codes: 0 success, 1 a verify suite failed (or output could not be
//! written), 2 invalid arguments.

mod commands;
mod config;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use igraphs::graph::ExportFormat;
use igraphs::{Convention, FactorSieve};
use thiserror::Error;

use config::{Command, DensityMode, RunConfig, VerifySuite, DEFAULT_SIEVE_LIMIT, SIEVE_LIMIT_ENV};
use output::OutputFormat;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Parser, Debug)]
#[command(name = "igraphs", version, about = "I-graph census, density reports and oracle checks")]
struct Cli {
    /// Largest n (or N) to process.
    #[arg(long, global = true, default_value_t = 10_000)]
    max_n: u64,
    /// Smallest-prime-factor sieve size.
    #[arg(long, global = true, env = SIEVE_LIMIT_ENV, default_value_t = DEFAULT_SIEVE_LIMIT)]
    sieve_limit: u64,
    #[arg(long, global = true, value_enum, default_value_t = ConventionArg::Strict)]
    convention: ConventionArg,
    /// csv, json or table; for `graph`, edgelist or dot.
    #[arg(long, global = true)]
    format: Option<String>,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Largest n for brute-force class enumeration.
    #[arg(long, global = true, default_value_t = 16)]
    brute_cap: u64,
    #[command(subcommand)]
    command: CommandArg,
}

#[derive(Subcommand, Debug)]
enum CommandArg {
    /// Per-n class counts I(n), I_c(n), P(n) with running sums.
    Census,
    /// Density ratios against their limit constants at decades up to --max-n.
    Density {
        #[arg(value_enum, default_value_t = ModeArg::Tuples)]
        mode: ModeArg,
    },
    /// Run an oracle suite; exits 1 if any check fails.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
    },
    /// Emit I(n, j, k) as an edge list or DOT.
    Graph { n: u64, j: u64, k: u64 },
    /// Limit constants to 10 decimals.
    Constants,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConventionArg {
    Strict,
    Inclusive,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Tuples,
    Classes,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Brute,
    Sums,
    Dirichlet,
    Roots,
}

fn build_config(cli: Cli) -> Result<RunConfig, CliError> {
    let command = match cli.command {
        CommandArg::Census => Command::Census,
        CommandArg::Density { mode } => Command::Density(match mode {
            ModeArg::Tuples => DensityMode::Tuples,
            ModeArg::Classes => DensityMode::Classes,
        }),
        CommandArg::Verify { suite } => Command::Verify(match suite {
            SuiteArg::Brute => VerifySuite::Brute,
            SuiteArg::Sums => VerifySuite::Sums,
            SuiteArg::Dirichlet => VerifySuite::Dirichlet,
            SuiteArg::Roots => VerifySuite::Roots,
        }),
        CommandArg::Graph { n, j, k } => Command::Graph { n, j, k },
        CommandArg::Constants => Command::Constants,
    };
    let output_format = match (&command, cli.format.as_deref()) {
        (Command::Graph { .. }, _) | (_, None) => OutputFormat::Csv,
        (_, Some(f)) => f.parse().map_err(CliError::Validation)?,
    };
    let config = RunConfig {
        command,
        max_n: cli.max_n,
        convention: match cli.convention {
            ConventionArg::Strict => Convention::Strict,
            ConventionArg::Inclusive => Convention::Inclusive,
        },
        output_format,
        output_path: cli.out,
        sieve_limit: cli.sieve_limit,
        brute_cap: cli.brute_cap,
    };
    // Graph and constants ignore the range settings.
    if !matches!(config.command, Command::Graph { .. } | Command::Constants) {
        config.validate().map_err(CliError::Validation)?;
    }
    Ok(config)
}

fn emit(config: &RunConfig, text: &str) -> Result<(), CliError> {
    match &config.output_path {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn sieve_for(config: &RunConfig) -> Result<FactorSieve, CliError> {
    // Only as large as the run needs; --sieve-limit is the ceiling.
    FactorSieve::new(config.max_n.max(2)).map_err(|e| CliError::Validation(e.to_string()))
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let graph_format = cli.format.clone();
    let config = build_config(cli)?;
    match config.command {
        Command::Census => {
            let table = commands::census(&config, &sieve_for(&config)?)?;
            emit(&config, &table.render(config.output_format))?;
        }
        Command::Density(mode) => {
            let table = commands::density(&config, mode, &sieve_for(&config)?)?;
            emit(&config, &table.render(config.output_format))?;
        }
        Command::Verify(suite) => {
            let report = commands::verify(&config, suite, &sieve_for(&config)?)?;
            emit(&config, &report.render())?;
            return Ok(report.passed);
        }
        Command::Graph { n, j, k } => {
            let format: ExportFormat = graph_format
                .as_deref()
                .unwrap_or("edgelist")
                .parse()
                .map_err(|e: igraphs::graph::GraphError| CliError::Validation(e.to_string()))?;
            emit(&config, &commands::graph(n, j, k, format)?)?;
        }
        Command::Constants => {
            emit(&config, &commands::constants().render(config.output_format))?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                CliError::Validation(_) => 2,
                CliError::Io(_) => 1,
            })
        }
    }
}
