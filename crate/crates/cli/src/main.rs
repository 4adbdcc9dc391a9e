//! `bethe`: exact certificates for Bethe subalgebras of Y(gl2) on evaluation modules.
//!
//! Exit codes: 0 success, 2 config error, 3 budget exceeded, 4 certificate failure,
//! 5 hypothesis violation, 1 anything else.

mod commands;
mod config;
mod error;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bethe_core::bethe::GridSpec;
use bethe_core::shapovalov::DetMode;

use config::{scalar, ConfigFile};
use error::CliError;

#[derive(Parser)]
#[command(name = "bethe", version, about = "Exact certificates for Bethe subalgebras of Y(gl2)")]
struct Cli {
    /// JSON config document; explicit flags override its fields.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Symbolic,
    Interpolated,
}

#[derive(Subcommand)]
enum Command {
    /// Check the defining relations and qdet centrality at random spectral parameters.
    VerifyRtt {
        /// Factors such as "(1,0),(3,2)" or "M(1/2,3;4),M(0,-1;4)".
        #[arg(long)]
        factors: Option<String>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Compare the determinant of the Shapovalov-type matrix with the product formula.
    Shapovalov {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_enum)]
        mode: Option<Mode>,
    },
    /// Certify simple spectrum and tabulate eigenlines of B(diag(c1, c2)) over a grid in RP^1.
    SpectrumScan {
        #[arg(long)]
        factors: Option<String>,
        /// Points [1:t] for `count` values of t evenly spaced in [from, to].
        #[arg(long)]
        count: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        from: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        to: Option<String>,
        #[arg(long)]
        tol: Option<f64>,
        /// Write the eigenline flow table here.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Build the form induced by tau on string blocks and certify unitarity.
    Unitary {
        /// Blocks such as "(3,2),(1,0)".
        #[arg(long)]
        blocks: Option<String>,
    },
    /// Whether B(x) has a cyclic vector: the highest-weight one or a random one.
    Cyclic {
        #[arg(long)]
        factors: Option<String>,
        /// C as "x11,x12,x21,x22".
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
        /// Exceptional coordinates "y0,y1,y2", required when C is scalar.
        #[arg(long, allow_hyphen_values = true)]
        y: Option<String>,
        /// Restrict to basis vectors of total grade at most this (truncated factors).
        #[arg(long)]
        grade: Option<usize>,
        /// Test the highest-weight vector or a random one.
        #[arg(long, value_enum)]
        vector: Option<Vector>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Vector {
    HighestWeight,
    Generic,
}

fn chart(count: Option<usize>, from: Option<String>, to: Option<String>) -> Result<Option<GridSpec>, CliError> {
    if count.is_none() && from.is_none() && to.is_none() {
        return Ok(None);
    }
    Ok(Some(GridSpec::Chart {
        count: count.unwrap_or(11),
        from: scalar(from.as_deref().unwrap_or("-4"))?,
        to: scalar(to.as_deref().unwrap_or("6"))?,
    }))
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let file = match &cli.config {
        Some(p) => ConfigFile::load(p)?,
        None => ConfigFile::default(),
    };
    let name = match &cli.command {
        Command::VerifyRtt { .. } => "verify-rtt",
        Command::Shapovalov { .. } => "shapovalov",
        Command::SpectrumScan { .. } => "spectrum-scan",
        Command::Unitary { .. } => "unitary",
        Command::Cyclic { .. } => "cyclic",
    };
    if let Some(c) = file.command.as_deref().filter(|&c| c != name) {
        return Err(CliError::Parse(format!("config is for {c:?}, not {name:?}")));
    }
    let outcome = match cli.command {
        Command::VerifyRtt { factors, samples, seed } => commands::verify_rtt(factors.as_deref(), samples, seed, &file)?,
        Command::Shapovalov { n, m, mode } => {
            let mode = mode.map(|m| match m {
                Mode::Symbolic => DetMode::Symbolic,
                Mode::Interpolated => DetMode::Interpolated,
            });
            commands::shapovalov(n, m, mode, &file)?
        }
        Command::SpectrumScan { factors, count, from, to, tol, csv } => {
            commands::spectrum_scan(factors.as_deref(), chart(count, from, to)?, tol, csv, &file)?
        }
        Command::Unitary { blocks } => commands::unitary(blocks.as_deref(), &file)?,
        Command::Cyclic { factors, c, y, grade, vector } => {
            let vector = vector.map(|v| match v {
                Vector::HighestWeight => commands::TestVector::HighestWeight,
                Vector::Generic => commands::TestVector::Generic,
            });
            commands::cyclic(factors.as_deref(), c.as_deref(), y.as_deref(), grade, vector, &file)?
        }
    };
    if let Some((path, text)) = &outcome.csv {
        output::write_atomic(path, text)?;
    }
    let text = serde_json::to_string_pretty(&outcome.report).map_err(|e| CliError::Compute(e.to_string()))?;
    match cli.out.or(file.out) {
        Some(path) => output::write_atomic(&path, &(text + "\n"))?,
        None => {
            // a closed pipe is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{text}");
        }
    }
    Ok(outcome.exit)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
