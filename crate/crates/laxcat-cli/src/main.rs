//! `laxcat`: check presentations, finite categories, monads and laws, and
//! build Gray tensors, classifiers and composites from files.
//!
//! Exit codes: 0 when every law holds, 1 when some law fails or is
//! undecided, 2 when an input cannot be read.

mod commands;
mod docs;
mod terms;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use laxcat::presentation::DEFAULT_BUDGET;
use laxcat::Report;

pub const BUDGET_VAR: &str = "LAXCAT_MAX_REWRITE_STEPS";

#[derive(Debug)]
pub enum CliError {
    Parse(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "{m}"),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "laxcat", version, about = "Law checking for finitely presented 2-categories")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
pub struct Common {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Rewrite budget; overrides LAXCAT_MAX_REWRITE_STEPS.
    #[arg(long, global = true)]
    max_steps: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a presentation, finite category, monad or law file.
    Check { file: PathBuf },
    /// Decide equality of two 2-cells of a presentation.
    Eq { file: PathBuf, lhs: String, rhs: String },
    /// Lax Gray tensor product of two presentations.
    Tensor {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        emit_dot: Option<PathBuf>,
    },
    /// Lax functor classifier of a presentation.
    Classify {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        emit_dot: Option<PathBuf>,
        #[arg(long, default_value_t = laxcat::classifier::DEFAULT_SEQUENCE_BOUND)]
        seq_bound: usize,
    },
    /// Beck's four characterisations of a distributive law.
    Beck {
        #[arg(long)]
        law: PathBuf,
    },
    /// The composite of a generalized distributive law on the terminal base.
    Compose {
        #[arg(long)]
        gamma: PathBuf,
        /// Category file overriding the law's own host.
        #[arg(long)]
        host: Option<PathBuf>,
    },
}

fn budget(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Parse(format!("{BUDGET_VAR} must be a number, got `{v}`"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

/// The report, and an artifact for stdout when no output file was given.
fn run(cli: Cli) -> Result<(Report, Option<String>), CliError> {
    let budget = budget(cli.common.max_steps)?;
    let plain = |r: Result<Report, CliError>| r.map(|r| (r, None));
    match cli.command {
        Command::Check { file } => plain(commands::check(&file)),
        Command::Eq { file, lhs, rhs } => plain(commands::eq(&file, &lhs, &rhs, budget)),
        Command::Tensor { a, b, output, emit_dot } => commands::tensor(&a, &b, output.as_deref(), emit_dot.as_deref()),
        Command::Classify { file, output, emit_dot, seq_bound } => commands::classify(&file, output.as_deref(), emit_dot.as_deref(), seq_bound),
        Command::Beck { law } => plain(commands::beck(&law)),
        Command::Compose { gamma, host } => plain(commands::compose(&gamma, host.as_deref())),
    }
}

fn main() -> ExitCode {
    let echo: Vec<String> = std::iter::once("laxcat".to_string()).chain(std::env::args().skip(1)).collect();
    let cli = Cli::parse();
    let json = cli.common.json;
    let start = Instant::now();
    let (mut report, artifact) = match run(cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    report.notes.insert(0, format!("command: {}", echo.join(" ")));
    let rendered = if json {
        format!("{}\n", serde_json::to_string_pretty(&report.to_json()).expect("serializable"))
    } else {
        report.render_text()
    };
    match artifact {
        Some(a) => {
            print!("{a}");
            eprint!("{rendered}");
        }
        None => print!("{rendered}"),
    }
    eprintln!("elapsed: {} ms", start.elapsed().as_millis());
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
