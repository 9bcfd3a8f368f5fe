//! `annular-nc`: enumerate, verify and export annular non-crossing posets.
//!
//! Exit status: 0 on success, 1 when a verification or membership check is
//! negative, 2 on usage, bound or parse errors.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use annular_nc::annular::{VerifyOptions, DEFAULT_BOUND, MAX_BOUND};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "annular-nc", version, about = "Annular non-crossing permutations and partitions of types B and D")]
struct Cli {
    /// Largest rank n = p + q for exhaustive computations, at most 6.
    /// Verifiers default to 5; enumeration and export default to 6.
    #[arg(long, global = true, env = "ANNULAR_NC_BOUND")]
    bound: Option<usize>,

    /// Write the result here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Annulus {
    /// Points on the outer circle.
    #[arg(short)]
    p: usize,
    /// Points on the inner circle.
    #[arg(short)]
    q: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the elements of an annular poset in canonical order.
    Enumerate {
        #[arg(long = "type", value_enum)]
        kind: ListKind,
        #[command(flatten)]
        annulus: Annulus,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run an exhaustive verifier and print its report.
    Verify {
        #[arg(value_enum)]
        theorem: Theorem,
        #[arg(short)]
        p: Option<usize>,
        #[arg(short)]
        q: Option<usize>,
        #[arg(short)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Export a Hasse diagram.
    Hasse {
        #[arg(long, value_enum)]
        poset: PosetKind,
        #[command(flatten)]
        annulus: Annulus,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Reproduce the four-partition configuration showing NC^B(p,q) is not a lattice.
    Counterexample {
        #[arg(short, default_value_t = 2)]
        p: usize,
        #[arg(short, default_value_t = 2)]
        q: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Test a permutation for membership in S^B_nc(p,q).
    Check {
        /// Cycle notation; mirror cycles are added automatically.
        perm: String,
        #[command(flatten)]
        annulus: Annulus,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum ListKind {
    #[value(name = "B-perm")]
    BPerm,
    #[value(name = "B-part")]
    BPart,
    #[value(name = "D-perm")]
    DPerm,
    #[value(name = "D-part")]
    DPart,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Theorem {
    T1,
    T2,
    T3,
    D,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum PosetKind {
    Ncb,
    Ncd,
    Interval,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Dot,
}

/// What a command produced: its output and whether the check it ran held.
struct Outcome {
    text: String,
    passed: bool,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Library(annular_nc::Error),
    Io(std::io::Error),
}

impl From<annular_nc::Error> for CliError {
    fn from(e: annular_nc::Error) -> Self {
        CliError::Library(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Library(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let opts = VerifyOptions::new(cli.bound.unwrap_or(DEFAULT_BOUND))?;
    let listing = VerifyOptions::new(cli.bound.unwrap_or(MAX_BOUND))?;
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    match cli.command {
        Command::Enumerate { kind, annulus, format } => commands::enumerate(kind, annulus, format, &listing),
        Command::Verify { theorem, p, q, n, format } => commands::verify(theorem, p, q, n, format, &opts),
        Command::Hasse { poset, annulus, format } => commands::hasse(poset, annulus, format, &listing),
        Command::Counterexample { p, q, format } => commands::counterexample(p, q, format),
        Command::Check { perm, annulus, format } => commands::check(&perm, annulus, format),
    }
}

fn emit(text: &str, path: Option<&PathBuf>) -> Result<(), CliError> {
    match path {
        Some(path) => std::fs::write(path, text).map_err(CliError::Io),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(CliError::Io)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let output = cli.output.clone();
    let result = run(cli).and_then(|outcome| {
        emit(&outcome.text, output.as_ref())?;
        Ok(outcome.passed)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
