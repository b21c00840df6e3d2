//! `yq`: verify the defining and derived relations of `Y(q_n)`, or evaluate
//! expressions in PBW normal form.

use std::path::PathBuf;
use std::process;

use clap::{Parser, Subcommand};
use yq_cli::calc::{CalcError, Calculator};
use yq_cli::config::{Format, RunConfig, SuiteName};
use yq_cli::report::{run, write_atomic, ExitCode};
use yq_cli::suites::SuiteError;
use yq_gauss::GaussError;

#[derive(Parser)]
#[command(name = "yq", version, about = "Verifier and calculator for the queer Yangian Y(q_n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and print or write a report.
    Verify {
        /// Rank n.
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Truncation order L (at least 2).
        #[arg(long, default_value_t = 4)]
        order: usize,
        /// Suite to run (repeatable; default: every suite that applies).
        #[arg(long = "suite", value_enum)]
        suites: Vec<SuiteName>,
        /// Worker threads (default: one per core).
        #[arg(long)]
        threads: Option<usize>,
        /// Write the report to this file instead of standard output.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Seed of the randomized rewriting checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Report format.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate an expression and print its normal form.
    Eval {
        /// Expression, e.g. "[t[1,1,1], t[1,2,2]]" or "h[1,2] e[1,2,1]".
        expr: String,
        /// Rank n.
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Truncation order L.
        #[arg(long, default_value_t = 4)]
        order: usize,
    },
}

fn fail(code: ExitCode, msg: impl std::fmt::Display) -> ! {
    eprintln!("yq: {msg}");
    process::exit(code.code())
}

fn verify(config: RunConfig) -> ExitCode {
    if let Err(e) = config.validate() {
        fail(ExitCode::Usage, e);
    }
    if let Some(t) = config.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            fail(ExitCode::Internal, e);
        }
    }
    let report = match run(&config) {
        Ok(r) => r,
        Err(e @ SuiteError::Gauss(GaussError::Precondition(_))) => fail(ExitCode::Precondition, e),
        Err(e) => fail(ExitCode::Internal, e),
    };
    let text = report.render();
    match &config.report {
        Some(path) => {
            if let Err(e) = write_atomic(path, &text) {
                fail(ExitCode::Internal, format!("cannot write {}: {e}", path.display()));
            }
        }
        None => print!("{text}"),
    }
    report.exit_code()
}

fn eval(expr: &str, n: usize, order: usize) -> ExitCode {
    if n == 0 {
        fail(ExitCode::Usage, "--n must be at least 1");
    }
    match Calculator::new(n, order).eval(expr) {
        Ok(v) => {
            println!("{v}");
            ExitCode::Pass
        }
        Err(e @ CalcError::Parse { column, .. }) => {
            eprintln!("{expr}");
            eprintln!("{}^", " ".repeat(column - 1));
            fail(ExitCode::Usage, e)
        }
        Err(e @ CalcError::Range(_)) => fail(ExitCode::Usage, e),
        Err(e @ CalcError::Gauss(_)) => fail(ExitCode::Precondition, e),
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Verify { n, order, suites, threads, report, seed, format } => {
            let mut config = RunConfig::new(n, order, &suites);
            config.threads = threads;
            config.report = report;
            config.seed = seed;
            config.format = format;
            verify(config)
        }
        Command::Eval { expr, n, order } => eval(&expr, n, order),
    };
    process::exit(code.code());
}
