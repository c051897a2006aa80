//! `tricut`: command-line access to the trigraph toolkit.
//!
//! Exit status is 0 when every check passes, 1 when a mathematical check
//! fails (the offending object is part of the output) and 2 on usage or
//! input errors.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use input::Split;

#[derive(Parser, Debug)]
#[command(
    name = "tricut",
    version,
    about = "Exact cut and extremal checks for triangle-free trigraphs"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Worker threads for sweeps; output does not depend on it.
    #[arg(long, env = "TRICUT_JOBS", global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Input file; `-` or absent reads standard input. Trigraph JSON,
    /// graph6 and edge lists are told apart automatically.
    input: Option<PathBuf>,

    /// How a plain graph is turned into a trigraph.
    #[arg(long, value_enum, default_value_t = Split::All)]
    split: Split,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the trigraph axioms and list every violation.
    Validate(InputArgs),
    /// Configuration sums, Cauchy-Schwarz slacks, the quadruple-sum identity
    /// and the weight total F.
    Counts(InputArgs),
    /// Run or evaluate the recursive cut procedure.
    Cut {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = CutMode::Random)]
        mode: CutMode,
        /// Seed for `--mode random`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Include the step-by-step trace.
        #[arg(long)]
        trace: bool,
    },
    /// Brute-force graph parameters with a witness.
    Oracle {
        /// Graph file (graph6 or edge list); `-` or absent reads standard input.
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        what: OracleKind,
    },
    /// Exhaustive verification over all graphs (or trigraphs) on n vertices.
    Sweep {
        #[arg(long)]
        n: usize,
        /// Sweep trigraphs instead of graphs (n <= 5).
        #[arg(long)]
        trigraphs: bool,
        /// One graph per isomorphism class.
        #[arg(long)]
        canonical: bool,
        /// Allow the n = 7 graph sweep.
        #[arg(long)]
        long: bool,
    },
    /// Minimum of tau_2 / tau_1 over graphs with a triangle, up to n vertices.
    ScanCtau {
        #[arg(long)]
        n: usize,
    },
    /// Emit a generated graph (graph6) or C-join trigraph (JSON).
    Gen {
        #[command(flatten)]
        what: GenWhat,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test a graph for equality in alpha_1 + tau_B <= n^2/4, or a trigraph
    /// for equality in E[bar e] + |S| <= n^2/4, and recognise the extremal
    /// shape.
    CheckExtremal {
        /// Graph or trigraph file; `-` or absent reads standard input.
        input: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CutMode {
    Random,
    Derandomized,
    ExactE,
    Distribution,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleKind {
    Alpha1,
    Taub,
    Tau1,
    Tau2,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GenWhat {
    /// Join of complete balanced bipartite graphs, e.g. `2,1`.
    #[arg(long, value_name = "SPEC")]
    join: Option<String>,
    /// C-join trigraph of complete balanced bipartite trigraphs.
    #[arg(long, value_name = "SPEC")]
    cjoin: Option<String>,
    /// The Clebsch graph.
    #[arg(long)]
    clebsch: bool,
}

/// Standard output payload and exit status of a successful run.
pub struct Outcome {
    pub stdout: String,
    pub failed: bool,
}

fn run(cli: Cli) -> Result<Outcome, String> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .map_err(|e| format!("cannot start {jobs} workers: {e}"))?;
    }
    let format = cli.format;
    match cli.command {
        Command::Validate(a) => commands::validate(a.input.as_deref(), a.split, format),
        Command::Counts(a) => commands::counts(a.input.as_deref(), a.split, format),
        Command::Cut {
            input,
            mode,
            seed,
            trace,
        } => commands::cut(input.input.as_deref(), input.split, mode, seed, trace, format),
        Command::Oracle { input, what } => commands::oracle(input.as_deref(), what, format),
        Command::Sweep {
            n,
            trigraphs,
            canonical,
            long,
        } => commands::sweep(n, trigraphs, canonical, long, format),
        Command::ScanCtau { n } => commands::scan_ctau(n, format),
        Command::Gen { what, out } => commands::generate(
            what.join.as_deref(),
            what.cjoin.as_deref(),
            what.clebsch,
            out.as_deref(),
        ),
        Command::CheckExtremal { input } => commands::check_extremal(input.as_deref(), format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            if outcome.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
