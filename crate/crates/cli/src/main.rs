use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ftres_core::{GraphError, Invariant};

mod commands;

#[derive(Parser, Debug)]
#[command(
    name = "ftres",
    version,
    about = "Exact (fault-tolerant, independent) metric dimension solver"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a family graph as an edge list.
    Gen {
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Output file; standard output when absent.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Solve one invariant: dim, fdim, ir, ifr or beta.
    Solve {
        invariant: String,
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        run: RunFlags,
        #[arg(long, value_enum, default_value = "cert")]
        format: Format,
    },
    /// Check the stated four-landmark witnesses and the absence of
    /// fault-tolerant 3-sets.
    VerifyTheorem {
        #[arg(long)]
        family: String,
        /// Ring size or inclusive range `a..b`.
        #[arg(long, alias = "n-range", value_parser = parse_range)]
        n: RangeInclusive<usize>,
        /// Largest n for the exhaustive 3-subset sweep.
        #[arg(long, default_value_t = 14)]
        sweep_max: usize,
    },
    /// Compare the printed code tables with BFS codes.
    VerifyTables {
        #[arg(long)]
        family: String,
        #[arg(long, alias = "n-range", value_parser = parse_range)]
        n: RangeInclusive<usize>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Compute dim, fdim, ir, ifr, beta and check the inequality chain.
    Chain {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        run: RunFlags,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// ifr for the three polytope families over a range of n.
    OpenProblem {
        /// Restrict to one family.
        #[arg(long)]
        family: Option<String>,
        #[arg(long, alias = "n-range", value_parser = parse_range, default_value = "6..8")]
        n: RangeInclusive<usize>,
        #[command(flatten)]
        run: RunFlags,
    },
    /// Chain and shortcut checks on seeded random connected graphs.
    Survey {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 2)]
        min_order: usize,
        #[arg(long, default_value_t = 8)]
        max_order: usize,
        #[command(flatten)]
        run: RunFlags,
    },
}

#[derive(Args, Debug)]
struct GraphInput {
    #[arg(long, conflicts_with = "input")]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Edge-list file.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct RunFlags {
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,
    /// Cardinality cap for ir and ifr.
    #[arg(long)]
    max_k: Option<usize>,
    /// Omit wall-clock times so output is byte-for-byte reproducible.
    #[arg(long)]
    no_time: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Cert,
    Csv,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = || format!("expected N or A..B, got {s:?}");
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.trim_start_matches('=')),
        None => (s, s),
    };
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok(a..=b)
}

/// Exit statuses beyond 0.
pub(crate) mod exit {
    pub const FAILED: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const NOT_CONNECTED: u8 = 3;
    pub const UNKNOWN: u8 = 4;
}

fn main() -> ExitCode {
    // Exit quietly when piped into `head` and the like.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen { family, n, m, out } => commands::gen(&family, n, m, out.as_deref()),
        Command::Solve {
            invariant,
            input,
            run,
            format,
        } => match Invariant::from_name(&invariant) {
            Some(inv) => commands::solve(inv, &input, &run, format),
            None => Err(anyhow::anyhow!(
                "unknown invariant {invariant:?} (expected dim, fdim, ir, ifr or beta)"
            )),
        },
        Command::VerifyTheorem {
            family,
            n,
            sweep_max,
        } => commands::verify_theorem(&family, n, sweep_max),
        Command::VerifyTables { family, n, format } => commands::verify_tables(&family, n, format),
        Command::Chain { input, run, format } => commands::chain(&input, &run, format),
        Command::OpenProblem { family, n, run } => {
            commands::open_problem(family.as_deref(), n, &run)
        }
        Command::Survey {
            seed,
            count,
            min_order,
            max_order,
            run,
        } => commands::survey(seed, count, min_order..=max_order, &run),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = match e.downcast_ref::<GraphError>() {
                Some(GraphError::NotConnected { .. }) => exit::NOT_CONNECTED,
                _ => exit::USAGE,
            };
            ExitCode::from(code)
        }
    }
}
