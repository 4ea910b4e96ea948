//! `tsb`: travelling-salesman distance balance from the command line.
//!
//! Exit codes: 0 success or true, 1 check false, 2 parse or usage error,
//! 3 guard exceeded, 4 disconnected graph.

mod commands;
mod source;

use std::io::IsTerminal;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tsbalance::{Error, Guards};

#[derive(Debug, Parser)]
#[command(name = "tsb", version, about = "Exact travelling-salesman distance balance on small graphs")]
struct Cli {
    /// Output format; defaults to table on a terminal and json otherwise.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Largest order for subset dynamic programming and orbit search.
    #[arg(long, global = true, env = "TSB_MAX_N", default_value_t = tsbalance::DEFAULT_MAX_ORDER)]
    max_n: usize,

    /// Largest order of a constructed wreath product.
    #[arg(long, global = true, env = "TSB_MAX_PRODUCT", default_value_t = tsbalance::DEFAULT_MAX_PRODUCT)]
    max_product: usize,

    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Edges,
    Graph6,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classification, distance balance and symmetry summary.
    Info {
        graph: String,
        /// Also compute total distance vectors and the balancing set.
        #[arg(long)]
        ts: bool,
    },
    /// Shortest walk length from one vertex to another through a set.
    Rho {
        graph: String,
        /// Required vertices, comma separated; may be empty.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        set: Vec<usize>,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
    /// Total distance vectors.
    Vector {
        graph: String,
        #[arg(long, conflicts_with = "all")]
        vertex: Option<usize>,
        #[arg(long)]
        all: bool,
    },
    /// Balance checks: distance balance by default.
    Balance {
        graph: String,
        /// pTS-distance balance at this probability (`num/den`, 0 or 1).
        #[arg(long, group = "mode")]
        p: Option<String>,
        /// TS-distance balance: balanced at every p.
        #[arg(long, group = "mode")]
        ts: bool,
        /// The set of p at which the graph is pTS-distance-balanced.
        #[arg(long, group = "mode")]
        roots: bool,
    },
    /// Median vertices, classical or for a given p.
    Median {
        graph: String,
        #[arg(long)]
        p: Option<String>,
    },
    /// Hamiltonicity; exits on Hamilton-connectedness with `--connected`.
    Hamilton {
        graph: String,
        #[arg(long)]
        connected: bool,
    },
    /// Automorphism orbits.
    Orbits { graph: String },
    /// Wreath product of a base graph and a color graph.
    Wreath {
        base: String,
        color: String,
        /// Write the product to this file.
        #[arg(long)]
        out: Option<String>,
        #[arg(long, value_enum, default_value = "edges")]
        out_format: GraphFormat,
        /// Compare product balance with the factor criterion.
        #[arg(long)]
        check: bool,
    },
    /// Streams graph6 lines and reports vertices with equal total
    /// distance vectors in different orbits, as newline-delimited JSON.
    Search {
        /// Input file; standard input when omitted.
        #[arg(long)]
        input: Option<String>,
        #[arg(long, default_value_t = 64)]
        batch: usize,
    },
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::GuardExceeded { .. } => 3,
        Error::Disconnected(..) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("tsb: {e}");
            return ExitCode::from(2);
        }
    }
    let guards = Guards {
        max_order: cli.max_n,
        max_product: cli.max_product,
    };
    let format = cli.format.unwrap_or(if std::io::stdout().is_terminal() {
        Format::Table
    } else {
        Format::Json
    });
    match commands::run(cli.command, &guards, format) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("tsb: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
