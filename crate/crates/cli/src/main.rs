//! `burnhom`: burnings, configuration spaces and burning homology from the
//! command line.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "burnhom", version, about = "Graph burnings, configuration spaces and burning homology")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    config: GlobalArgs,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    pub json: bool,
    /// Read and print vertex labels starting from 1.
    #[arg(long, global = true)]
    pub one_based: bool,
    /// Refuse graphs with more vertices than this (default depends on the command).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_vertices: Option<u64>,
    /// Refuse graphs with more edges than this in `minimal-subgraphs` (default 14).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_edges: Option<u64>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// A graph: a file path, `-` for standard input, a builder expression such
/// as `path:5` or `sum:path:2,cube`, or inline edge-list text.
#[derive(Args, Debug, Clone)]
pub struct GraphArg {
    pub graph: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List every burning with its time function.
    Burnings(GraphArg),
    /// The least end time over all burnings.
    BurningNumber(GraphArg),
    /// Check a source sequence such as `0,2`.
    Validate {
        #[command(flatten)]
        graph: GraphArg,
        sources: String,
    },
    /// Facets of the configuration space.
    Complex(GraphArg),
    /// Homology of the configuration space.
    Homology {
        #[command(flatten)]
        graph: GraphArg,
        /// Reduced homology.
        #[arg(long)]
        reduced: bool,
        /// Coefficients: z, q, or p:<prime>.
        #[arg(long, default_value = "z")]
        coeff: String,
    },
    /// Minimal B-burned subgraphs for a burning given by its sources.
    MinimalSubgraphs {
        #[command(flatten)]
        graph: GraphArg,
        sources: String,
        /// Allow any prefix of the sources rather than the whole sequence.
        #[arg(long)]
        any_prefix: bool,
    },
    /// Extremal path length with a witness burning.
    Witness {
        /// max-n-for-T, max-n-for-T-hom, max-n-for-k, min-n-for-k or min-n-for-k-hom.
        kind: String,
        /// The end time T or source count k.
        param: usize,
    },
    /// Run the verification checks (`all` or check ids).
    Verify {
        #[arg(default_value = "all")]
        checks: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match commands::run(cli.command, &cli.config) {
        Ok(out) => {
            print!("{}", out.text);
            if out.check_failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
