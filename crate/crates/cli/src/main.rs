//! `toral-reversors`: reversibility analysis of hyperbolic toral automorphisms.

mod commands;
mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use commands::{CliError, Output};

#[derive(Parser, Debug)]
#[command(name = "toral-reversors", version, about)]
struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Find the linear reversors of L = [[a, b], [c, d]].
    #[command(allow_negative_numbers = true)]
    Analyze {
        a: BigInt,
        b: BigInt,
        c: BigInt,
        d: BigInt,
        /// Automorph steps taken from each Pell class in the general case.
        #[arg(long, default_value_t = 10)]
        depth: u32,
    },
    /// Solve x^2 - D*y^2 = N.
    #[command(allow_negative_numbers = true)]
    Pell {
        #[arg(value_name = "D")]
        d: BigInt,
        #[arg(value_name = "N")]
        n: BigInt,
        /// Also scan |y| <= YMAX directly and compare.
        #[arg(long)]
        ymax: Option<u64>,
    },
    /// Build a hyperbolic automorphism reversed by the given involution.
    #[command(allow_negative_numbers = true)]
    Construct {
        /// lower+, lower-, upper+, upper- or general.
        family: String,
        /// gamma, or alpha beta.
        #[arg(required = true)]
        params: Vec<BigInt>,
        /// Recipe index (general family: 0 or 1).
        #[arg(long, default_value_t = 0)]
        choice: usize,
    },
    /// Closed curves fixed by the involution [[a, b], [c, d]] on the torus.
    #[command(allow_negative_numbers = true)]
    Fixset { a: BigInt, b: BigInt, c: BigInt, d: BigInt },
    /// Regenerate a reference example table.
    Table { which: Table },
    /// List the non-trivial involutions with entries bounded by BOUND.
    Enumerate {
        #[arg(long, default_value_t = 1)]
        bound: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Table {
    Example1,
    Example2,
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Analyze { a, b, c, d, depth } => commands::analyze([a, b, c, d], *depth),
        Command::Pell { d, n, ymax } => Ok(commands::pell(d, n, *ymax)),
        Command::Construct { family, params, choice } => commands::construct(family, params, *choice),
        Command::Fixset { a, b, c, d } => commands::fixset([a, b, c, d]),
        Command::Table { which: Table::Example1 } => commands::table_example1(),
        Command::Table { which: Table::Example2 } => commands::table_example2(),
        Command::Enumerate { bound } => commands::enumerate(*bound),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.envelope).expect("envelope serializes"));
            } else {
                print!("{}", out.human);
                for w in &out.envelope.warnings {
                    eprintln!("warning: {w}");
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
