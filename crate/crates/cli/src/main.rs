//! `orient`: command-line front end for finite semigroup tables, orientable
//! equations and the group verification suites.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use orient_core::orientability::{DEFAULT_ONE_VAR_BOUND, DEFAULT_TWO_VAR_BOUND};

#[derive(Parser, Debug)]
#[command(name = "orient", version, about = "Orientable equations over finite semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
struct Input {
    /// Cayley table file
    #[arg(long, global = false)]
    table: Option<PathBuf>,
    /// Built-in family, e.g. `symmetric:3`, `quaternion8`, `leftzero:3`
    #[arg(long)]
    family: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct Common {
    #[command(flatten)]
    input: Input,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Suite {
    Theorems,
    Propositions,
    All,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum QuotientBy {
    /// Orientable equivalence (bounded search, or exact for groups)
    Sigma,
    /// Smallest congruence with a commutative quotient
    Commutative,
    /// Smallest congruence with a commutative cancellative quotient
    Cancellative,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(format!("`{s}` is not a positive integer")),
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate a table
    Check(Common),
    /// Summary of algebraic properties
    Info(Common),
    /// Print the table of the input in table-file format
    Family(Common),
    /// Orientable elements, with witnesses
    Orientable {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = positive, default_value_t = DEFAULT_ONE_VAR_BOUND)]
        bound: usize,
        /// Use the commutator subgroup and constructed witnesses (groups only)
        #[arg(long)]
        exact: bool,
    },
    /// Witness for one element or an ordered pair
    Witness {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["pair", "from_json"])]
        element: Option<String>,
        /// `u,v`
        #[arg(long, allow_hyphen_values = true, conflicts_with = "from_json")]
        pair: Option<String>,
        /// Validate a witness previously printed with `--format json`
        #[arg(long)]
        from_json: Option<PathBuf>,
        /// Defaults to 4 for elements and 3 for pairs
        #[arg(long, value_parser = positive)]
        bound: Option<usize>,
        #[arg(long)]
        exact: bool,
    },
    /// Orientable equivalence classes
    Sigma {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = positive, default_value_t = DEFAULT_TWO_VAR_BOUND)]
        bound: usize,
        #[arg(long)]
        exact: bool,
    },
    /// Quotient table by a congruence
    Quotient {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = QuotientBy::Sigma)]
        by: QuotientBy,
        #[arg(long, value_parser = positive, default_value_t = DEFAULT_TWO_VAR_BOUND)]
        bound: usize,
        #[arg(long)]
        exact: bool,
    },
    /// Commutator subgroup, or one commutator with `--pair x,y` (groups only)
    Commutator {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        pair: Option<String>,
    },
    /// Abelianization table (groups only)
    Abelianization(Common),
    /// Run verification suites
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, value_parser = positive, default_value_t = DEFAULT_TWO_VAR_BOUND)]
        bound: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {}: {}", e.kind, e.message);
            ExitCode::from(e.code)
        }
    }
}
