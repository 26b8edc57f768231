use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

mod commands;

use commands::CliError;

#[derive(Parser)]
#[command(name = "superplactic", version, about = "Super tableaux, signed bumping, plactic classes and super RSK")]
struct Cli {
    /// Signed alphabet JSON: {"letters": [...], "parity": [...]}.
    /// Without it, embedded alphabets are used, else an all-even alphabet is inferred.
    #[arg(long, global = true, value_name = "FILE")]
    alphabet: Option<PathBuf>,

    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Row,
    Col,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GreeneArg {
    Row,
    Col,
    Shape,
}

#[derive(Args)]
struct ArrayAlphabets {
    /// Alphabet of the top row (L); defaults to --alphabet.
    #[arg(long = "alphabet-l", value_name = "FILE")]
    top: Option<PathBuf>,
    /// Alphabet of the bottom row (P); defaults to --alphabet.
    #[arg(long = "alphabet-p", value_name = "FILE")]
    bottom: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Insert letters into a tableau one at a time and print the box trace.
    Insert {
        #[arg(long, value_enum, default_value = "row")]
        mode: Mode,
        /// Tableau JSON; the empty tableau when omitted.
        #[arg(long, value_name = "FILE")]
        tableau: Option<PathBuf>,
        /// Comma-separated letters.
        #[arg(long, allow_hyphen_values = true)]
        letters: String,
    },
    /// Reverse-bump the last cell of a row (or column) out of a tableau.
    Delete {
        #[arg(long, value_enum, default_value = "row")]
        mode: Mode,
        #[arg(long, value_name = "FILE")]
        tableau: PathBuf,
        /// 1-indexed row (or column).
        #[arg(long)]
        index: usize,
    },
    /// Row-insert a word into the empty tableau.
    TableauOfWord {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Reading word of a tableau, bottom row first.
    WordOfTableau {
        #[arg(long, value_name = "FILE")]
        tableau: PathBuf,
    },
    /// Canonical representative of the plactic class of a word.
    NormalForm {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// All words Knuth-equivalent to a word.
    Class {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Members to print.
        #[arg(long, default_value_t = 50)]
        limit: usize,
    },
    /// Greene invariants: largest total length of k disjoint row (column) subwords.
    Greene {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "row")]
        mode: GreeneArg,
    },
    /// Super RSK: a two-rowed array to a pair of tableaux.
    Rsk {
        #[arg(long, value_name = "FILE")]
        array: PathBuf,
        #[command(flatten)]
        alphabets: ArrayAlphabets,
    },
    /// Inverse super RSK: a pair of same-shape tableaux to an array.
    RskInverse {
        #[arg(long, value_name = "FILE")]
        t: PathBuf,
        #[arg(long, value_name = "FILE")]
        u: PathBuf,
        #[command(flatten)]
        alphabets: ArrayAlphabets,
    },
    /// Whether swapping the rows of an array swaps its RSK pair.
    Symmetry {
        #[arg(long, value_name = "FILE")]
        array: PathBuf,
        #[command(flatten)]
        alphabets: ArrayAlphabets,
    },
    /// Tabulate symmetry against the symmetry hypotheses over all small arrays.
    Probe {
        #[arg(long = "alphabet-l", value_name = "FILE")]
        top: PathBuf,
        #[arg(long = "alphabet-p", value_name = "FILE")]
        bottom: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_cols: usize,
        /// Write the JSON-lines report here.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Compare S_lambda * S_(p) with the sum over strips.
    Pieri {
        /// Comma-separated parts of lambda.
        #[arg(long, allow_hyphen_values = true)]
        shape: String,
        #[arg(long)]
        p: usize,
        #[arg(long, value_enum, default_value = "row")]
        mode: Mode,
    },
    /// Validate a tableau, an array or a word.
    #[command(group(ArgGroup::new("input").required(true).args(["tableau", "array", "word"])))]
    Validate {
        #[arg(long, value_name = "FILE")]
        tableau: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        array: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
        #[command(flatten)]
        alphabets: ArrayAlphabets,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error[{}]: {e}", e.name());
            ExitCode::from(1)
        }
    }
}
