use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "lierep", version, about = "Faithful representations of Lie algebras over Q")]
struct Cli {
    /// Machine-readable JSON on stdout instead of tables.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Jacobi identity.
    Validate { file: PathBuf },
    /// Central series, center, radical, and the filtrations of a chosen ideal.
    Analyze {
        file: PathBuf,
        /// full | center | span:i,j,...
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Build a faithful representation and write it as JSON.
    BuildRep {
        file: PathBuf,
        /// full | center | span:i,j,...
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long)]
        k1: Option<u64>,
        #[arg(long)]
        k2: Option<u64>,
        /// Representation file; stdout when absent.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Worker threads for the column builds.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Re-check a stored representation against its algebra.
    VerifyRep {
        #[arg(long)]
        algebra: PathBuf,
        rep: PathBuf,
    },
    /// Evaluate the degree bound from its inputs.
    Bound {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        e1: u64,
        #[arg(long)]
        e2: u64,
        /// Nilpotency class, for the tensor-algebra dimension.
        #[arg(long)]
        class: Option<u64>,
    },
    /// Count the ways to write t with the given parts.
    Denumerant {
        #[arg(long)]
        t: u64,
        /// Comma-separated positive parts.
        #[arg(long, value_delimiter = ',')]
        parts: Vec<u64>,
    },
    /// Upper bound for the nil-defect of the radical, with a witness ideal.
    NilDefect {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_subset: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command, cli.json) {
        Ok(commands::Outcome::Success) => ExitCode::SUCCESS,
        Ok(commands::Outcome::Failure) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if matches!(e, lierep::Error::Parse(_)) { 2 } else { 1 })
        }
    }
}
