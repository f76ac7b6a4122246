//! `ptop`: smash products of finite pointed spaces, their comparison maps,
//! exponentials, homotopy constructions and exact witness certificates.
//!
//! Exit status: 0 when every check passes, 1 for a verified negative
//! answer, 2 for unusable input, 3 when a search ran out of budget or
//! truncation.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ptop_core::finspace::DEFAULT_HOMEO_BUDGET;

#[derive(Parser, Debug)]
#[command(
    name = "ptop",
    version,
    about = "Finite smash products, comparisons and certificates"
)]
pub struct Cli {
    /// Node budget for homeomorphism searches.
    #[arg(long, global = true, default_value_t = DEFAULT_HOMEO_BUDGET)]
    pub budget: u64,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Smash product of two pointed spaces.
    Smash { a: PathBuf, b: PathBuf },
    /// Unbracketed smash product of any number of pointed spaces.
    Nary { files: Vec<PathBuf> },
    /// Regularity report for a bracketing, e.g. `--tree "[[1,2],3]"`.
    Compare {
        #[arg(long)]
        tree: String,
        files: Vec<PathBuf>,
    },
    /// Regularity of both bracketings and the associator over all triples.
    AssocScan {
        #[arg(long, default_value_t = 3)]
        max_points: usize,
    },
    /// Coherence of the comparison maps over all 4-tuples.
    CoherenceScan {
        #[arg(long, default_value_t = 2)]
        max_points: usize,
    },
    /// Exponential `Y^A`, pointed when both inputs are; checks the
    /// exponential law against every pointed `X` up to `--max-points`.
    Exp {
        a: PathBuf,
        y: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_points: usize,
    },
    /// Cylinder, cones, suspension, path, cocone and loop spaces.
    Homotopy {
        #[arg(long, default_value = "interval3")]
        model: String,
        #[arg(long, value_enum)]
        op: HomotopyOp,
        x: PathBuf,
    },
    /// Exact certificates for the Euclidean counterexamples.
    Witness {
        #[arg(value_enum)]
        which: WitnessKind,
        #[arg(long, default_value_t = 8)]
        truncation: usize,
        /// Basic-neighbourhood description for `nonregular` (defaults to a built-in grid).
        #[arg(long)]
        spec: Option<PathBuf>,
        /// Seed for the random family used by `diag`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Re-check a certificate file written by `witness`.
    Verify { file: PathBuf },
    /// Homeomorphism search between two spaces.
    Homeo { a: PathBuf, b: PathBuf },
    /// DOT rendering of the specialization preorder.
    ExportDot { x: PathBuf },
    /// Re-serialize a space in canonical form.
    Canon { x: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HomotopyOp {
    Cylinder,
    ConeMinus,
    ConePlus,
    Suspension,
    Paths,
    CoconeMinus,
    CoconePlus,
    Loops,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WitnessKind {
    Diag,
    Embed,
    Nonregular,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = commands::run(&cli);
    ExitCode::from(commands::emit(&cli, outcome))
}
