//! Batch front-end for the `pairstab` calculator: argument model, problem-file
//! schema, report rendering and the subcommand implementations.

pub mod commands;
pub mod input;
pub mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use pairstab::{Mode, Rational};

pub use commands::{run, Outcome};
pub use input::{ProblemFile, SCHEMA};
pub use report::Report;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("cannot read input: {0}")]
    Io(String),
    #[error(transparent)]
    Domain(#[from] pairstab::Error),
}

impl CliError {
    /// 2 for input/schema problems, 4 for on-wall or degenerate parameters, 3 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Schema(_) | CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Domain(e) if e.is_on_wall() => 4,
            CliError::Domain(_) => 3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "pairstab",
    version,
    about = "Exact stability calculator for pairs on curves and surfaces"
)]
pub struct Cli {
    /// Emit canonical JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Problem file (schema "pairstab/1").
    #[arg(long, global = true, value_name = "FILE")]
    pub input: Option<PathBuf>,

    /// Restrict verdicts to one mode; both are reported by default.
    #[arg(long, global = true, value_name = "semistable|stable")]
    pub mode: Option<Mode>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate every supplied witness of a problem file.
    Check,
    /// Candidate walls and chambers for δ₁.
    Walls(WallsArgs),
    /// The rank-2 chamber series for a line-bundle target.
    Chambers(ChambersArgs),
    /// Upper bound on δ, discriminant bound and curve degree threshold.
    Bounds(BoundsArgs),
    /// Degree n₀ beyond which μ-stable rank-2 pairs restrict to curves in |nH|.
    Restrict(RestrictArgs),
    /// δ₁ window for strongly framed bundles.
    Framed(FramedArgs),
    /// Existence window and dimension for level structures on a curve.
    Level(LevelArgs),
    /// Hilbert–Mumford verdict for a basis profile.
    Git(GitArgs),
    /// Combined report for a problem file.
    Report,
}

#[derive(Debug, Args)]
pub struct WallsArgs {
    #[arg(long)]
    pub rank: u32,
    #[arg(long, allow_hyphen_values = true)]
    pub degree: Rational,
    /// Locate this δ₁ among the chambers.
    #[arg(long, allow_hyphen_values = true)]
    pub delta1: Option<Rational>,
}

#[derive(Debug, Args)]
pub struct ChambersArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub degree: Rational,
    /// Report only the chamber with this index.
    #[arg(long, allow_hyphen_values = true)]
    pub index: Option<i64>,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// Rank of Ker α, selecting the general form of the δ bound.
    #[arg(long)]
    pub kernel_rank: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    pub delta1: Option<Rational>,
    #[arg(long)]
    pub h_squared: Option<Rational>,
}

#[derive(Debug, Args)]
pub struct RestrictArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub degree: Rational,
    #[arg(long, allow_hyphen_values = true)]
    pub c1_squared: Rational,
    #[arg(long, allow_hyphen_values = true)]
    pub c2: Rational,
    #[arg(long, allow_hyphen_values = true)]
    pub delta1: Rational,
    #[arg(long)]
    pub h_squared: Rational,
}

#[derive(Debug, Args)]
pub struct FramedArgs {
    #[arg(long)]
    pub rank: u32,
    #[arg(long)]
    pub c_dot_h: Rational,
    /// One divisor component as `a:ν₁,…,ν_{r−1}`; repeatable.
    #[arg(long = "component", value_name = "A:NU,..", allow_hyphen_values = true)]
    pub components: Vec<String>,
}

#[derive(Debug, Args)]
pub struct LevelArgs {
    #[arg(long)]
    pub rank: u32,
    /// Length l(D) of the level divisor.
    #[arg(long)]
    pub length: u64,
    #[arg(long)]
    pub genus: i64,
    /// Test this δ against the window.
    #[arg(long)]
    pub delta: Option<Rational>,
}

#[derive(Debug, Args)]
pub struct GitArgs {
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub ell: usize,
    /// Rank jump indices k₁ < … < k_r, comma separated.
    #[arg(long = "K", alias = "k", value_delimiter = ',', num_args = 1..)]
    pub k: Vec<usize>,
    #[arg(long, conflicts_with = "delta_bar")]
    pub eta: Option<Rational>,
    /// Sectional parameter; converted to η = r·δ̄/(p − δ̄).
    #[arg(long)]
    pub delta_bar: Option<Rational>,
    /// Cross-check against exhaustive enumeration of weight vectors.
    #[arg(long)]
    pub oracle: bool,
    /// Entry bound (in multiples of p) for the enumeration; defaults to p.
    #[arg(long)]
    pub bound: Option<i64>,
}
