use thiserror::Error;

use crate::rational::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("variety dimension must be 1 or 2, got {0}")]
    UnsupportedDimension(u32),

    #[error("invalid variety data: {0}")]
    InvalidVariety(String),

    #[error("expected {expected} lower-order Hilbert coefficients, got {got}")]
    LowerCoefficientCount { expected: usize, got: usize },

    #[error("invalid pair problem: {0}")]
    InvalidProblem(String),

    #[error("invalid target sheaf descriptor: {0}")]
    InvalidTarget(String),

    #[error("witness is missing its Hilbert polynomial")]
    MissingChi,

    #[error("witness is missing its section count")]
    MissingSectionCount,

    #[error("witness is invalid: {0}")]
    InvalidWitness(String),

    #[error("stability predicates are vacuous when deg δ ≥ dim X")]
    QuotRegime,

    #[error("non-proper witness (G = E) is only meaningful in semistable mode")]
    NonProperInStableMode,

    #[error("μ-conditions are undefined for torsion witnesses (rank 0)")]
    TorsionWitness,

    #[error("condition (2) requires rank G < rank E, got rank {rank_g} of {rank}")]
    FullRankWitness { rank_g: u32, rank: u32 },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("rank must be at least {min}, got {got}")]
    RankTooSmall { min: u32, got: u32 },

    #[error("empty interval ({lo}, {hi})")]
    EmptyInterval {
        lo: Box<Rational>,
        hi: Box<Rational>,
    },

    #[error("parameter lies on a wall at {0}")]
    OnWall(Box<Rational>),

    #[error("value must be integral: {0}")]
    NotIntegral(Box<Rational>),

    #[error("invalid weight vector: {0}")]
    InvalidWeights(String),

    #[error("invalid basis profile: {0}")]
    InvalidProfile(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}

impl Error {
    /// True for errors that mean "the parameter sits on a wall or the defining
    /// interval is degenerate", as opposed to malformed input.
    pub fn is_on_wall(&self) -> bool {
        matches!(self, Error::OnWall(_) | Error::EmptyInterval { .. })
    }
}
