use thiserror::Error;

use crate::sum::SumKind;

/// Every failure the library can report.
///
/// The variant names double as the stable error names printed by the CLI
/// (see [`Error::name`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("small elements must start at 0")]
    NotStartingAtZero,
    #[error("small elements must be strictly increasing")]
    NotStrictlyIncreasing,
    #[error("operation requires a proper numerical set (got the nonnegative integers)")]
    NonProperInput,
    #[error("not a numerical semigroup")]
    NotASemigroup,
    #[error("{0} is not a small element of the set")]
    NotAnElement(i64),
    #[error("conductor exceeds the supported maximum of {max}")]
    Overflow { max: i64 },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("column index {index} out of range for a diagram with {columns} columns")]
    IndexOutOfRange { index: usize, columns: usize },
    #[error("diagram sums need nonempty partitions")]
    EmptyPartition,
    #[error("the nonnegative integers are not a left operand of the {0} sum (the result is not a numerical set)")]
    LeftIdentityUndefined(SumKind),
    #[error("not a symmetric numerical set")]
    NotSymmetric,
    #[error("{0} is the excluded base case of this decomposition")]
    ExcludedBaseCase(String),
    #[error("not an almost symmetric numerical semigroup")]
    NotAlmostSymmetric,
    #[error("type {0} is too small for this operation")]
    TypeTooSmall(usize),
    #[error("pseudo-Frobenius numbers below the Frobenius number are not between two consecutive small elements")]
    BlockSplit,
    #[error("pseudo-Frobenius numbers below the Frobenius number are not consecutive")]
    NonConsecutivePF,
    #[error("bound {bound} exceeds the safety cap {cap}")]
    BoundTooLarge { bound: u32, cap: u32 },
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("cannot parse `{0}`")]
    Parse(String),
}

impl Error {
    /// Stable taxonomy name, e.g. `NotASemigroup`.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotStartingAtZero => "NotStartingAtZero",
            Error::NotStrictlyIncreasing => "NotStrictlyIncreasing",
            Error::NonProperInput => "NonProperInput",
            Error::NotASemigroup => "NotASemigroup",
            Error::NotAnElement(_) => "NotAnElement",
            Error::Overflow { .. } => "Overflow",
            Error::PreconditionFailed(_) => "PreconditionFailed",
            Error::NotAPartition(_) => "NotAPartition",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::EmptyPartition => "EmptyPartition",
            Error::LeftIdentityUndefined(_) => "LeftIdentityUndefined",
            Error::NotSymmetric => "NotSymmetric",
            Error::ExcludedBaseCase(_) => "ExcludedBaseCase",
            Error::NotAlmostSymmetric => "NotAlmostSymmetric",
            Error::TypeTooSmall(_) => "TypeTooSmall",
            Error::BlockSplit => "BlockSplit",
            Error::NonConsecutivePF => "NonConsecutivePF",
            Error::BoundTooLarge { .. } => "BoundTooLarge",
            Error::UnknownTheorem(_) => "UnknownTheorem",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
