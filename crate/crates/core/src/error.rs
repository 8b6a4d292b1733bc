use thiserror::Error;

use crate::report::Report;

/// Errors raised by constructors and conversions.
///
/// Axiom violations found by the `validate_*` family are returned as
/// [`Report`] values; they only become an `Error` when a constructor
/// refuses its input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("width mismatch: expected {expected} coordinates, got {found}")]
    WidthMismatch { expected: usize, found: usize },

    #[error("point {point} lies outside the hypercuboid of width {width}")]
    OutOfRange { point: String, width: String },

    #[error("rank table has {found} entries, width {width} needs {expected}")]
    TableSize {
        width: String,
        expected: usize,
        found: usize,
    },

    #[error("direction {dir} is out of range for dimension {dim}")]
    BadDirection { dir: usize, dim: usize },

    #[error("direction {dir} has width 0")]
    EmptyDirection { dir: usize },

    #[error("rank {rank} out of range 0..={max}")]
    RankOutOfRange { rank: i64, max: i64 },

    #[error("{limit}: size {size} exceeds guard {guard}")]
    SizeGuard {
        limit: &'static str,
        size: usize,
        guard: usize,
    },

    #[error("axiom violation: {0}")]
    Axioms(Report),

    #[error("removal of direction {dir} from {point} does not exist")]
    RemovalMissing { point: String, dir: usize },

    #[error("set is not orderable at {point}")]
    NotOrderable { point: String },

    #[error("not simple")]
    NotSimple,

    #[error("width {0} is not a hypercube")]
    NotHypercube(String),

    #[error("rank {rank} is neither {r} nor {r} + 1")]
    WrongRank { rank: i64, r: usize },

    #[error("not a permutation array: {0}")]
    NotPermutationArray(String),

    #[error("flats poset is not graded at {0}")]
    NotGraded(String),

    #[error("increasing paths disagree at {point}: {first} vs {second}")]
    PathDependent {
        point: String,
        first: i64,
        second: i64,
    },

    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
