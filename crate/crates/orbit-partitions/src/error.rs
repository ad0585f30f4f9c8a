use thiserror::Error;

/// Errors produced by the partition calculus.
///
/// `SizeMismatch` and `Parity` describe bad mathematical input; `Invariant`
/// signals that an internal consistency check failed (a non-unique extremum
/// or a duality output that is not special), which can only come from a bug
/// in a validity or specialness predicate, or from an input outside the
/// domain where the extremum is well defined.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative part {0} in partition input")]
    NegativePart(i64),

    #[error("size mismatch: expected a partition of {expected}, got {actual}")]
    SizeMismatch { expected: u64, actual: u64 },

    #[error("partition {partition} is not {constraint} (required for {context})")]
    Parity {
        partition: String,
        constraint: &'static str,
        context: String,
    },

    #[error("enumeration size {requested} exceeds cap {cap}")]
    CapExceeded { requested: u64, cap: u64 },

    #[error("empty partition has no smallest part")]
    EmptyPartition,

    #[error("operation {op} is not defined for group {group}")]
    UnsupportedGroup { op: &'static str, group: String },

    #[error("invalid group tag `{0}` (expected Sp:2n, SOodd:2n+1, SOeven:2n, Mp:2n or A:N)")]
    BadGroupTag(String),

    #[error("cannot parse `{input}` as a partition: {reason}")]
    ParsePartition { input: String, reason: String },

    #[error("cannot parse `{input}` as an Arthur parameter: {reason}")]
    ParseParameter { input: String, reason: String },

    #[error("invalid Arthur parameter: {0}")]
    InvalidParameter(String),

    #[error("extremum for {op} at {input} is not unique: {witnesses}")]
    NonUniqueExtremum {
        op: &'static str,
        input: String,
        witnesses: String,
    },

    #[error("no candidate satisfies {op} at {input}")]
    EmptyCandidateSet { op: &'static str, input: String },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
