//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors reported by validation of inputs and by bounded enumerations.
///
/// Mathematical identity failures are not errors: operations that check
/// identities return report structs with the verdict inside, so callers can
/// distinguish "the computation could not run" from "the identity is false".
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported root-system type {series}{rank}")]
    InvalidType { series: char, rank: usize },

    #[error("index {index} out of range (valid 1..={max})")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("coordinate vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("not a partition: {0}")]
    InvalidPartition(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("enumeration would produce {estimate} tuples, exceeding the bound {bound}")]
    EnumerationBound { estimate: u128, bound: u128 },

    #[error("no level-{level} Demazure flag: level must be at least the largest part {xi1}")]
    FlagLevelTooSmall { level: u64, xi1: u64 },

    #[error("malformed parameter list: {0}")]
    MalformedParameters(String),

    #[error("JSON does not match the documented schema: {0}")]
    SchemaMismatch(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
