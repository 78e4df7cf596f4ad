//! Error type shared across the crate.

use crate::sequences::SequenceId;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("part size must be at least 1")]
    ZeroPartSize,
    #[error("colour {colour} out of range for part of size {size}")]
    ColourOutOfRange { size: u32, colour: u32 },
    #[error("a composition must have at least one part")]
    EmptyComposition,
    #[error("cannot parse `{input}` as a composition: {reason}")]
    ParseComposition { input: String, reason: String },
    #[error("sequence {id} is defined from index {min}, got {index}")]
    IndexBelowDomain {
        id: SequenceId,
        index: u64,
        min: u64,
    },
    #[error("denominator constant term must be nonzero")]
    ZeroConstantTerm,
    #[error("coefficient {index} is not divisible by the denominator constant term")]
    InexactDivision { index: usize },
    #[error("unknown identity label `{0}` (expected T5.1, T6.1i, T6.1ii or T6.2b)")]
    UnknownIdentity(String),
    #[error("invalid lattice path: {reason}")]
    InvalidPath { reason: &'static str },
    #[error("bijection instance requires n >= 2, got {0}")]
    BijectionIndex(u64),
    #[error("composition has weight {actual}, expected {expected}")]
    WeightMismatch { expected: u64, actual: u64 },
    #[error("composition is not self-inverse")]
    NotSelfInverse,
}
