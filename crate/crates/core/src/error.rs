use thiserror::Error;

use crate::kind::LieKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Lie type: {0}")]
    InvalidKind(String),

    #[error("{kind} is not supported here: {reason}")]
    UnsupportedKind { kind: LieKind, reason: &'static str },

    #[error("invalid coloring for {kind}: {reason}")]
    InvalidColoring { kind: LieKind, reason: String },

    #[error("invalid block vector for {kind}: {reason}")]
    InvalidBlocks { kind: LieKind, reason: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid kernel profile: {0}")]
    InvalidKernelProfile(String),

    #[error("no closed formula applies: {0}")]
    UnsupportedFormula(String),

    #[error("partition has size {got}, expected {expected}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("matrix is not nilpotent")]
    NotNilpotent,

    #[error("matrix is not an element of {0}")]
    NotInAlgebra(LieKind),

    #[error("matrix dimension mismatch: {0}")]
    Dimension(String),

    #[error("unknown {0}")]
    UnknownStrategy(String),
}

pub type Result<T> = std::result::Result<T, Error>;
