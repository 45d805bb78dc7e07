use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing positive integers, got {0:?}")]
    NotAPartition(Vec<usize>),

    #[error("inner partition {inner} is not contained in outer partition {outer}")]
    NotContained { outer: String, inner: String },

    #[error("invalid staircase spec: {0}")]
    InvalidSpec(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("tableau does not fit its shape: {0}")]
    ShapeMismatch(String),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("coefficient overflow")]
    Overflow,

    #[error("bijection failure: {0}")]
    Bijection(String),
}

pub type Result<T> = std::result::Result<T, Error>;
