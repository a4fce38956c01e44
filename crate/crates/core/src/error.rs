use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {element} is outside the ground set [1, {n}]")]
    ElementOutOfRange { element: i64, n: usize },

    #[error("ground set size {n} exceeds the cap of {cap}")]
    GroundSetTooLarge { n: usize, cap: usize },

    #[error("ground sets differ: {left} vs {right}")]
    GroundSetMismatch { left: usize, right: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("family is not uniform")]
    NonUniform,

    #[error("set sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("resource cap exceeded: {0}")]
    CapExceeded(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
