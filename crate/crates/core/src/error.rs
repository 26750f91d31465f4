use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A mathematical precondition was violated (bad index, rank, box...).
    #[error("invalid argument: {0}")]
    Argument(String),

    /// Malformed textual or JSON input.
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("series is not invertible: {0}")]
    NotInvertible(String),

    /// A truncated series was asked for a coefficient it cannot certify.
    #[error("coefficient z^{z} w^{w} lies outside the exact window {window}; widen the truncation")]
    OutsideWindow { z: i64, w: i64, window: String },

    #[error("product window is empty ({0}); widen the input truncations")]
    EmptyWindow(String),
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn parse(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: msg.into(),
        }
    }
}
