use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid cyclic factor {0}: every factor must be at least 2")]
    InvalidFactor(i64),

    #[error("elements belong to different groups")]
    GroupMismatch,

    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
