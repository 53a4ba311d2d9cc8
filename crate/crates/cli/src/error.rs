use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] zerosum::error::Error),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Core(zerosum::error::Error::ResourceLimit(_)) => 2,
            _ => 1,
        }
    }
}
