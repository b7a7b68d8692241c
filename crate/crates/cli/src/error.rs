use crate::format::ParseError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] rainbow_torus::Error),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// 0 success, 1 internal error, 2 applicability or usage error,
    /// 3 capacity error.
    pub fn exit_code(&self) -> i32 {
        use rainbow_torus::Error as E;
        match self {
            CliError::Core(E::Capacity { .. }) => 3,
            CliError::Core(E::Applicability(_) | E::InvalidDims { .. } | E::Input(_) | E::OutOfRange { .. }) => 2,
            CliError::Core(E::Construction(_) | E::Inconsistent(_)) => 1,
            CliError::Parse(_) | CliError::Usage(_) => 2,
            CliError::Io(_) | CliError::Csv(_) => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
