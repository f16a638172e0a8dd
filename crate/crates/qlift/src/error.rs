use qlift_core::Error as CoreError;

/// Exit code for usage errors (clap uses the same value).
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_CHECK_FAILED: i32 = 4;
pub const EXIT_OTHER: i32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
    #[error("i/o: {0}")]
    Io(String),
    #[error("{0}")]
    Core(CoreError),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Inadmissible(_)
            | CoreError::Parse { .. }
            | CoreError::UnknownSymbol(_)
            | CoreError::InvalidGroup(_)
            | CoreError::GroupMismatch(_)
            | CoreError::WrongType(_)
            | CoreError::WrongDatum(_)
            | CoreError::Invalid(_)
            | CoreError::ZeroConductor
            | CoreError::QEqualsOne => CliError::Validation(e.to_string()),
            CoreError::HopfIdealFailure(_) | CoreError::NotConfluent(_) => CliError::CheckFailed(e.to_string()),
            other => CliError::Core(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Validation(_) => EXIT_VALIDATION,
            CliError::CheckFailed(_) => EXIT_CHECK_FAILED,
            CliError::Io(_) | CliError::Core(_) => EXIT_OTHER,
        }
    }
}
