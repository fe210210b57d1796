use filament_core::exprio::ParseError;
use filament_core::Error as CoreError;
use filament_sim::SimError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Core(CoreError),
    #[error("{0}")]
    Sim(SimError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    CheckFailed(String),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Parse(p) => CliError::Parse(p),
            other => CliError::Core(other),
        }
    }
}

impl From<SimError> for CliError {
    fn from(e: SimError) -> Self {
        match e {
            SimError::Core(c) => c.into(),
            other => CliError::Sim(other),
        }
    }
}

impl CliError {
    /// 2 for parse and usage errors, 3 for a missing antiderivative, 4 for
    /// numerical failure, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::Core(CoreError::DepthExceeded { .. }) => 2,
            CliError::Core(CoreError::NotExact { .. }) => 3,
            CliError::Core(CoreError::LocalityLost { source, .. })
                if matches!(**source, CoreError::NotExact { .. }) =>
            {
                3
            }
            CliError::Sim(SimError::Blowup { .. } | SimError::StepTooLarge { .. }) => 4,
            CliError::Sim(SimError::InvalidState(_) | SimError::InvalidConfig(_)) => 2,
            _ => 1,
        }
    }
}
