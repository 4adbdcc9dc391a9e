use thiserror::Error;

use bethe_core::bethe::BetheError;
use bethe_core::exactring::AlgebraError;
use bethe_core::shapovalov::ShapError;
use bethe_core::unitary::UnitaryError;
use bethe_core::yangrep::YangError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Parse(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("{0}")]
    Hypothesis(String),
    #[error("{0}")]
    Compute(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Hypothesis(_) => 5,
            CliError::Compute(_) | CliError::Io(_) => 1,
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::Compute(e.to_string())
    }
}

impl From<YangError> for CliError {
    fn from(e: YangError) -> Self {
        match e {
            YangError::InvalidFactor(_) | YangError::MixedCoefficients | YangError::BadSample(_) => CliError::Parse(e.to_string()),
            other => CliError::Compute(other.to_string()),
        }
    }
}

impl From<ShapError> for CliError {
    fn from(e: ShapError) -> Self {
        match e {
            ShapError::Budget { .. } => CliError::Budget(format!("{e}")),
            ShapError::Range(_) => CliError::Parse(e.to_string()),
            other => CliError::Compute(other.to_string()),
        }
    }
}

impl From<BetheError> for CliError {
    fn from(e: BetheError) -> Self {
        match e {
            BetheError::ZeroMatrix | BetheError::MissingExceptional | BetheError::Incidence(_) => CliError::Parse(e.to_string()),
            other => CliError::Compute(other.to_string()),
        }
    }
}

impl From<UnitaryError> for CliError {
    fn from(e: UnitaryError) -> Self {
        match e {
            UnitaryError::Hypothesis(_) => CliError::Hypothesis(e.to_string()),
            UnitaryError::InvalidBlock(_) => CliError::Parse(e.to_string()),
            other => CliError::Compute(other.to_string()),
        }
    }
}
