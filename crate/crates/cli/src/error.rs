use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] dynkin_ar::Error),
    #[error("{0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        use dynkin_ar::Error as E;
        match self {
            CliError::Core(e) => match e {
                E::InvalidInput(_) => "InvalidInput",
                E::InvalidQuiver(_) => "InvalidQuiver",
                E::MultiplicityViolation { .. } => "MultiplicityViolation",
                E::DimensionMismatch(_) => "DimensionMismatch",
                E::GenericityFailure { .. } => "GenericityFailure",
                E::ContainmentViolation(_) => "ContainmentViolation",
                E::NegativeDimension(_) => "NegativeDimension",
                E::AssumptionViolated(_) => "AssumptionViolated",
                E::InvalidIndex(_) => "InvalidIndex",
            },
            CliError::Usage(_) => "Usage",
            CliError::Io(_) => "Io",
            CliError::Json(_) => "Json",
            CliError::Csv(_) => "Csv",
        }
    }

    /// Bad input maps to 2; an internal failure of the linear algebra maps to 1.
    pub fn exit_code(&self) -> i32 {
        use dynkin_ar::Error as E;
        match self {
            CliError::Core(E::DimensionMismatch(_) | E::ContainmentViolation(_) | E::NegativeDimension(_) | E::GenericityFailure { .. }) => 1,
            CliError::Io(_) | CliError::Json(_) | CliError::Csv(_) => 1,
            _ => 2,
        }
    }

    pub fn report(&self) -> ErrorReport {
        ErrorReport { schema: crate::SCHEMA, error: ErrorBody { kind: self.kind().to_string(), message: self.to_string() } }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}

/// Structured error printed in place of a JSON report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub schema: u32,
    pub error: ErrorBody,
}

pub type CliResult<T> = std::result::Result<T, CliError>;
