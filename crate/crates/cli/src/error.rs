//! Maps library failures onto the tool's exit-code contract:
//! 1 malformed input, 2 budget exceeded, 3 no witness found,
//! 4 internal-consistency failure.

use hullkit::code::CodeError;
use hullkit::enumerate::EnumError;
use hullkit::gf::FieldError;
use hullkit::lcdize::LcdizeError;
use hullkit::matfq::MatError;
use std::fmt;

#[derive(Debug)]
pub enum CliError {
    Malformed(String),
    Budget(String),
    NoWitness(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Malformed(_) => 1,
            CliError::Budget(_) => 2,
            CliError::NoWitness(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Malformed(m) => write!(f, "{m}"),
            CliError::Budget(m) => write!(f, "{m}"),
            CliError::NoWitness(m) => write!(f, "{m}"),
            CliError::Internal(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<FieldError> for CliError {
    fn from(e: FieldError) -> Self {
        CliError::Malformed(e.to_string())
    }
}

impl From<MatError> for CliError {
    fn from(e: MatError) -> Self {
        CliError::Malformed(e.to_string())
    }
}

impl From<CodeError> for CliError {
    fn from(e: CodeError) -> Self {
        match e {
            CodeError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            CodeError::InternalInconsistency(_) => CliError::Internal(e.to_string()),
            CodeError::FieldMismatch => CliError::Internal(e.to_string()),
            other => CliError::Malformed(other.to_string()),
        }
    }
}

impl From<EnumError> for CliError {
    fn from(e: EnumError) -> Self {
        match e {
            EnumError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            EnumError::NotBinary { .. } | EnumError::NotTernary { .. } => {
                CliError::Malformed(e.to_string())
            }
            EnumError::Code(inner) => CliError::from(inner),
            EnumError::Field(inner) => CliError::from(inner),
            // identity violations: these hold for every valid input, so
            // hitting one means the implementation is wrong
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<LcdizeError> for CliError {
    fn from(e: LcdizeError) -> Self {
        match e {
            LcdizeError::NoWitnessFound { .. } => CliError::NoWitness(e.to_string()),
            LcdizeError::GridExhausted { .. } => CliError::Internal(e.to_string()),
            LcdizeError::FieldTooSmall { .. } | LcdizeError::ZeroEntry { .. } => {
                CliError::Malformed(e.to_string())
            }
            LcdizeError::Field(inner) => CliError::from(inner),
            LcdizeError::Code(inner) => CliError::from(inner),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Malformed(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Malformed(e.to_string())
    }
}
