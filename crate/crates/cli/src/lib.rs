//! Batch front end: JSON specs in, JSON reports (and 2D plots) out.

pub mod commands;
pub mod input;
pub mod plot;
pub mod report;
pub mod selftest;

use rayfan::{FanError, PolyError, RingError, ToricError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input:\n  - {}", .0.join("\n  - "))]
    Schema(Vec<String>),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    /// 2 for bad input or a failed precondition, 1 for anything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Schema(_) | CliError::Precondition(_) | CliError::Read { .. } => 2,
            CliError::Internal(_) => 1,
        }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::BadNumber(_) | PolyError::DimensionMismatch { .. } => CliError::Schema(vec![e.to_string()]),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<RingError> for CliError {
    fn from(e: RingError) -> Self {
        match e {
            RingError::Poly(p) => p.into(),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

impl From<FanError> for CliError {
    fn from(e: FanError) -> Self {
        match e {
            FanError::Poly(p) => p.into(),
            FanError::Ring(r) => r.into(),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

impl From<ToricError> for CliError {
    fn from(e: ToricError) -> Self {
        match e {
            ToricError::Poly(p) => p.into(),
            ToricError::Ring(r) => r.into(),
            ToricError::Fan(f) => f.into(),
            ToricError::InvalidFan(v) | ToricError::InvalidDivisors(v) => CliError::Schema(v),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Schema(vec![format!("malformed JSON: {e}")])
    }
}
