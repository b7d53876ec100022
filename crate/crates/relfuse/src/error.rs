//! Error type shared across the crate.

use thiserror::Error;

/// Coarse classification used by callers (notably the CLI) to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    /// Bad configuration or arguments.
    Config,
    /// Unreadable, malformed or inconsistent input data.
    Data,
    /// Numerical failure (degenerate vectors, divergence, non-finite values).
    Numerical,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid configuration: {field}: {message}")]
    InvalidConfig { field: String, message: String },

    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("unknown surface form {surface:?}{}", suggestion_list(.suggestions))]
    UnknownSurface {
        surface: String,
        suggestions: Vec<String>,
    },

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("model file format error: {0}")]
    Format(String),

    #[error("vocabulary hash mismatch: model has {model}, input has {input}")]
    VocabHashMismatch { model: String, input: String },

    #[error("degenerate vector: {0} has norm below 1e-12")]
    DegenerateVector(String),

    #[error("exact enumeration refused: {size} triples exceeds the {bound} bound")]
    ScaleBound { size: u64, bound: u64 },

    #[error("non-finite gradient in the {block} block")]
    NonFiniteGradient { block: &'static str },

    #[error("training diverged: validation metric {metric} fell below {floor} at epoch {epoch}")]
    Divergence {
        metric: f64,
        floor: f64,
        epoch: usize,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::InvalidConfig { .. } => ErrorCategory::Config,
            Error::Parse { .. }
            | Error::UnknownSurface { .. }
            | Error::InsufficientData(_)
            | Error::Format(_)
            | Error::VocabHashMismatch { .. }
            | Error::Io(_) => ErrorCategory::Data,
            Error::DegenerateVector(_)
            | Error::ScaleBound { .. }
            | Error::NonFiniteGradient { .. }
            | Error::Divergence { .. } => ErrorCategory::Numerical,
        }
    }
}

fn suggestion_list(suggestions: &[String]) -> String {
    if suggestions.is_empty() {
        String::new()
    } else {
        format!("; nearest matches: {}", suggestions.join(", "))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
