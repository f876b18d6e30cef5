use std::fmt;
use std::path::{Path, PathBuf};

use thiserror::Error;

/// Failures surfaced by the command line: validation problems exit with 1,
/// I/O problems with 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{message}")]
    Validation {
        message: String,
        location: Option<String>,
    },
    #[error("{source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn validation(message: impl Into<String>) -> Self {
        CliError::Validation {
            message: message.into(),
            location: None,
        }
    }

    pub fn at(path: &Path, message: impl Into<String>) -> Self {
        CliError::Validation {
            message: message.into(),
            location: Some(path.display().to_string()),
        }
    }

    pub fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.to_path_buf(),
            source,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation { .. } => 1,
            CliError::Io { .. } => 2,
        }
    }

    pub fn location(&self) -> Option<String> {
        match self {
            CliError::Validation { location, .. } => location.clone(),
            CliError::Io { path, .. } => Some(path.display().to_string()),
        }
    }

    /// Attaches `path` as the location unless one is already set.
    pub fn in_file(self, path: &Path) -> Self {
        match self {
            CliError::Validation {
                message,
                location: None,
            } => CliError::at(path, message),
            other => other,
        }
    }
}

impl From<fuzzysoft_core::Error> for CliError {
    fn from(e: fuzzysoft_core::Error) -> Self {
        CliError::validation(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub message: String,
    pub location: Option<String>,
}

impl Diagnostic {
    pub fn error(message: impl Into<String>, location: Option<String>) -> Self {
        Diagnostic {
            severity: Severity::Error,
            message: message.into(),
            location,
        }
    }

    pub fn warning(message: impl Into<String>, location: Option<String>) -> Self {
        Diagnostic {
            severity: Severity::Warning,
            message: message.into(),
            location,
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let level = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        match &self.location {
            Some(loc) => write!(f, "{level}: {loc}: {}", self.message),
            None => write!(f, "{level}: {}", self.message),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
