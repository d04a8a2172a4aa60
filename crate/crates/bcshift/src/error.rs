use bcshift_core::{Error as CoreError, ErrorKind};
use serde::Serialize;
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_POLAR: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => match e.kind() {
                ErrorKind::Usage => EXIT_USAGE,
                ErrorKind::Domain | ErrorKind::Resonance => EXIT_DOMAIN,
                ErrorKind::Polar => EXIT_POLAR,
            },
            _ => EXIT_USAGE,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Core(e) => e.tag(),
            CliError::Io { .. } => "io",
            CliError::Csv(_) | CliError::Json(_) => "format",
        }
    }

    pub fn report(&self) -> ErrorReport {
        let weyl_index = match self {
            CliError::Core(e) => e.weyl_index(),
            _ => None,
        };
        ErrorReport {
            error: ErrorBody {
                kind: self.tag(),
                message: self.to_string(),
                exit_code: self.exit_code(),
                weyl_index,
            },
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ErrorReport {
    pub error: ErrorBody,
}

#[derive(Debug, Serialize)]
pub struct ErrorBody {
    pub kind: &'static str,
    pub message: String,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weyl_index: Option<usize>,
}
