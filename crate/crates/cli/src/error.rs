use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid scenario: {field}: {message}")]
    Validation { field: String, message: String },
    #[error("numerical failure: {0}")]
    Numerical(#[from] krylov_core::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    /// 2 for anything wrong with the input, 3 for numerical failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Validation { .. } => 2,
            CliError::Numerical(_) => 3,
            CliError::Io { .. } => 1,
        }
    }
}

pub fn invalid(field: impl Into<String>, message: impl Into<String>) -> CliError {
    CliError::Validation {
        field: field.into(),
        message: message.into(),
    }
}

pub(crate) fn io_error(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> CliError {
    let path = path.into();
    move |source| CliError::Io { path, source }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Parse("x".into()).exit_code(), 2);
        assert_eq!(invalid("seed", "bad").exit_code(), 2);
        assert_eq!(invalid("seed", "bad").to_string(), "invalid scenario: seed: bad");
        assert_eq!(CliError::from(krylov_core::Error::InvalidStateShape).exit_code(), 3);
        let io = io_error("f")(std::io::Error::from(std::io::ErrorKind::NotFound));
        assert_eq!(io.exit_code(), 1);
    }
}
