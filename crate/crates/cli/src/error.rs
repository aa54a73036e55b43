use std::path::PathBuf;

use pairgraph_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// A flag or job field failed validation.
    #[error("invalid {field}: {source}")]
    Field {
        field: &'static str,
        #[source]
        source: CoreError,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("cannot access {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0} reproduction check(s) did not match")]
    Mismatch(usize),
}

impl CliError {
    pub fn field(field: &'static str) -> impl FnOnce(CoreError) -> CliError {
        move |source| CliError::Field { field, source }
    }

    /// 2 validation, 3 non-convergence, 4 reproduction mismatch, 1 anything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(CoreError::NonConvergence(_)) => 3,
            CliError::Field { .. } | CliError::Usage(_) | CliError::Core(_) => 2,
            CliError::Mismatch(_) => 4,
            CliError::Io { .. } => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Core(CoreError::NonConvergence(7)).exit_code(), 3);
        assert_eq!(CliError::Core(CoreError::IdentityInS).exit_code(), 2);
        assert_eq!(CliError::field("--group")(CoreError::NotPrime(4)).exit_code(), 2);
        assert_eq!(CliError::Mismatch(1).exit_code(), 4);
    }
}
