use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CliError {
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("{context}: {err}")]
    Engine { context: String, err: ncpoisson::Error },
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        CliError::Parse { pos, msg: msg.into() }
    }

    pub fn engine(context: impl Into<String>, err: ncpoisson::Error) -> Self {
        CliError::Engine { context: context.into(), err }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::UnknownGenerator(_) | CliError::Usage(_) => 2,
            CliError::Engine { err: ncpoisson::Error::UnknownGenerator(_), .. } => 2,
            CliError::Engine { err: ncpoisson::Error::BadParameters(_), .. } => 2,
            CliError::Engine { err: ncpoisson::Error::LengthMismatch { .. }, .. } => 2,
            CliError::Engine { .. } | CliError::Io(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
