use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid functional spec: {0}")]
    Spec(String),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Core(#[from] pontryagin::Error),
}

impl CliError {
    /// 1 for internal inconsistencies, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        use pontryagin::Error as E;
        match self {
            CliError::Core(
                E::Internal(_)
                | E::PivotZero { .. }
                | E::K3Undetermined { .. }
                | E::SingularThomMatrix { .. },
            ) => 1,
            _ => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
