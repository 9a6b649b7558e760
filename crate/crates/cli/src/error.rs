use thiserror::Error;

use crate::input::InputError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("no object named `{0}` in the input")]
    UnknownObject(String),
    #[error("{object} `{name}` cannot be used with {what}")]
    Incompatible { object: &'static str, name: String, what: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] prehom::Error),
}

impl CliError {
    /// 3 for resource bounds, 1 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Compute(prehom::Error::ResourceBound { .. }) => 3,
            _ => 1,
        }
    }
}
