use lbg_core::CoreError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MachineError {
    #[error("invalid configuration {0}")]
    InvalidConfiguration(String),
    #[error("input symbol {0} is not in the input alphabet")]
    InvalidInput(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("machine is not valid: {0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}
