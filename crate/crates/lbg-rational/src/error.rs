use lbg_core::CoreError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalError {
    #[error("transducer {name} is not functional on {input}: {count} images")]
    NotFunctional { name: String, input: String, count: usize },
    #[error("invalid transducer: {0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}
