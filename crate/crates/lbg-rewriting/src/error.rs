use lbg_core::CoreError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewritingError {
    #[error("invalid rule {rule}: {reason}")]
    InvalidRule { rule: String, reason: String },
    #[error("{0} is not a normal form")]
    NotNormalForm(String),
    #[error("symbol {0} is not in the alphabet")]
    UnknownSymbol(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}
