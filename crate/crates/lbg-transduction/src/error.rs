use lbg_core::CoreError;
use lbg_machine::MachineError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TransductionError {
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),
    #[error("transducer is not left-synchronized")]
    NotSynchronized,
    #[error("transducer has an output-emitting cycle without input")]
    NotFiniteImage,
    #[error("word {word} uses {symbol}, which is outside the alphabet")]
    ForeignSymbol { word: String, symbol: String },
    #[error("invalid acceptor: {0}")]
    InvalidAcceptor(String),
    #[error("cannot encode: {0}")]
    Encoding(String),
    #[error(transparent)]
    Machine(#[from] MachineError),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl TransductionError {
    pub fn is_size_exceeded(&self) -> bool {
        matches!(self, TransductionError::Core(CoreError::SizeExceeded { .. }))
    }
}
