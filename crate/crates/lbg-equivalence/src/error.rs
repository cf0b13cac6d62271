use lbg_core::CoreError;
use lbg_machine::MachineError;
use lbg_rewriting::RewritingError;
use lbg_tgraph::TgraphError;
use lbg_transduction::TransductionError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EquivalenceError {
    #[error("machine is not normalized: {0}")]
    NotNormalized(String),
    #[error("symbol name clash: {0}")]
    NameClash(String),
    #[error("transduction for {0} is not backed by an acceptor machine")]
    NeedsAcceptor(String),
    #[error("transduction for {label} is {k}-incremental; apply the block encoding first")]
    IncrementTooLarge { label: String, k: usize },
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Machine(#[from] MachineError),
    #[error(transparent)]
    Rewriting(#[from] RewritingError),
    #[error(transparent)]
    Transduction(#[from] TransductionError),
    #[error(transparent)]
    Tgraph(#[from] TgraphError),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl EquivalenceError {
    pub fn is_size_exceeded(&self) -> bool {
        match self {
            EquivalenceError::Core(CoreError::SizeExceeded { .. }) => true,
            EquivalenceError::Rewriting(RewritingError::Core(CoreError::SizeExceeded { .. })) => true,
            EquivalenceError::Machine(MachineError::Core(CoreError::SizeExceeded { .. })) => true,
            EquivalenceError::Transduction(e) => e.is_size_exceeded(),
            EquivalenceError::Tgraph(e) => e.is_size_exceeded(),
            _ => false,
        }
    }
}
