use std::fmt;

use lbg_analysis::AnalysisError;
use lbg_core::CoreError;
use lbg_equivalence::EquivalenceError;
use lbg_machine::MachineError;
use lbg_rational::RationalError;
use lbg_rewriting::RewritingError;
use lbg_tgraph::TgraphError;
use lbg_transduction::TransductionError;

/// Success, or a true answer.
pub const EXIT_OK: i32 = 0;
/// A false or negative answer.
pub const EXIT_NEGATIVE: i32 = 1;
/// Bad command line, unreadable input, or input a command cannot handle.
pub const EXIT_USAGE: i32 = 2;
/// A vertex or search cap was reached.
pub const EXIT_CAP: i32 = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> CliError {
        CliError { code: EXIT_USAGE, message: message.into() }
    }

    fn module(e: impl fmt::Display, cap: bool) -> CliError {
        let code = if cap { EXIT_CAP } else { EXIT_USAGE };
        CliError { code, message: e.to_string() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

fn core_cap(e: &CoreError) -> bool {
    matches!(e, CoreError::SizeExceeded { .. })
}

fn machine_cap(e: &MachineError) -> bool {
    matches!(e, MachineError::Core(c) if core_cap(c))
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let cap = core_cap(&e);
        CliError::module(e, cap)
    }
}

impl From<MachineError> for CliError {
    fn from(e: MachineError) -> Self {
        let cap = machine_cap(&e);
        CliError::module(e, cap)
    }
}

impl From<TgraphError> for CliError {
    fn from(e: TgraphError) -> Self {
        let cap = e.is_size_exceeded();
        CliError::module(e, cap)
    }
}

impl From<RewritingError> for CliError {
    fn from(e: RewritingError) -> Self {
        let cap = matches!(&e, RewritingError::Core(c) if core_cap(c));
        CliError::module(e, cap)
    }
}

impl From<RationalError> for CliError {
    fn from(e: RationalError) -> Self {
        let cap = matches!(&e, RationalError::Core(c) if core_cap(c));
        CliError::module(e, cap)
    }
}

impl From<TransductionError> for CliError {
    fn from(e: TransductionError) -> Self {
        let cap = e.is_size_exceeded() || matches!(&e, TransductionError::Machine(m) if machine_cap(m));
        CliError::module(e, cap)
    }
}

impl From<EquivalenceError> for CliError {
    fn from(e: EquivalenceError) -> Self {
        let cap = e.is_size_exceeded();
        CliError::module(e, cap)
    }
}

impl From<AnalysisError> for CliError {
    fn from(e: AnalysisError) -> Self {
        let cap = matches!(&e, AnalysisError::Core(c) if core_cap(c));
        CliError::module(e, cap)
    }
}
