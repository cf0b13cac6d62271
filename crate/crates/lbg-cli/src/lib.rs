//! Text formats, figure reproduction and the `lbg` command line.

pub mod commands;
pub mod error;
pub mod figures;
pub mod format;

pub use commands::{execute, read_document, run, Cli, Outcome};
pub use error::{CliError, EXIT_CAP, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE};
pub use format::{parse, parse_rule, parse_word, serialize, show_word, Builtin, Diagnostic, Document, Family};
