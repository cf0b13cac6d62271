//! Executable versions of the three conversions between labeled machines,
//! length-decreasing rewriting systems and incremental transductions.

pub mod error;
pub mod report;
pub mod to_llbm;
pub mod to_rewriting;
pub mod to_transductions;

pub use error::EquivalenceError;
pub use report::{ConversionReport, RadiusCheck};
pub use to_llbm::{transductions_to_llbm, LlbmFromTransductions, BLANK, EXTERNAL};
pub use to_rewriting::{llbm_to_rewriting, llbm_to_rewriting_normalized, LlbmRewriting};
pub use to_transductions::{rewriting_source, rewriting_to_transductions};
