//! Finite transducers and the rational graphs they define.

pub mod access;
pub mod apply;
pub mod compose;
pub mod error;
pub mod graph;
pub mod samples;
pub mod sync;
pub mod transducer;
pub mod weber;

pub use access::{append_label, strip_label, vertex_access};
pub use apply::{apply, apply_function, Applied};
pub use compose::compose;
pub use error::RationalError;
pub use graph::{rational_ball, rational_ball_restricted, Family};
pub use sync::{accepting_label_paths, is_left_synchronized};
pub use transducer::{FiniteTransducer, Transition};
pub use weber::{weber_rename, CanonicalPair, Evaluator, WeberFunction, WeberParams, WeberRenaming};
