//! Linearly bounded machines, classical and labeled.

pub mod config;
pub mod convert;
pub mod corpus;
pub mod determinize;
pub mod error;
pub mod explore;
pub mod model;
pub mod normalize;
pub mod samples;
pub mod semantics;

pub use config::Configuration;
pub use convert::lbm_to_llbm;
pub use determinize::prune_determinize;
pub use error::MachineError;
pub use model::{left, right, Dir, Flavor, MachineDescription, Rule, Shape};
pub use normalize::{external_states, is_normalized, normalize};
pub use semantics::{accepts, accepts_from, apply, is_deterministic, step, step_bound, Runner};
