//! Length-decreasing word rewriting: derivation, normal forms and
//! Cayley-type graphs.

pub mod cayley;
pub mod derive;
pub mod error;
pub mod samples;
pub mod system;

pub use cayley::{cayley_ball, cayley_edges, cayley_edges_capped};
pub use derive::{
    apply_step, derive_once, is_normal_form, normal_forms_of, replay, steps, unique_normal_forms_up_to, NormalFormSearch,
    NormalForms, Step,
};
pub use error::RewritingError;
pub use system::{RewriteRule, RewritingSystem};
