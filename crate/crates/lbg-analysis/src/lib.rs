//! Degree growth of graph fragments and the gadget graphs used to separate
//! graph classes.

pub mod degree;
pub mod gadgets;
pub mod tree;

pub use degree::{degree_profile, fit_outdegree_bound, AnalysisError, BoundFit, DegreeProfile};
pub use gadgets::{Bitree, Fig3, Gadget, Language, LemmaId};
pub use tree::{is_deterministic_tree, language_tree, mark_of, Mark};
