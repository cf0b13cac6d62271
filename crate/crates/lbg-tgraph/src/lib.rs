//! Transition graphs: external configurations joined by one letter step
//! followed by silent steps.

pub mod closure;
pub mod graph;
pub mod language;
pub mod product;

pub use closure::{caucal_ball, caucal_edges, closure_edges, entry_vertices, reachable_restriction, transition_ball};
pub use graph::{epsilon_chain_graph, ConfigurationGraph, ExplicitGraph, ExternalityPolicy, MachineGraph, TgraphError};
pub use language::{fragment_language, language, language_from, machine_language, path_language, FinalPredicate};
pub use product::{product_label, synchronized_product};

use lbg_core::GraphFragment;
use lbg_machine::MachineDescription;

/// Transition ball of a machine from `[q0]`.
pub fn machine_ball(
    m: &MachineDescription,
    radius: usize,
    policy: ExternalityPolicy,
    cap: usize,
) -> Result<GraphFragment, TgraphError> {
    let g = MachineGraph::new(m, policy);
    transition_ball(&g, &[g.initial()], radius, cap)
}
