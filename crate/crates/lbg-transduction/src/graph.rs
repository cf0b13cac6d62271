use lbg_core::{ball, GraphFragment, Symbol, Word};

use crate::error::TransductionError;
use crate::transduction::IncrementalTransduction;

/// Ball of the transduction graph: `u -a-> v` whenever `v` is a successor
/// of `u` under `T_a`.
pub fn graph_ball(
    family: &[(Symbol, IncrementalTransduction)],
    root: &Word,
    radius: usize,
    cap: usize,
) -> Result<GraphFragment, TransductionError> {
    let edges = |u: &Word| -> Result<Vec<(Symbol, Word)>, TransductionError> {
        let mut out = Vec::new();
        for (a, t) in family {
            out.extend(t.successors(u)?.into_iter().map(|v| (*a, v)));
        }
        Ok(out)
    };
    Ok(ball(std::slice::from_ref(root), radius, cap, edges, |u| u.to_string())?.fragment)
}
