use std::cell::RefCell;

use lbg_core::{ball, GraphFragment, Symbol, Word};

use crate::apply::apply;
use crate::error::RationalError;
use crate::transducer::FiniteTransducer;

/// One transducer per edge label; a label may appear several times.
pub type Family = Vec<(Symbol, FiniteTransducer)>;

/// Ball of the rational graph of `family` around `root`. Vertices whose
/// image was cut by `output_cap` are marked frontier.
pub fn rational_ball(
    family: &[(Symbol, FiniteTransducer)],
    root: &Word,
    radius: usize,
    output_cap: usize,
    cap: usize,
) -> Result<GraphFragment, RationalError> {
    rational_ball_restricted(family, root, radius, output_cap, cap, |_| true)
}

/// As [`rational_ball`], keeping only target vertices satisfying `keep`.
pub fn rational_ball_restricted(
    family: &[(Symbol, FiniteTransducer)],
    root: &Word,
    radius: usize,
    output_cap: usize,
    cap: usize,
    keep: impl Fn(&Word) -> bool,
) -> Result<GraphFragment, RationalError> {
    let cut: RefCell<Vec<Word>> = RefCell::new(Vec::new());
    let edges = |u: &Word| -> Result<Vec<(Symbol, Word)>, RationalError> {
        let mut out = Vec::new();
        for (a, t) in family {
            let r = apply(t, u, output_cap);
            if r.truncated {
                cut.borrow_mut().push(u.clone());
            }
            out.extend(r.words.into_iter().filter(|v| keep(v)).map(|v| (*a, v)));
        }
        Ok(out)
    };
    let b = ball(std::slice::from_ref(root), radius, cap, edges, |u| u.to_string())?;
    let mut fragment = b.fragment;
    for u in cut.into_inner() {
        if let Some(i) = b.vertices.iter().position(|v| *v == u) {
            fragment.set_frontier(i);
        }
    }
    Ok(fragment)
}
