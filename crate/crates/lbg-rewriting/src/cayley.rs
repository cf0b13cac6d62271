use lbg_core::{ball, GraphFragment, Symbol, Word};

use crate::derive::{is_normal_form, NormalFormSearch};
use crate::error::RewritingError;
use crate::system::RewritingSystem;

/// Edges `u -a-> v` with `ua` deriving the normal form `v`.
pub fn cayley_edges(r: &RewritingSystem, u: &[Symbol]) -> Result<Vec<(Symbol, Word)>, RewritingError> {
    cayley_edges_capped(r, u, usize::MAX)
}

/// As [`cayley_edges`], with a cap on the words visited per letter.
pub fn cayley_edges_capped(r: &RewritingSystem, u: &[Symbol], cap: usize) -> Result<Vec<(Symbol, Word)>, RewritingError> {
    r.check_word(u)?;
    if !is_normal_form(r, u) {
        return Err(RewritingError::NotNormalForm(Word::from_symbols(u.to_vec()).to_string()));
    }
    let search = NormalFormSearch { certificates: false, cap };
    let mut out = Vec::new();
    for a in r.labels.iter() {
        let mut ua = u.to_vec();
        ua.push(a);
        for v in search.run(r, &ua)?.forms {
            out.push((a, v));
        }
    }
    Ok(out)
}

/// Ball of the Cayley-type graph around `root`; vertices are named by
/// their word.
pub fn cayley_ball(r: &RewritingSystem, root: &Word, radius: usize, cap: usize) -> Result<GraphFragment, RewritingError> {
    r.check_word(root)?;
    if !is_normal_form(r, root) {
        return Err(RewritingError::NotNormalForm(root.to_string()));
    }
    Ok(ball(std::slice::from_ref(root), radius, cap, |u: &Word| cayley_edges(r, u), |u| u.to_string())?.fragment)
}
