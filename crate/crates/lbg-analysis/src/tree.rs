use std::collections::BTreeSet;

use lbg_core::{ball, sym, Alphabet, CoreError, GraphFragment, Symbol, Word};

use crate::degree::AnalysisError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mark {
    Accept,
    Reject,
}

impl Mark {
    fn letter(self) -> &'static str {
        match self {
            Mark::Accept => "A",
            Mark::Reject => "R",
        }
    }
}

/// Mark of a tree vertex name such as `Aab`.
pub fn mark_of(name: &str) -> Option<Mark> {
    match name.chars().next() {
        Some('A') => Some(Mark::Accept),
        Some('R') => Some(Mark::Reject),
        _ => None,
    }
}

/// The complete `Σ`-labeled tree to depth `radius` whose vertex for `w`
/// is `Aw` when `w ∈ L` and `Rw` otherwise.
pub fn language_tree(
    sigma: &Alphabet,
    language: impl Fn(&Word) -> bool,
    radius: usize,
    cap: usize,
) -> Result<GraphFragment, AnalysisError> {
    let marked = |w: &Word| if language(w) { Mark::Accept } else { Mark::Reject };
    let gen = |w: &Word| -> Result<Vec<(Symbol, Word)>, CoreError> {
        Ok(sigma.iter().map(|a| (a, w.appended(a))).collect())
    };
    let name = |w: &Word| {
        let body: String = w.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(if w.iter().all(|s| s.is_char()) { "" } else { " " });
        format!("{}{}", marked(w).letter(), body)
    };
    if let Some(s) = sigma.iter().find(|&s| s == sym("A") || s == sym("R")) {
        return Err(AnalysisError::ReservedLetter(s.to_string()));
    }
    Ok(ball(&[Word::empty()], radius, cap, gen, name)?.fragment)
}

/// Every vertex but one root has in-degree 1, every root reaches every
/// vertex, and no vertex has two out-edges with one label.
pub fn is_deterministic_tree(f: &GraphFragment) -> bool {
    if f.roots().len() != 1 {
        return false;
    }
    let root = *f.roots().iter().next().expect("one root");
    let reach = f.distances_from(root);
    (0..f.len()).all(|v| {
        let labels: BTreeSet<Symbol> = f.out_edges(v).map(|(a, _)| a).collect();
        let expected_in = usize::from(v != root);
        labels.len() == f.out_degree(v) && f.in_degree(v) == expected_in && reach[v].is_some()
    })
}
