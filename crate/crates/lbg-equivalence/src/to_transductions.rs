//! Rewriting system to transductions: `T_a = {(ua, v) : u, v ∈ NF(R), ua →* v}`.

use std::collections::BTreeSet;
use std::sync::Arc;

use lbg_core::{Symbol, Word};
use lbg_rewriting::{is_normal_form, normal_forms_of, RewritingSystem};
use lbg_transduction::{IncrementalTransduction, Provenance};

fn image(r: &RewritingSystem, a: Symbol, w: &Word) -> BTreeSet<Word> {
    match w.symbols().split_last() {
        Some((&last, u)) if last == a && is_normal_form(r, u) => normal_forms_of(r, w.symbols()),
        _ => BTreeSet::new(),
    }
}

/// One 0-incremental transduction per label of `r`. Each carries the
/// input suffix `a`, so its graph edge out of `u` is the image of `ua`,
/// and keeps `r` as its provenance source.
pub fn rewriting_to_transductions(r: &RewritingSystem) -> Vec<(Symbol, IncrementalTransduction)> {
    let source = Arc::new(r.clone());
    r.labels
        .iter()
        .map(|a| {
            let (rd, rg) = (source.clone(), source.clone());
            let t = IncrementalTransduction::new(
                r.alphabet.clone(),
                0,
                Provenance::Semantic {
                    description: format!("normal forms of u{}", a),
                    source: Some(source.clone()),
                },
                Arc::new(move |w: &Word, v: &Word| image(&rd, a, w).contains(v)),
            )
            .with_generator(Arc::new(move |w: &Word| image(&rg, a, w)))
            .with_input_suffix(Word::from_symbols(vec![a]));
            (a, t)
        })
        .collect()
}

/// The rewriting system a transduction was compiled from, if any.
pub fn rewriting_source(t: &IncrementalTransduction) -> Option<Arc<RewritingSystem>> {
    match &t.provenance {
        Provenance::Semantic { source: Some(s), .. } => s.clone().downcast::<RewritingSystem>().ok(),
        _ => None,
    }
}
