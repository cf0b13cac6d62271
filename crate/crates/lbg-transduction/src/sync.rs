use std::collections::BTreeMap;
use std::sync::Arc;

use lbg_core::{Alphabet, Symbol};
use lbg_rational::{apply, is_left_synchronized, FiniteTransducer};

use crate::error::TransductionError;
use crate::transduction::{IncrementalTransduction, Provenance};

/// Largest output length along input-free paths from each state to a final
/// state, or `NotFiniteImage` when such paths can be pumped.
fn input_free_growth(t: &FiniteTransducer) -> Result<BTreeMap<Symbol, usize>, TransductionError> {
    let mut best: BTreeMap<Symbol, Option<usize>> =
        t.states.iter().map(|&q| (q, t.finals.contains(&q).then_some(0))).collect();
    let free: Vec<_> = t.transitions.iter().filter(|tr| tr.input.is_none()).collect();
    let rounds = t.states.len() + 1;
    for round in 0..=rounds {
        let mut changed = false;
        for tr in &free {
            if let Some(b) = best[&tr.to] {
                let cand = b + usize::from(tr.output.is_some());
                if best[&tr.from].map_or(true, |cur| cand > cur) {
                    best.insert(tr.from, Some(cand));
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
        if round == rounds {
            return Err(TransductionError::NotFiniteImage);
        }
    }
    Ok(best.into_iter().filter_map(|(q, b)| b.map(|b| (q, b))).collect())
}

/// Wraps a left-synchronized transducer of finite image; `k` is the
/// largest output a path can still emit once the input is exhausted. The
/// alphabet is the set of symbols on the transitions.
pub fn from_synchronized(t: &FiniteTransducer) -> Result<IncrementalTransduction, TransductionError> {
    let alphabet: Alphabet = t.input_alphabet().into_iter().chain(t.output_alphabet()).collect();
    from_synchronized_over(t, alphabet)
}

/// As [`from_synchronized`] with an explicit alphabet.
pub fn from_synchronized_over(t: &FiniteTransducer, alphabet: Alphabet) -> Result<IncrementalTransduction, TransductionError> {
    let trimmed = t.trim();
    if !is_left_synchronized(&trimmed) {
        return Err(TransductionError::NotSynchronized);
    }
    let growth = input_free_growth(&trimmed)?;
    let k = trimmed.states.iter().filter_map(|q| growth.get(q)).copied().max().unwrap_or(0);
    let (a, b) = (Arc::new(trimmed), k);
    let for_decider = a.clone();
    let decider = Arc::new(move |u: &lbg_core::Word, v: &lbg_core::Word| {
        apply(&for_decider, u.symbols(), u.len() + b).words.contains(v)
    });
    let for_generator = a.clone();
    Ok(IncrementalTransduction::new(
        alphabet,
        k,
        Provenance::Semantic { description: "synchronized transducer".into(), source: Some(a) },
        decider,
    )
    .with_generator(Arc::new(move |u| apply(&for_generator, u.symbols(), u.len() + b).words)))
}
