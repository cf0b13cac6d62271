use std::collections::{BTreeSet, VecDeque};

use lbg_core::Symbol;

use crate::transducer::{FiniteTransducer, Transition};

/// Position of a path with respect to the synchronized shape
/// (letter/letter)* then one-sided padding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Phase {
    Paired,
    InputOnly,
    OutputOnly,
}

fn advance(phase: Phase, t: &Transition) -> Option<Phase> {
    match (t.input, t.output, phase) {
        (None, None, p) => Some(p),
        (Some(_), Some(_), Phase::Paired) => Some(Phase::Paired),
        (Some(_), None, Phase::Paired | Phase::InputOnly) => Some(Phase::InputOnly),
        (None, Some(_), Phase::Paired | Phase::OutputOnly) => Some(Phase::OutputOnly),
        _ => None,
    }
}

/// Every accepting path is labelled in (A×A)*·((A×ε)* ∪ (ε×A)*).
///
/// Explores (state, phase) pairs from the initial state; the transducer
/// fails exactly when some reachable pair has a transition the phase
/// forbids whose target can still reach a final state.
pub fn is_left_synchronized(t: &FiniteTransducer) -> bool {
    let out = t.outgoing();
    let live = t.coaccessible();
    let start = (t.initial, Phase::Paired);
    let mut seen: BTreeSet<(Symbol, Phase)> = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some((q, phase)) = queue.pop_front() {
        for tr in out.get(&q).into_iter().flatten() {
            if !live.contains(&tr.to) {
                continue;
            }
            match advance(phase, tr) {
                Some(p2) => {
                    if seen.insert((tr.to, p2)) {
                        queue.push_back((tr.to, p2));
                    }
                }
                None => return false,
            }
        }
    }
    true
}

/// The pair labels of accepting paths with at most `max_steps`
/// transitions, as sequences of (input, output) components.
pub fn accepting_label_paths(t: &FiniteTransducer, max_steps: usize) -> Vec<Vec<(Option<Symbol>, Option<Symbol>)>> {
    let out = t.outgoing();
    let mut found = Vec::new();
    let mut stack = vec![(t.initial, Vec::new())];
    while let Some((q, path)) = stack.pop() {
        if t.finals.contains(&q) {
            found.push(path.clone());
        }
        if path.len() == max_steps {
            continue;
        }
        for tr in out.get(&q).into_iter().flatten() {
            let mut p = path.clone();
            p.push((tr.input, tr.output));
            stack.push((tr.to, p));
        }
    }
    found
}
