use std::collections::{BTreeSet, HashSet, VecDeque};

use lbg_core::{Symbol, Word};

use crate::transducer::FiniteTransducer;

/// Image of a word, possibly cut by an output-length cap.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Applied {
    pub words: BTreeSet<Word>,
    /// Some run was abandoned because its output outgrew the cap.
    pub truncated: bool,
}

/// All `v` with `(u, v)` accepted and `|v| ≤ output_cap`.
pub fn apply(t: &FiniteTransducer, u: &[Symbol], output_cap: usize) -> Applied {
    let out = t.outgoing();
    let mut result = Applied::default();
    let start = (t.initial, 0usize, Word::empty());
    let mut seen: HashSet<(Symbol, usize, Word)> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some((q, pos, w)) = queue.pop_front() {
        if pos == u.len() && t.finals.contains(&q) {
            result.words.insert(w.clone());
        }
        for tr in out.get(&q).into_iter().flatten() {
            let pos2 = match tr.input {
                Some(x) if pos < u.len() && u[pos] == x => pos + 1,
                Some(_) => continue,
                None => pos,
            };
            let w2 = match tr.output {
                Some(_) if w.len() >= output_cap => {
                    result.truncated = true;
                    continue;
                }
                Some(y) => w.appended(y),
                None => w.clone(),
            };
            let next = (tr.to, pos2, w2);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    result
}

/// The unique image of `u`, or an error count when there are several.
pub fn apply_function(t: &FiniteTransducer, u: &[Symbol], output_cap: usize) -> Result<Option<Word>, usize> {
    let r = apply(t, u, output_cap);
    match r.words.len() {
        0 => Ok(None),
        1 => Ok(r.words.into_iter().next()),
        n => Err(n),
    }
}
