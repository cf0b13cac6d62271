use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use lbg_core::{CoreError, Symbol, Word};

use crate::system::RewritingSystem;

/// One rewriting step: rule `rule` applied at `position`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub position: usize,
    pub rule: usize,
}

fn occurs_at(w: &[Symbol], pattern: &[Symbol], i: usize) -> bool {
    w.len() >= i + pattern.len() && &w[i..i + pattern.len()] == pattern
}

/// Replaces the occurrence of rule `step.rule` at `step.position`.
pub fn apply_step(r: &RewritingSystem, w: &[Symbol], step: Step) -> Option<Word> {
    let rule = r.rules.get(step.rule)?;
    if !occurs_at(w, &rule.lhs, step.position) {
        return None;
    }
    let mut out = Vec::with_capacity(w.len());
    out.extend_from_slice(&w[..step.position]);
    out.extend_from_slice(&rule.rhs);
    out.extend_from_slice(&w[step.position + rule.lhs.len()..]);
    Some(Word::from_symbols(out))
}

/// Every applicable step together with its result.
pub fn steps(r: &RewritingSystem, w: &[Symbol]) -> Vec<(Step, Word)> {
    let mut out = Vec::new();
    for position in 0..w.len() {
        for (rule, rr) in r.rules.iter().enumerate() {
            if occurs_at(w, &rr.lhs, position) {
                let step = Step { position, rule };
                out.push((step, apply_step(r, w, step).expect("occurrence checked")));
            }
        }
    }
    out
}

pub fn derive_once(r: &RewritingSystem, w: &[Symbol]) -> BTreeSet<Word> {
    steps(r, w).into_iter().map(|(_, v)| v).collect()
}

/// No left-hand side occurs in `w`.
pub fn is_normal_form(r: &RewritingSystem, w: &[Symbol]) -> bool {
    !(0..w.len()).any(|i| r.rules.iter().any(|rule| occurs_at(w, &rule.lhs, i)))
}

/// Result of a normal-form search.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NormalForms {
    pub forms: BTreeSet<Word>,
    /// For each normal form, a shortest derivation reaching it; filled only
    /// when certificates were requested.
    pub certificates: BTreeMap<Word, Vec<Step>>,
    /// Number of distinct words visited.
    pub visited: usize,
}

/// Breadth-first search of the words derivable from a start word.
#[derive(Clone, Copy, Debug)]
pub struct NormalFormSearch {
    pub certificates: bool,
    pub cap: usize,
}

impl Default for NormalFormSearch {
    fn default() -> Self {
        NormalFormSearch { certificates: false, cap: usize::MAX }
    }
}

impl NormalFormSearch {
    pub fn with_certificates() -> Self {
        NormalFormSearch { certificates: true, ..Default::default() }
    }

    pub fn run(&self, r: &RewritingSystem, w: &[Symbol]) -> Result<NormalForms, CoreError> {
        let start = Word::from_symbols(w.to_vec());
        let mut parent: HashMap<Word, Option<(Word, Step)>> = HashMap::new();
        parent.insert(start.clone(), None);
        let mut queue = VecDeque::from([start]);
        let mut out = NormalForms::default();
        while let Some(u) = queue.pop_front() {
            let next = steps(r, &u);
            if next.is_empty() {
                out.forms.insert(u.clone());
                continue;
            }
            for (step, v) in next {
                if parent.contains_key(&v) {
                    continue;
                }
                if parent.len() >= self.cap {
                    return Err(CoreError::SizeExceeded { cap: self.cap });
                }
                let link = if self.certificates { Some((u.clone(), step)) } else { None };
                parent.insert(v.clone(), link);
                queue.push_back(v);
            }
        }
        out.visited = parent.len();
        if self.certificates {
            for f in &out.forms {
                let mut path = Vec::new();
                let mut cur = f.clone();
                while let Some(Some((prev, step))) = parent.get(&cur) {
                    path.push(*step);
                    cur = prev.clone();
                }
                path.reverse();
                out.certificates.insert(f.clone(), path);
            }
        }
        Ok(out)
    }
}

/// The normal forms derivable from `w`.
pub fn normal_forms_of(r: &RewritingSystem, w: &[Symbol]) -> BTreeSet<Word> {
    NormalFormSearch::default().run(r, w).expect("uncapped search").forms
}

/// Replays a derivation; `None` when some step does not apply.
pub fn replay(r: &RewritingSystem, w: &[Symbol], certificate: &[Step]) -> Option<Word> {
    let mut cur = Word::from_symbols(w.to_vec());
    for &s in certificate {
        cur = apply_step(r, &cur, s)?;
    }
    Some(cur)
}

/// Bounded check that every word over the alphabet up to `maxlen` derives
/// at most one normal form.
pub fn unique_normal_forms_up_to(r: &RewritingSystem, maxlen: usize) -> Option<Word> {
    r.alphabet.words_up_to(maxlen).into_iter().find(|w| normal_forms_of(r, w).len() > 1)
}
