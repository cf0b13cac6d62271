use std::collections::{BTreeSet, HashSet, VecDeque};
use std::hash::Hash;

use lbg_core::{CoreError, GraphFragment, Symbol, Word};
use regex::Regex;

use lbg_machine::{Configuration, MachineDescription};

use crate::closure::{closure_edges, entry_vertices};
use crate::graph::{ConfigurationGraph, ExternalityPolicy, MachineGraph, TgraphError};

/// Which vertices end a path, decided on vertex display names.
pub enum FinalPredicate {
    /// An explicit finite set of names.
    Names(BTreeSet<String>),
    /// A whole-name pattern in which `*`, `+`, `?`, `(`, `)` and `|` are
    /// operators and every other character is literal, e.g. `[b*q2b]`.
    Pattern(Regex),
    /// Any decision procedure.
    Decide(Box<dyn Fn(&str) -> bool + Send + Sync>),
}

impl FinalPredicate {
    pub fn names<I: IntoIterator<Item = S>, S: Into<String>>(names: I) -> FinalPredicate {
        FinalPredicate::Names(names.into_iter().map(Into::into).collect())
    }

    pub fn pattern(text: &str) -> Result<FinalPredicate, TgraphError> {
        let mut re = String::from("^(?:");
        for c in text.chars() {
            if "*+?()|".contains(c) {
                re.push(c);
            } else {
                re.push_str(&regex::escape(c.encode_utf8(&mut [0u8; 4])));
            }
        }
        re.push_str(")$");
        Regex::new(&re).map(FinalPredicate::Pattern).map_err(|e| TgraphError::BadPattern(e.to_string()))
    }

    pub fn decide(f: impl Fn(&str) -> bool + Send + Sync + 'static) -> FinalPredicate {
        FinalPredicate::Decide(Box::new(f))
    }

    pub fn holds(&self, name: &str) -> bool {
        match self {
            FinalPredicate::Names(s) => s.contains(name),
            FinalPredicate::Pattern(re) => re.is_match(name),
            FinalPredicate::Decide(f) => f(name),
        }
    }
}

/// Words of length at most `maxlen` labelling a path from some root to a
/// vertex accepted by `is_final`, explored over (vertex, word) pairs.
pub fn path_language<V, E, Gen, F>(
    roots: &[V],
    mut generator: Gen,
    is_final: F,
    maxlen: usize,
    cap: usize,
) -> Result<BTreeSet<Word>, E>
where
    V: Clone + Eq + Hash,
    E: From<CoreError>,
    Gen: FnMut(&V) -> Result<Vec<(Symbol, V)>, E>,
    F: Fn(&V) -> bool,
{
    let mut out = BTreeSet::new();
    let mut seen: HashSet<(V, Word)> = HashSet::new();
    let mut queue: VecDeque<(V, Word)> = VecDeque::new();
    for r in roots {
        if seen.insert((r.clone(), Word::empty())) {
            queue.push_back((r.clone(), Word::empty()));
        }
    }
    while let Some((v, w)) = queue.pop_front() {
        if is_final(&v) {
            out.insert(w.clone());
        }
        if w.len() == maxlen {
            continue;
        }
        for (a, t) in generator(&v)? {
            let next = (t, w.appended(a));
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    return Err(CoreError::SizeExceeded { cap }.into());
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(out)
}

/// Path language of the transition graph of `g` from `root`.
pub fn language<G: ConfigurationGraph>(
    g: &G,
    root: &G::Vertex,
    is_final: &FinalPredicate,
    maxlen: usize,
    cap: usize,
) -> Result<BTreeSet<Word>, TgraphError> {
    if !g.is_external(root) {
        return Err(TgraphError::NotExternal(g.name(root)));
    }
    path_language(
        std::slice::from_ref(root),
        |v: &G::Vertex| closure_edges(g, v),
        |v| is_final.holds(&g.name(v)),
        maxlen,
        cap,
    )
}

/// Path language inside a finite fragment, from its roots.
pub fn fragment_language(f: &GraphFragment, is_final: &FinalPredicate, maxlen: usize, cap: usize) -> Result<BTreeSet<Word>, CoreError> {
    let roots: Vec<usize> = f.roots().iter().copied().collect();
    path_language(
        &roots,
        |v: &usize| -> Result<Vec<(Symbol, usize)>, CoreError> { Ok(f.out_edges(*v).collect()) },
        |v| is_final.holds(&f.label_of(*v)),
        maxlen,
        cap,
    )
}

/// Path language from several roots at once.
pub fn language_from<G: ConfigurationGraph>(
    g: &G,
    roots: &[G::Vertex],
    is_final: &FinalPredicate,
    maxlen: usize,
    cap: usize,
) -> Result<BTreeSet<Word>, TgraphError> {
    for r in roots {
        if !g.is_external(r) {
            return Err(TgraphError::NotExternal(g.name(r)));
        }
    }
    path_language(roots, |v: &G::Vertex| closure_edges(g, v), |v| is_final.holds(&g.name(v)), maxlen, cap)
}

/// Words labelling a transition-graph path from the external
/// configurations silently reachable from `[q0]` to an external
/// configuration in a final state.
pub fn machine_language(
    m: &MachineDescription,
    policy: ExternalityPolicy,
    maxlen: usize,
    cap: usize,
) -> Result<BTreeSet<Word>, TgraphError> {
    let g = MachineGraph::new(m, policy);
    let roots = entry_vertices(&g, &g.initial())?;
    path_language(
        &roots,
        |v: &Configuration| closure_edges(&g, v),
        |v: &Configuration| m.finals.contains(&v.state),
        maxlen,
        cap,
    )
}
