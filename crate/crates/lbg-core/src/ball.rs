use std::collections::{BTreeSet, HashMap};
use std::hash::Hash;

use crate::error::CoreError;
use crate::fragment::GraphFragment;
use crate::symbol::Symbol;

pub const DEFAULT_VERTEX_CAP: usize = 10_000;

/// A ball together with the generator-side value of each vertex.
#[derive(Clone, Debug)]
pub struct Ball<V> {
    pub fragment: GraphFragment,
    pub vertices: Vec<V>,
}

impl<V: Eq + Hash> Ball<V> {
    pub fn index_of(&self, v: &V) -> Option<usize> {
        self.vertices.iter().position(|x| x == v)
    }
}

/// Breadth-first ball of `radius` around `roots`.
///
/// The generator is called once on every vertex of the ball, including the
/// ones at exactly `radius`: edges between ball vertices are kept (the
/// result is the induced subgraph), edges leaving the ball are counted in
/// the fragment's truncation table, and their sources are marked frontier.
pub fn ball<V, E, G, N>(
    roots: &[V],
    radius: usize,
    cap: usize,
    mut generator: G,
    mut name: N,
) -> Result<Ball<V>, E>
where
    V: Clone + Eq + Hash,
    E: From<CoreError>,
    G: FnMut(&V) -> Result<Vec<(Symbol, V)>, E>,
    N: FnMut(&V) -> String,
{
    let mut fragment = GraphFragment::new();
    let mut vertices: Vec<V> = Vec::new();
    let mut index: HashMap<V, usize> = HashMap::new();

    for r in roots {
        if index.contains_key(r) {
            continue;
        }
        if vertices.len() >= cap {
            return Err(CoreError::SizeExceeded { cap }.into());
        }
        let id = fragment.add_vertex(Some(name(r)));
        fragment.set_depth(id, 0);
        fragment.set_root(id);
        index.insert(r.clone(), id);
        vertices.push(r.clone());
    }

    let mut layer: Vec<usize> = (0..vertices.len()).collect();
    let mut depth = 0;
    while !layer.is_empty() {
        let mut next = Vec::new();
        for &v in &layer {
            let value = vertices[v].clone();
            let succ: BTreeSet<(Symbol, usize)> = {
                let mut seen = BTreeSet::new();
                let mut outside = 0usize;
                let mut outside_seen: Vec<(Symbol, V)> = Vec::new();
                for (a, w) in generator(&value)? {
                    if let Some(&t) = index.get(&w) {
                        seen.insert((a, t));
                    } else if depth < radius {
                        if vertices.len() >= cap {
                            return Err(CoreError::SizeExceeded { cap }.into());
                        }
                        let t = fragment.add_vertex(Some(name(&w)));
                        fragment.set_depth(t, depth + 1);
                        index.insert(w.clone(), t);
                        vertices.push(w);
                        next.push(t);
                        seen.insert((a, t));
                    } else if !outside_seen.iter().any(|(b, x)| *b == a && *x == w) {
                        outside_seen.push((a, w));
                        outside += 1;
                    }
                }
                if outside > 0 {
                    fragment.add_truncated(v, outside);
                    fragment.set_frontier(v);
                }
                seen
            };
            for (a, t) in succ {
                fragment.add_edge(v, a, t);
            }
        }
        if depth == radius {
            break;
        }
        layer = next;
        depth += 1;
    }
    Ok(Ball { fragment, vertices })
}
