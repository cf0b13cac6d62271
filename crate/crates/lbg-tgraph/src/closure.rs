use std::collections::{BTreeSet, HashSet, VecDeque};

use lbg_core::{ball, CoreError, GraphFragment, Symbol};

use crate::graph::{ConfigurationGraph, TgraphError};

/// Silent reachability from `starts`; `through` decides which vertices may
/// be passed through.
fn silent_reach<G, F>(g: &G, starts: Vec<G::Vertex>, through: F) -> Result<Vec<G::Vertex>, TgraphError>
where
    G: ConfigurationGraph,
    F: Fn(&G::Vertex) -> bool,
{
    let cap = g.silent_cap();
    let mut seen: HashSet<G::Vertex> = starts.iter().cloned().collect();
    let mut order: Vec<G::Vertex> = Vec::new();
    let mut queue: VecDeque<G::Vertex> = starts.into_iter().collect();
    while let Some(v) = queue.pop_front() {
        order.push(v.clone());
        if !through(&v) {
            continue;
        }
        for (x, w) in g.moves(&v)? {
            if x.is_none() && !seen.contains(&w) {
                if seen.len() >= cap {
                    return Err(CoreError::SizeExceeded { cap }.into());
                }
                seen.insert(w.clone());
                queue.push_back(w);
            }
        }
    }
    Ok(order)
}

/// Edges of the transition graph out of the external vertex `v`: one
/// letter step followed by silent steps through internal vertices, ending
/// in an external vertex. Silent cycles contribute nothing.
pub fn closure_edges<G: ConfigurationGraph>(g: &G, v: &G::Vertex) -> Result<Vec<(Symbol, G::Vertex)>, TgraphError> {
    if !g.is_external(v) {
        return Err(TgraphError::NotExternal(g.name(v)));
    }
    let mut out: BTreeSet<(Symbol, G::Vertex)> = BTreeSet::new();
    let moves = g.moves(v)?;
    let labels: BTreeSet<Symbol> = moves.iter().filter_map(|(x, _)| *x).collect();
    for a in labels {
        let starts: Vec<G::Vertex> =
            moves.iter().filter(|(x, _)| *x == Some(a)).map(|(_, w)| w.clone()).collect();
        for w in silent_reach(g, starts, |u| !g.is_external(u))? {
            if g.is_external(&w) {
                out.insert((a, w));
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// External vertices silently reachable from `v` through internal ones;
/// `v` itself when it is external.
pub fn entry_vertices<G: ConfigurationGraph>(g: &G, v: &G::Vertex) -> Result<Vec<G::Vertex>, TgraphError> {
    let mut out: Vec<G::Vertex> =
        silent_reach(g, vec![v.clone()], |u| !g.is_external(u))?.into_iter().filter(|u| g.is_external(u)).collect();
    out.sort();
    Ok(out)
}

/// The transition graph around `roots` up to `radius`. Vertex names are
/// the graph's display names.
pub fn transition_ball<G: ConfigurationGraph>(
    g: &G,
    roots: &[G::Vertex],
    radius: usize,
    cap: usize,
) -> Result<GraphFragment, TgraphError> {
    for r in roots {
        if !g.is_external(r) {
            return Err(TgraphError::NotExternal(g.name(r)));
        }
    }
    Ok(ball(roots, radius, cap, |v| closure_edges(g, v), |v| g.name(v))?.fragment)
}

/// Edges `v -a-> w` for every path ε*·a·ε* from `v` to `w` in the
/// configuration graph, keeping only targets that satisfy `keep`.
pub fn caucal_edges<G, F>(g: &G, v: &G::Vertex, keep: F) -> Result<Vec<(Symbol, G::Vertex)>, TgraphError>
where
    G: ConfigurationGraph,
    F: Fn(&G::Vertex) -> bool,
{
    let before = silent_reach(g, vec![v.clone()], |_| true)?;
    let mut out: BTreeSet<(Symbol, G::Vertex)> = BTreeSet::new();
    let mut after_letter: std::collections::BTreeMap<Symbol, Vec<G::Vertex>> = Default::default();
    for u in &before {
        for (x, w) in g.moves(u)? {
            if let Some(a) = x {
                after_letter.entry(a).or_default().push(w);
            }
        }
    }
    for (a, starts) in after_letter {
        for w in silent_reach(g, starts, |_| true)? {
            if keep(&w) {
                out.insert((a, w));
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Ball of the ε-closure restricted to the vertices satisfying `keep`.
pub fn caucal_ball<G, F>(
    g: &G,
    root: &G::Vertex,
    radius: usize,
    keep: F,
    cap: usize,
) -> Result<GraphFragment, TgraphError>
where
    G: ConfigurationGraph,
    F: Fn(&G::Vertex) -> bool,
{
    if !keep(root) {
        return Err(TgraphError::UnknownVertex(format!("root {} is outside the restriction", g.name(root))));
    }
    Ok(ball(std::slice::from_ref(root), radius, cap, |v| caucal_edges(g, v, &keep), |v| g.name(v))?.fragment)
}

/// Reachability restriction: the ball of `radius` around `root` for any
/// edge generator.
pub fn reachable_restriction<V, E, Gen, N>(
    generator: Gen,
    root: V,
    radius: usize,
    cap: usize,
    name: N,
) -> Result<GraphFragment, E>
where
    V: Clone + Eq + std::hash::Hash,
    E: From<CoreError>,
    Gen: FnMut(&V) -> Result<Vec<(Symbol, V)>, E>,
    N: FnMut(&V) -> String,
{
    Ok(ball(&[root], radius, cap, generator, name)?.fragment)
}
