//! Isomorphism of small labeled fragments by colour refinement followed by
//! backtracking.

use std::collections::{BTreeMap, HashMap};

use crate::error::CoreError;
use crate::fragment::GraphFragment;
use crate::symbol::Symbol;

/// Adjacency of one fragment in the shape the search needs.
struct Adj {
    n: usize,
    out: Vec<Vec<(Symbol, usize)>>,
    inc: Vec<Vec<(Symbol, usize)>>,
    between: HashMap<(usize, usize), Vec<Symbol>>,
    marks: Vec<u8>,
}

impl Adj {
    fn new(f: &GraphFragment) -> Adj {
        let n = f.len();
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        let mut between: HashMap<(usize, usize), Vec<Symbol>> = HashMap::new();
        for (s, a, t) in f.edges() {
            out[s].push((a, t));
            inc[t].push((a, s));
            between.entry((s, t)).or_default().push(a);
        }
        for labels in between.values_mut() {
            labels.sort();
        }
        let marks = (0..n)
            .map(|v| (f.roots().contains(&v) as u8) | ((f.frontier().contains(&v) as u8) << 1))
            .collect();
        Adj { n, out, inc, between, marks }
    }

    fn labels(&self, s: usize, t: usize) -> &[Symbol] {
        self.between.get(&(s, t)).map(|v| v.as_slice()).unwrap_or(&[])
    }
}

type Signature = (u32, Vec<(Symbol, u32)>, Vec<(Symbol, u32)>);

/// Joint colour refinement on both graphs so colours are comparable.
fn refine(g1: &Adj, g2: &Adj) -> (Vec<u32>, Vec<u32>) {
    let mut ids: HashMap<(u8, usize, usize), u32> = HashMap::new();
    let mut init = |g: &Adj| -> Vec<u32> {
        (0..g.n)
            .map(|v| {
                let key = (g.marks[v], g.out[v].len(), g.inc[v].len());
                let next = ids.len() as u32;
                *ids.entry(key).or_insert(next)
            })
            .collect()
    };
    let mut c1 = init(g1);
    let mut c2 = init(g2);
    let mut classes = count_classes(&c1, &c2);
    loop {
        let mut table: HashMap<Signature, u32> = HashMap::new();
        let mut step = |g: &Adj, c: &[u32]| -> Vec<u32> {
            (0..g.n)
                .map(|v| {
                    let mut o: Vec<(Symbol, u32)> = g.out[v].iter().map(|&(a, t)| (a, c[t])).collect();
                    let mut i: Vec<(Symbol, u32)> = g.inc[v].iter().map(|&(a, s)| (a, c[s])).collect();
                    o.sort();
                    i.sort();
                    let sig = (c[v], o, i);
                    let next = table.len() as u32;
                    *table.entry(sig).or_insert(next)
                })
                .collect()
        };
        let n1 = step(g1, &c1);
        let n2 = step(g2, &c2);
        let k = count_classes(&n1, &n2);
        c1 = n1;
        c2 = n2;
        if k == classes {
            break;
        }
        classes = k;
    }
    (c1, c2)
}

fn count_classes(c1: &[u32], c2: &[u32]) -> usize {
    let mut all: Vec<u32> = c1.iter().chain(c2.iter()).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

fn histogram(c: &[u32]) -> BTreeMap<u32, usize> {
    let mut h = BTreeMap::new();
    for &x in c {
        *h.entry(x).or_insert(0) += 1;
    }
    h
}

/// Searches for a label- and edge-preserving bijection from `f1` onto `f2`
/// that maps roots to roots and frontier to frontier. The result maps
/// vertex `v` of `f1` to `result[v]` in `f2`.
pub fn isomorphic(
    f1: &GraphFragment,
    f2: &GraphFragment,
    cap: usize,
) -> Result<Option<Vec<usize>>, CoreError> {
    if f1.len() > cap || f2.len() > cap {
        return Err(CoreError::SizeExceeded { cap });
    }
    if f1.len() != f2.len()
        || f1.edge_count() != f2.edge_count()
        || f1.roots().len() != f2.roots().len()
        || f1.frontier().len() != f2.frontier().len()
    {
        return Ok(None);
    }
    let g1 = Adj::new(f1);
    let g2 = Adj::new(f2);
    let (c1, c2) = refine(&g1, &g2);
    if histogram(&c1) != histogram(&c2) {
        return Ok(None);
    }

    let mut by_colour: HashMap<u32, Vec<usize>> = HashMap::new();
    for (v, &c) in c2.iter().enumerate() {
        by_colour.entry(c).or_default().push(v);
    }
    let order = search_order(&g1, &c1, &by_colour);

    let mut map = vec![usize::MAX; g1.n];
    let mut used = vec![false; g2.n];
    if extend(0, &order, &g1, &g2, &c1, &by_colour, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

/// Vertices of the first graph in the order they are matched: repeatedly
/// the unmatched vertex with the most matched neighbours, ties broken by
/// smaller colour class, then index.
fn search_order(g: &Adj, c: &[u32], by_colour: &HashMap<u32, Vec<usize>>) -> Vec<usize> {
    let mut placed = vec![false; g.n];
    let mut links = vec![0usize; g.n];
    let mut order = Vec::with_capacity(g.n);
    for _ in 0..g.n {
        let v = (0..g.n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(links[v]), by_colour[&c[v]].len(), v))
            .unwrap();
        placed[v] = true;
        order.push(v);
        for &(_, t) in g.out[v].iter().chain(g.inc[v].iter()) {
            links[t] += 1;
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    k: usize,
    order: &[usize],
    g1: &Adj,
    g2: &Adj,
    c1: &[u32],
    by_colour: &HashMap<u32, Vec<usize>>,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if k == order.len() {
        return true;
    }
    let v = order[k];
    for &w in &by_colour[&c1[v]] {
        if used[w] || !consistent(v, w, g1, g2, map) {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(k + 1, order, g1, g2, c1, by_colour, map, used) {
            return true;
        }
        map[v] = usize::MAX;
        used[w] = false;
    }
    false
}

fn consistent(v: usize, w: usize, g1: &Adj, g2: &Adj, map: &[usize]) -> bool {
    if g1.labels(v, v) != g2.labels(w, w) {
        return false;
    }
    for &(_, t) in &g1.out[v] {
        if t != v && map[t] != usize::MAX && g1.labels(v, t) != g2.labels(w, map[t]) {
            return false;
        }
    }
    for &(_, s) in &g1.inc[v] {
        if s != v && map[s] != usize::MAX && g1.labels(s, v) != g2.labels(map[s], w) {
            return false;
        }
    }
    // edges of the second graph towards already matched vertices must have
    // preimages as well
    for &(_, t2) in &g2.out[w] {
        if t2 != w {
            if let Some(t1) = map.iter().position(|&m| m == t2) {
                if g1.labels(v, t1) != g2.labels(w, t2) {
                    return false;
                }
            }
        }
    }
    for &(_, s2) in &g2.inc[w] {
        if s2 != w {
            if let Some(s1) = map.iter().position(|&m| m == s2) {
                if g1.labels(s1, v) != g2.labels(s2, w) {
                    return false;
                }
            }
        }
    }
    true
}

/// Checks that `map` is a label-preserving isomorphism respecting roots and
/// frontier.
pub fn verify_bijection(f1: &GraphFragment, f2: &GraphFragment, map: &[usize]) -> bool {
    if map.len() != f1.len() || f1.len() != f2.len() {
        return false;
    }
    let mut seen = vec![false; f2.len()];
    for &m in map {
        if m >= f2.len() || seen[m] {
            return false;
        }
        seen[m] = true;
    }
    f1.edge_count() == f2.edge_count()
        && f1.edges().all(|(s, a, t)| f2.has_edge(map[s], a, map[t]))
        && f1.roots().iter().all(|&r| f2.roots().contains(&map[r]))
        && f1.roots().len() == f2.roots().len()
        && f1.frontier().iter().all(|&r| f2.frontier().contains(&map[r]))
        && f1.frontier().len() == f2.frontier().len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ball::DEFAULT_VERTEX_CAP;
    use crate::symbol::sym;

    fn frag(n: usize, edges: &[(usize, &str, usize)], roots: &[usize]) -> GraphFragment {
        let mut f = GraphFragment::new();
        for i in 0..n {
            f.add_named(format!("n{}", i));
        }
        for &(s, a, t) in edges {
            f.add_edge(s, sym(a), t);
        }
        for &r in roots {
            f.set_root(r);
        }
        f
    }

    #[test]
    fn single_edge_relabeling() {
        let f1 = frag(2, &[(0, "a", 1)], &[0]);
        let f2 = frag(2, &[(1, "a", 0)], &[1]);
        let m = isomorphic(&f1, &f2, DEFAULT_VERTEX_CAP).unwrap().unwrap();
        assert_eq!(m, vec![1, 0]);
        assert!(verify_bijection(&f1, &f2, &m));
    }

    #[test]
    fn three_cycles_with_swapped_labels() {
        let f1 = frag(3, &[(0, "a", 1), (1, "b", 2), (2, "c", 0)], &[]);
        let f2 = frag(3, &[(0, "a", 1), (1, "c", 2), (2, "b", 0)], &[]);
        assert_eq!(isomorphic(&f1, &f2, DEFAULT_VERTEX_CAP).unwrap(), None);
    }

    #[test]
    fn roots_constrain_the_mapping() {
        let f1 = frag(2, &[(0, "a", 1), (1, "a", 0)], &[0]);
        let f2 = frag(2, &[(0, "a", 1), (1, "a", 0)], &[]);
        assert_eq!(isomorphic(&f1, &f2, DEFAULT_VERTEX_CAP).unwrap(), None);
    }

    #[test]
    fn cap_applies() {
        let f1 = frag(3, &[], &[]);
        assert!(isomorphic(&f1, &f1, 2).is_err());
    }
}
