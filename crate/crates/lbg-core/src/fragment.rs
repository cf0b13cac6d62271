use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::symbol::Symbol;

/// A finite labeled directed graph cut out of a (possibly infinite) graph.
///
/// Vertices are dense indices `0..len`. Each vertex may carry a display
/// name and, when the fragment was produced by [`crate::ball`], its
/// breadth-first distance from the roots. `truncated` records how many
/// outgoing edges of a vertex lead outside the fragment.
#[derive(Clone, Debug, Default)]
pub struct GraphFragment {
    names: Vec<Option<String>>,
    depth: Vec<Option<usize>>,
    edges: BTreeSet<(usize, Symbol, usize)>,
    roots: BTreeSet<usize>,
    frontier: BTreeSet<usize>,
    truncated: BTreeMap<usize, usize>,
}

impl GraphFragment {
    pub fn new() -> GraphFragment {
        GraphFragment::default()
    }

    pub fn add_vertex(&mut self, name: Option<String>) -> usize {
        self.names.push(name);
        self.depth.push(None);
        self.names.len() - 1
    }

    pub fn add_named(&mut self, name: impl Into<String>) -> usize {
        self.add_vertex(Some(name.into()))
    }

    /// Adds an edge; returns false when the triple was already present.
    pub fn add_edge(&mut self, source: usize, label: Symbol, target: usize) -> bool {
        assert!(source < self.len() && target < self.len(), "edge endpoint out of range");
        self.edges.insert((source, label, target))
    }

    pub fn set_root(&mut self, v: usize) {
        assert!(v < self.len());
        self.roots.insert(v);
    }

    pub fn set_frontier(&mut self, v: usize) {
        assert!(v < self.len());
        self.frontier.insert(v);
    }

    pub fn set_depth(&mut self, v: usize, d: usize) {
        self.depth[v] = Some(d);
    }

    pub fn add_truncated(&mut self, v: usize, count: usize) {
        if count > 0 {
            *self.truncated.entry(v).or_insert(0) += count;
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn name(&self, v: usize) -> Option<&str> {
        self.names[v].as_deref()
    }

    /// The display name, or `v<index>` for anonymous vertices.
    pub fn label_of(&self, v: usize) -> String {
        match &self.names[v] {
            Some(n) => n.clone(),
            None => format!("v{}", v),
        }
    }

    pub fn depth(&self, v: usize) -> Option<usize> {
        self.depth[v]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, Symbol, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn roots(&self) -> &BTreeSet<usize> {
        &self.roots
    }

    pub fn frontier(&self) -> &BTreeSet<usize> {
        &self.frontier
    }

    pub fn truncated(&self, v: usize) -> usize {
        self.truncated.get(&v).copied().unwrap_or(0)
    }

    pub fn has_edge(&self, s: usize, a: Symbol, t: usize) -> bool {
        self.edges.contains(&(s, a, t))
    }

    pub fn out_edges(&self, v: usize) -> impl Iterator<Item = (Symbol, usize)> + '_ {
        self.edges
            .range((v, Symbol::new(""), 0)..)
            .take_while(move |e| e.0 == v)
            .map(|&(_, a, t)| (a, t))
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_edges(v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.2 == v).count()
    }

    pub fn labels(&self) -> BTreeSet<Symbol> {
        self.edges.iter().map(|e| e.1).collect()
    }

    pub fn find(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n.as_deref() == Some(name))
    }

    /// Vertex index by display name, for fragments with unique names.
    pub fn name_index(&self) -> HashMap<String, usize> {
        (0..self.len()).map(|v| (self.label_of(v), v)).collect()
    }

    pub fn successors(&self, v: usize) -> Vec<usize> {
        self.out_edges(v).map(|(_, t)| t).collect()
    }

    /// Breadth-first distances from the roots over the fragment's own edges.
    pub fn distances_from(&self, start: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.len()];
        let mut queue = std::collections::VecDeque::new();
        dist[start] = Some(0);
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for t in self.successors(v) {
                if dist[t].is_none() {
                    dist[t] = Some(d + 1);
                    queue.push_back(t);
                }
            }
        }
        dist
    }

    /// Sub-fragment of the vertices at recorded depth at most `d`. The
    /// frontier is recomputed: vertices at depth `d` whose edges leave the
    /// kept set (or were already truncated).
    pub fn within(&self, d: usize) -> GraphFragment {
        let mut map = vec![None; self.len()];
        let mut out = GraphFragment::new();
        for v in 0..self.len() {
            if self.depth[v].map_or(false, |x| x <= d) {
                let nv = out.add_vertex(self.names[v].clone());
                out.depth[nv] = self.depth[v];
                map[v] = Some(nv);
            }
        }
        for &(s, a, t) in &self.edges {
            match (map[s], map[t]) {
                (Some(ns), Some(nt)) => {
                    out.edges.insert((ns, a, nt));
                }
                (Some(ns), None) => out.add_truncated(ns, 1),
                _ => {}
            }
        }
        for (&v, &c) in &self.truncated {
            if let Some(nv) = map[v] {
                out.add_truncated(nv, c);
            }
        }
        for &r in &self.roots {
            if let Some(nr) = map[r] {
                out.roots.insert(nr);
            }
        }
        for v in 0..out.len() {
            if out.depth[v] == Some(d) && out.truncated(v) > 0 {
                out.frontier.insert(v);
            }
        }
        out
    }

    /// A name-based normal form: equal for fragments that agree on named
    /// vertices, edges, roots, frontier and truncation counts.
    pub fn canonical(&self) -> CanonicalFragment {
        let name = |v: usize| self.label_of(v);
        CanonicalFragment {
            vertices: (0..self.len()).map(name).collect(),
            edges: self.edges.iter().map(|&(s, a, t)| (name(s), a, name(t))).collect(),
            roots: self.roots.iter().map(|&v| name(v)).collect(),
            frontier: self.frontier.iter().map(|&v| name(v)).collect(),
            truncated: self
                .truncated
                .iter()
                .map(|(&v, &c)| (name(v), c))
                .collect(),
        }
    }

    /// Returns a copy with every vertex renamed through `f`.
    pub fn renamed(&self, mut f: impl FnMut(usize, Option<&str>) -> Option<String>) -> GraphFragment {
        let mut out = self.clone();
        for v in 0..self.len() {
            out.names[v] = f(v, self.names[v].as_deref());
        }
        out
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> GraphFragment {
        assert_eq!(perm.len(), self.len());
        let mut out = GraphFragment::new();
        out.names = vec![None; self.len()];
        out.depth = vec![None; self.len()];
        for v in 0..self.len() {
            out.names[perm[v]] = self.names[v].clone();
            out.depth[perm[v]] = self.depth[v];
        }
        out.edges = self.edges.iter().map(|&(s, a, t)| (perm[s], a, perm[t])).collect();
        out.roots = self.roots.iter().map(|&v| perm[v]).collect();
        out.frontier = self.frontier.iter().map(|&v| perm[v]).collect();
        out.truncated = self.truncated.iter().map(|(&v, &c)| (perm[v], c)).collect();
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalFragment {
    pub vertices: BTreeSet<String>,
    pub edges: BTreeSet<(String, Symbol, String)>,
    pub roots: BTreeSet<String>,
    pub frontier: BTreeSet<String>,
    pub truncated: BTreeMap<String, usize>,
}
