use std::collections::BTreeSet;

use lbg_core::{
    ball, isomorphic, parse_dot, sym, to_dot, verify_bijection, CoreError, GraphFragment, Symbol,
    DEFAULT_VERTEX_CAP,
};
use proptest::prelude::*;

fn build(n: usize, edges: &[(usize, usize, usize)], roots: &[usize]) -> GraphFragment {
    let labels = ["a", "b", "c"];
    let mut f = GraphFragment::new();
    for i in 0..n {
        f.add_named(format!("v{}", i));
    }
    for &(s, l, t) in edges {
        f.add_edge(s % n, sym(labels[l % 3]), t % n);
    }
    for &r in roots {
        f.set_root(r % n);
    }
    f
}

fn fragment() -> impl Strategy<Value = GraphFragment> {
    (1usize..7).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec((0..n, 0usize..2, 0..n), 0..12),
            prop::collection::vec(0..n, 0..2),
        )
            .prop_map(|(n, e, r)| build(n, &e, &r))
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn brute_force_iso(f1: &GraphFragment, f2: &GraphFragment) -> bool {
    f1.len() == f2.len() && permutations(f1.len()).iter().any(|p| verify_bijection(f1, f2, p))
}

fn shuffle(n: usize, seed: u64) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut x = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    for i in (1..n).rev() {
        x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let j = (x >> 33) as usize % (i + 1);
        p.swap(i, j);
    }
    p
}

proptest! {
    #[test]
    fn iso_is_reflexive(f in fragment()) {
        let m = isomorphic(&f, &f, DEFAULT_VERTEX_CAP).unwrap();
        prop_assert!(m.is_some());
        prop_assert!(verify_bijection(&f, &f, &m.unwrap()));
    }

    #[test]
    fn iso_is_permutation_invariant(f in fragment(), seed in any::<u64>()) {
        let p = shuffle(f.len(), seed);
        let g = f.permuted(&p);
        let m = isomorphic(&f, &g, DEFAULT_VERTEX_CAP).unwrap();
        prop_assert!(m.is_some());
        prop_assert!(verify_bijection(&f, &g, &m.unwrap()));
    }

    #[test]
    fn iso_is_symmetric_and_matches_brute_force(f1 in fragment(), f2 in fragment()) {
        let ab = isomorphic(&f1, &f2, DEFAULT_VERTEX_CAP).unwrap();
        let ba = isomorphic(&f2, &f1, DEFAULT_VERTEX_CAP).unwrap();
        prop_assert_eq!(ab.is_some(), ba.is_some());
        prop_assert_eq!(ab.is_some(), brute_force_iso(&f1, &f2));
        if let Some(m) = ab {
            let mut inv = vec![0; m.len()];
            for (v, &w) in m.iter().enumerate() {
                inv[w] = v;
            }
            prop_assert!(verify_bijection(&f2, &f1, &inv));
        }
    }

    #[test]
    fn dot_round_trip_keeps_edges(f in fragment()) {
        let back = parse_dot(&to_dot(&f)).unwrap();
        let edges = |g: &GraphFragment| -> BTreeSet<(String, Symbol, String)> {
            g.edges().map(|(s, a, t)| (g.label_of(s), a, g.label_of(t))).collect()
        };
        prop_assert_eq!(edges(&back), edges(&f));
        prop_assert_eq!(back.canonical().roots, f.canonical().roots);
        prop_assert_eq!(to_dot(&back), to_dot(&f));
    }

    #[test]
    fn ball_restricts_to_smaller_ball(
        n in 1usize..10,
        raw in prop::collection::vec((0usize..10, 0usize..2, 0usize..10), 0..25),
        r in 1usize..5,
    ) {
        let edges: Vec<(usize, Symbol, usize)> =
            raw.iter().map(|&(s, l, t)| (s % n, sym(["a", "b"][l]), t % n)).collect();
        let gen = |v: &usize| -> Result<Vec<(Symbol, usize)>, CoreError> {
            Ok(edges.iter().filter(|e| e.0 == *v).map(|e| (e.1, e.2)).collect())
        };
        let big = ball(&[0usize], r, DEFAULT_VERTEX_CAP, gen, |v| v.to_string()).unwrap();
        let small = ball(&[0usize], r - 1, DEFAULT_VERTEX_CAP, gen, |v| v.to_string()).unwrap();
        prop_assert_eq!(big.fragment.within(r - 1).canonical(), small.fragment.canonical());
    }
}

#[test]
fn three_cycle_orientations_exhaustive() {
    let abc = build(3, &[(0, 0, 1), (1, 1, 2), (2, 2, 0)], &[]);
    let acb = build(3, &[(0, 0, 1), (1, 2, 2), (2, 1, 0)], &[]);
    assert_eq!(permutations(3).len(), 6);
    assert!(!brute_force_iso(&abc, &acb));
    assert_eq!(isomorphic(&abc, &acb, DEFAULT_VERTEX_CAP).unwrap(), None);
}

#[test]
fn caucal_closure_shape_differs_from_external_closure() {
    // 1 -a-> {2,3,4}, {2,3,4} -b-> 5   versus   1 -a-> 4 -b-> 5
    let b = build(5, &[(0, 0, 1), (0, 0, 2), (0, 0, 3), (1, 1, 4), (2, 1, 4), (3, 1, 4)], &[0]);
    let c = build(3, &[(0, 0, 1), (1, 1, 2)], &[0]);
    assert_eq!((b.len(), b.edge_count(), c.len(), c.edge_count()), (5, 6, 3, 2));
    assert_eq!(isomorphic(&b, &c, DEFAULT_VERTEX_CAP).unwrap(), None);
}

#[test]
fn ball_on_two_cycle_stops() {
    let gen = |v: &u8| -> Result<Vec<(Symbol, u8)>, CoreError> { Ok(vec![(sym("a"), 1 - *v)]) };
    let b = ball(&[0u8], 100, DEFAULT_VERTEX_CAP, gen, |v| v.to_string()).unwrap();
    assert_eq!((b.fragment.len(), b.fragment.edge_count()), (2, 2));
}
