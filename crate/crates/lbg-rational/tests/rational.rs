use std::collections::BTreeSet;

use lbg_core::{isomorphic, sym, Alphabet, Word, DEFAULT_VERTEX_CAP};
use lbg_rational::samples::*;
use lbg_rational::*;

const CAP: usize = DEFAULT_VERTEX_CAP;

fn words(texts: &[&str]) -> BTreeSet<Word> {
    texts.iter().map(|t| Word::parse(t)).collect()
}

fn image(t: &FiniteTransducer, u: &str) -> BTreeSet<Word> {
    apply(t, Word::parse(u).symbols(), 64).words
}

fn ones(n: usize) -> Word {
    Word::from_symbols(vec![unary(); n])
}

fn fig8() -> Vec<WeberFunction> {
    vec![
        WeberFunction { name: sym("a"), label: sym("a"), transducer: unary_double() },
        WeberFunction { name: sym("b"), label: sym("b"), transducer: unary_minus_three() },
    ]
}

fn fig8_family() -> Family {
    vec![(sym("a"), unary_double()), (sym("b"), unary_minus_three())]
}

#[test]
fn doubling_images() {
    let t = doubling();
    assert_eq!(image(&t, "A"), words(&["AA", "AB", "BA", "BB"]));
    let four: BTreeSet<Word> = Alphabet::parse("A B").words_of_len(4).into_iter().collect();
    assert_eq!(image(&t, "AB"), four);
    assert!(image(&t, "").contains(&Word::empty()));
}

#[test]
fn identity_image() {
    assert_eq!(image(&identity(&["a", "b"]), "ab"), words(&["ab"]));
}

#[test]
fn output_cap_truncates() {
    let mut t = FiniteTransducer::new("s", &["s"]);
    t.add("s", None, Some("a"), "s");
    let r = apply(&t, &[], 3);
    assert!(r.truncated);
    assert!(r.words.iter().all(|w| w.len() <= 3));
    assert_eq!(r.words.len(), 4);
}

#[test]
fn composition_examples() {
    let id = identity(&["A", "B"]);
    let t = doubling();
    for u in Alphabet::parse("A B").words_up_to(3) {
        assert_eq!(apply(&compose(&id, &t), u.symbols(), 64).words, apply(&t, u.symbols(), 64).words);
    }
    let four: BTreeSet<Word> = Alphabet::parse("A B").words_of_len(4).into_iter().collect();
    assert_eq!(image(&compose(&t, &t), "A"), four);

    let pipeline = compose(&append(&["a", "b"], &["a"]), &strip_prefix(&["a", "b"], "a"));
    assert_eq!(image(&pipeline, "a"), words(&["a"]));
    assert_eq!(image(&pipeline, "b"), BTreeSet::new());
}

#[test]
fn synchronization() {
    assert!(is_left_synchronized(&append(&["a", "b"], &["a"])));
    assert!(!is_left_synchronized(&strip_prefix(&["a", "b"], "a")));
    assert!(!is_left_synchronized(&doubling()));
    assert!(is_left_synchronized(&FiniteTransducer::new("s", &[])));
    assert!(is_left_synchronized(&identity(&["a"])));
}

#[test]
fn doubling_ball() {
    let f = rational_ball(&[(sym("t"), doubling())], &Word::parse("A"), 1, 64, CAP).unwrap();
    assert_eq!(f.len(), 5);
    assert_eq!(f.edge_count(), 4);
}

#[test]
fn unary_ball_to_distance_three() {
    let f = rational_ball(&fig8_family(), &ones(1), 3, 256, CAP).unwrap();
    let named: BTreeSet<(usize, String, usize)> =
        f.edges().map(|(s, a, t)| (f.label_of(s).len(), a.to_string(), f.label_of(t).len())).collect();
    let expected: BTreeSet<(usize, String, usize)> =
        [(1, "a", 2), (2, "a", 4), (4, "a", 8), (4, "b", 1)].iter().map(|&(s, a, t)| (s, a.to_string(), t)).collect();
    assert_eq!(named, expected);
    assert_eq!(f.len(), 4);
}

#[test]
fn empty_family_is_a_point() {
    let f = rational_ball(&[], &Word::parse("ab"), 5, 64, CAP).unwrap();
    assert_eq!(f.len(), 1);
    assert_eq!(f.edge_count(), 0);
}

#[test]
fn access_transducers() {
    let ext = vertex_access(&[], &[sym("a"), sym("b")]);
    let get = |l: lbg_core::Symbol| &ext.iter().find(|(x, _)| *x == l).unwrap().1;
    assert_eq!(image(get(append_label(sym("a"))), "b"), words(&["ba"]));
    assert_eq!(image(get(strip_label(sym("a"))), "ab"), words(&["b"]));
    assert!(image(get(strip_label(sym("a"))), "b").is_empty());
}

#[test]
fn access_paths_match_original_paths() {
    // In the extended graph, ε -x̄-> x -w-> y -ỹ-> ε iff x -w-> y originally.
    let family: Family = vec![(sym("c"), append(&["a", "b"], &["a"]))];
    let gamma = [sym("a"), sym("b")];
    let ext = vertex_access(&family, &gamma);
    for x in gamma {
        let start = image(&ext.iter().find(|(l, _)| *l == append_label(x)).unwrap().1, "");
        assert_eq!(start, words(&[x.as_str()]));
        for w in 0..3usize {
            let mut cur: BTreeSet<Word> = start.clone();
            for _ in 0..w {
                cur = cur.iter().flat_map(|u| apply(&ext[0].1, u.symbols(), 64).words).collect();
            }
            let mut y = Word::from_symbols(vec![x]);
            for _ in 0..w {
                y = y.appended(sym("a"));
            }
            assert_eq!(cur, BTreeSet::from([y.clone()]));
            let mut back = cur.clone();
            for &s in y.iter() {
                let strip = &ext.iter().find(|(l, _)| *l == strip_label(s)).unwrap().1;
                back = back.iter().flat_map(|u| apply(strip, u.symbols(), 64).words).collect();
            }
            assert_eq!(back, BTreeSet::from([Word::empty()]));
        }
    }
}

/// Least (m, r) by plain enumeration with integer arithmetic.
fn brute_force_pair(target: usize, max_weight: usize) -> Option<(usize, String)> {
    let step = |n: usize, c: char| -> Option<usize> {
        match c {
            'a' => Some(2 * n),
            _ => (n >= 4).then(|| n - 3),
        }
    };
    for w in 1..=max_weight {
        for m in 1..=w {
            let len = w - m;
            for bits in 0..(1usize << len) {
                let r: String = (0..len).map(|i| if bits >> (len - 1 - i) & 1 == 0 { 'a' } else { 'b' }).collect();
                let mut n = Some(m);
                for c in r.chars() {
                    n = n.and_then(|n| step(n, c));
                }
                if n == Some(target) {
                    return Some((m, r));
                }
            }
        }
    }
    None
}

fn fig8_renaming(radius: usize) -> WeberRenaming {
    let params = WeberParams { radius, max_vertex_len: 64, word_cap: 256, cap: CAP };
    weber_rename(&fig8(), &ones(1), params).unwrap()
}

fn pair_of(r: &WeberRenaming, n: usize) -> &CanonicalPair {
    let i = r.vertices.iter().position(|v| *v == ones(n)).unwrap();
    &r.pairs[i]
}

#[test]
fn weber_small_names() {
    let r = fig8_renaming(6);
    assert_eq!(pair_of(&r, 1), &CanonicalPair { m: ones(1), r: Word::empty() });
    assert_eq!(pair_of(&r, 2), &CanonicalPair { m: ones(1), r: Word::parse("a") });
    let (m, seq) = brute_force_pair(13, 6).unwrap();
    assert_eq!((m, seq.as_str()), (1, "aaaab"));
    assert_eq!(pair_of(&r, 13), &CanonicalPair { m: ones(m), r: Word::parse(&seq) });
    assert!(!r.pruned);
}

#[test]
fn weber_matches_brute_force() {
    let r = fig8_renaming(12);
    for (x, p) in r.vertices.iter().zip(&r.pairs) {
        let (m, seq) = brute_force_pair(x.len(), x.len()).unwrap();
        assert_eq!(p, &CanonicalPair { m: ones(m), r: Word::parse(&seq) }, "vertex {}", x.len());
    }
}

#[test]
fn weber_renaming_invariants() {
    let r = fig8_renaming(40);
    assert!(r.vertices.iter().any(|v| v.len() == 64));
    let distinct: BTreeSet<&CanonicalPair> = r.pairs.iter().collect();
    assert_eq!(distinct.len(), r.pairs.len());
    let map = isomorphic(&r.original, &r.renamed, CAP).unwrap();
    assert!(map.is_some());
    let functions = fig8();
    let mut eval = Evaluator::new(&functions, 256);
    for (x, p) in r.vertices.iter().zip(&r.pairs) {
        assert_eq!(eval.replay(p).unwrap().as_ref(), Some(x));
    }
    for (s, _, t) in r.renamed.edges() {
        assert!(r.pairs[t].weight() <= r.pairs[s].weight() + 1);
    }
}

#[test]
fn weber_identity_keeps_vertices() {
    let functions = vec![WeberFunction { name: sym("i"), label: sym("e"), transducer: identity(&["a", "b"]) }];
    let params = WeberParams { radius: 3, max_vertex_len: 8, word_cap: 64, cap: CAP };
    let r = weber_rename(&functions, &Word::parse("ab"), params).unwrap();
    assert_eq!(r.pairs, vec![CanonicalPair { m: Word::parse("ab"), r: Word::empty() }]);
    assert_eq!(r.renamed.label_of(0), "(ab,ε)");
}

#[test]
fn weber_rejects_relations() {
    let functions = vec![WeberFunction { name: sym("d"), label: sym("d"), transducer: doubling() }];
    let params = WeberParams { radius: 2, max_vertex_len: 8, word_cap: 64, cap: CAP };
    assert!(matches!(
        weber_rename(&functions, &Word::parse("A"), params),
        Err(RationalError::NotFunctional { .. })
    ));
}
