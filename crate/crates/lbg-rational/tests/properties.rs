use std::collections::BTreeSet;

use lbg_core::{Alphabet, Symbol, Word};
use lbg_rational::*;
use proptest::prelude::*;

const LETTERS: [&str; 2] = ["a", "b"];

fn side(x: u8) -> Option<&'static str> {
    match x {
        0 => None,
        n => Some(LETTERS[(n as usize - 1) % 2]),
    }
}

/// Transducers over {a, b} with up to `states` states.
fn transducer(states: u8) -> impl Strategy<Value = FiniteTransducer> {
    let edge = (0..states, 0u8..3, 0u8..3, 0..states);
    (prop::collection::vec(edge, 0..7), prop::collection::btree_set(0..states, 1..=states as usize)).prop_map(
        |(edges, finals)| {
            let finals: Vec<String> = finals.iter().map(|f| format!("q{}", f)).collect();
            let names: Vec<&str> = finals.iter().map(String::as_str).collect();
            let mut t = FiniteTransducer::new("q0", &names);
            for (p, i, o, q) in edges {
                t.add(&format!("q{}", p), side(i), side(o), &format!("q{}", q));
            }
            t
        },
    )
}

fn synchronized_shape(path: &[(Option<Symbol>, Option<Symbol>)]) -> bool {
    let mut paired = true;
    let mut input_side: Option<bool> = None;
    for (i, o) in path {
        match (i, o) {
            (None, None) => {}
            (Some(_), Some(_)) => {
                if !paired {
                    return false;
                }
            }
            (Some(_), None) | (None, Some(_)) => {
                paired = false;
                let this = i.is_some();
                if *input_side.get_or_insert(this) != this {
                    return false;
                }
            }
        }
    }
    true
}

/// Union of images, or `None` if some image was cut at `cap`.
fn image_of_set(t: &FiniteTransducer, us: &BTreeSet<Word>, cap: usize) -> Option<BTreeSet<Word>> {
    let mut out = BTreeSet::new();
    for u in us {
        let r = apply(t, u.symbols(), cap);
        if r.truncated {
            return None;
        }
        out.extend(r.words);
    }
    Some(out)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn apply_respects_cap(t in transducer(3), cap in 0usize..6) {
        for u in Alphabet::parse("a b").words_up_to(3) {
            let r = apply(&t, u.symbols(), cap);
            prop_assert!(r.words.iter().all(|w| w.len() <= cap));
            if !r.truncated {
                prop_assert_eq!(&r.words, &apply(&t, u.symbols(), cap + 8).words);
            }
        }
    }

    #[test]
    fn synchronization_matches_paths(t in transducer(2)) {
        // Two states give six (state, phase) pairs, so a shortest
        // violating accepting path has at most seven transitions.
        let oracle = accepting_label_paths(&t, 7).iter().all(|p| synchronized_shape(p));
        prop_assert_eq!(is_left_synchronized(&t), oracle);
    }

    #[test]
    fn composition_is_image_composition(t1 in transducer(2), t2 in transducer(2)) {
        let c = compose(&t1, &t2);
        for u in Alphabet::parse("a b").words_up_to(2) {
            let direct = apply(&c, u.symbols(), 6);
            let staged = image_of_set(&t1, &BTreeSet::from([u.clone()]), 6).and_then(|m| image_of_set(&t2, &m, 6));
            if let (false, Some(staged)) = (direct.truncated, staged) {
                prop_assert_eq!(direct.words, staged);
            }
        }
    }

    #[test]
    fn composition_is_associative(t1 in transducer(2), t2 in transducer(2), t3 in transducer(2)) {
        let left = compose(&compose(&t1, &t2), &t3);
        let right = compose(&t1, &compose(&t2, &t3));
        for u in Alphabet::parse("a b").words_up_to(3) {
            let l = apply(&left, u.symbols(), 6);
            let r = apply(&right, u.symbols(), 6);
            if !l.truncated && !r.truncated {
                prop_assert_eq!(l.words, r.words);
            }
        }
    }
}
