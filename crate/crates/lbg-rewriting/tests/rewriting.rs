use std::collections::BTreeSet;

use lbg_core::{sym, Alphabet, Word, DEFAULT_VERTEX_CAP};
use lbg_rewriting::samples::counter_system;
use lbg_rewriting::*;

fn w(s: &str) -> Word {
    if s.is_empty() {
        Word::empty()
    } else {
        Word::parse(s)
    }
}

fn set(list: &[&str]) -> BTreeSet<Word> {
    list.iter().map(|s| w(s)).collect()
}

fn value(u: &Word) -> u64 {
    u.iter().fold(0, |acc, s| acc * 2 + if s.as_str() == "1" { 1 } else { 0 })
}

#[test]
fn rejects_bad_rules() {
    assert!(matches!(
        RewritingSystem::from_texts("a b", "a", &["a -> ab"]),
        Err(RewritingError::InvalidRule { .. })
    ));
    assert!(matches!(RewritingSystem::from_texts("a b", "a", &["-> a"]), Err(RewritingError::InvalidRule { .. })));
    assert!(matches!(RewritingSystem::from_texts("a b", "a", &["a -> c"]), Err(RewritingError::InvalidRule { .. })));
    assert!(matches!(RewritingSystem::from_texts("a", "b", &[]), Err(RewritingError::UnknownSymbol(_))));
}

#[test]
fn single_steps() {
    let r = counter_system();
    assert_eq!(derive_once(&r, &w("01b")), set(&["0b0", "01b"]));
    assert!(derive_once(&r, &w("")).is_empty());
    assert!(derive_once(&r, &w("10")).is_empty());
}

#[test]
fn normal_forms() {
    let r = counter_system();
    assert_eq!(normal_forms_of(&r, &w("01b")), set(&["10"]));
    assert!(normal_forms_of(&r, &w("b")).is_empty());
    assert_eq!(normal_forms_of(&r, &w("0110")), set(&["0110"]));
    assert_eq!(normal_forms_of(&r, &w("a")), set(&["0"]));
}

#[test]
fn certificates_replay() {
    let r = counter_system();
    let found = NormalFormSearch::with_certificates().run(&r, &w("011b")).unwrap();
    assert_eq!(found.forms, set(&["100"]));
    let cert = &found.certificates[&w("100")];
    assert_eq!(cert.len(), 3);
    assert_eq!(replay(&r, &w("011b"), cert), Some(w("100")));
    assert_eq!(replay(&r, &w("011b"), &[Step { position: 0, rule: 2 }]), None);
}

#[test]
fn cayley_edges_of_the_counter() {
    let r = counter_system();
    let got: BTreeSet<(String, String)> =
        cayley_edges(&r, &w("01")).unwrap().into_iter().map(|(a, v)| (a.to_string(), v.to_string())).collect();
    let expected: BTreeSet<(String, String)> =
        [("a", "010"), ("b", "10"), ("c", "0")].iter().map(|(a, v)| (a.to_string(), v.to_string())).collect();
    assert_eq!(got, expected);

    let root = cayley_edges(&r, &w("")).unwrap();
    assert_eq!(root, vec![(sym("a"), w("0"))]);

    assert!(matches!(cayley_edges(&r, &w("0b")), Err(RewritingError::NotNormalForm(_))));

    let unlabeled = RewritingSystem::from_texts("a", "", &["aa -> a"]).unwrap();
    assert!(cayley_edges(&unlabeled, &w("a")).unwrap().is_empty());
}

#[test]
fn counter_edges_match_arithmetic() {
    let r = counter_system();
    let bits = Alphabet::parse("0 1");
    for u in bits.words_up_to(6) {
        let mut expected = BTreeSet::new();
        expected.insert((sym("a"), u.appended(sym("0"))));
        if !u.is_empty() && value(&u) + 1 < (1 << u.len()) {
            let v = bits.words_of_len(u.len()).into_iter().find(|v| value(v) == value(&u) + 1).unwrap();
            expected.insert((sym("b"), v));
        }
        if u.last() == Some(sym("1")) {
            expected.insert((sym("c"), Word::from_symbols(u.symbols()[..u.len() - 1].to_vec())));
        }
        let got: BTreeSet<_> = cayley_edges(&r, &u).unwrap().into_iter().collect();
        assert_eq!(got, expected, "{}", u);
    }
}

#[test]
fn counter_ball() {
    let r = counter_system();
    let f = cayley_ball(&r, &Word::empty(), 3, DEFAULT_VERTEX_CAP).unwrap();
    // distances: ε 0; 0 1; 00 and 1 2; 000, 01 and 10 3
    let names: BTreeSet<String> = (0..f.len()).map(|v| f.label_of(v)).collect();
    let expected: BTreeSet<String> =
        ["ε", "0", "1", "00", "01", "10", "000"].iter().map(|s| s.to_string()).collect();
    assert_eq!(names, expected);
    let zero = cayley_ball(&r, &w("0"), 0, DEFAULT_VERTEX_CAP).unwrap();
    assert_eq!((zero.len(), zero.edge_count()), (1, 0));
    assert!(matches!(
        cayley_ball(&r, &w("b"), 1, DEFAULT_VERTEX_CAP),
        Err(RewritingError::NotNormalForm(_))
    ));
}

#[test]
fn unique_normal_forms() {
    assert_eq!(unique_normal_forms_up_to(&counter_system(), 4), None);
    let split = RewritingSystem::from_texts("a b c", "a", &["ab -> a", "ab -> b"]).unwrap();
    assert_eq!(unique_normal_forms_up_to(&split, 2), Some(w("ab")));
}
