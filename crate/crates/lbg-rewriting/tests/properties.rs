use std::collections::BTreeSet;

use lbg_core::{sym, Alphabet, Symbol, Word, DEFAULT_VERTEX_CAP};
use lbg_rewriting::*;
use proptest::prelude::*;

fn word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::sample::select(vec!["a", "b"]), 0..=max)
        .prop_map(|v| Word::from_symbols(v.into_iter().map(sym).collect()))
}

/// Random systems over {a,b}; `strict` forbids length-preserving rules.
fn system(strict: bool) -> impl Strategy<Value = RewritingSystem> {
    prop::collection::vec((word(3), word(2)), 0..5).prop_map(move |pairs| {
        let rules = pairs
            .into_iter()
            .filter(|(l, r)| !l.is_empty() && l.len() >= r.len() && (!strict || l.len() > r.len()))
            .map(|(l, r)| RewriteRule::new(l, r))
            .collect();
        RewritingSystem::new(Alphabet::parse("a b"), Alphabet::parse("a b"), rules).unwrap()
    })
}

/// Leaves of the full derivation tree.
fn leaves(r: &RewritingSystem, w: &Word, out: &mut BTreeSet<Word>) {
    let next = derive_once(r, w);
    if next.is_empty() {
        out.insert(w.clone());
    }
    for v in next {
        leaves(r, &v, out);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normal_forms_are_short_and_irreducible(r in system(false), w in word(6)) {
        for v in normal_forms_of(&r, &w) {
            prop_assert!(v.len() <= w.len());
            prop_assert!(is_normal_form(&r, &v));
        }
    }

    #[test]
    fn certificates_replay(r in system(false), w in word(6)) {
        let found = NormalFormSearch::with_certificates().run(&r, &w).unwrap();
        prop_assert_eq!(found.certificates.len(), found.forms.len());
        for (v, cert) in &found.certificates {
            prop_assert_eq!(replay(&r, &w, cert), Some(v.clone()));
        }
    }

    #[test]
    fn strict_systems_match_derivation_leaves(r in system(true), w in word(5)) {
        let mut expected = BTreeSet::new();
        leaves(&r, &w, &mut expected);
        prop_assert_eq!(normal_forms_of(&r, &w), expected);
    }

    #[test]
    fn cayley_balls_hold_normal_forms(r in system(false)) {
        if is_normal_form(&r, &[]) {
            let f = cayley_ball(&r, &Word::empty(), 3, DEFAULT_VERTEX_CAP).unwrap();
            for v in 0..f.len() {
                let name = f.label_of(v);
                let w = if name == "ε" { Word::empty() } else { Word::parse(&name) };
                prop_assert!(is_normal_form(&r, &w));
            }
            let labels: BTreeSet<Symbol> = f.labels();
            prop_assert!(labels.iter().all(|a| r.labels.contains(a)));
        }
    }
}
