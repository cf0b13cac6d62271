use std::collections::BTreeSet;

use lbg_analysis::*;
use lbg_core::{Alphabet, Word, DEFAULT_VERTEX_CAP};
use proptest::prelude::*;

const CAP: usize = DEFAULT_VERTEX_CAP;

/// Membership from a bit table indexed by length-lexicographic rank.
fn table_language(bits: u32) -> impl Fn(&Word) -> bool {
    let words = Alphabet::parse("a b").words_up_to(4);
    move |u: &Word| words.iter().position(|x| x == u).map_or(false, |i| bits >> (i % 32) & 1 == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tree_marks_follow_membership(bits in any::<u32>(), radius in 0usize..=4) {
        let sigma = Alphabet::parse("a b");
        let member = table_language(bits);
        let f = language_tree(&sigma, &member, radius, CAP).unwrap();
        prop_assert!(is_deterministic_tree(&f));
        let marked: BTreeSet<String> = (0..f.len())
            .map(|v| f.label_of(v))
            .filter(|n| mark_of(n) == Some(Mark::Accept))
            .map(|n| n[1..].to_string())
            .collect();
        let expected: BTreeSet<String> = sigma
            .words_up_to(radius)
            .into_iter()
            .filter(|u| member(u))
            .map(|u| u.iter().map(|s| s.as_str()).collect())
            .collect();
        prop_assert_eq!(marked, expected);
    }

    #[test]
    fn lemma_id_monotone_functions(steps in prop::collection::vec(0usize..4, 5)) {
        let table: Vec<usize> = std::iter::once(1)
            .chain(steps.iter().scan(1, |acc, s| { *acc += s; Some(*acc) }))
            .collect();
        let lookup = table.clone();
        let g = LemmaId::with_in_degree(move |n| lookup[n.min(5)]);
        let frag = g.ball(5 + table[5], CAP).unwrap();
        for n in 1..=5 {
            let v = frag.find(&LemmaId::zeros(n).to_string()).unwrap();
            prop_assert_eq!(frag.in_degree(v), table[n]);
        }
    }

    #[test]
    fn fig3_reaches_exactly_the_language(bits in any::<u32>()) {
        let member = std::sync::Arc::new(table_language(bits));
        let m2 = member.clone();
        let g = Fig3 { language: std::sync::Arc::new(move |u: &Word| u.len() <= 2 && m2(u)) };
        let f = g.ball(2 + 4 + 1, CAP).unwrap();
        let dist = f.distances_from(f.find("#").unwrap());
        for u in Alphabet::parse("a b").words_up_to(2) {
            let name = u.iter().map(|s| s.as_str()).collect::<String>();
            let found = if u.is_empty() { f.find("ε") } else { f.find(&name) };
            if member(&u) {
                let v = found.expect("member reachable");
                prop_assert_eq!(dist[v], Some(u.len() + (1 << u.len()) + 1));
            } else {
                prop_assert!(found.is_none());
            }
        }
    }
}
