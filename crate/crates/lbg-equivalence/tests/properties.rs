use std::collections::BTreeSet;

use lbg_core::{isomorphic, sym, Alphabet, GraphFragment, Word};
use lbg_equivalence::{llbm_to_rewriting, rewriting_to_transductions, transductions_to_llbm};
use lbg_machine::corpus::{random_labeled, CorpusParams};
use lbg_machine::normalize;
use lbg_rewriting::{cayley_ball, RewriteRule, RewritingSystem};
use lbg_tgraph::{entry_vertices, transition_ball, ExternalityPolicy, MachineGraph};
use lbg_transduction::graph_ball;
use lbg_transduction::samples::random_shift_transduction;
use proptest::prelude::*;

const CAP: usize = 5_000;

fn edges(f: &GraphFragment) -> BTreeSet<(String, String, String)> {
    f.edges().map(|(s, a, t)| (f.label_of(s), a.to_string(), f.label_of(t))).collect()
}

fn word(xs: &[usize]) -> Word {
    let letters = ["a", "b", "0", "1"];
    Word::from_symbols(xs.iter().map(|&i| sym(letters[i])).collect())
}

fn rule() -> impl Strategy<Value = RewriteRule> {
    (prop::collection::vec(0usize..4, 1..=3), prop::collection::vec(0usize..4, 0..=3)).prop_map(|(l, mut r)| {
        r.truncate(l.len());
        RewriteRule::new(word(&l), word(&r))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn machine_to_rewriting_keeps_the_ball(seed in 0u64..10_000) {
        let n = normalize(&random_labeled(seed, CorpusParams::default())).unwrap();
        let r = llbm_to_rewriting(&n).unwrap();
        prop_assert!(r.system.rules.iter().all(|x| x.lhs.len() >= x.rhs.len()));
        let g = MachineGraph::new(&n, ExternalityPolicy::Configuration);
        let roots = entry_vertices(&g, &g.initial()).unwrap();
        prop_assert_eq!(roots.len(), r.roots.len());
        let direct = transition_ball(&g, &roots, 3, CAP).unwrap();
        let decoded = r.decoded_ball(3, CAP).unwrap();
        prop_assert_eq!(edges(&decoded), edges(&direct));
        prop_assert_eq!(decoded.len(), direct.len());
    }

    #[test]
    fn rewriting_to_transductions_keeps_the_ball(rules in prop::collection::vec(rule(), 0..5)) {
        let r = RewritingSystem::new(Alphabet::parse("a b 0 1"), Alphabet::parse("a b"), rules).unwrap();
        let family = rewriting_to_transductions(&r);
        let t = graph_ball(&family, &Word::empty(), 3, CAP);
        let c = cayley_ball(&r, &Word::empty(), 3, CAP);
        if let (Ok(t), Ok(c)) = (t, c) {
            prop_assert_eq!(edges(&t), edges(&c));
            prop_assert_eq!(t.len(), c.len());
            for (_, tr) in &family {
                prop_assert_eq!(tr.k, 0);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn acceptors_to_machine_keeps_the_ball(s1 in 0u64..10_000, s2 in 0u64..10_000) {
        let family = vec![(sym("a"), random_shift_transduction(s1)), (sym("b"), random_shift_transduction(s2))];
        let m = transductions_to_llbm(&family).unwrap();
        for root in ["", "ab"] {
            let root = Word::parse(root);
            let machine = m.transition_ball(&root, 2, CAP).unwrap();
            let graph = graph_ball(&family, &root, 2, CAP).unwrap();
            prop_assert!(isomorphic(&machine, &graph, CAP).unwrap().is_some());
        }
    }
}
