use std::collections::{HashSet, VecDeque};

use lbg_core::Alphabet;
use lbg_machine::corpus::{random_labeled, CorpusParams};
use lbg_machine::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn runs_stay_linearly_bounded(seed in 0u64..10_000) {
        let m = random_labeled(seed, CorpusParams::default());
        let runner = Runner::new(&m);
        let start = Configuration::initial_labeled(m.initial);
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert((start.clone(), 0usize));
        queue.push_back((start, 0usize));
        while let Some((c, read)) = queue.pop_front() {
            prop_assert!(c.is_well_formed());
            prop_assert!(c.tape.len() <= read + 2);
            if read >= 4 {
                continue;
            }
            for (x, d) in runner.step(&c).unwrap() {
                let next = (d, read + x.is_some() as usize);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }

    #[test]
    fn normalize_is_normalized_and_keeps_language(seed in 0u64..10_000) {
        let m = random_labeled(seed, CorpusParams::default());
        let n = normalize(&m).unwrap();
        prop_assert!(n.validate().is_empty());
        prop_assert!(is_normalized(&n));
        for w in Alphabet::new(m.input.iter().copied()).words_up_to(5) {
            prop_assert_eq!(accepts(&m, &w).unwrap(), accepts(&n, &w).unwrap());
        }
    }

    #[test]
    fn policies_agree_on_normalized_machines(seed in 0u64..10_000) {
        let n = normalize(&random_labeled(seed, CorpusParams::default())).unwrap();
        let ext = external_states(&n);
        let runner = Runner::new(&n);
        for &q in &n.states {
            for &x in &n.scannable() {
                let c = match x.as_str() {
                    "[" => Configuration::with_content(&[], q, 0),
                    "]" => Configuration::with_content(&[], q, 1),
                    _ => Configuration::with_content(&[x], q, 1),
                };
                prop_assert_eq!(ext.contains(&q), !runner.has_epsilon_move(&c));
            }
        }
    }
}
