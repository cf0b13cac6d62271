//! Seeded random machines for property tests and corpus runs.

use lbg_core::{sym, Symbol};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::{left, right, Dir, Flavor, MachineDescription, Rule, Shape};

#[derive(Clone, Copy, Debug)]
pub struct CorpusParams {
    pub max_states: usize,
    pub max_tape: usize,
    pub max_rules: usize,
}

impl Default for CorpusParams {
    fn default() -> Self {
        CorpusParams { max_states: 4, max_tape: 3, max_rules: 10 }
    }
}

/// A random valid labeled machine. The same seed always gives the same
/// machine.
pub fn random_labeled(seed: u64, params: CorpusParams) -> MachineDescription {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nq = rng.gen_range(1..=params.max_states.max(1));
    let ng = rng.gen_range(1..=params.max_tape.max(1));
    let ns = rng.gen_range(1..=ng.min(2));
    let states: Vec<Symbol> = (0..nq).map(|i| sym(&format!("q{}", i))).collect();
    let tape: Vec<Symbol> = ["a", "b", "c"][..ng].iter().map(|s| sym(s)).collect();
    let sigma: Vec<Symbol> = tape[..ns].to_vec();
    let mut m = MachineDescription {
        flavor: Flavor::Labeled,
        tape: tape.iter().copied().collect(),
        input: sigma.iter().copied().collect(),
        states: states.iter().copied().collect(),
        initial: states[0],
        finals: states.iter().copied().filter(|_| rng.gen_bool(0.4)).collect(),
        rules: Default::default(),
    };
    if m.finals.is_empty() {
        m.finals.insert(*states.choose(&mut rng).unwrap());
    }
    // make sure some input can be read at all
    m.rules.insert(Rule {
        from: states[0],
        label: Some(sigma[0]),
        shape: Shape::Insert { read: right(), write: *tape.choose(&mut rng).unwrap() },
        to: *states.choose(&mut rng).unwrap(),
    });
    let count = rng.gen_range(2..=params.max_rules.max(2));
    for _ in 0..count {
        let from = *states.choose(&mut rng).unwrap();
        let to = *states.choose(&mut rng).unwrap();
        let letter = *sigma.choose(&mut rng).unwrap();
        let any_label = if rng.gen_bool(0.5) { None } else { Some(letter) };
        let write = *tape.choose(&mut rng).unwrap();
        let dir = if rng.gen_bool(0.5) { Dir::Left } else { Dir::Right };
        let (label, shape) = match rng.gen_range(0..8) {
            0 => (any_label, Shape::Move { read: left(), write: left(), dir: Dir::Right }),
            1 => (any_label, Shape::Move { read: right(), write: right(), dir: Dir::Left }),
            2 => (Some(letter), Shape::Insert { read: right(), write }),
            3 => {
                let read = *tape.choose(&mut rng).unwrap();
                (Some(letter), Shape::Insert { read, write })
            }
            4 => {
                let read = *tape.choose(&mut rng).unwrap();
                (None, Shape::Delete { read })
            }
            5 => {
                let read = *tape.choose(&mut rng).unwrap();
                (any_label, Shape::Stay { read, write })
            }
            _ => {
                let read = *tape.choose(&mut rng).unwrap();
                (any_label, Shape::Move { read, write, dir })
            }
        };
        m.rules.insert(Rule { from, label, shape, to });
    }
    debug_assert!(m.validate().is_empty(), "{:?}", m.validate());
    m
}
