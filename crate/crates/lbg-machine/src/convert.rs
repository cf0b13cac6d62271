//! From a classical machine to one that reads its input online.

use std::collections::BTreeSet;

use lbg_core::{sym, Symbol};

use crate::error::MachineError;
use crate::model::{is_marker, left, right, Dir, Flavor, MachineDescription, Rule, Shape};
use crate::semantics::accepts;

pub const ACCEPT: &str = "qA";
pub const REJECT: &str = "qR";
pub const STEP: &str = "qS";

/// Two-track cell: the original input letter and the simulated cell.
pub fn pair_symbol(orig: Symbol, work: Symbol) -> Symbol {
    sym(&format!("<{},{}>", orig, work))
}

fn sim(p: Symbol) -> Symbol {
    sym(&format!("n:{}", p))
}

fn eps(from: Symbol, shape: Shape, to: Symbol) -> Rule {
    Rule { from, label: None, shape, to }
}

/// Builds a labeled machine accepting the language of the unlabeled
/// machine `n`.
///
/// In `[w qA]` or `[w qR]` the machine reads a letter `a`, inserts it and
/// enters `qS`. From there it either steps straight to `[wa qR]`, or turns
/// every cell into a pair ⟨original, work⟩ while walking left, runs `n` on
/// the work track, and when `n` reaches a final state walks back writing
/// the original letters and stops in `[wa qA]`. Only `qA` is final, so a
/// word is accepted exactly when `n` accepts it.
pub fn lbm_to_llbm(n: &MachineDescription) -> Result<MachineDescription, MachineError> {
    if n.flavor != Flavor::Unlabeled {
        return Err(MachineError::PreconditionFailed("expected an unlabeled machine".into()));
    }
    let problems = n.validate();
    if !problems.is_empty() {
        return Err(MachineError::Invalid(problems.join("; ")));
    }
    let sigma: Vec<Symbol> = n.input.iter().copied().collect();
    let (qa, qr, qs) = (sym(ACCEPT), sym(REJECT), sym(STEP));
    let (conv, rl, rr, back) = (sym("conv"), sym("rl"), sym("rr"), sym("back"));
    let (l, r) = (left(), right());

    let mut tape: BTreeSet<Symbol> = sigma.iter().copied().collect();
    for &o in &sigma {
        for &w in &n.tape {
            tape.insert(pair_symbol(o, w));
        }
    }
    let mut states: BTreeSet<Symbol> = [qa, qr, qs, conv, rl, rr, back].into_iter().collect();
    for &p in &n.states {
        states.insert(sim(p));
    }
    let mut rules = BTreeSet::new();

    for &a in &sigma {
        for x in [qa, qr] {
            rules.insert(Rule { from: x, label: Some(a), shape: Shape::Insert { read: r, write: a }, to: qs });
        }
        rules.insert(eps(qs, Shape::Move { read: a, write: a, dir: Dir::Right }, qr));
        rules.insert(eps(qs, Shape::Move { read: a, write: pair_symbol(a, a), dir: Dir::Left }, conv));
        rules.insert(eps(conv, Shape::Move { read: a, write: pair_symbol(a, a), dir: Dir::Left }, conv));
        rules.insert(eps(back, Shape::Move { read: a, write: a, dir: Dir::Right }, qa));
    }
    rules.insert(eps(conv, Shape::Move { read: l, write: l, dir: Dir::Right }, sim(n.initial)));

    for rule in &n.rules {
        let read = rule.shape.read();
        if is_marker(read) {
            rules.insert(eps(sim(rule.from), rule.shape, sim(rule.to)));
            continue;
        }
        for &o in &sigma {
            let shape = match rule.shape {
                Shape::Move { read, write, dir } => {
                    Shape::Move { read: pair_symbol(o, read), write: pair_symbol(o, write), dir }
                }
                Shape::Stay { read, write } => Shape::Stay { read: pair_symbol(o, read), write: pair_symbol(o, write) },
                other => return Err(MachineError::Invalid(format!("unexpected rule shape {:?}", other))),
            };
            rules.insert(eps(sim(rule.from), shape, sim(rule.to)));
        }
    }

    let mut cells: Vec<Symbol> = vec![l, r];
    for &o in &sigma {
        for &w in &n.tape {
            cells.push(pair_symbol(o, w));
        }
    }
    for &f in &n.finals {
        for &x in &cells {
            rules.insert(eps(sim(f), Shape::Stay { read: x, write: x }, rl));
        }
    }
    for &o in &sigma {
        for &w in &n.tape {
            let p = pair_symbol(o, w);
            rules.insert(eps(rl, Shape::Move { read: p, write: p, dir: Dir::Left }, rl));
            rules.insert(eps(rr, Shape::Move { read: p, write: o, dir: Dir::Right }, rr));
        }
    }
    rules.insert(eps(rl, Shape::Move { read: r, write: r, dir: Dir::Left }, rl));
    rules.insert(eps(rl, Shape::Move { read: l, write: l, dir: Dir::Right }, rr));
    rules.insert(eps(rr, Shape::Move { read: r, write: r, dir: Dir::Left }, back));

    let initial = if accepts(n, &[])? { qa } else { qr };
    Ok(MachineDescription {
        flavor: Flavor::Labeled,
        tape,
        input: n.input.clone(),
        states,
        initial,
        finals: [qa].into_iter().collect(),
        rules,
    })
}
