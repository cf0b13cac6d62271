use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use lbg_core::{sym, Alphabet, Symbol, Word};
use lbg_machine::{accepts, left, right, Dir, Flavor, MachineDescription, Rule, Shape};

use crate::error::TransductionError;
use crate::transduction::{IncrementalTransduction, Provenance};

/// Tape symbol used by the shift acceptors to mark consumed cells.
pub const MARK: &str = "*";

/// The transduction `{(u, v) : M accepts u sep v}`.
pub fn acceptor_transduction(
    alphabet: Alphabet,
    k: usize,
    machine: MachineDescription,
    separator: Symbol,
) -> Result<IncrementalTransduction, TransductionError> {
    if alphabet.contains(&separator) {
        return Err(TransductionError::InvalidAcceptor(format!("separator {} is in the alphabet", separator)));
    }
    if machine.is_labeled() {
        return Err(TransductionError::InvalidAcceptor("acceptor must be unlabeled".into()));
    }
    for s in alphabet.iter().chain(std::iter::once(separator)) {
        if !machine.input.contains(&s) {
            return Err(TransductionError::InvalidAcceptor(format!("{} is not an input symbol", s)));
        }
    }
    let problems = machine.validate();
    if !problems.is_empty() {
        return Err(TransductionError::InvalidAcceptor(problems.join("; ")));
    }
    let m = Arc::new(machine);
    let runner_machine = m.clone();
    let decider = Arc::new(move |u: &Word, v: &Word| {
        let mut w: Vec<Symbol> = u.symbols().to_vec();
        w.push(separator);
        w.extend_from_slice(v.symbols());
        accepts(&runner_machine, &w).unwrap_or(false)
    });
    Ok(IncrementalTransduction::new(alphabet, k, Provenance::Acceptor { machine: m, separator }, decider))
}

/// A partial deterministic automaton over single symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    pub states: usize,
    pub finals: BTreeSet<usize>,
    pub delta: BTreeMap<(usize, Symbol), usize>,
}

impl Dfa {
    pub fn new(states: usize, finals: &[usize]) -> Dfa {
        Dfa { states, finals: finals.iter().copied().collect(), delta: BTreeMap::new() }
    }

    pub fn on(mut self, from: usize, x: &str, to: usize) -> Dfa {
        self.delta.insert((from, sym(x)), to);
        self
    }

    pub fn accepts(&self, w: &[Symbol]) -> bool {
        let mut q = 0;
        for s in w {
            match self.delta.get(&(q, *s)) {
                Some(&p) => q = p,
                None => return false,
            }
        }
        self.finals.contains(&q)
    }
}

/// `{(u, u[drop..] · suffix) : u ∈ L(language)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftPiece {
    pub language: Dfa,
    pub drop: usize,
    pub suffix: Word,
}

impl ShiftPiece {
    pub fn relates(&self, u: &Word, v: &Word) -> bool {
        self.language.accepts(u.symbols())
            && u.len() >= self.drop
            && v.len() == u.len() - self.drop + self.suffix.len()
            && v.symbols()[..u.len() - self.drop] == u.symbols()[self.drop..]
            && v.ends_with(self.suffix.symbols())
    }

    /// Largest `|v| − |u|` over the piece.
    pub fn growth(&self) -> isize {
        self.suffix.len() as isize - self.drop as isize
    }
}

fn mv(read: Symbol, write: Symbol, dir: Dir) -> Shape {
    Shape::Move { read, write, dir }
}

/// An unlabeled machine accepting `u sep v` iff some piece relates `u`
/// and `v`. Each piece checks membership of `u`, marks the dropped
/// prefix, then matches the rest of `u` against `v` one cell at a time
/// and finally reads the suffix.
pub fn shift_acceptor(
    alphabet: &Alphabet,
    separator: Symbol,
    pieces: &[ShiftPiece],
) -> Result<MachineDescription, TransductionError> {
    let mark = sym(MARK);
    if alphabet.contains(&mark) || alphabet.contains(&separator) || separator == mark {
        return Err(TransductionError::InvalidAcceptor("separator and mark must be fresh".into()));
    }
    let gamma: Vec<Symbol> = alphabet.iter().collect();
    let mut tape: Vec<&str> = gamma.iter().map(|s| s.as_str()).collect();
    tape.push(separator.as_str());
    let input = tape.clone();
    tape.push(MARK);
    let mut m = MachineDescription::new(Flavor::Unlabeled, &tape, &input, &["q0", "acc"], "q0", &["acc"]);
    let (lm, rm) = (left(), right());
    let add = |m: &mut MachineDescription, from: String, shape: Shape, to: String| {
        m.states.insert(sym(&from));
        m.states.insert(sym(&to));
        m.add(Rule { from: sym(&from), label: None, shape, to: sym(&to) });
    };

    for (i, piece) in pieces.iter().enumerate() {
        for s in piece.suffix.iter() {
            if !alphabet.contains(s) {
                return Err(TransductionError::InvalidAcceptor(format!("suffix symbol {} outside the alphabet", s)));
            }
        }
        let p = |name: &str| format!("p{}_{}", i, name);
        // Enter the piece on the first cell.
        for &x in gamma.iter().chain(std::iter::once(&separator)) {
            add(&mut m, "q0".into(), Shape::Stay { read: x, write: x }, p("scan0"));
        }
        // Membership of u.
        for (&(q, x), &t) in &piece.language.delta {
            if alphabet.contains(&x) {
                add(&mut m, p(&format!("scan{}", q)), mv(x, x, Dir::Right), p(&format!("scan{}", t)));
            }
        }
        for &f in &piece.language.finals {
            add(&mut m, p(&format!("scan{}", f)), mv(separator, separator, Dir::Left), p("back"));
        }
        for &x in &gamma {
            add(&mut m, p("back"), mv(x, x, Dir::Left), p("back"));
        }
        add(&mut m, p("back"), mv(lm, lm, Dir::Right), p("drop0"));
        // Mark the dropped prefix.
        for j in 0..piece.drop {
            for &x in &gamma {
                add(&mut m, p(&format!("drop{}", j)), mv(x, mark, Dir::Right), p(&format!("drop{}", j + 1)));
            }
        }
        let cmp = p(&format!("drop{}", piece.drop));
        // Match the remaining letters of u against v.
        add(&mut m, cmp.clone(), mv(mark, mark, Dir::Right), cmp.clone());
        add(&mut m, cmp.clone(), mv(separator, separator, Dir::Right), p("sfx0"));
        for &x in &gamma {
            let carry = p(&format!("carry_{}", x));
            let carry2 = p(&format!("carry2_{}", x));
            add(&mut m, cmp.clone(), mv(x, mark, Dir::Right), carry.clone());
            for &y in &gamma {
                add(&mut m, carry.clone(), mv(y, y, Dir::Right), carry.clone());
            }
            add(&mut m, carry.clone(), mv(separator, separator, Dir::Right), carry2.clone());
            add(&mut m, carry2.clone(), mv(mark, mark, Dir::Right), carry2.clone());
            add(&mut m, carry2, mv(x, mark, Dir::Left), p("ret"));
        }
        for &x in gamma.iter().chain([separator, mark].iter()) {
            add(&mut m, p("ret"), mv(x, x, Dir::Left), p("ret"));
        }
        add(&mut m, p("ret"), mv(lm, lm, Dir::Right), cmp.clone());
        // The unmatched rest of v is the suffix.
        add(&mut m, p("sfx0"), mv(mark, mark, Dir::Right), p("sfx0"));
        for (j, &s) in piece.suffix.iter().enumerate() {
            add(&mut m, p(&format!("sfx{}", j)), mv(s, s, Dir::Right), p(&format!("sfx{}", j + 1)));
        }
        add(&mut m, p(&format!("sfx{}", piece.suffix.len())), mv(rm, rm, Dir::Left), "acc".into());
    }
    Ok(m)
}

/// Acceptor-backed transduction of a union of shift pieces.
pub fn shift_transduction(
    alphabet: Alphabet,
    separator: Symbol,
    pieces: &[ShiftPiece],
) -> Result<IncrementalTransduction, TransductionError> {
    let k = pieces.iter().map(ShiftPiece::growth).max().unwrap_or(0).max(0) as usize;
    let m = shift_acceptor(&alphabet, separator, pieces)?;
    acceptor_transduction(alphabet, k, m, separator)
}
