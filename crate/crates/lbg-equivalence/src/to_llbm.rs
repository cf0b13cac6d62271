//! Transductions to a labeled machine with a single external state `q`.
//! A vertex `u` is the configuration `[u q]]` with the head on `]`.
//!
//! Acceptor-backed members: reading `a` inserts the separator, guesses
//! `v` onto a second track (and an untouched copy onto a third), runs the
//! acceptor on the folded tape `u sep v` and, on acceptance, rewrites the
//! tape to `v`. Rewriting-backed members are compiled into a machine that
//! applies rules anywhere on the tape and stops on a normal form.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use lbg_core::{sym, GraphFragment, Symbol, Word};
use lbg_machine::{left, normalize, right, Configuration, Dir, Flavor, MachineDescription, Rule, Shape};
use lbg_rewriting::RewritingSystem;
use lbg_tgraph::{transition_ball, ExternalityPolicy, MachineGraph};
use lbg_transduction::{IncrementalTransduction, Provenance};

use crate::error::EquivalenceError;
use crate::to_transductions::rewriting_source;

/// Name of the external state.
pub const EXTERNAL: &str = "q";
/// Padding symbol of the folded tracks.
pub const BLANK: &str = "□";

/// The compiled machine and the spelling of vertex words on its tape.
#[derive(Clone, Debug)]
pub struct LlbmFromTransductions {
    pub machine: MachineDescription,
    pub external: Symbol,
    letters: BTreeMap<Symbol, Symbol>,
}

impl LlbmFromTransductions {
    /// `[u q]]`, the configuration standing for the vertex `u`.
    pub fn configuration(&self, u: &Word) -> Result<Configuration, EquivalenceError> {
        let mut content = Vec::with_capacity(u.len());
        for s in u.iter() {
            match self.letters.get(s) {
                Some(&t) => content.push(t),
                None => return Err(EquivalenceError::Unsupported(format!("{} is not a vertex letter", s))),
            }
        }
        let head = content.len() + 1;
        Ok(Configuration::with_content(&content, self.external, head))
    }

    /// Tape symbol used for a vertex letter.
    pub fn letter(&self, s: Symbol) -> Option<Symbol> {
        self.letters.get(&s).copied()
    }

    pub fn transition_ball(&self, root: &Word, radius: usize, cap: usize) -> Result<GraphFragment, EquivalenceError> {
        let g = MachineGraph::new(&self.machine, ExternalityPolicy::Configuration);
        Ok(transition_ball(&g, &[self.configuration(root)?], radius, cap)?)
    }
}

/// Rule sink that declares every state and tape symbol it sees.
struct Builder {
    m: MachineDescription,
}

impl Builder {
    fn new(input: &BTreeSet<Symbol>) -> Builder {
        let mut m = MachineDescription::new(Flavor::Labeled, &[], &[], &[EXTERNAL], EXTERNAL, &[EXTERNAL]);
        m.input = input.clone();
        m.tape = input.clone();
        Builder { m }
    }

    fn add(&mut self, from: &str, label: Option<Symbol>, shape: Shape, to: &str) {
        let (from, to) = (sym(from), sym(to));
        self.m.states.insert(from);
        self.m.states.insert(to);
        for s in [Some(shape.read()), shape.written()].into_iter().flatten() {
            if s != left() && s != right() {
                self.m.tape.insert(s);
            }
        }
        self.m.add(Rule { from, label, shape, to });
    }

    fn mv(&mut self, from: &str, read: Symbol, write: Symbol, dir: Dir, to: &str) {
        self.add(from, None, Shape::Move { read, write, dir }, to);
    }

    fn stay(&mut self, from: &str, read: Symbol, write: Symbol, to: &str) {
        self.add(from, None, Shape::Stay { read, write }, to);
    }

    fn delete(&mut self, from: &str, read: Symbol, to: &str) {
        self.add(from, None, Shape::Delete { read }, to);
    }
}

fn fresh(base: &str, taken: &BTreeSet<Symbol>) -> Symbol {
    let mut name = base.to_string();
    while taken.contains(&sym(&name)) {
        name.push('\'');
    }
    sym(&name)
}

/// Compiles a family of transductions. Every member must come from an
/// acceptor machine with `k ≤ 1`, or every member must come from one
/// rewriting system through [`rewriting_to_transductions`](crate::rewriting_to_transductions).
pub fn transductions_to_llbm(family: &[(Symbol, IncrementalTransduction)]) -> Result<LlbmFromTransductions, EquivalenceError> {
    let labels: BTreeSet<Symbol> = family.iter().map(|(a, _)| *a).collect();
    if labels.len() != family.len() {
        return Err(EquivalenceError::Unsupported("a label occurs twice in the family".into()));
    }
    if family.is_empty() {
        let b = Builder::new(&BTreeSet::new());
        return finish(b, BTreeMap::new());
    }
    let sources: Vec<Option<Arc<RewritingSystem>>> = family.iter().map(|(_, t)| rewriting_source(t)).collect();
    if sources.iter().all(Option::is_some) {
        let r = sources[0].clone().expect("checked");
        for ((a, t), s) in family.iter().zip(&sources) {
            let s = s.as_ref().expect("checked");
            if **s != *r {
                return Err(EquivalenceError::Unsupported("members come from different rewriting systems".into()));
            }
            if t.input_suffix.symbols() != [*a] || !r.labels.contains(a) {
                return Err(EquivalenceError::Unsupported(format!("member {} is not T_{} of its system", a, a)));
            }
        }
        return compile_rewriting(&r, &labels);
    }
    compile_acceptors(family)
}

fn compile_acceptors(family: &[(Symbol, IncrementalTransduction)]) -> Result<LlbmFromTransductions, EquivalenceError> {
    let alphabet = family[0].1.alphabet.clone();
    let mut acceptors = Vec::new();
    for (a, t) in family {
        let (machine, separator) = match &t.provenance {
            Provenance::Acceptor { machine, separator } => (machine.clone(), *separator),
            _ => return Err(EquivalenceError::NeedsAcceptor(a.to_string())),
        };
        if t.k > 1 {
            return Err(EquivalenceError::IncrementTooLarge { label: a.to_string(), k: t.k });
        }
        if t.alphabet != alphabet {
            return Err(EquivalenceError::Unsupported("members use different alphabets".into()));
        }
        if !t.input_suffix.is_empty() {
            return Err(EquivalenceError::Unsupported(format!("member {} has an input suffix", a)));
        }
        acceptors.push((*a, t.k, machine, separator));
    }
    let labels: BTreeSet<Symbol> = family.iter().map(|(a, _)| *a).collect();
    let mut b = Builder::new(&labels);
    let vertex: Vec<Symbol> = alphabet.iter().collect();
    b.m.tape.extend(vertex.iter().copied());
    let mut taken: BTreeSet<Symbol> = b.m.tape.clone();
    for (_, _, m, _) in &acceptors {
        taken.extend(m.tape.iter().copied());
    }
    let blank = fresh(BLANK, &taken);
    let (lm, rm) = (left(), right());
    let q = EXTERNAL;

    for (a, k, ma, sep) in &acceptors {
        let st = |name: &str| format!("{}:{}", a, name);
        let work: Vec<Symbol> = ma.tape.iter().copied().collect();
        let mut track2 = work.clone();
        track2.push(blank);
        let mut copies = vertex.clone();
        copies.push(blank);
        let cell = |x: Symbol, y: Symbol, c: Symbol| sym(&format!("<{},{},{}>", x, y, c));
        let mut triples = Vec::new();
        for &x in &work {
            for &y in &track2 {
                for &c in &copies {
                    triples.push((x, y, c));
                }
            }
        }
        let sim = |p: Symbol, track: u8| {
            if ma.finals.contains(&p) {
                st("restore_back")
            } else {
                st(&format!("{}.{}", p, track))
            }
        };

        // Read the letter: append the separator cell, walk back.
        b.add(q, Some(*a), Shape::Insert { read: rm, write: *sep }, &st("back"));
        for &x in vertex.iter().chain(std::iter::once(sep)) {
            b.mv(&st("back"), x, x, Dir::Left, &st("back"));
        }
        b.mv(&st("back"), lm, lm, Dir::Right, &st("guess"));
        // Guess v on track two with a copy on track three; v is followed
        // by padding only.
        for &x in vertex.iter().chain(std::iter::once(sep)) {
            for &z in &vertex {
                b.mv(&st("guess"), x, cell(x, z, z), Dir::Right, &st("guess"));
            }
            b.mv(&st("guess"), x, cell(x, blank, blank), Dir::Right, &st("pad"));
            b.mv(&st("pad"), x, cell(x, blank, blank), Dir::Right, &st("pad"));
        }
        if *k >= 1 {
            b.mv(&st("guess"), rm, rm, Dir::Left, &st("start"));
        }
        b.mv(&st("pad"), rm, rm, Dir::Left, &st("start"));
        for &(x, y, c) in &triples {
            let t = cell(x, y, c);
            b.mv(&st("start"), t, t, Dir::Left, &st("start"));
            b.mv(&st("restore_back"), t, t, Dir::Left, &st("restore_back"));
        }
        b.mv(&st("start"), lm, lm, Dir::Right, &sim(ma.initial, 1));

        // Simulation: position i ≤ n is track one of cell i, position
        // n + j is track two of cell j, and the first blank of track two
        // (or `]` when there is none) is the acceptor's right marker.
        for &p in ma.states.iter().filter(|p| !ma.finals.contains(p)) {
            let (p1, p2) = (sim(p, 1), sim(p, 2));
            let (x12, x21) = (st(&format!("{}.cross12", p)), st(&format!("{}.cross21", p)));
            b.mv(&p1, rm, rm, Dir::Left, &x12);
            b.mv(&p2, lm, lm, Dir::Right, &x21);
            for &(x, y, c) in &triples {
                let t = cell(x, y, c);
                b.mv(&x12, t, t, Dir::Left, &x12);
                b.mv(&x21, t, t, Dir::Right, &x21);
            }
            b.mv(&x12, lm, lm, Dir::Right, &p2);
            b.mv(&x21, rm, rm, Dir::Left, &p1);
        }
        for r in &ma.rules {
            let (p, read) = (r.from, r.shape.read());
            if ma.finals.contains(&p) {
                continue;
            }
            let (p1, p2) = (sim(p, 1), sim(p, 2));
            let (t1, t2) = (sim(r.to, 1), sim(r.to, 2));
            match r.shape {
                Shape::Move { dir, .. } if read == lm => {
                    if dir == Dir::Right {
                        b.mv(&p1, lm, lm, Dir::Right, &t1);
                    }
                }
                Shape::Stay { .. } if read == lm => b.stay(&p1, lm, lm, &t1),
                Shape::Move { dir, .. } if read == rm => {
                    if dir == Dir::Left {
                        b.mv(&p2, rm, rm, Dir::Left, &t2);
                        for &(x, _, c) in triples.iter().filter(|(_, y, _)| *y == blank) {
                            let t = cell(x, blank, c);
                            b.mv(&p2, t, t, Dir::Left, &t2);
                        }
                    }
                }
                Shape::Stay { .. } if read == rm => {
                    b.stay(&p2, rm, rm, &t2);
                    for &(x, _, c) in triples.iter().filter(|(_, y, _)| *y == blank) {
                        let t = cell(x, blank, c);
                        b.stay(&p2, t, t, &t2);
                    }
                }
                Shape::Move { write, dir, .. } => {
                    for &(x, y, c) in &triples {
                        if x == read {
                            b.mv(&p1, cell(x, y, c), cell(write, y, c), dir, &t1);
                        }
                        if y == read {
                            b.mv(&p2, cell(x, y, c), cell(x, write, c), dir, &t2);
                        }
                    }
                }
                Shape::Stay { write, .. } => {
                    for &(x, y, c) in &triples {
                        if x == read {
                            b.stay(&p1, cell(x, y, c), cell(write, y, c), &t1);
                        }
                        if y == read {
                            b.stay(&p2, cell(x, y, c), cell(x, write, c), &t2);
                        }
                    }
                }
                Shape::Insert { .. } | Shape::Delete { .. } => {
                    return Err(EquivalenceError::Unsupported(format!("acceptor rule {} changes the tape length", r)));
                }
            }
        }

        // Acceptance: rewind, write the copy of v back, drop the padding.
        b.mv(&st("restore_back"), rm, rm, Dir::Left, &st("restore_back"));
        b.mv(&st("restore_back"), lm, lm, Dir::Right, &st("restore"));
        for &(x, y, c) in &triples {
            let t = cell(x, y, c);
            if c == blank {
                b.delete(&st("restore"), t, &st("restore_pad"));
                b.delete(&st("restore_pad"), t, &st("restore_pad"));
            } else {
                b.mv(&st("restore"), t, c, Dir::Right, &st("restore"));
            }
        }
        b.stay(&st("restore"), rm, rm, q);
        b.stay(&st("restore_pad"), rm, rm, q);
    }
    let letters = vertex.iter().map(|&s| (s, s)).collect();
    finish(b, letters)
}

/// Proper prefixes of the left-hand sides, and the automaton step that
/// tracks the longest suffix of the scanned text that is such a prefix.
/// `None` means a left-hand side ends at the scanned cell.
struct Matcher {
    prefixes: Vec<Vec<Symbol>>,
    lhs: BTreeSet<Vec<Symbol>>,
    index: BTreeMap<Vec<Symbol>, usize>,
}

impl Matcher {
    fn new(r: &RewritingSystem) -> Matcher {
        let lhs: BTreeSet<Vec<Symbol>> = r.rules.iter().map(|x| x.lhs.symbols().to_vec()).collect();
        let mut set: BTreeSet<Vec<Symbol>> = BTreeSet::new();
        for l in &lhs {
            for i in 0..l.len() {
                set.insert(l[..i].to_vec());
            }
        }
        let prefixes: Vec<Vec<Symbol>> = set.into_iter().collect();
        let index = prefixes.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        Matcher { prefixes, lhs, index }
    }

    fn step(&self, state: usize, x: Symbol) -> Option<usize> {
        let mut w = self.prefixes[state].clone();
        w.push(x);
        if (0..w.len()).any(|i| self.lhs.contains(&w[i..])) {
            return None;
        }
        (0..=w.len()).find_map(|i| self.index.get(&w[i..]).copied())
    }
}

fn compile_rewriting(r: &RewritingSystem, labels: &BTreeSet<Symbol>) -> Result<LlbmFromTransductions, EquivalenceError> {
    let (lm, rm) = (left(), right());
    let mut taken: BTreeSet<Symbol> = r.alphabet.iter().collect();
    taken.insert(lm);
    taken.insert(rm);
    let mut letters: BTreeMap<Symbol, Symbol> = BTreeMap::new();
    for s in r.alphabet.iter() {
        let t = if s == lm || s == rm {
            let t = fresh(&format!("{}'", s), &taken);
            taken.insert(t);
            t
        } else {
            s
        };
        letters.insert(s, t);
    }
    let tape: Vec<Symbol> = letters.values().copied().collect();
    let mut b = Builder::new(labels);
    b.m.tape.extend(tape.iter().copied());
    let q = EXTERNAL;
    for &a in labels {
        b.add(q, Some(a), Shape::Insert { read: rm, write: letters[&a] }, "back");
    }
    // Rewind, then either rewrite an occurrence or move on.
    for &x in &tape {
        b.mv("back", x, x, Dir::Left, "back");
        b.mv("choose", x, x, Dir::Right, "choose");
        b.mv("check_back", x, x, Dir::Left, "check_back");
    }
    b.mv("back", rm, rm, Dir::Left, "back");
    b.mv("back", lm, lm, Dir::Right, "choose");
    b.mv("choose", rm, rm, Dir::Left, "check_back");
    for (i, rule) in r.rules.iter().enumerate() {
        let l: Vec<Symbol> = rule.lhs.iter().map(|s| letters[s]).collect();
        let rhs: Vec<Symbol> = rule.rhs.iter().map(|s| letters[s]).collect();
        let (n, m) = (l.len(), rhs.len());
        let state = |j: usize| if j == 0 { "choose".to_string() } else { format!("rule{}.{}", i, j) };
        for j in 0..n {
            let next = if j + 1 < n { state(j + 1) } else { "back".to_string() };
            if j < m {
                if j + 1 < n {
                    b.mv(&state(j), l[j], rhs[j], Dir::Right, &next);
                } else {
                    b.stay(&state(j), l[j], rhs[j], &next);
                }
            } else {
                b.delete(&state(j), l[j], &next);
            }
        }
    }
    // Accept only normal forms: scan for left-hand sides.
    let matcher = Matcher::new(r);
    let root = matcher.index[&Vec::new()];
    let check = |i: usize| format!("check{}", i);
    b.mv("check_back", lm, lm, Dir::Right, &check(root));
    let inverse: BTreeMap<Symbol, Symbol> = letters.iter().map(|(&s, &t)| (t, s)).collect();
    for i in 0..matcher.prefixes.len() {
        for &x in &tape {
            if let Some(j) = matcher.step(i, inverse[&x]) {
                b.mv(&check(i), x, x, Dir::Right, &check(j));
            }
        }
        b.stay(&check(i), rm, rm, q);
    }
    finish(b, letters)
}

fn finish(b: Builder, letters: BTreeMap<Symbol, Symbol>) -> Result<LlbmFromTransductions, EquivalenceError> {
    let problems = b.m.validate();
    if !problems.is_empty() {
        return Err(EquivalenceError::Machine(lbg_machine::MachineError::PreconditionFailed(problems.join("; "))));
    }
    let machine = normalize(&b.m)?;
    Ok(LlbmFromTransductions { machine, external: sym(EXTERNAL), letters })
}
