use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use lbg_core::{sym, Symbol};

use crate::error::RationalError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transition {
    pub from: Symbol,
    pub input: Option<Symbol>,
    pub output: Option<Symbol>,
    pub to: Symbol,
}

fn show(x: Option<Symbol>) -> String {
    x.map_or_else(|| "ε".to_string(), |s| s.to_string())
}

impl fmt::Display for Transition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}/{} {}", self.from, show(self.input), show(self.output), self.to)
    }
}

/// A finite automaton over pairs of letters or ε.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTransducer {
    pub states: BTreeSet<Symbol>,
    pub initial: Symbol,
    pub finals: BTreeSet<Symbol>,
    pub transitions: BTreeSet<Transition>,
}

fn opt(x: Option<&str>) -> Option<Symbol> {
    x.filter(|s| *s != "ε").map(sym)
}

impl FiniteTransducer {
    pub fn new(initial: &str, finals: &[&str]) -> FiniteTransducer {
        let mut states: BTreeSet<Symbol> = finals.iter().map(|s| sym(s)).collect();
        states.insert(sym(initial));
        FiniteTransducer {
            states,
            initial: sym(initial),
            finals: finals.iter().map(|s| sym(s)).collect(),
            transitions: BTreeSet::new(),
        }
    }

    /// Adds `from input/output to`, declaring both states; `None` or `"ε"`
    /// stands for the empty word.
    pub fn add(&mut self, from: &str, input: Option<&str>, output: Option<&str>, to: &str) -> &mut Self {
        let t = Transition { from: sym(from), input: opt(input), output: opt(output), to: sym(to) };
        self.states.insert(t.from);
        self.states.insert(t.to);
        self.transitions.insert(t);
        self
    }

    /// Adds a path reading `input` and writing `output` (either may be
    /// longer than one letter) through fresh intermediate states.
    pub fn add_path(&mut self, from: &str, input: &[Symbol], output: &[Symbol], to: &str) -> &mut Self {
        let steps = input.len().max(output.len()).max(1);
        let mut cur = sym(from);
        for i in 0..steps {
            let next = if i + 1 == steps {
                sym(to)
            } else {
                let mut k = 0;
                loop {
                    let name = sym(&format!("{}.{}", from, self.states.len() + k));
                    if !self.states.contains(&name) {
                        break name;
                    }
                    k += 1;
                }
            };
            let t = Transition { from: cur, input: input.get(i).copied(), output: output.get(i).copied(), to: next };
            self.states.insert(cur);
            self.states.insert(next);
            self.transitions.insert(t);
            cur = next;
        }
        self
    }

    pub fn validate(&self) -> Result<(), RationalError> {
        if !self.states.contains(&self.initial) {
            return Err(RationalError::Invalid(format!("initial state {} is undeclared", self.initial)));
        }
        if let Some(f) = self.finals.iter().find(|f| !self.states.contains(f)) {
            return Err(RationalError::Invalid(format!("final state {} is undeclared", f)));
        }
        if let Some(t) = self.transitions.iter().find(|t| !self.states.contains(&t.from) || !self.states.contains(&t.to)) {
            return Err(RationalError::Invalid(format!("transition {} uses an undeclared state", t)));
        }
        Ok(())
    }

    pub fn outgoing(&self) -> BTreeMap<Symbol, Vec<Transition>> {
        let mut out: BTreeMap<Symbol, Vec<Transition>> = BTreeMap::new();
        for t in &self.transitions {
            out.entry(t.from).or_default().push(*t);
        }
        out
    }

    pub fn input_alphabet(&self) -> BTreeSet<Symbol> {
        self.transitions.iter().filter_map(|t| t.input).collect()
    }

    pub fn output_alphabet(&self) -> BTreeSet<Symbol> {
        self.transitions.iter().filter_map(|t| t.output).collect()
    }

    pub fn accessible(&self) -> BTreeSet<Symbol> {
        let out = self.outgoing();
        let mut seen = BTreeSet::from([self.initial]);
        let mut queue = VecDeque::from([self.initial]);
        while let Some(p) = queue.pop_front() {
            for t in out.get(&p).into_iter().flatten() {
                if seen.insert(t.to) {
                    queue.push_back(t.to);
                }
            }
        }
        seen
    }

    /// States from which a final state can be reached.
    pub fn coaccessible(&self) -> BTreeSet<Symbol> {
        let mut seen: BTreeSet<Symbol> = self.finals.clone();
        let mut changed = true;
        while changed {
            changed = false;
            for t in &self.transitions {
                if seen.contains(&t.to) && seen.insert(t.from) {
                    changed = true;
                }
            }
        }
        seen
    }

    /// Keeps only the states lying on some accepting path.
    pub fn trim(&self) -> FiniteTransducer {
        let keep: BTreeSet<Symbol> = self.accessible().intersection(&self.coaccessible()).copied().collect();
        let mut states = keep.clone();
        states.insert(self.initial);
        FiniteTransducer {
            states,
            initial: self.initial,
            finals: self.finals.intersection(&keep).copied().collect(),
            transitions: self.transitions.iter().filter(|t| keep.contains(&t.from) && keep.contains(&t.to)).copied().collect(),
        }
    }
}
