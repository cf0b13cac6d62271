use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use lbg_core::{sym, Symbol};

pub const LEFT: &str = "[";
pub const RIGHT: &str = "]";

pub fn left() -> Symbol {
    sym(LEFT)
}

pub fn right() -> Symbol {
    sym(RIGHT)
}

pub fn is_marker(s: Symbol) -> bool {
    s.as_str() == LEFT || s.as_str() == RIGHT
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dir {
    Left,
    Right,
}

impl Dir {
    pub fn sign(self) -> &'static str {
        match self {
            Dir::Left => "-",
            Dir::Right => "+",
        }
    }
}

/// What a rule does to the scanned cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shape {
    /// `pA -> qB±`; with `read == write` a marker this is `p[ -> q[+` or
    /// `p] -> q]-`.
    Move { read: Symbol, write: Symbol, dir: Dir },
    /// `pA -> qB`, head stays.
    Stay { read: Symbol, write: Symbol },
    /// `pA -> qBA` or `p] -> qB]`: a fresh cell is inserted under the head.
    Insert { read: Symbol, write: Symbol },
    /// `pA -> q`: the scanned cell disappears.
    Delete { read: Symbol },
}

impl Shape {
    pub fn read(&self) -> Symbol {
        match *self {
            Shape::Move { read, .. }
            | Shape::Stay { read, .. }
            | Shape::Insert { read, .. }
            | Shape::Delete { read } => read,
        }
    }

    pub fn written(&self) -> Option<Symbol> {
        match *self {
            Shape::Move { write, .. } | Shape::Stay { write, .. } | Shape::Insert { write, .. } => {
                Some(write)
            }
            Shape::Delete { .. } => None,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Shape::Move { read, .. } if is_marker(*read) => "marker-move",
            Shape::Move { .. } => "rewrite-move",
            Shape::Stay { .. } => "rewrite-stay",
            Shape::Insert { .. } => "insert",
            Shape::Delete { .. } => "delete",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rule {
    pub from: Symbol,
    pub label: Option<Symbol>,
    pub shape: Shape,
    pub to: Symbol,
}

impl Rule {
    pub fn new(from: &str, label: Option<&str>, shape: Shape, to: &str) -> Rule {
        Rule { from: sym(from), label: label.map(sym), shape, to: sym(to) }
    }

    pub fn is_epsilon(&self) -> bool {
        self.label.is_none()
    }
}

impl fmt::Display for Rule {
    /// Rule table notation, e.g. `q0 ] -a-> q0 a ]` or `q1 ] -> q2 ] -`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrow = match self.label {
            Some(a) => format!("-{}->", a),
            None => "->".to_string(),
        };
        let read = self.shape.read();
        write!(f, "{} {} {} {}", self.from, read, arrow, self.to)?;
        match self.shape {
            Shape::Move { write, dir, .. } => write!(f, " {} {}", write, dir.sign()),
            Shape::Stay { write, .. } => write!(f, " {}", write),
            Shape::Insert { write, .. } => write!(f, " {} {}", write, read),
            Shape::Delete { .. } => Ok(()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// Classical machine: input written on the tape, unlabeled rules.
    Unlabeled,
    /// Input read online, one inserted cell per letter.
    Labeled,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MachineDescription {
    pub flavor: Flavor,
    pub tape: BTreeSet<Symbol>,
    pub input: BTreeSet<Symbol>,
    pub states: BTreeSet<Symbol>,
    pub initial: Symbol,
    pub finals: BTreeSet<Symbol>,
    pub rules: BTreeSet<Rule>,
}

fn set(xs: &[&str]) -> BTreeSet<Symbol> {
    xs.iter().map(|s| sym(s)).collect()
}

impl MachineDescription {
    pub fn new(flavor: Flavor, tape: &[&str], input: &[&str], states: &[&str], initial: &str, finals: &[&str]) -> Self {
        MachineDescription {
            flavor,
            tape: set(tape),
            input: set(input),
            states: set(states),
            initial: sym(initial),
            finals: set(finals),
            rules: BTreeSet::new(),
        }
    }

    pub fn add(&mut self, rule: Rule) -> &mut Self {
        self.rules.insert(rule);
        self
    }

    pub fn is_labeled(&self) -> bool {
        self.flavor == Flavor::Labeled
    }

    /// Γ together with both markers: every symbol a head can scan.
    pub fn scannable(&self) -> Vec<Symbol> {
        let mut v: Vec<Symbol> = self.tape.iter().copied().collect();
        v.push(left());
        v.push(right());
        v
    }

    /// Rules grouped by (state, scanned symbol).
    pub fn index(&self) -> BTreeMap<(Symbol, Symbol), Vec<Rule>> {
        let mut m: BTreeMap<(Symbol, Symbol), Vec<Rule>> = BTreeMap::new();
        for r in &self.rules {
            m.entry((r.from, r.shape.read())).or_default().push(*r);
        }
        m
    }

    pub fn rules_from(&self, state: Symbol) -> impl Iterator<Item = &Rule> {
        self.rules.iter().filter(move |r| r.from == state)
    }

    pub fn has_epsilon_rule(&self, state: Symbol) -> bool {
        self.rules_from(state).any(|r| r.is_epsilon())
    }

    pub fn has_sigma_rule(&self, state: Symbol) -> bool {
        self.rules_from(state).any(|r| !r.is_epsilon())
    }

    /// Checks the structural invariants; an empty list means the machine is
    /// well formed.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        for s in &self.tape {
            if is_marker(*s) {
                out.push(format!("marker {} declared as a tape symbol", s));
            }
        }
        for s in &self.input {
            if !self.tape.contains(s) {
                out.push(format!("input symbol {} is not a tape symbol", s));
            }
        }
        if !self.states.contains(&self.initial) {
            out.push(format!("initial state {} is not declared", self.initial));
        }
        for s in &self.finals {
            if !self.states.contains(s) {
                out.push(format!("final state {} is not declared", s));
            }
        }
        for r in &self.rules {
            for m in self.rule_problems(r) {
                out.push(format!("rule `{}`: {}", r, m));
            }
        }
        out
    }

    fn rule_problems(&self, r: &Rule) -> Vec<String> {
        let mut out = Vec::new();
        let gamma = |s: &Symbol| self.tape.contains(s);
        for q in [r.from, r.to] {
            if !self.states.contains(&q) {
                out.push(format!("undeclared state {}", q));
            }
        }
        match (self.flavor, r.label) {
            (Flavor::Unlabeled, Some(_)) => out.push("unlabeled machines carry no labels".into()),
            (Flavor::Labeled, Some(a)) if !self.input.contains(&a) => {
                out.push(format!("label {} is not an input symbol", a))
            }
            _ => {}
        }
        let read = r.shape.read();
        if !gamma(&read) && !is_marker(read) {
            out.push(format!("undeclared symbol {}", read));
        }
        match r.shape {
            Shape::Move { read, write, dir } => {
                if read.as_str() == LEFT {
                    if write != read || dir != Dir::Right {
                        out.push("the left marker can only be kept with a right move".into());
                    }
                } else if read.as_str() == RIGHT {
                    if write != read || dir != Dir::Left {
                        out.push("the right marker can only be kept with a left move".into());
                    }
                } else if !gamma(&write) {
                    out.push(format!("written symbol {} is not a tape symbol", write));
                }
            }
            Shape::Stay { read, write } => {
                if is_marker(read) || is_marker(write) {
                    if read != write {
                        out.push("markers cannot be rewritten".into());
                    }
                } else if !gamma(&write) {
                    out.push(format!("written symbol {} is not a tape symbol", write));
                }
            }
            Shape::Insert { read, write } => {
                if self.flavor == Flavor::Unlabeled {
                    out.push("unlabeled machines cannot insert cells".into());
                }
                if r.label.is_none() {
                    out.push("insert must be Σ-labeled".into());
                }
                if read.as_str() == LEFT {
                    out.push("cannot insert before the left marker".into());
                }
                if !gamma(&write) {
                    out.push(format!("inserted symbol {} is not a tape symbol", write));
                }
            }
            Shape::Delete { read } => {
                if self.flavor == Flavor::Unlabeled {
                    out.push("unlabeled machines cannot delete cells".into());
                }
                if is_marker(read) {
                    out.push(format!("cannot delete the marker {}", read));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> MachineDescription {
        MachineDescription::new(Flavor::Labeled, &["a"], &["a"], &["p", "q"], "p", &[])
    }

    #[test]
    fn epsilon_insert_is_rejected() {
        let mut m = base();
        m.add(Rule::new("p", None, Shape::Insert { read: sym("a"), write: sym("a") }, "q"));
        let d = m.validate();
        assert_eq!(d.len(), 1);
        assert!(d[0].contains("insert must be Σ-labeled"), "{:?}", d);
    }

    #[test]
    fn deleting_a_marker_is_rejected() {
        let mut m = base();
        m.add(Rule::new("p", None, Shape::Delete { read: right() }, "q"));
        assert!(m.validate()[0].contains("cannot delete the marker ]"));
    }

    #[test]
    fn display_matches_rule_table() {
        let r = Rule::new("q0", Some("a"), Shape::Insert { read: right(), write: sym("a") }, "q0");
        assert_eq!(r.to_string(), "q0 ] -a-> q0 a ]");
        let r = Rule::new("q1", None, Shape::Move { read: right(), write: right(), dir: Dir::Left }, "q2");
        assert_eq!(r.to_string(), "q1 ] -> q2 ] -");
    }
}
