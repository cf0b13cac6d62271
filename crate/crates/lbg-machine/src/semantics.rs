use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use lbg_core::Symbol;

use crate::config::Configuration;
use crate::error::MachineError;
use crate::model::{is_marker, left, right, Dir, Flavor, MachineDescription, Rule, Shape};

/// One labeled move; `None` is ε.
pub type Move = (Option<Symbol>, Configuration);

/// A machine with its rules indexed by (state, scanned symbol), for
/// repeated stepping.
pub struct Runner<'m> {
    pub machine: &'m MachineDescription,
    index: HashMap<(Symbol, Symbol), Vec<Rule>>,
}

impl<'m> Runner<'m> {
    pub fn new(machine: &'m MachineDescription) -> Runner<'m> {
        let mut index: HashMap<(Symbol, Symbol), Vec<Rule>> = HashMap::new();
        for r in &machine.rules {
            index.entry((r.from, r.shape.read())).or_default().push(*r);
        }
        Runner { machine, index }
    }

    pub fn rules_at(&self, state: Symbol, scanned: Symbol) -> &[Rule] {
        self.index.get(&(state, scanned)).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// True when some ε-rule applies to `c`.
    pub fn has_epsilon_move(&self, c: &Configuration) -> bool {
        self.rules_at(c.state, c.scanned()).iter().any(|r| r.is_epsilon())
    }

    /// All moves from `c`, sorted and without duplicates.
    pub fn step(&self, c: &Configuration) -> Result<Vec<Move>, MachineError> {
        if !c.is_well_formed() {
            return Err(MachineError::InvalidConfiguration(c.to_string()));
        }
        let mut out: BTreeSet<Move> = BTreeSet::new();
        for r in self.rules_at(c.state, c.scanned()) {
            if let Some(next) = apply(r, c) {
                out.insert((r.label, next));
            }
        }
        Ok(out.into_iter().collect())
    }

    /// ε-moves only.
    pub fn epsilon_step(&self, c: &Configuration) -> Vec<Configuration> {
        let mut out: Vec<Configuration> = self
            .rules_at(c.state, c.scanned())
            .iter()
            .filter(|r| r.is_epsilon())
            .filter_map(|r| apply(r, c))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Moves labeled by `a`.
    pub fn letter_step(&self, c: &Configuration, a: Symbol) -> Vec<Configuration> {
        let mut out: Vec<Configuration> = self
            .rules_at(c.state, c.scanned())
            .iter()
            .filter(|r| r.label == Some(a))
            .filter_map(|r| apply(r, c))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Decides whether `w` leads from `start` to a configuration with a
    /// final state. Labeled machines interleave ε-moves with the letters
    /// of `w`; unlabeled machines only take unlabeled moves and ignore `w`
    /// beyond the start configuration. The explored space is finite, so the
    /// search always terminates.
    pub fn accepts_from(&self, start: &Configuration, w: &[Symbol]) -> bool {
        let finals = &self.machine.finals;
        let mut seen: HashSet<(Configuration, usize)> = HashSet::new();
        let mut queue: VecDeque<(Configuration, usize)> = VecDeque::new();
        seen.insert((start.clone(), 0));
        queue.push_back((start.clone(), 0));
        let labeled = self.machine.flavor == Flavor::Labeled;
        let goal = if labeled { w.len() } else { 0 };
        while let Some((c, i)) = queue.pop_front() {
            if i == goal && finals.contains(&c.state) {
                return true;
            }
            for r in self.rules_at(c.state, c.scanned()) {
                let j = match r.label {
                    None => i,
                    Some(a) if labeled && i < w.len() && w[i] == a => i + 1,
                    Some(_) => continue,
                };
                if let Some(next) = apply(r, &c) {
                    let key = (next, j);
                    if !seen.contains(&key) {
                        seen.insert(key.clone());
                        queue.push_back(key);
                    }
                }
            }
        }
        false
    }
}

/// Applies one rule to a configuration, or returns `None` when the rule
/// does not fit (wrong state or symbol, or a move off the tape).
pub fn apply(r: &Rule, c: &Configuration) -> Option<Configuration> {
    if r.from != c.state || r.shape.read() != c.scanned() {
        return None;
    }
    let mut tape = c.tape.clone();
    let h = c.head;
    let head = match r.shape {
        Shape::Move { write, dir, .. } => {
            tape[h] = write;
            match dir {
                Dir::Right if h + 1 < tape.len() => h + 1,
                Dir::Left if h > 0 => h - 1,
                _ => return None,
            }
        }
        Shape::Stay { write, .. } => {
            tape[h] = write;
            h
        }
        Shape::Insert { write, .. } => {
            if h == 0 {
                return None;
            }
            tape.insert(h, write);
            h
        }
        Shape::Delete { read } => {
            if is_marker(read) {
                return None;
            }
            tape.remove(h);
            h
        }
    };
    let next = Configuration { tape, state: r.to, head };
    next.is_well_formed().then_some(next)
}

pub fn step(m: &MachineDescription, c: &Configuration) -> Result<Vec<Move>, MachineError> {
    Runner::new(m).step(c)
}

fn check_input(m: &MachineDescription, w: &[Symbol]) -> Result<(), MachineError> {
    match w.iter().find(|s| !m.input.contains(s)) {
        Some(s) => Err(MachineError::InvalidInput(s.to_string())),
        None => Ok(()),
    }
}

/// Start configuration of a run on `w`: `[q0]` for labeled machines and
/// `[q0 w]` for unlabeled ones.
pub fn start_configuration(m: &MachineDescription, w: &[Symbol]) -> Configuration {
    match m.flavor {
        Flavor::Labeled => Configuration::initial_labeled(m.initial),
        Flavor::Unlabeled => Configuration::initial_unlabeled(m.initial, w),
    }
}

pub fn accepts(m: &MachineDescription, w: &[Symbol]) -> Result<bool, MachineError> {
    check_input(m, w)?;
    Ok(Runner::new(m).accepts_from(&start_configuration(m, w), w))
}

/// Like [`accepts`] with an explicit start configuration.
pub fn accepts_from(m: &MachineDescription, start: &Configuration, w: &[Symbol]) -> Result<bool, MachineError> {
    check_input(m, w)?;
    if !start.is_well_formed() {
        return Err(MachineError::InvalidConfiguration(start.to_string()));
    }
    Ok(Runner::new(m).accepts_from(start, w))
}

/// Representative configurations: one per (state, scanned symbol). A rule
/// only inspects the scanned cell and its left neighbour exists for every
/// non-`[` cell, so one content cell is enough to exercise every rule.
fn local_configurations(m: &MachineDescription) -> Vec<Configuration> {
    let mut out = Vec::new();
    for &q in &m.states {
        out.push(Configuration { tape: vec![left(), right()], state: q, head: 0 });
        out.push(Configuration { tape: vec![left(), right()], state: q, head: 1 });
        for &a in &m.tape {
            out.push(Configuration::with_content(&[a], q, 1));
        }
    }
    out
}

/// Checks that from every configuration either all moves carry distinct
/// letters, or there is exactly one move and it is silent.
pub fn is_deterministic(m: &MachineDescription) -> bool {
    let runner = Runner::new(m);
    local_configurations(m).iter().all(|c| {
        let moves = runner.step(c).unwrap_or_default();
        if moves.iter().any(|(x, _)| x.is_none()) {
            return moves.len() == 1;
        }
        let labels: BTreeSet<Symbol> = moves.iter().filter_map(|(x, _)| *x).collect();
        labels.len() == moves.len()
    })
}

/// Number of configurations with at most `n` content cells:
/// Σ_{m=0..n} |Q|·(m+2)·|Γ|^m. Saturates instead of overflowing.
pub fn step_bound(m: &MachineDescription, n: usize) -> u128 {
    let q = m.states.len() as u128;
    let g = m.tape.len() as u128;
    let mut total: u128 = 0;
    let mut power: u128 = 1;
    for len in 0..=n {
        let term = q.saturating_mul(len as u128 + 2).saturating_mul(power);
        total = total.saturating_add(term);
        power = power.saturating_mul(g);
    }
    total
}
