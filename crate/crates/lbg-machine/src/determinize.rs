use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use lbg_core::Symbol;

use crate::config::Configuration;
use crate::error::MachineError;
use crate::explore::{closure_successors, has_silent_cycle, SILENT_CAP};
use crate::model::{MachineDescription, Rule};
use crate::semantics::{apply, Runner};

/// Radius of the transition ball inspected for the preconditions.
pub const CHECK_RADIUS: usize = 3;

/// Key deciding which rule survives among rules with the same state,
/// scanned symbol and label: the smallest (target state, shape tag,
/// written symbol).
fn tie_break(r: &Rule) -> (&'static str, &'static str, &'static str) {
    (r.to.as_str(), r.shape.tag(), r.shape.written().map(|s| s.as_str()).unwrap_or(""))
}

/// Keeps exactly one rule per (state, scanned symbol, label).
///
/// The machine must have a deterministic transition graph and no silent
/// cycles; both are checked on the transition ball of radius
/// [`CHECK_RADIUS`] around the initial configuration.
pub fn prune_determinize(m: &MachineDescription) -> Result<MachineDescription, MachineError> {
    check_preconditions(m, CHECK_RADIUS)?;
    let mut best: BTreeMap<(Symbol, Symbol, Option<Symbol>), Rule> = BTreeMap::new();
    for r in &m.rules {
        let key = (r.from, r.shape.read(), r.label);
        match best.get(&key) {
            Some(old) if tie_break(old) <= tie_break(r) => {}
            _ => {
                best.insert(key, *r);
            }
        }
    }
    let mut out = m.clone();
    out.rules = best.into_values().collect();
    Ok(out)
}

fn check_preconditions(m: &MachineDescription, radius: usize) -> Result<(), MachineError> {
    let runner = Runner::new(m);
    let external = |c: &Configuration| !runner.has_epsilon_move(c);
    let start = Configuration::initial_labeled(m.initial);
    let mut seen: HashSet<Configuration> = HashSet::new();
    let mut layer = vec![start.clone()];
    seen.insert(start);
    let mut queue: VecDeque<Configuration> = VecDeque::new();
    for depth in 0..=radius {
        for c in &layer {
            let mut letter_starts: Vec<Configuration> = Vec::new();
            for r in runner.rules_at(c.state, c.scanned()) {
                if r.label.is_some() {
                    letter_starts.extend(apply(r, c));
                }
            }
            if has_silent_cycle(&runner, &letter_starts, SILENT_CAP)? {
                return Err(MachineError::PreconditionFailed(format!(
                    "silent cycle reachable from {}: the machine does not terminate",
                    c
                )));
            }
            let succ = closure_successors(&runner, c, external, SILENT_CAP)?;
            let mut targets: BTreeMap<Symbol, BTreeSet<&Configuration>> = BTreeMap::new();
            for (a, d) in &succ {
                targets.entry(*a).or_default().insert(d);
            }
            if let Some((a, _)) = targets.iter().find(|(_, ts)| ts.len() > 1) {
                return Err(MachineError::PreconditionFailed(format!(
                    "transition graph is not deterministic: two {}-edges leave {}",
                    a, c
                )));
            }
            if depth < radius {
                for (_, d) in succ {
                    if seen.insert(d.clone()) {
                        queue.push_back(d);
                    }
                }
            }
        }
        layer = queue.drain(..).collect();
    }
    Ok(())
}
