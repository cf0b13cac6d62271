//! Silent reachability over configurations.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use lbg_core::{CoreError, Symbol};

use crate::config::Configuration;
use crate::error::MachineError;
use crate::semantics::Runner;

/// Default bound on configurations visited by one silent closure.
pub const SILENT_CAP: usize = 1_000_000;

/// External configurations reachable from `starts` by silent moves through
/// internal configurations only. Starting configurations that are already
/// external are returned as they are. Silent cycles are harmless: they are
/// visited once and contribute nothing.
pub fn silent_closure<F>(
    runner: &Runner<'_>,
    starts: &[Configuration],
    is_external: F,
    cap: usize,
) -> Result<BTreeSet<Configuration>, MachineError>
where
    F: Fn(&Configuration) -> bool,
{
    let mut out = BTreeSet::new();
    let mut seen: HashSet<Configuration> = HashSet::new();
    let mut queue: VecDeque<Configuration> = VecDeque::new();
    for s in starts {
        if seen.insert(s.clone()) {
            queue.push_back(s.clone());
        }
    }
    while let Some(c) = queue.pop_front() {
        if is_external(&c) {
            out.insert(c);
            continue;
        }
        for d in runner.epsilon_step(&c) {
            if !seen.contains(&d) {
                if seen.len() >= cap {
                    return Err(CoreError::SizeExceeded { cap }.into());
                }
                seen.insert(d.clone());
                queue.push_back(d);
            }
        }
    }
    Ok(out)
}

/// `(a, c')` for every letter step from `c` followed by silent moves ending
/// in an external configuration.
pub fn closure_successors<F>(
    runner: &Runner<'_>,
    c: &Configuration,
    is_external: F,
    cap: usize,
) -> Result<Vec<(Symbol, Configuration)>, MachineError>
where
    F: Fn(&Configuration) -> bool,
{
    let mut by_label: HashMap<Symbol, Vec<Configuration>> = HashMap::new();
    for r in runner.rules_at(c.state, c.scanned()) {
        if let Some(a) = r.label {
            if let Some(d) = crate::semantics::apply(r, c) {
                by_label.entry(a).or_default().push(d);
            }
        }
    }
    let mut out = BTreeSet::new();
    for (a, starts) in by_label {
        for t in silent_closure(runner, &starts, &is_external, cap)? {
            out.insert((a, t));
        }
    }
    Ok(out.into_iter().collect())
}

/// True when some silent cycle is reachable from `starts` by silent moves.
pub fn has_silent_cycle(runner: &Runner<'_>, starts: &[Configuration], cap: usize) -> Result<bool, MachineError> {
    // 0 = unseen, 1 = on the current path, 2 = finished
    let mut colour: HashMap<Configuration, u8> = HashMap::new();
    for s in starts {
        if colour.contains_key(s) {
            continue;
        }
        let mut stack: Vec<(Configuration, Vec<Configuration>)> = vec![(s.clone(), runner.epsilon_step(s))];
        colour.insert(s.clone(), 1);
        while let Some((_, pending)) = stack.last_mut() {
            match pending.pop() {
                Some(d) => match colour.get(&d) {
                    Some(1) => return Ok(true),
                    Some(_) => {}
                    None => {
                        if colour.len() >= cap {
                            return Err(CoreError::SizeExceeded { cap }.into());
                        }
                        colour.insert(d.clone(), 1);
                        let next = runner.epsilon_step(&d);
                        stack.push((d, next));
                    }
                },
                None => {
                    let (c, _) = stack.pop().unwrap();
                    colour.insert(c, 2);
                }
            }
        }
    }
    Ok(false)
}
