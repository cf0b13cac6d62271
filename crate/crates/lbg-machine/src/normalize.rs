//! State-level normalization: every state either only reads letters or only
//! moves silently, silent states have a move for every scanned symbol, and
//! final states read letters.

use std::collections::{BTreeMap, BTreeSet};

use lbg_core::{sym, Symbol};

use crate::error::MachineError;
use crate::model::{right, Flavor, MachineDescription, Rule, Shape};

/// Checks the partition: states with a silent rule have no letter rule, are
/// not final, and have a silent rule for every symbol of Γ and both
/// markers.
pub fn is_normalized(m: &MachineDescription) -> bool {
    normalization_problems(m).is_empty()
}

pub fn normalization_problems(m: &MachineDescription) -> Vec<String> {
    let mut out = Vec::new();
    let scannable = m.scannable();
    for &p in &m.states {
        if !m.has_epsilon_rule(p) {
            continue;
        }
        if m.has_sigma_rule(p) {
            out.push(format!("state {} has both silent and letter rules", p));
        }
        if m.finals.contains(&p) {
            out.push(format!("final state {} has silent rules", p));
        }
        for &a in &scannable {
            if !m.rules.iter().any(|r| r.from == p && r.is_epsilon() && r.shape.read() == a) {
                out.push(format!("silent state {} has no rule for {}", p, a));
            }
        }
    }
    out
}

/// States that only read letters (or have no rules at all).
pub fn external_states(m: &MachineDescription) -> BTreeSet<Symbol> {
    m.states.iter().copied().filter(|&p| !m.has_epsilon_rule(p)).collect()
}

fn fresh(base: Symbol, taken: &BTreeSet<Symbol>) -> Symbol {
    let mut name = format!("{}~", base);
    while taken.contains(&sym(&name)) {
        name.push('~');
    }
    sym(&name)
}

/// Splits every state that mixes silent and letter rules (or is final and
/// has silent rules) into an external copy keeping the letter rules and an
/// internal copy `p~` keeping the silent ones. The internal copy hands over
/// to the external one with silent stay rules on every symbol where the
/// external copy could act or the original was stuck. Pure silent states
/// get silent self-loops where they had no rule. The accepted language is
/// unchanged.
pub fn normalize(m: &MachineDescription) -> Result<MachineDescription, MachineError> {
    if m.flavor != Flavor::Labeled {
        return Err(MachineError::PreconditionFailed("normalize expects a labeled machine".into()));
    }
    let scannable = m.scannable();
    let mut has_eps: BTreeSet<(Symbol, Symbol)> = BTreeSet::new();
    let mut has_sig: BTreeSet<(Symbol, Symbol)> = BTreeSet::new();
    for r in &m.rules {
        if r.is_epsilon() {
            has_eps.insert((r.from, r.shape.read()));
        } else {
            has_sig.insert((r.from, r.shape.read()));
        }
    }
    let mut taken = m.states.clone();
    let mut internal: BTreeMap<Symbol, Symbol> = BTreeMap::new();
    for &p in &m.states {
        let eps = m.has_epsilon_rule(p);
        if eps && (m.has_sigma_rule(p) || m.finals.contains(&p)) {
            let t = fresh(p, &taken);
            taken.insert(t);
            internal.insert(p, t);
        }
    }
    let retarget = |q: Symbol| internal.get(&q).copied().unwrap_or(q);

    let mut out = m.clone();
    out.states = taken;
    out.rules = BTreeSet::new();
    for r in &m.rules {
        let from = if r.is_epsilon() { retarget(r.from) } else { r.from };
        out.rules.insert(Rule { from, to: retarget(r.to), ..*r });
    }
    for (&p, &t) in &internal {
        let fin = m.finals.contains(&p);
        for &a in &scannable {
            if has_sig.contains(&(p, a)) || !has_eps.contains(&(p, a)) || fin {
                out.rules.insert(Rule { from: t, label: None, shape: Shape::Stay { read: a, write: a }, to: p });
            }
        }
    }
    for &p in &m.states {
        if internal.contains_key(&p) || !m.has_epsilon_rule(p) {
            continue;
        }
        for &a in &scannable {
            if !has_eps.contains(&(p, a)) {
                out.rules.insert(Rule { from: p, label: None, shape: Shape::Stay { read: a, write: a }, to: p });
            }
        }
    }
    if let Some(&t) = internal.get(&m.initial) {
        if has_eps.contains(&(m.initial, right())) {
            out.initial = t;
        }
    }
    Ok(out)
}
