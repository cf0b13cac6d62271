//! Labeled machine to length-decreasing rewriting system. Configurations
//! are encoded with the control state fused onto the scanned cell, e.g.
//! `[ a b@q1 ]` for `[aq1b]`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use lbg_core::{ball, sym, Alphabet, GraphFragment, Symbol, Word};
use lbg_machine::{external_states, is_normalized, left, normalize, right, Configuration, Dir, MachineDescription, Shape};
use lbg_machine::normalize::normalization_problems;
use lbg_rewriting::{cayley_edges, RewriteRule, RewritingError, RewritingSystem};
use lbg_tgraph::{entry_vertices, ExternalityPolicy, MachineGraph};

use crate::error::EquivalenceError;

/// The compiled system with the encoding it uses.
#[derive(Clone, Debug)]
pub struct LlbmRewriting {
    pub system: RewritingSystem,
    /// Encodings of the external configurations silently reachable from
    /// `[q0]`.
    pub roots: Vec<Word>,
    /// The source machine.
    pub machine: MachineDescription,
    plain: BTreeMap<Symbol, Symbol>,
    fused: BTreeMap<(Symbol, Symbol), Symbol>,
    back: HashMap<Symbol, (Symbol, Option<Symbol>)>,
}

fn primed(base: Symbol, taken: &BTreeSet<Symbol>) -> Symbol {
    let mut name = format!("{}'", base);
    while taken.contains(&sym(&name)) {
        name.push('\'');
    }
    sym(&name)
}

fn rule(lhs: &[Symbol], rhs: &[Symbol]) -> RewriteRule {
    RewriteRule::new(Word::from_symbols(lhs.to_vec()), Word::from_symbols(rhs.to_vec()))
}

impl LlbmRewriting {
    /// Name of a tape symbol or marker in the system.
    pub fn plain(&self, x: Symbol) -> Symbol {
        self.plain[&x]
    }

    /// Name of the cell `x` scanned in state `q`.
    pub fn fused(&self, x: Symbol, q: Symbol) -> Symbol {
        self.fused[&(x, q)]
    }

    pub fn encode(&self, c: &Configuration) -> Word {
        let symbols = c
            .tape
            .iter()
            .enumerate()
            .map(|(i, &x)| if i == c.head { self.fused(x, c.state) } else { self.plain(x) })
            .collect();
        Word::from_symbols(symbols)
    }

    /// Inverse of [`encode`](Self::encode) on words of the form
    /// `[ Γ* ]` with exactly one fused cell.
    pub fn decode(&self, w: &[Symbol]) -> Option<Configuration> {
        let mut tape = Vec::with_capacity(w.len());
        let mut head = None;
        for (i, s) in w.iter().enumerate() {
            let &(x, q) = self.back.get(s)?;
            if let Some(q) = q {
                if head.is_some() {
                    return None;
                }
                head = Some((i, q));
            }
            tape.push(x);
        }
        let (head, state) = head?;
        let c = Configuration { tape, state, head };
        c.is_well_formed().then_some(c)
    }

    /// Cayley ball from the roots.
    pub fn cayley_ball(&self, radius: usize, cap: usize) -> Result<GraphFragment, EquivalenceError> {
        let b = ball(&self.roots, radius, cap, |u: &Word| cayley_edges(&self.system, u.symbols()), |u| u.to_string())
            .map_err(|e: RewritingError| EquivalenceError::from(e))?;
        Ok(b.fragment)
    }

    /// The same ball with vertices named by their decoded configuration.
    pub fn decoded_ball(&self, radius: usize, cap: usize) -> Result<GraphFragment, EquivalenceError> {
        let f = self.cayley_ball(radius, cap)?;
        Ok(f.renamed(|_, name| {
            let name = name?;
            let w = Word::parse(name);
            Some(self.decode(w.symbols()).map(|c| c.to_string()).unwrap_or_else(|| name.to_string()))
        }))
    }
}

/// Compiles a normalized labeled machine into a rewriting system whose
/// Cayley-type graph from the encoded start configuration is its
/// transition graph. Tape symbols that are also letters are primed.
pub fn llbm_to_rewriting(m: &MachineDescription) -> Result<LlbmRewriting, EquivalenceError> {
    if !m.is_labeled() {
        return Err(EquivalenceError::NotNormalized("machine is unlabeled".into()));
    }
    let problems = m.validate();
    if !problems.is_empty() {
        return Err(EquivalenceError::Machine(lbg_machine::MachineError::PreconditionFailed(problems.join("; "))));
    }
    if !is_normalized(m) {
        return Err(EquivalenceError::NotNormalized(normalization_problems(m).join("; ")));
    }
    let sigma: Vec<Symbol> = m.input.iter().copied().collect();
    let ext = external_states(m);
    let states: Vec<Symbol> = m.states.iter().copied().collect();
    let (lm, rm) = (left(), right());

    let mut taken: BTreeSet<Symbol> = sigma.iter().copied().collect();
    let mut plain: BTreeMap<Symbol, Symbol> = BTreeMap::new();
    for &x in &m.tape {
        let name = if taken.contains(&x) { primed(x, &taken) } else { x };
        taken.insert(name);
        plain.insert(x, name);
    }
    plain.insert(lm, lm);
    plain.insert(rm, rm);
    let scannable: Vec<Symbol> = m.scannable();
    let mut fused: BTreeMap<(Symbol, Symbol), Symbol> = BTreeMap::new();
    let mut back: HashMap<Symbol, (Symbol, Option<Symbol>)> = HashMap::new();
    for &x in &scannable {
        back.insert(plain[&x], (x, None));
        for &q in &states {
            let name = sym(&format!("{}@{}", plain[&x], q));
            fused.insert((x, q), name);
            back.insert(name, (x, Some(q)));
        }
    }
    let signal = |prefix: &str, a: Symbol| sym(&format!("{}{}", prefix, a));
    let mut delta: Vec<Symbol> = sigma.clone();
    delta.extend(plain.values().copied());
    delta.extend(fused.values().copied());
    for &a in &sigma {
        delta.extend([signal("v_", a), signal("v'_", a), signal("s_", a)]);
    }
    let unique: BTreeSet<Symbol> = delta.iter().copied().collect();
    if unique.len() != delta.len() {
        return Err(EquivalenceError::NameClash("encoded symbols collide; rename states or tape symbols".into()));
    }

    let p = |x: Symbol| plain[&x];
    let f = |x: Symbol, q: Symbol| fused[&(x, q)];
    let gamma: Vec<Symbol> = m.tape.iter().copied().collect();
    let g_or = |extra: Symbol| -> Vec<Symbol> {
        let mut v: Vec<Symbol> = gamma.iter().map(|&x| p(x)).collect();
        v.push(p(extra));
        v
    };
    let mut rules: Vec<RewriteRule> = Vec::new();

    // Only bracketed words with external states are irreducible.
    let lefts: Vec<Symbol> = std::iter::once(lm).chain(ext.iter().map(|&q| f(lm, q))).collect();
    let rights: Vec<Symbol> = std::iter::once(rm).chain(ext.iter().map(|&q| f(rm, q))).collect();
    for &x in &delta {
        for &l in &lefts {
            rules.push(rule(&[x, l], &[l]));
        }
    }
    for &r in &rights {
        for &y in delta.iter().filter(|y| !sigma.contains(y)) {
            rules.push(rule(&[r, y], &[r]));
        }
    }
    let mut loops: Vec<Symbol> = sigma.clone();
    for &a in &sigma {
        loops.extend([signal("v_", a), signal("v'_", a), signal("s_", a)]);
    }
    for &q in states.iter().filter(|q| !ext.contains(q)) {
        loops.extend(scannable.iter().map(|&x| f(x, q)));
    }
    for s in loops {
        rules.push(rule(&[s], &[s]));
    }

    // Legality scan of the word the letter is appended to.
    for &a in &sigma {
        let (v, vp, s) = (signal("v_", a), signal("v'_", a), signal("s_", a));
        rules.push(rule(&[rm, a], &[v, rm]));
        for &q in &ext {
            rules.push(rule(&[f(rm, q), a], &[vp, f(rm, q)]));
            rules.push(rule(&[f(lm, q), v], &[f(lm, q), s]));
        }
        for &x in &gamma {
            rules.push(rule(&[p(x), v], &[v, p(x)]));
            rules.push(rule(&[p(x), vp], &[vp, p(x)]));
            for &q in &ext {
                rules.push(rule(&[f(x, q), v], &[vp, f(x, q)]));
            }
            rules.push(rule(&[s, p(x)], &[p(x), s]));
        }
        rules.push(rule(&[lm, vp], &[lm, s]));
    }

    // The letter step, then silent steps.
    for r in &m.rules {
        let (from, to) = (r.from, r.to);
        match r.label {
            Some(a) => {
                let s = signal("s_", a);
                match r.shape {
                    Shape::Insert { read, write } => rules.push(rule(&[s, f(read, from)], &[f(write, to), p(read)])),
                    Shape::Move { read, dir: Dir::Right, .. } if read == lm => {
                        for d in g_or(rm) {
                            let dq = f(back[&d].0, to);
                            rules.push(rule(&[f(lm, from), s, d], &[lm, dq]));
                        }
                    }
                    Shape::Move { read, write, dir: Dir::Right } => {
                        for d in g_or(rm) {
                            let dq = f(back[&d].0, to);
                            rules.push(rule(&[s, f(read, from), d], &[p(write), dq]));
                        }
                    }
                    Shape::Move { read, write, dir: Dir::Left } => {
                        for d in g_or(lm) {
                            let dq = f(back[&d].0, to);
                            rules.push(rule(&[d, s, f(read, from)], &[dq, p(write)]));
                        }
                    }
                    Shape::Stay { read, write } if read == lm => {
                        rules.push(rule(&[f(lm, from), s], &[f(write, to)]));
                    }
                    Shape::Stay { read, write } => rules.push(rule(&[s, f(read, from)], &[f(write, to)])),
                    Shape::Delete { read } => {
                        for d in g_or(rm) {
                            let dq = f(back[&d].0, to);
                            rules.push(rule(&[s, f(read, from), d], &[dq]));
                        }
                    }
                }
            }
            None => match r.shape {
                Shape::Move { read, write, dir: Dir::Right } => {
                    for d in g_or(rm) {
                        let dq = f(back[&d].0, to);
                        rules.push(rule(&[f(read, from), d], &[p(write), dq]));
                    }
                }
                Shape::Move { read, write, dir: Dir::Left } => {
                    for d in g_or(lm) {
                        let dq = f(back[&d].0, to);
                        rules.push(rule(&[d, f(read, from)], &[dq, p(write)]));
                    }
                }
                Shape::Stay { read, write } => rules.push(rule(&[f(read, from)], &[f(write, to)])),
                Shape::Delete { read } => {
                    for d in g_or(rm) {
                        let dq = f(back[&d].0, to);
                        rules.push(rule(&[f(read, from), d], &[dq]));
                    }
                }
                Shape::Insert { .. } => unreachable!("validated machines never insert silently"),
            },
        }
    }

    let system = RewritingSystem::new(Alphabet::new(delta), Alphabet::new(sigma), rules)?;
    let mut out = LlbmRewriting { system, roots: Vec::new(), machine: m.clone(), plain, fused, back };
    let g = MachineGraph::new(m, ExternalityPolicy::Configuration);
    out.roots = entry_vertices(&g, &g.initial())?.iter().map(|c| out.encode(c)).collect();
    Ok(out)
}

/// Normalizes first, then compiles.
pub fn llbm_to_rewriting_normalized(m: &MachineDescription) -> Result<LlbmRewriting, EquivalenceError> {
    llbm_to_rewriting(&normalize(m)?)
}
