use lbg_core::sym;

use crate::transducer::{FiniteTransducer, Transition};

fn pair(p: lbg_core::Symbol, q: lbg_core::Symbol) -> lbg_core::Symbol {
    sym(&format!("({},{})", p, q))
}

/// Relational composition: first `t1`, then `t2`.
pub fn compose(t1: &FiniteTransducer, t2: &FiniteTransducer) -> FiniteTransducer {
    let mut out = FiniteTransducer::new(&pair(t1.initial, t2.initial).to_string(), &[]);
    for &p in &t1.states {
        for &q in &t2.states {
            out.states.insert(pair(p, q));
            if t1.finals.contains(&p) && t2.finals.contains(&q) {
                out.finals.insert(pair(p, q));
            }
        }
    }
    for a in &t1.transitions {
        match a.output {
            Some(y) => {
                for b in t2.transitions.iter().filter(|b| b.input == Some(y)) {
                    out.transitions.insert(Transition {
                        from: pair(a.from, b.from),
                        input: a.input,
                        output: b.output,
                        to: pair(a.to, b.to),
                    });
                }
            }
            None => {
                for &q in &t2.states {
                    out.transitions.insert(Transition { from: pair(a.from, q), input: a.input, output: None, to: pair(a.to, q) });
                }
            }
        }
    }
    for b in t2.transitions.iter().filter(|b| b.input.is_none()) {
        for &p in &t1.states {
            out.transitions.insert(Transition { from: pair(p, b.from), input: None, output: b.output, to: pair(p, b.to) });
        }
    }
    out.trim()
}
