use lbg_core::{sym, Symbol};

use crate::samples::{append, strip_prefix};
use crate::transducer::FiniteTransducer;

/// Label of the transducer appending `x`.
pub fn append_label(x: Symbol) -> Symbol {
    sym(&format!("+{}", x))
}

/// Label of the transducer removing a leading `x`.
pub fn strip_label(x: Symbol) -> Symbol {
    sym(&format!("-{}", x))
}

/// Adds, for every `x` of `gamma`, an `+x` edge `u → ux` and a `-x` edge
/// `xu → u`.
pub fn vertex_access(family: &[(Symbol, FiniteTransducer)], gamma: &[Symbol]) -> Vec<(Symbol, FiniteTransducer)> {
    let names: Vec<&str> = gamma.iter().map(|s| s.as_str()).collect();
    let mut out = family.to_vec();
    for &x in gamma {
        out.push((append_label(x), append(&names, &[x.as_str()])));
        out.push((strip_label(x), strip_prefix(&names, x.as_str())));
    }
    out
}
