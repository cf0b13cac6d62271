//! Transducers used by the examples and tests.

use lbg_core::{sym, Symbol};

use crate::transducer::FiniteTransducer;

fn each<'a>(alphabet: &'a [&'a str]) -> impl Iterator<Item = &'a str> + 'a {
    alphabet.iter().copied()
}

/// `{(u, u)}` over `alphabet`.
pub fn identity(alphabet: &[&str]) -> FiniteTransducer {
    let mut t = FiniteTransducer::new("s", &["s"]);
    for x in each(alphabet) {
        t.add("s", Some(x), Some(x), "s");
    }
    t
}

/// `{(u, ux) : x ∈ letters}` over `alphabet`.
pub fn append(alphabet: &[&str], letters: &[&str]) -> FiniteTransducer {
    let mut t = FiniteTransducer::new("s", &["f"]);
    for x in each(alphabet) {
        t.add("s", Some(x), Some(x), "s");
    }
    for x in each(letters) {
        t.add("s", None, Some(x), "f");
    }
    t
}

/// `{(xu, u)}` over `alphabet`.
pub fn strip_prefix(alphabet: &[&str], x: &str) -> FiniteTransducer {
    let mut t = FiniteTransducer::new("i", &["s"]);
    t.add("i", Some(x), None, "s");
    for y in each(alphabet) {
        t.add("s", Some(y), Some(y), "s");
    }
    t
}

/// Every letter of {A, B} is replaced by any two-letter word over {A, B}.
pub fn doubling() -> FiniteTransducer {
    let mut t = FiniteTransducer::new("s", &["s"]);
    for x in ["A", "B"] {
        for y in ["A", "B"] {
            t.add("s", Some(x), Some(y), &format!("s{}", y));
        }
    }
    for y in ["A", "B"] {
        for z in ["A", "B"] {
            t.add(&format!("s{}", y), None, Some(z), "s");
        }
    }
    t
}

pub fn unary() -> Symbol {
    sym("1")
}

/// Unary doubling n ↦ 2n for n ≥ 1.
pub fn unary_double() -> FiniteTransducer {
    let mut t = FiniteTransducer::new("i", &["f"]);
    t.add("i", Some("1"), Some("1"), "r").add("r", None, Some("1"), "f").add("f", Some("1"), Some("1"), "r");
    t
}

/// Unary n ↦ n − 3 for n ≥ 4.
pub fn unary_minus_three() -> FiniteTransducer {
    let mut t = FiniteTransducer::new("i", &["f"]);
    t.add("i", Some("1"), None, "d1")
        .add("d1", Some("1"), None, "d2")
        .add("d2", Some("1"), None, "d3")
        .add("d3", Some("1"), Some("1"), "f")
        .add("f", Some("1"), Some("1"), "f");
    t
}
