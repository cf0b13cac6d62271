//! Small machines used throughout the tests and the command line tool.

use lbg_core::sym;

use crate::model::{left, right, Dir, Flavor, MachineDescription, Rule, Shape};

fn mv(read: &str, write: &str, dir: Dir) -> Shape {
    Shape::Move { read: sym(read), write: sym(write), dir }
}

fn stay(read: &str, write: &str) -> Shape {
    Shape::Stay { read: sym(read), write: sym(write) }
}

fn ins(read: &str, write: &str) -> Shape {
    Shape::Insert { read: sym(read), write: sym(write) }
}

/// Labeled machine accepting { (aⁿbⁿ)⁺ : n ≥ 1 }.
pub fn anbn_machine() -> MachineDescription {
    let mut m = MachineDescription::new(
        Flavor::Labeled,
        &["a", "b"],
        &["a", "b"],
        &["q0", "q1", "q2", "q3"],
        "q0",
        &["q2"],
    );
    m.add(Rule::new("q0", Some("a"), ins("]", "a"), "q0"))
        .add(Rule::new("q0", Some("a"), ins("a", "a"), "q0"))
        .add(Rule::new("q0", Some("b"), mv("a", "b", Dir::Right), "q1"))
        .add(Rule::new("q1", Some("b"), mv("a", "b", Dir::Right), "q1"))
        .add(Rule::new("q1", None, Shape::Move { read: right(), write: right(), dir: Dir::Left }, "q2"))
        .add(Rule::new("q2", Some("a"), mv("b", "a", Dir::Left), "q3"))
        .add(Rule::new("q3", Some("a"), mv("b", "a", Dir::Left), "q3"))
        .add(Rule::new("q3", None, Shape::Move { read: left(), write: left(), dir: Dir::Right }, "q1"));
    m
}

/// Non-deterministic but terminating: after reading `a` two silent paths
/// meet again before the `b` step.
pub fn diamond_machine() -> MachineDescription {
    let mut m = MachineDescription::new(
        Flavor::Labeled,
        &["a", "b"],
        &["a", "b"],
        &["p0", "p1", "p2", "p3", "p4", "p5"],
        "p0",
        &["p5"],
    );
    m.add(Rule::new("p0", Some("a"), ins("]", "a"), "p1"))
        .add(Rule::new("p1", None, stay("a", "a"), "p2"))
        .add(Rule::new("p1", None, stay("a", "a"), "p3"))
        .add(Rule::new("p2", None, stay("a", "a"), "p4"))
        .add(Rule::new("p3", None, stay("a", "a"), "p4"))
        .add(Rule::new("p4", Some("b"), stay("a", "b"), "p5"));
    m
}

/// The diamond with an extra silent cycle between the two branches and a
/// silently diverging side branch; its transition graph is still the
/// two-edge chain.
pub fn divergent_diamond_machine() -> MachineDescription {
    let mut m = diamond_machine();
    m.states.insert(sym("p6"));
    m.add(Rule::new("p2", None, stay("a", "a"), "p3"))
        .add(Rule::new("p3", None, stay("a", "a"), "p2"))
        .add(Rule::new("p2", None, stay("a", "a"), "p6"))
        .add(Rule::new("p6", None, stay("a", "a"), "p6"));
    m
}

/// Unlabeled machine accepting exactly `ab`.
pub fn ab_acceptor() -> MachineDescription {
    let mut m = MachineDescription::new(
        Flavor::Unlabeled,
        &["a", "b"],
        &["a", "b"],
        &["s0", "s1", "s2", "acc"],
        "s0",
        &["acc"],
    );
    m.add(Rule::new("s0", None, mv("a", "a", Dir::Right), "s1"))
        .add(Rule::new("s1", None, mv("b", "b", Dir::Right), "s2"))
        .add(Rule::new("s2", None, Shape::Move { read: right(), write: right(), dir: Dir::Left }, "acc"));
    m
}

/// Unlabeled machine accepting the words of even length over {a, b}.
pub fn even_length_acceptor() -> MachineDescription {
    let mut m = MachineDescription::new(
        Flavor::Unlabeled,
        &["a", "b"],
        &["a", "b"],
        &["e0", "e1", "acc"],
        "e0",
        &["acc"],
    );
    for x in ["a", "b"] {
        m.add(Rule::new("e0", None, mv(x, x, Dir::Right), "e1"))
            .add(Rule::new("e1", None, mv(x, x, Dir::Right), "e0"));
    }
    m.add(Rule::new("e0", None, Shape::Move { read: right(), write: right(), dir: Dir::Left }, "acc"));
    m
}

/// Unlabeled machine that walks over its input and never accepts.
pub fn rejecting_acceptor() -> MachineDescription {
    let mut m = MachineDescription::new(Flavor::Unlabeled, &["a", "b"], &["a", "b"], &["r"], "r", &[]);
    for x in ["a", "b"] {
        m.add(Rule::new("r", None, mv(x, x, Dir::Right), "r"));
    }
    m
}
