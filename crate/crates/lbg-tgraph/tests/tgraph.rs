use std::collections::{BTreeMap, BTreeSet};

use lbg_core::{isomorphic, sym, Alphabet, Symbol, Word, DEFAULT_VERTEX_CAP};
use lbg_machine::samples::*;
use lbg_machine::{accepts, Configuration, MachineDescription};
use lbg_tgraph::*;

const CAP: usize = DEFAULT_VERTEX_CAP;

fn names(f: &lbg_core::GraphFragment) -> BTreeSet<String> {
    (0..f.len()).map(|v| f.label_of(v)).collect()
}

fn named_edges(f: &lbg_core::GraphFragment) -> BTreeSet<(String, String, String)> {
    f.edges().map(|(s, a, t)| (f.label_of(s), a.to_string(), f.label_of(t))).collect()
}

fn edge(s: &str, a: &str, t: &str) -> (String, String, String) {
    (s.to_string(), a.to_string(), t.to_string())
}

fn words(list: &[&str]) -> BTreeSet<Word> {
    list.iter().map(|s| Word::parse(s)).collect()
}

#[test]
fn chain_closure_skips_internal_vertices() {
    let g = epsilon_chain_graph();
    let one = g.find("1").unwrap();
    let got: Vec<(Symbol, String)> = closure_edges(&g, &one).unwrap().into_iter().map(|(a, v)| (a, g.name(&v))).collect();
    assert_eq!(got, vec![(sym("a"), "4".to_string())]);
    let two = g.find("2").unwrap();
    assert!(matches!(closure_edges(&g, &two), Err(TgraphError::NotExternal(_))));
}

#[test]
fn chain_transition_graph_and_caucal_closures() {
    let g = epsilon_chain_graph();
    let one = g.find("1").unwrap();
    let ours = transition_ball(&g, &[one], 5, CAP).unwrap();
    assert_eq!(named_edges(&ours), [edge("1", "a", "4"), edge("4", "b", "5")].into_iter().collect());

    let all = caucal_ball(&g, &one, 5, |_| true, CAP).unwrap();
    assert_eq!((all.len(), all.edge_count()), (5, 6));
    let expected: BTreeSet<_> = [
        edge("1", "a", "2"),
        edge("1", "a", "3"),
        edge("1", "a", "4"),
        edge("2", "b", "5"),
        edge("3", "b", "5"),
        edge("4", "b", "5"),
    ]
    .into_iter()
    .collect();
    assert_eq!(named_edges(&all), expected);

    let ext = caucal_ball(&g, &one, 5, |v| g.is_external(v), CAP).unwrap();
    assert_eq!(named_edges(&ext), named_edges(&ours));
    assert!(isomorphic(&all, &ours, CAP).unwrap().is_none());
}

#[test]
fn caucal_without_silent_edges_is_the_plain_ball() {
    let mut g = ExplicitGraph::default();
    g.edge("x", Some("a"), "y").edge("y", Some("b"), "x").edge("y", Some("a"), "z");
    let x = g.find("x").unwrap();
    let plain = reachable_restriction(
        |v: &usize| -> Result<Vec<(Symbol, usize)>, TgraphError> {
            Ok(g.moves(v)?.into_iter().map(|(a, t)| (a.unwrap(), t)).collect())
        },
        x,
        3,
        CAP,
        |v| g.name(v),
    )
    .unwrap();
    let caucal = caucal_ball(&g, &x, 3, |_| true, CAP).unwrap();
    assert_eq!(named_edges(&plain), named_edges(&caucal));
    assert_eq!(names(&plain), names(&caucal));
}

#[test]
fn anbn_closure_edges() {
    let m = anbn_machine();
    let g = MachineGraph::new(&m, ExternalityPolicy::Configuration);
    let c = g.parse("[q0a]").unwrap();
    let got: BTreeSet<(String, String)> =
        closure_edges(&g, &c).unwrap().into_iter().map(|(a, v)| (a.to_string(), v.to_string())).collect();
    let expected: BTreeSet<(String, String)> =
        [("a", "[q0aa]"), ("b", "[q2b]")].iter().map(|(a, v)| (a.to_string(), v.to_string())).collect();
    assert_eq!(got, expected);

    // no letter rule at all
    let stuck = g.parse("[bq2b]").unwrap();
    assert!(g.is_external(&stuck));
    let out = closure_edges(&g, &g.parse("[q2a]").unwrap()).unwrap();
    assert!(out.is_empty());
}

#[test]
fn anbn_balls_match_the_reference_edges() {
    let m = anbn_machine();
    let f0 = machine_ball(&m, 0, ExternalityPolicy::Configuration, CAP).unwrap();
    assert_eq!(names(&f0), ["[q0]".to_string()].into_iter().collect());

    let f2 = machine_ball(&m, 2, ExternalityPolicy::Configuration, CAP).unwrap();
    assert_eq!(names(&f2), ["[q0]", "[q0a]", "[q0aa]", "[q2b]"].iter().map(|s| s.to_string()).collect());

    let f3 = machine_ball(&m, 3, ExternalityPolicy::Configuration, CAP).unwrap();
    assert_eq!(
        names(&f3),
        ["[q0]", "[q0a]", "[q0aa]", "[q2b]", "[q0aaa]", "[bq1a]", "[q1a]"].iter().map(|s| s.to_string()).collect()
    );
    let figure: BTreeSet<_> = [
        edge("[q0]", "a", "[q0a]"),
        edge("[q0a]", "a", "[q0aa]"),
        edge("[q0aa]", "a", "[q0aaa]"),
        edge("[q0a]", "b", "[q2b]"),
        edge("[q2b]", "a", "[q1a]"),
        edge("[q1a]", "b", "[q2b]"),
        edge("[q0aa]", "b", "[bq1a]"),
        edge("[bq1a]", "b", "[bq2b]"),
        edge("[bq2b]", "a", "[q3ba]"),
        edge("[q3ba]", "a", "[q1aa]"),
        edge("[q1aa]", "b", "[bq1a]"),
        edge("[q0aaa]", "b", "[bq1aa]"),
        edge("[bq1aa]", "b", "[bbq1a]"),
        edge("[bbq1a]", "b", "[bbq2b]"),
        edge("[bbq2b]", "a", "[bq3ba]"),
        edge("[bq3ba]", "a", "[q3baa]"),
        edge("[q3baa]", "a", "[q1aaa]"),
        edge("[q1aaa]", "b", "[bq1aa]"),
    ]
    .into_iter()
    .collect();
    let wide = machine_ball(&m, 10, ExternalityPolicy::Configuration, CAP).unwrap();
    let drawn: BTreeSet<String> = figure.iter().flat_map(|(s, _, t)| [s.clone(), t.clone()]).collect();
    let inside: BTreeSet<_> =
        named_edges(&wide).into_iter().filter(|(s, _, t)| drawn.contains(s) && drawn.contains(t)).collect();
    assert_eq!(inside, figure);
    assert!(named_edges(&f3).is_subset(&figure));
}

#[test]
fn divergent_machine_gives_a_chain() {
    let m = divergent_diamond_machine();
    let f = machine_ball(&m, 2, ExternalityPolicy::Configuration, CAP).unwrap();
    assert_eq!((f.len(), f.edge_count()), (3, 2));
    let labels: Vec<String> = f.edges().map(|(_, a, _)| a.to_string()).collect::<BTreeSet<_>>().into_iter().collect();
    assert_eq!(labels, vec!["a".to_string(), "b".to_string()]);
}

#[test]
fn anbn_language() {
    let m = anbn_machine();
    let g = MachineGraph::new(&m, ExternalityPolicy::Configuration);
    let fin = FinalPredicate::pattern("[b*q2b]").unwrap();
    assert!(fin.holds("[bbq2b]") && fin.holds("[q2b]") && !fin.holds("[q2a]") && !fin.holds("x[q2b]"));
    let l4 = language(&g, &g.initial(), &fin, 4, CAP).unwrap();
    assert_eq!(l4, words(&["ab", "aabb", "abab"]));
    assert!(language(&g, &g.initial(), &fin, 1, CAP).unwrap().is_empty());
    let internal = Configuration::parse("[bq1]", &[sym("q1")]).unwrap();
    assert!(matches!(language(&g, &internal, &fin, 2, CAP), Err(TgraphError::NotExternal(_))));
}

#[test]
fn final_predicates_agree() {
    let by_set = FinalPredicate::names(["[q2b]", "[bq2b]"]);
    let by_fn = FinalPredicate::decide(|n| n.contains("q2b"));
    let m = anbn_machine();
    let g = MachineGraph::new(&m, ExternalityPolicy::Configuration);
    let a = language(&g, &g.initial(), &by_set, 6, CAP).unwrap();
    let b = language(&g, &g.initial(), &by_fn, 6, CAP).unwrap();
    assert_eq!(a, words(&["ab", "abab", "aabb", "ababab"]));
    assert!(a.is_subset(&b));
    assert!(b.contains(&Word::parse("aaabbb")));
}

#[test]
fn fragment_language_of_the_chain() {
    let g = epsilon_chain_graph();
    let f = transition_ball(&g, &[g.find("1").unwrap()], 4, CAP).unwrap();
    let l = fragment_language(&f, &FinalPredicate::names(["5"]), 5, CAP).unwrap();
    assert_eq!(l, words(&["ab"]));
}

#[test]
fn product_of_single_edges() {
    let mut g1 = ExplicitGraph::default();
    g1.edge("x", Some("a"), "y");
    let mut g2 = ExplicitGraph::default();
    g2.edge("u", Some("b"), "v");
    let gen = |g: &ExplicitGraph| {
        let g = g.clone();
        move |v: &usize| -> Result<Vec<(Symbol, usize)>, TgraphError> {
            Ok(g.moves(v)?.into_iter().filter_map(|(a, t)| a.map(|a| (a, t))).collect())
        }
    };
    let name = |p: &(usize, usize)| format!("({},{})", g1.name(&p.0), g2.name(&p.1));
    let root = (g1.find("x").unwrap(), g2.find("u").unwrap());
    let c: BTreeSet<(Symbol, Symbol)> = [(sym("a"), sym("b"))].into_iter().collect();
    let p = synchronized_product(gen(&g1), gen(&g2), c);
    let f = reachable_restriction(p, root, 2, CAP, name).unwrap();
    assert_eq!(named_edges(&f), [edge("(x,u)", "(a,b)", "(y,v)")].into_iter().collect());

    let p = synchronized_product(gen(&g1), gen(&g2), BTreeSet::new());
    let f = reachable_restriction(p, root, 2, CAP, name).unwrap();
    assert_eq!((f.len(), f.edge_count()), (1, 0));
}

#[test]
fn product_language_is_the_intersection() {
    let m = anbn_machine();
    let g = MachineGraph::new(&m, ExternalityPolicy::Configuration);
    let fin = FinalPredicate::pattern("[b*q2b]").unwrap();
    let alone = language(&g, &g.initial(), &fin, 8, CAP).unwrap();

    let ident: BTreeSet<(Symbol, Symbol)> = [("a", "a"), ("b", "b")].iter().map(|(x, y)| (sym(x), sym(y))).collect();
    let gen = || |c: &Configuration| closure_edges(&g, c);
    let product = synchronized_product(gen(), gen(), ident);
    let both_final = |p: &(Configuration, Configuration)| fin.holds(&p.0.to_string()) && fin.holds(&p.1.to_string());
    let got = path_language(&[(g.initial(), g.initial())], product, both_final, 8, CAP).unwrap();
    let decoded: BTreeSet<Word> = got
        .into_iter()
        .map(|w| Word::from_symbols(w.iter().map(|s| sym(&s.as_str()[1..2])).collect()))
        .collect();
    assert_eq!(decoded, alone);
}

#[test]
fn restriction_is_the_ball() {
    let m = anbn_machine();
    let g = MachineGraph::new(&m, ExternalityPolicy::Configuration);
    let r = reachable_restriction(|c: &Configuration| closure_edges(&g, c), g.initial(), 4, CAP, |c| c.to_string()).unwrap();
    let t = transition_ball(&g, &[g.initial()], 4, CAP).unwrap();
    assert_eq!(named_edges(&r), named_edges(&t));
    assert_eq!(names(&r), names(&t));

    let lonely = ExplicitGraph { names: vec!["r".into()], edges: vec![] };
    let f = reachable_restriction(
        |v: &usize| -> Result<Vec<(Symbol, usize)>, TgraphError> {
            Ok(lonely.moves(v)?.into_iter().filter_map(|(a, t)| a.map(|a| (a, t))).collect())
        },
        0,
        3,
        CAP,
        |v| lonely.name(v),
    )
    .unwrap();
    assert_eq!((f.len(), f.edge_count()), (1, 0));
}

fn max_label_fanout(f: &lbg_core::GraphFragment) -> usize {
    let mut count: BTreeMap<(usize, Symbol), usize> = BTreeMap::new();
    for (s, a, _) in f.edges() {
        *count.entry((s, a)).or_default() += 1;
    }
    count.values().copied().max().unwrap_or(0)
}

#[test]
fn deterministic_machines_have_deterministic_balls() {
    for m in [anbn_machine(), lbg_machine::prune_determinize(&diamond_machine()).unwrap()] {
        let f = machine_ball(&m, 5, ExternalityPolicy::Configuration, CAP).unwrap();
        assert!(max_label_fanout(&f) <= 1);
    }
}

#[test]
fn machine_language_matches_accepts() {
    let check = |m: &MachineDescription, len: usize| {
        let l = machine_language(m, ExternalityPolicy::Configuration, len, CAP).unwrap();
        for w in Alphabet::new(m.input.iter().copied()).words_up_to(len) {
            assert_eq!(accepts(m, w.symbols()).unwrap(), l.contains(&w), "{}", w);
        }
    };
    check(&anbn_machine(), 8);
    check(&diamond_machine(), 4);
    check(&divergent_diamond_machine(), 4);
}

#[test]
fn tiny_cap_is_reported() {
    let m = anbn_machine();
    let e = machine_ball(&m, 6, ExternalityPolicy::Configuration, 3).unwrap_err();
    assert!(e.is_size_exceeded());
}
