use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use lbg_cli::figures::figures;
use lbg_cli::{parse, run, serialize, Document, EXIT_CAP, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE};
use lbg_core::{isomorphic, parse_dot, to_dot, Word, DEFAULT_VERTEX_CAP};
use lbg_machine::corpus::{random_labeled, CorpusParams};
use lbg_machine::samples::anbn_machine;
use lbg_machine::{is_deterministic, is_normalized};
use lbg_rewriting::cayley_ball;
use lbg_rewriting::samples::counter_system;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn lbg(args: &[&str]) -> lbg_cli::Outcome {
    let mut all = vec!["lbg"];
    all.extend_from_slice(args);
    run(all)
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn golden_files_regenerate_identically() {
    for fig in figures(DEFAULT_VERTEX_CAP).unwrap() {
        let stored = fs::read_to_string(golden(fig.file)).unwrap();
        assert_eq!(fig.dot(), stored, "{} differs", fig.file);
    }
}

#[test]
fn golden_files_parse_back() {
    for fig in figures(DEFAULT_VERTEX_CAP).unwrap() {
        let stored = fs::read_to_string(golden(fig.file)).unwrap();
        let g = parse_dot(&stored).unwrap();
        assert_eq!(to_dot(&g), stored, "{} does not round-trip", fig.file);
    }
}

#[test]
fn canonical_files_round_trip() {
    for name in ["m1.lbm", "counter.rws", "doubling.family", "fig1.family"] {
        let text = fs::read_to_string(data(name)).unwrap();
        let doc = parse(&text).unwrap();
        assert_eq!(serialize(&doc), text, "{} is not canonical", name);
    }
}

#[test]
fn table_file_is_the_sample_machine() {
    let text = fs::read_to_string(data("m1_table.lbm")).unwrap();
    assert_eq!(parse(&text).unwrap(), Document::Machine(anbn_machine()));
    let canonical = fs::read_to_string(data("m1.lbm")).unwrap();
    assert_eq!(lbg(&["format", path(&data("m1_table.lbm"))]).stdout, canonical);
}

#[test]
fn counter_file_has_the_sample_graph() {
    let text = fs::read_to_string(data("counter.rws")).unwrap();
    let Document::Rewriting(sys) = parse(&text).unwrap() else { panic!("not a rewriting system") };
    let a = cayley_ball(&sys, &Word::empty(), 4, DEFAULT_VERTEX_CAP).unwrap();
    let b = cayley_ball(&counter_system(), &Word::empty(), 4, DEFAULT_VERTEX_CAP).unwrap();
    assert_eq!(to_dot(&a), to_dot(&b));
}

#[test]
fn undeclared_state_is_reported_at_its_line() {
    let text = "kind: lbm\ntape: a\nstates: q0\ninitial: q0\nfinal: q0\n\nrule: q0 a -> q9 a +\n";
    let errs = parse(text).unwrap_err();
    assert!(errs.iter().any(|d| d.line == Some(7) && d.message.contains("q9")), "{:?}", errs);
}

#[test]
fn malformed_documents_are_rejected() {
    let cases = [
        ("kind: lbm\ncolour: red\nstates: q0\ninitial: q0\n", 2),
        ("kind: lbm\nstates: q0\nstates: q1\ninitial: q0\n", 3),
        ("kind: lbm\nstates: q0\ninitial: q0\nrule: q0 a => q0\n", 4),
        ("kind: pda\n", 1),
        ("kind: rws\nalphabet: a b\nrule: a -> c\n", 3),
        ("kind: fst\nstates: s\ninitial: s\ntrans: s a/b\n", 4),
    ];
    for (text, line) in cases {
        let errs = parse(text).unwrap_err();
        assert!(errs.iter().any(|d| d.line == Some(line)), "{:?} for {:?}", errs, text);
    }
    assert!(parse("").is_err());
    assert!(parse("states: q0\n").is_err());
}

#[test]
fn diagnostics_name_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.lbm");
    fs::write(&bad, "kind: lbm\nstates: q0\ninitial: q1\n").unwrap();
    let out = lbg(&["format", path(&bad)]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("bad.lbm") && out.stderr.contains("line 3"), "{}", out.stderr);
}

#[test]
fn accepts_reports_through_exit_code() {
    let m1 = data("m1.lbm");
    let yes = lbg(&["accepts", path(&m1), "aabb"]);
    assert_eq!((yes.code, yes.stdout.as_str()), (EXIT_OK, "true\n"));
    let no = lbg(&["accepts", path(&m1), "aab"]);
    assert_eq!((no.code, no.stdout.as_str()), (EXIT_NEGATIVE, "false\n"));
    assert_eq!(lbg(&["accepts", path(&m1), "abc"]).code, EXIT_USAGE);
}

#[test]
fn language_lists_words_up_to_the_bound() {
    let m1 = data("m1.lbm");
    let short = lbg(&["language", path(&m1), "--final", "[b*q2b]", "--maxlen", "1"]);
    assert_eq!((short.code, short.stdout.as_str()), (EXIT_OK, ""));
    let out = lbg(&["language", path(&m1), "--final", "[b*q2b]", "--maxlen", "6"]);
    let mut words: Vec<&str> = out.stdout.lines().collect();
    words.sort();
    let mut expected = vec!["ab", "aabb", "abab", "aaabbb", "ababab"];
    expected.sort();
    assert_eq!(words, expected);
}

#[test]
fn ball_output_is_isomorphic_to_golden() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.dot");
    let ball = lbg(&["ball", path(&data("m1.lbm")), "--root", "[q0]", "--radius", "3", "--dot", path(&out)]);
    assert_eq!(ball.code, EXIT_OK, "{}", ball.stderr);
    let iso = lbg(&["iso", path(&out), path(&golden("anbn_r3.dot"))]);
    assert_eq!((iso.code, iso.stdout.as_str()), (EXIT_OK, "isomorphic\n"));
    let other = lbg(&["iso", path(&out), path(&golden("diamond_r3.dot"))]);
    assert_eq!((other.code, other.stdout.as_str()), (EXIT_NEGATIVE, "not isomorphic\n"));
}

#[test]
fn ball_of_each_document_kind() {
    let counter = lbg(&["ball", path(&data("counter.rws")), "--radius", "4"]);
    assert_eq!(counter.stdout, fs::read_to_string(golden("counter_r4.dot")).unwrap());
    let doubling = lbg(&["ball", path(&data("doubling.family")), "--root", "A", "--radius", "2"]);
    assert_eq!(doubling.stdout, fs::read_to_string(golden("doubling_r2.dot")).unwrap());
    let fig1 = lbg(&["ball", path(&data("fig1.family")), "--radius", "3"]);
    let a = parse_dot(&fig1.stdout).unwrap();
    let b = parse_dot(&fs::read_to_string(golden("anbn_r3.dot")).unwrap()).unwrap();
    assert!(isomorphic(&a, &b, DEFAULT_VERTEX_CAP).unwrap().is_some());
}

#[test]
fn cap_overflow_exits_with_three() {
    let out = lbg(&["--cap", "2", "ball", path(&data("m1.lbm")), "--radius", "5"]);
    assert_eq!(out.code, EXIT_CAP, "{}", out.stderr);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(lbg(&["ball"]).code, EXIT_USAGE);
    assert_eq!(lbg(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(lbg(&["accepts", "/no/such/file.lbm", "ab"]).code, EXIT_USAGE);
    assert_eq!(lbg(&["--help"]).code, EXIT_OK);
}

#[test]
fn normalize_and_determinize_write_valid_machines() {
    let dir = tempfile::tempdir().unwrap();
    let norm = dir.path().join("norm.lbm");
    let out = lbg(&["normalize", path(&data("m1.lbm")), "--out", path(&norm)]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let Document::Machine(m) = parse(&fs::read_to_string(&norm).unwrap()).unwrap() else { panic!() };
    assert!(is_normalized(&m));

    let diamond = dir.path().join("diamond.lbm");
    let text = serialize(&Document::Machine(lbg_machine::samples::diamond_machine()));
    fs::write(&diamond, text).unwrap();
    let det = lbg(&["determinize", path(&diamond)]);
    assert_eq!(det.code, EXIT_OK, "{}", det.stderr);
    let Document::Machine(d) = parse(&det.stdout).unwrap() else { panic!() };
    assert!(is_deterministic(&d));
}

#[test]
fn conversions_report_equivalence() {
    let dir = tempfile::tempdir().unwrap();
    let rws = dir.path().join("m1.rws");
    let forward = lbg(&["convert", "llbm-to-rws", path(&data("m1.lbm")), "--out", path(&rws)]);
    assert_eq!(forward.code, EXIT_OK, "{}{}", forward.stdout, forward.stderr);
    let back = lbg(&["convert", "tg-to-llbm", path(&rws), "--root", "[ ]@q0", "--radius", "3"]);
    assert_eq!(back.code, EXIT_OK, "{}{}", back.stdout, back.stderr);
    let counter = lbg(&["convert", "rws-to-tg", path(&data("counter.rws"))]);
    assert_eq!(counter.code, EXIT_OK, "{}{}", counter.stdout, counter.stderr);
    let fig1 = lbg(&["convert", "tg-to-llbm", path(&data("fig1.family"))]);
    assert_eq!(fig1.code, EXIT_OK, "{}{}", fig1.stdout, fig1.stderr);
}

#[test]
fn non_acceptor_family_cannot_become_a_machine() {
    let out = lbg(&["convert", "tg-to-llbm", path(&data("doubling.family"))]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(!out.stderr.is_empty());
}

#[test]
fn degrees_print_profile_and_bound() {
    let out = lbg(&["degrees", path(&data("doubling.family")), "--root", "A", "--radius", "2"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.contains("distance 0: out 4"), "{}", out.stdout);
    assert!(out.stdout.contains("distance 1: out 16"), "{}", out.stdout);
    assert!(out.stdout.contains("at most 16^n"), "{}", out.stdout);
}

#[test]
fn gadgets_run() {
    let fig3 = lbg(&["gadget", "fig3", "--words", "bb", "--radius", "7"]);
    assert_eq!(fig3.code, EXIT_OK, "{}", fig3.stderr);
    assert!(fig3.stdout.contains("bb"));
    for kind in ["bitree", "lemma-id", "tree"] {
        let out = lbg(&["gadget", kind, "--radius", "4"]);
        assert_eq!(out.code, EXIT_OK, "{}: {}", kind, out.stderr);
    }
}

#[test]
fn corpus_matches_the_generator() {
    let out = lbg(&["--seed", "3", "corpus"]);
    assert_eq!(out.code, EXIT_OK);
    let doc = parse(&out.stdout).unwrap();
    assert_eq!(doc, Document::Machine(random_labeled(3, CorpusParams::default())));
}

#[test]
fn binary_is_deterministic() {
    let exe = env!("CARGO_BIN_EXE_lbg");
    let m1 = data("m1.lbm");
    let args = ["ball", path(&m1), "--radius", "4"];
    let first = Command::new(exe).args(args).output().unwrap();
    let second = Command::new(exe).args(args).output().unwrap();
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let no = Command::new(exe).args(["accepts", path(&m1), "ba"]).output().unwrap();
    assert_eq!(no.status.code(), Some(EXIT_NEGATIVE));
}

#[test]
fn figures_command_writes_every_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = lbg(&["figures", "--out", path(dir.path())]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    for fig in figures(DEFAULT_VERTEX_CAP).unwrap() {
        let written = fs::read_to_string(dir.path().join(fig.file)).unwrap();
        assert_eq!(written, fs::read_to_string(golden(fig.file)).unwrap());
    }
}
