//! The `lbg` command line.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use lbg_analysis::{degree_profile, fit_outdegree_bound, language_tree, Bitree, Fig3, Gadget, Language, LemmaId};
use lbg_core::{isomorphic, parse_dot, sym, to_dot, verify_bijection, Alphabet, GraphFragment, Symbol, Word, DEFAULT_VERTEX_CAP};
use lbg_equivalence::{llbm_to_rewriting_normalized, rewriting_to_transductions, transductions_to_llbm, ConversionReport};
use lbg_machine::corpus::{random_labeled, CorpusParams};
use lbg_machine::{accepts, normalize, prune_determinize, Configuration, MachineDescription};
use lbg_rational::rational_ball;
use lbg_rewriting::cayley_ball;
use lbg_tgraph::{entry_vertices, language_from, transition_ball, ExternalityPolicy, FinalPredicate, MachineGraph};
use lbg_transduction::samples::{fig1_family, random_shift_transduction};
use lbg_transduction::{from_synchronized_over, graph_ball, IncrementalTransduction};

use crate::error::{CliError, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE};
use crate::figures::figures;
use crate::format::{self, parse_word, show_word, Builtin, Document, Family};

#[derive(Parser, Debug)]
#[command(name = "lbg", version, about = "Linearly bounded graphs: machines, rewriting systems and transductions")]
pub struct Cli {
    /// Largest number of vertices any exploration may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_VERTEX_CAP)]
    pub cap: usize,
    /// Seed for generated machines.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Which configurations are vertices of a transition graph.
    #[arg(long, global = true, value_enum, default_value_t = Policy::Config)]
    pub policy: Policy,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Policy {
    /// External iff the state has no silent rule.
    State,
    /// External iff no silent rule applies.
    Config,
}

impl From<Policy> for ExternalityPolicy {
    fn from(p: Policy) -> Self {
        match p {
            Policy::State => ExternalityPolicy::State,
            Policy::Config => ExternalityPolicy::Configuration,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    /// Labeled machine to rewriting system.
    LlbmToRws,
    /// Rewriting system to transductions.
    RwsToTg,
    /// Transductions to labeled machine.
    TgToLlbm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GadgetKind {
    Fig3,
    Bitree,
    LemmaId,
    Tree,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Does the machine accept the word? Prints true or false.
    Accepts { file: PathBuf, word: String },
    /// Words labelling paths from the start vertices to final vertices.
    Language {
        file: PathBuf,
        /// Final vertex pattern; `*`, `+`, `?`, `(`, `)` and `|` are operators.
        #[arg(long = "final")]
        final_pattern: String,
        #[arg(long)]
        maxlen: usize,
        /// Start vertex; defaults to the vertices silently reachable from `[q0]`.
        #[arg(long)]
        root: Option<String>,
    },
    /// Ball of the graph of a machine, rewriting system or family.
    Ball {
        file: PathBuf,
        #[arg(long)]
        root: Option<String>,
        #[arg(long)]
        radius: usize,
        /// Write DOT here instead of standard output.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Longest transducer output followed in rational graphs.
        #[arg(long, default_value_t = 64)]
        output_cap: usize,
    },
    /// Splits states into external and internal ones.
    Normalize {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Drops rules that are not needed for the transition graph.
    Determinize {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Converts and compares balls of source and target.
    Convert {
        #[arg(value_enum)]
        direction: Direction,
        file: PathBuf,
        #[arg(long)]
        root: Option<String>,
        /// Balls of radius 0 to this value are compared.
        #[arg(long, default_value_t = 3)]
        radius: usize,
        /// Write the converted object here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Are two DOT graphs isomorphic?
    Iso { a: PathBuf, b: PathBuf },
    /// Largest in- and out-degrees per distance from the root.
    Degrees {
        file: PathBuf,
        #[arg(long)]
        root: Option<String>,
        #[arg(long)]
        radius: usize,
        #[arg(long, default_value_t = 64)]
        output_cap: usize,
    },
    /// Balls of the gadget graphs.
    Gadget {
        #[arg(value_enum)]
        kind: GadgetKind,
        #[arg(long, default_value_t = 7)]
        radius: usize,
        /// Comma-separated members of the language; empty for ∅.
        #[arg(long, default_value = "")]
        words: String,
        /// In-degree function of lemma-id: n, n2 or 2n.
        #[arg(long, default_value = "n")]
        f: String,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Prints a random labeled machine for `--seed`.
    Corpus,
    /// Prints a document in canonical form.
    Format { file: PathBuf },
    /// Writes the figure DOT files into a directory.
    Figures {
        #[arg(long)]
        out: PathBuf,
    },
}

/// What a command printed and its exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses and runs one command line (the first item is the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome { code: e.code, stdout: String::new(), stderr: format!("error: {}\n", e) },
    }
}

pub fn read_document(path: &Path) -> Result<Document, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::usage(format!("{}: {}", path.display(), e)))?;
    format::parse(&text).map_err(|ds| {
        let lines: Vec<String> = ds.iter().map(|d| format!("{}: {}", path.display(), d)).collect();
        CliError::usage(lines.join("\n"))
    })
}

fn write_or_return(out: Option<&PathBuf>, text: String, summary: String) -> Result<String, CliError> {
    match out {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| CliError::usage(format!("{}: {}", p.display(), e)))?;
            Ok(summary)
        }
        None => Ok(text),
    }
}

fn machine(doc: Document, path: &Path) -> Result<MachineDescription, CliError> {
    match doc {
        Document::Machine(m) => Ok(m),
        other => Err(CliError::usage(format!("{} holds a {} document, not a machine", path.display(), other.kind()))),
    }
}

fn input_alphabet(m: &MachineDescription) -> Alphabet {
    Alphabet::new(m.input.iter().copied())
}

fn start_vertices(g: &MachineGraph<'_>, root: Option<&str>) -> Result<Vec<Configuration>, CliError> {
    match root {
        Some(text) => Ok(vec![g.parse(text)?]),
        None => Ok(entry_vertices(g, &g.initial())?),
    }
}

fn family_alphabet(members: &[(Symbol, lbg_rational::FiniteTransducer)]) -> Alphabet {
    members.iter().flat_map(|(_, t)| t.input_alphabet().into_iter().chain(t.output_alphabet())).collect()
}

fn builtin_family(b: &Builtin) -> Vec<(Symbol, IncrementalTransduction)> {
    match b {
        Builtin::Fig1 => fig1_family(),
        Builtin::RandomShift { seed } => vec![
            (sym("a"), random_shift_transduction(*seed)),
            (sym("b"), random_shift_transduction(seed.wrapping_add(1))),
        ],
    }
}

fn default_root(b: &Builtin) -> Word {
    match b {
        Builtin::Fig1 => Word::parse("#"),
        Builtin::RandomShift { .. } => Word::empty(),
    }
}

/// Transductions described by a family or a rewriting system, with the
/// alphabet of their vertices.
fn transductions(doc: &Document, path: &Path) -> Result<(Vec<(Symbol, IncrementalTransduction)>, Alphabet), CliError> {
    match doc {
        Document::Family(Family::Builtin(b)) => {
            let f = builtin_family(b);
            let alphabet = f.first().map(|(_, t)| t.alphabet.clone()).unwrap_or_default();
            Ok((f, alphabet))
        }
        Document::Family(Family::Rational(members)) => {
            let alphabet = family_alphabet(members);
            let mut out = Vec::new();
            for (a, t) in members {
                out.push((*a, from_synchronized_over(t, alphabet.clone())?));
            }
            Ok((out, alphabet))
        }
        Document::Rewriting(r) => Ok((rewriting_to_transductions(r), r.alphabet.clone())),
        other => Err(CliError::usage(format!("{} holds a {} document, not a family", path.display(), other.kind()))),
    }
}

/// The ball of whatever graph the document describes.
fn explore(
    cli: &Cli,
    doc: &Document,
    path: &Path,
    root: Option<&str>,
    radius: usize,
    output_cap: usize,
) -> Result<GraphFragment, CliError> {
    match doc {
        Document::Machine(m) => {
            let g = MachineGraph::new(m, cli.policy.into());
            let roots = match root {
                Some(text) => vec![g.parse(text)?],
                None => vec![g.initial()],
            };
            Ok(transition_ball(&g, &roots, radius, cli.cap)?)
        }
        Document::Rewriting(r) => {
            let root = parse_word(root.unwrap_or(""), &r.alphabet);
            Ok(cayley_ball(r, &root, radius, cli.cap)?)
        }
        Document::Family(Family::Rational(members)) => {
            let root = parse_word(root.unwrap_or(""), &family_alphabet(members));
            Ok(rational_ball(members, &root, radius, output_cap, cli.cap)?)
        }
        Document::Family(Family::Builtin(b)) => {
            let family = builtin_family(b);
            let alphabet = family[0].1.alphabet.clone();
            let root = root.map_or_else(|| default_root(b), |t| parse_word(t, &alphabet));
            Ok(graph_ball(&family, &root, radius, cli.cap)?)
        }
        Document::Transducer(_) => Err(CliError::usage(format!(
            "{} holds a single transducer; wrap it in a family with a `member:` label",
            path.display()
        ))),
    }
}

fn root_name(f: &GraphFragment) -> Result<String, CliError> {
    match f.roots().iter().next() {
        Some(&v) => Ok(f.label_of(v)),
        None => Err(CliError::usage("the ball has no root")),
    }
}

fn gadget_language(words: &str) -> Language {
    let set: BTreeSet<Word> = words.split(',').map(str::trim).filter(|w| !w.is_empty()).map(Word::parse).collect();
    Arc::new(move |u: &Word| set.contains(u))
}

fn lemma_function(name: &str) -> Result<fn(usize) -> usize, CliError> {
    match name {
        "n" => Ok(|n| n),
        "n2" => Ok(|n| n * n),
        "2n" => Ok(|n| 1usize.checked_shl(n as u32).unwrap_or(usize::MAX)),
        other => Err(CliError::usage(format!("unknown function `{}` (n, n2, 2n)", other))),
    }
}

fn report_outcome(report: &ConversionReport) -> (i32, String) {
    let code = if report.success() { EXIT_OK } else { EXIT_NEGATIVE };
    (code, format!("{}\n", report))
}

fn convert(cli: &Cli, direction: Direction, path: &Path, root: Option<&str>, radius: usize, out: Option<&PathBuf>) -> Result<(i32, String), CliError> {
    let doc = read_document(path)?;
    let radii: Vec<usize> = (0..=radius).collect();
    let cap = cli.cap;
    match direction {
        Direction::LlbmToRws => {
            let m = machine(doc, path)?;
            let r = llbm_to_rewriting_normalized(&m)?;
            let g = MachineGraph::new(&r.machine, cli.policy.into());
            let roots = start_vertices(&g, root)?;
            let report = ConversionReport::compare(
                "normalized machine",
                "rewriting system",
                &radii,
                cap,
                |n| Ok(transition_ball(&g, &roots, n, cap)?),
                |n| r.cayley_ball(n, cap),
            )?;
            if let Some(p) = out {
                write_or_return(Some(p), format::serialize(&Document::Rewriting(r.system.clone())), String::new())?;
            }
            Ok(report_outcome(&report))
        }
        Direction::RwsToTg => {
            let Document::Rewriting(r) = doc else {
                return Err(CliError::usage(format!("{} holds a {} document, not a rewriting system", path.display(), doc.kind())));
            };
            let family = rewriting_to_transductions(&r);
            let root = parse_word(root.unwrap_or(""), &r.alphabet);
            let report = ConversionReport::compare(
                "rewriting system",
                "transductions",
                &radii,
                cap,
                |n| Ok(cayley_ball(&r, &root, n, cap)?),
                |n| Ok(graph_ball(&family, &root, n, cap)?),
            )?;
            Ok(report_outcome(&report))
        }
        Direction::TgToLlbm => {
            let (family, alphabet) = transductions(&doc, path)?;
            let default = match &doc {
                Document::Family(Family::Builtin(b)) => default_root(b),
                _ => Word::empty(),
            };
            let root = root.map_or(default, |t| parse_word(t, &alphabet));
            let m = transductions_to_llbm(&family)?;
            let report = ConversionReport::compare(
                "transductions",
                "labeled machine",
                &radii,
                cap,
                |n| Ok(graph_ball(&family, &root, n, cap)?),
                |n| m.transition_ball(&root, n, cap),
            )?;
            if let Some(p) = out {
                write_or_return(Some(p), format::serialize(&Document::Machine(m.machine.clone())), String::new())?;
            }
            Ok(report_outcome(&report))
        }
    }
}

/// Runs a parsed command; returns the exit status and standard output.
pub fn execute(cli: &Cli) -> Result<(i32, String), CliError> {
    match &cli.command {
        Command::Accepts { file, word } => {
            let m = machine(read_document(file)?, file)?;
            let w = parse_word(word, &input_alphabet(&m));
            let yes = accepts(&m, w.symbols())?;
            Ok((if yes { EXIT_OK } else { EXIT_NEGATIVE }, format!("{}\n", yes)))
        }
        Command::Language { file, final_pattern, maxlen, root } => {
            let m = machine(read_document(file)?, file)?;
            let g = MachineGraph::new(&m, cli.policy.into());
            let roots = start_vertices(&g, root.as_deref())?;
            let pred = FinalPredicate::pattern(final_pattern)?;
            let words = language_from(&g, &roots, &pred, *maxlen, cli.cap)?;
            let sigma = input_alphabet(&m);
            let mut out = String::new();
            for w in &words {
                let _ = writeln!(out, "{}", show_word(w, &sigma));
            }
            Ok((EXIT_OK, out))
        }
        Command::Ball { file, root, radius, dot, output_cap } => {
            let doc = read_document(file)?;
            let f = explore(cli, &doc, file, root.as_deref(), *radius, *output_cap)?;
            let summary = format!("{} vertices, {} edges\n", f.len(), f.edge_count());
            Ok((EXIT_OK, write_or_return(dot.as_ref(), to_dot(&f), summary)?))
        }
        Command::Normalize { file, out } => {
            let m = normalize(&machine(read_document(file)?, file)?)?;
            let text = format::serialize(&Document::Machine(m));
            Ok((EXIT_OK, write_or_return(out.as_ref(), text, String::new())?))
        }
        Command::Determinize { file, out } => {
            let m = prune_determinize(&machine(read_document(file)?, file)?)?;
            let text = format::serialize(&Document::Machine(m));
            Ok((EXIT_OK, write_or_return(out.as_ref(), text, String::new())?))
        }
        Command::Convert { direction, file, root, radius, out } => {
            convert(cli, *direction, file, root.as_deref(), *radius, out.as_ref())
        }
        Command::Iso { a, b } => {
            let read = |p: &PathBuf| -> Result<GraphFragment, CliError> {
                let text = std::fs::read_to_string(p).map_err(|e| CliError::usage(format!("{}: {}", p.display(), e)))?;
                parse_dot(&text).map_err(|e| CliError::usage(format!("{}: {}", p.display(), e)))
            };
            let (f1, f2) = (read(a)?, read(b)?);
            match isomorphic(&f1, &f2, cli.cap)? {
                Some(w) if verify_bijection(&f1, &f2, &w) => Ok((EXIT_OK, "isomorphic\n".into())),
                _ => Ok((EXIT_NEGATIVE, "not isomorphic\n".into())),
            }
        }
        Command::Degrees { file, root, radius, output_cap } => {
            let doc = read_document(file)?;
            let f = explore(cli, &doc, file, root.as_deref(), *radius, *output_cap)?;
            let p = degree_profile(&f, &root_name(&f)?)?;
            let mut out = String::new();
            for d in 0..p.out_degree.len() {
                let flag = if p.unreliable[d] { " (frontier)" } else { "" };
                let _ = writeln!(out, "distance {}: out {}, in {}{}", d, p.out_degree[d], p.in_degree[d], flag);
            }
            match fit_outdegree_bound(&p, 1 << 16, false).c {
                Some(c) => {
                    let _ = writeln!(out, "bound: out-degree at distance n is at most {}^n", c);
                }
                None => out.push_str("bound: none found\n"),
            }
            Ok((EXIT_OK, out))
        }
        Command::Gadget { kind, radius, words, f, dot } => {
            let frag = match kind {
                GadgetKind::Fig3 => Fig3 { language: gadget_language(words) }.ball(*radius, cli.cap)?,
                GadgetKind::Bitree => Bitree { language: gadget_language(words) }.ball(*radius, cli.cap)?,
                GadgetKind::LemmaId => LemmaId::with_in_degree(lemma_function(f)?).ball(*radius, cli.cap)?,
                GadgetKind::Tree => {
                    let language = gadget_language(words);
                    language_tree(&Alphabet::parse("a b"), |w| language(w), *radius, cli.cap)?
                }
            };
            let summary = format!("{} vertices, {} edges\n", frag.len(), frag.edge_count());
            Ok((EXIT_OK, write_or_return(dot.as_ref(), to_dot(&frag), summary)?))
        }
        Command::Corpus => {
            let m = random_labeled(cli.seed, CorpusParams::default());
            Ok((EXIT_OK, format::serialize(&Document::Machine(m))))
        }
        Command::Format { file } => Ok((EXIT_OK, format::serialize(&read_document(file)?))),
        Command::Figures { out } => {
            std::fs::create_dir_all(out).map_err(|e| CliError::usage(format!("{}: {}", out.display(), e)))?;
            let mut listing = String::new();
            for fig in figures(cli.cap)? {
                let p = out.join(fig.file);
                std::fs::write(&p, fig.dot()).map_err(|e| CliError::usage(format!("{}: {}", p.display(), e)))?;
                let _ = writeln!(listing, "{}", p.display());
            }
            Ok((EXIT_OK, listing))
        }
    }
}
