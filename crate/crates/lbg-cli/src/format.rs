//! Line-oriented documents. Every file starts with a `kind:` header and
//! continues with `key: value` lines; `;` starts a comment.
//!
//! ```text
//! kind: llbm
//! tape: a b
//! input: a b
//! states: q0 q1 q2 q3
//! initial: q0
//! final: q2
//! rule: q0 ] -a-> q0 a ]
//! ```

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use lbg_core::{sym, Alphabet, Symbol, Word};
use lbg_machine::{Dir, Flavor, MachineDescription, Rule, Shape};
use lbg_rational::{FiniteTransducer, Transition};
use lbg_rewriting::{RewriteRule, RewritingSystem};

/// A problem found while reading a document; `line` is 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: Option<usize>,
    pub message: String,
}

impl Diagnostic {
    fn at(line: usize, message: impl Into<String>) -> Diagnostic {
        Diagnostic { line: Some(line), message: message.into() }
    }

    fn file(message: impl Into<String>) -> Diagnostic {
        Diagnostic { line: None, message: message.into() }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(n) => write!(f, "line {}: {}", n, self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

/// Built-in transduction families with acceptor-backed members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Builtin {
    /// The pair whose graph from `#` is the `aⁿbⁿ` transition graph.
    Fig1,
    /// Labels `a` and `b` with random shift transductions from `seed` and
    /// `seed + 1`.
    RandomShift { seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// A rational graph: one transducer per member, labels may repeat.
    Rational(Vec<(Symbol, FiniteTransducer)>),
    Builtin(Builtin),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Machine(MachineDescription),
    Rewriting(RewritingSystem),
    Transducer(FiniteTransducer),
    Family(Family),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Machine(m) if m.is_labeled() => "llbm",
            Document::Machine(_) => "lbm",
            Document::Rewriting(_) => "rws",
            Document::Transducer(_) => "fst",
            Document::Family(_) => "family",
        }
    }
}

struct Entry<'a> {
    line: usize,
    key: &'a str,
    value: &'a str,
}

fn entries(text: &str) -> Result<Vec<Entry<'_>>, Vec<Diagnostic>> {
    let mut out = Vec::new();
    let mut errors = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split(';').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match line.split_once(':') {
            Some((key, value)) => out.push(Entry { line: i + 1, key: key.trim(), value: value.trim() }),
            None => errors.push(Diagnostic::at(i + 1, format!("expected `key: value`, found `{}`", line))),
        }
    }
    if errors.is_empty() {
        Ok(out)
    } else {
        Err(errors)
    }
}

fn symbols(value: &str) -> Vec<Symbol> {
    value.split_whitespace().map(sym).collect()
}

fn list(xs: impl IntoIterator<Item = Symbol>) -> String {
    xs.into_iter().map(|s| s.as_str()).collect::<Vec<_>>().join(" ")
}

fn header(key: &str, value: &str) -> String {
    if value.is_empty() {
        format!("{}:\n", key)
    } else {
        format!("{}: {}\n", key, value)
    }
}

/// Reads a word over `alphabet`: `ε` or nothing is the empty word, tokens
/// are whitespace separated, and a token that is not a symbol is read one
/// character per symbol.
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Word {
    let t = text.trim();
    if t.is_empty() || t == "ε" {
        return Word::empty();
    }
    let mut out = Vec::new();
    for token in t.split_whitespace() {
        if alphabet.contains(&sym(token)) {
            out.push(sym(token));
        } else {
            out.extend(token.chars().map(|c| sym(c.encode_utf8(&mut [0u8; 4]))));
        }
    }
    Word::from_symbols(out)
}

/// Inverse of [`parse_word`]: symbols are spaced whenever the alphabet has
/// a multi-character symbol.
pub fn show_word(w: &Word, alphabet: &Alphabet) -> String {
    if w.is_empty() {
        return "ε".to_string();
    }
    let sep = if alphabet.iter().all(|s| s.is_char()) { "" } else { " " };
    w.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(sep)
}

/// Header values seen once each; repeated keys are diagnosed.
struct Headers<'a> {
    seen: Vec<(&'a str, usize, &'a str)>,
}

impl<'a> Headers<'a> {
    fn new() -> Self {
        Headers { seen: Vec::new() }
    }

    fn set(&mut self, e: &Entry<'a>, errors: &mut Vec<Diagnostic>) {
        if let Some((_, first, _)) = self.seen.iter().find(|(k, _, _)| *k == e.key) {
            errors.push(Diagnostic::at(e.line, format!("`{}` already given at line {}", e.key, first)));
        } else {
            self.seen.push((e.key, e.line, e.value));
        }
    }

    fn get(&self, key: &str) -> Option<(usize, &'a str)> {
        self.seen.iter().find(|(k, _, _)| *k == key).map(|&(_, l, v)| (l, v))
    }

    fn line(&self, key: &str) -> Option<usize> {
        self.get(key).map(|(l, _)| l)
    }
}

pub fn parse(text: &str) -> Result<Document, Vec<Diagnostic>> {
    let es = entries(text)?;
    let Some(first) = es.first() else {
        return Err(vec![Diagnostic::file("empty document: expected a `kind:` header")]);
    };
    if first.key != "kind" {
        return Err(vec![Diagnostic::at(first.line, "the first header must be `kind:`")]);
    }
    let rest = &es[1..];
    match first.value {
        "llbm" => parse_machine(Flavor::Labeled, first.line, rest).map(Document::Machine),
        "lbm" => parse_machine(Flavor::Unlabeled, first.line, rest).map(Document::Machine),
        "rws" => parse_rewriting(first.line, rest).map(Document::Rewriting),
        "fst" => parse_transducer(first.line, rest).map(Document::Transducer),
        "family" => parse_family(first.line, rest).map(Document::Family),
        other => Err(vec![Diagnostic::at(
            first.line,
            format!("unknown kind `{}` (expected llbm, lbm, rws, fst or family)", other),
        )]),
    }
}

pub fn serialize(doc: &Document) -> String {
    match doc {
        Document::Machine(m) => serialize_machine(m),
        Document::Rewriting(r) => serialize_rewriting(r),
        Document::Transducer(t) => format!("kind: fst\n{}", transducer_body(t)),
        Document::Family(f) => serialize_family(f),
    }
}

fn unknown(e: &Entry<'_>, kind: &str) -> Diagnostic {
    Diagnostic::at(e.line, format!("unknown key `{}` in a {} document", e.key, kind))
}

/// Parses rule table notation: `q0 ] -a-> q0 a ]`, `q1 b -> q1 b -`,
/// `p a -> q b` (stay) or `p a -> q` (delete).
pub fn parse_rule(text: &str) -> Result<Rule, String> {
    let t: Vec<&str> = text.split_whitespace().collect();
    if t.len() < 4 {
        return Err(format!("rule `{}` is too short", text));
    }
    let (from, read, arrow, to) = (t[0], sym(t[1]), t[2], t[3]);
    let label = if arrow == "->" {
        None
    } else if arrow.len() > 3 && arrow.starts_with('-') && arrow.ends_with("->") {
        Some(&arrow[1..arrow.len() - 2])
    } else {
        return Err(format!("expected `->` or `-a->`, found `{}`", arrow));
    };
    let shape = match &t[4..] {
        [] => Shape::Delete { read },
        [w] => Shape::Stay { read, write: sym(w) },
        [w, "+"] => Shape::Move { read, write: sym(w), dir: Dir::Right },
        [w, "-"] => Shape::Move { read, write: sym(w), dir: Dir::Left },
        [w, r] if sym(r) == read => Shape::Insert { read, write: sym(w) },
        [_, r] => return Err(format!("`{}` is neither a direction (+, -) nor the read symbol {}", r, read)),
        _ => return Err(format!("too many fields in rule `{}`", text)),
    };
    Ok(Rule::new(from, label, shape, to))
}

fn parse_machine(flavor: Flavor, kind_line: usize, es: &[Entry<'_>]) -> Result<MachineDescription, Vec<Diagnostic>> {
    let mut errors = Vec::new();
    let mut h = Headers::new();
    let mut rules: Vec<(usize, Rule)> = Vec::new();
    for e in es {
        match e.key {
            "tape" | "input" | "states" | "initial" | "final" => h.set(e, &mut errors),
            "rule" => match parse_rule(e.value) {
                Ok(r) => rules.push((e.line, r)),
                Err(msg) => errors.push(Diagnostic::at(e.line, msg)),
            },
            _ => errors.push(unknown(e, "machine")),
        }
    }
    let value = |k: &str| h.get(k).map(|(_, v)| v).unwrap_or("");
    for k in ["states", "initial"] {
        if h.get(k).is_none() {
            errors.push(Diagnostic::at(kind_line, format!("missing `{}:` header", k)));
        }
    }
    let initial: Vec<Symbol> = symbols(value("initial"));
    if h.get("initial").is_some() && initial.len() != 1 {
        errors.push(Diagnostic::at(h.line("initial").unwrap_or(kind_line), "`initial:` takes exactly one state"));
    }
    if !errors.is_empty() {
        return Err(errors);
    }
    let mut m = MachineDescription {
        flavor,
        tape: symbols(value("tape")).into_iter().collect(),
        input: symbols(value("input")).into_iter().collect(),
        states: symbols(value("states")).into_iter().collect(),
        initial: initial[0],
        finals: symbols(value("final")).into_iter().collect(),
        rules: BTreeSet::new(),
    };
    let mut lines: HashMap<String, usize> = HashMap::new();
    for (line, r) in rules {
        if m.rules.insert(r) {
            lines.insert(r.to_string(), line);
        } else {
            errors.push(Diagnostic::at(line, format!("duplicate rule `{}`", r)));
        }
    }
    for p in m.validate() {
        let rule_line = p
            .strip_prefix("rule `")
            .and_then(|rest| rest.split_once("`: "))
            .and_then(|(text, _)| lines.get(text).copied());
        let key = if p.starts_with("initial") {
            "initial"
        } else if p.starts_with("final") {
            "final"
        } else if p.starts_with("input") {
            "input"
        } else {
            "tape"
        };
        let line = rule_line.or_else(|| h.line(key)).unwrap_or(kind_line);
        errors.push(Diagnostic::at(line, p));
    }
    if errors.is_empty() {
        Ok(m)
    } else {
        Err(errors)
    }
}

fn serialize_machine(m: &MachineDescription) -> String {
    let mut out = header("kind", if m.is_labeled() { "llbm" } else { "lbm" });
    out += &header("tape", &list(m.tape.iter().copied()));
    out += &header("input", &list(m.input.iter().copied()));
    out += &header("states", &list(m.states.iter().copied()));
    out += &header("initial", m.initial.as_str());
    out += &header("final", &list(m.finals.iter().copied()));
    for r in &m.rules {
        out += &header("rule", &r.to_string());
    }
    out
}

fn parse_rewriting(kind_line: usize, es: &[Entry<'_>]) -> Result<RewritingSystem, Vec<Diagnostic>> {
    let mut errors = Vec::new();
    let mut h = Headers::new();
    let mut texts: Vec<(usize, &str)> = Vec::new();
    for e in es {
        match e.key {
            "alphabet" | "labels" => h.set(e, &mut errors),
            "rule" => texts.push((e.line, e.value)),
            _ => errors.push(unknown(e, "rewriting")),
        }
    }
    if h.get("alphabet").is_none() {
        errors.push(Diagnostic::at(kind_line, "missing `alphabet:` header"));
    }
    if !errors.is_empty() {
        return Err(errors);
    }
    let alphabet = Alphabet::new(symbols(h.get("alphabet").map(|(_, v)| v).unwrap_or("")));
    let labels = Alphabet::new(symbols(h.get("labels").map(|(_, v)| v).unwrap_or("")));
    if let Err(e) = RewritingSystem::new(alphabet.clone(), labels.clone(), Vec::new()) {
        errors.push(Diagnostic::at(h.line("labels").unwrap_or(kind_line), e.to_string()));
    }
    let mut rules = Vec::new();
    for (line, text) in texts {
        let Some((l, r)) = text.split_once("->") else {
            errors.push(Diagnostic::at(line, format!("expected `lhs -> rhs`, found `{}`", text)));
            continue;
        };
        let rule = RewriteRule::new(parse_word(l, &alphabet), parse_word(r, &alphabet));
        match RewritingSystem::new(alphabet.clone(), labels.clone(), vec![rule.clone()]) {
            Ok(_) if rules.contains(&rule) => errors.push(Diagnostic::at(line, format!("duplicate rule `{}`", text))),
            Ok(_) => rules.push(rule),
            Err(e) => errors.push(Diagnostic::at(line, e.to_string())),
        }
    }
    if !errors.is_empty() {
        return Err(errors);
    }
    RewritingSystem::new(alphabet, labels, rules).map_err(|e| vec![Diagnostic::file(e.to_string())])
}

fn serialize_rewriting(r: &RewritingSystem) -> String {
    let mut out = header("kind", "rws");
    out += &header("alphabet", &list(r.alphabet.iter()));
    out += &header("labels", &list(r.labels.iter()));
    for x in &r.rules {
        out += &format!("rule: {} -> {}\n", show_word(&x.lhs, &r.alphabet), show_word(&x.rhs, &r.alphabet));
    }
    out
}

fn side(text: &str) -> Option<Symbol> {
    (text != "ε").then(|| sym(text))
}

fn parse_transition(text: &str) -> Result<Transition, String> {
    let t: Vec<&str> = text.split_whitespace().collect();
    let [from, pair, to] = t[..] else {
        return Err(format!("expected `from in/out to`, found `{}`", text));
    };
    let Some((i, o)) = pair.split_once('/') else {
        return Err(format!("expected `in/out`, found `{}`", pair));
    };
    if i.is_empty() || o.is_empty() {
        return Err(format!("write ε for an empty side in `{}`", pair));
    }
    Ok(Transition { from: sym(from), input: side(i), output: side(o), to: sym(to) })
}

/// Reads `states`, `initial`, `final` and `trans` entries into a
/// transducer; `start` is the line diagnostics about missing headers use.
fn transducer_from(start: usize, es: &[Entry<'_>], errors: &mut Vec<Diagnostic>) -> Option<FiniteTransducer> {
    let mut h = Headers::new();
    let mut trans: Vec<(usize, Transition)> = Vec::new();
    let before = errors.len();
    for e in es {
        match e.key {
            "states" | "initial" | "final" => h.set(e, errors),
            "trans" => match parse_transition(e.value) {
                Ok(t) => trans.push((e.line, t)),
                Err(msg) => errors.push(Diagnostic::at(e.line, msg)),
            },
            _ => errors.push(unknown(e, "transducer")),
        }
    }
    for k in ["states", "initial"] {
        if h.get(k).is_none() {
            errors.push(Diagnostic::at(start, format!("missing `{}:` header", k)));
        }
    }
    if errors.len() > before {
        return None;
    }
    let states: BTreeSet<Symbol> = symbols(h.get("states").map(|(_, v)| v).unwrap_or("")).into_iter().collect();
    let initial = symbols(h.get("initial").map(|(_, v)| v).unwrap_or(""));
    let finals: BTreeSet<Symbol> = symbols(h.get("final").map(|(_, v)| v).unwrap_or("")).into_iter().collect();
    let initial_line = h.line("initial").unwrap_or(start);
    if initial.len() != 1 {
        errors.push(Diagnostic::at(initial_line, "`initial:` takes exactly one state"));
        return None;
    }
    if !states.contains(&initial[0]) {
        errors.push(Diagnostic::at(initial_line, format!("initial state {} is not declared", initial[0])));
    }
    for f in finals.iter().filter(|f| !states.contains(f)) {
        errors.push(Diagnostic::at(h.line("final").unwrap_or(start), format!("final state {} is not declared", f)));
    }
    let mut t = FiniteTransducer { states: states.clone(), initial: initial[0], finals, transitions: BTreeSet::new() };
    for (line, x) in trans {
        for q in [x.from, x.to] {
            if !states.contains(&q) {
                errors.push(Diagnostic::at(line, format!("undeclared state {}", q)));
            }
        }
        if !t.transitions.insert(x) {
            errors.push(Diagnostic::at(line, format!("duplicate transition `{}`", x)));
        }
    }
    (errors.len() == before).then_some(t)
}

fn transducer_body(t: &FiniteTransducer) -> String {
    let mut out = header("states", &list(t.states.iter().copied()));
    out += &header("initial", t.initial.as_str());
    out += &header("final", &list(t.finals.iter().copied()));
    for x in &t.transitions {
        out += &header("trans", &x.to_string());
    }
    out
}

fn parse_transducer(kind_line: usize, es: &[Entry<'_>]) -> Result<FiniteTransducer, Vec<Diagnostic>> {
    let mut errors = Vec::new();
    match transducer_from(kind_line, es, &mut errors) {
        Some(t) if errors.is_empty() => Ok(t),
        _ => Err(errors),
    }
}

fn parse_family(kind_line: usize, es: &[Entry<'_>]) -> Result<Family, Vec<Diagnostic>> {
    let mut errors = Vec::new();
    if let Some(e) = es.iter().find(|e| e.key == "builtin") {
        if let Some(other) = es.iter().find(|e| e.key != "builtin") {
            errors.push(Diagnostic::at(other.line, format!("`{}` cannot follow a `builtin:` family", other.key)));
        }
        if let Some(dup) = es.iter().filter(|e| e.key == "builtin").nth(1) {
            errors.push(Diagnostic::at(dup.line, format!("`builtin` already given at line {}", e.line)));
        }
        let t: Vec<&str> = e.value.split_whitespace().collect();
        let b = match t[..] {
            ["fig1"] => Some(Builtin::Fig1),
            ["random-shift", seed] => match seed.parse() {
                Ok(seed) => Some(Builtin::RandomShift { seed }),
                Err(_) => {
                    errors.push(Diagnostic::at(e.line, format!("bad seed `{}`", seed)));
                    None
                }
            },
            _ => {
                errors.push(Diagnostic::at(e.line, format!("unknown builtin `{}` (fig1, random-shift SEED)", e.value)));
                None
            }
        };
        return match b {
            Some(b) if errors.is_empty() => Ok(Family::Builtin(b)),
            _ => Err(errors),
        };
    }
    let mut members = Vec::new();
    let mut i = 0;
    while i < es.len() {
        let e = &es[i];
        if e.key != "member" {
            errors.push(Diagnostic::at(e.line, format!("`{}` outside a `member:` block", e.key)));
            i += 1;
            continue;
        }
        let label = symbols(e.value);
        if label.len() != 1 {
            errors.push(Diagnostic::at(e.line, "`member:` takes exactly one label"));
        }
        let end = es[i + 1..].iter().position(|x| x.key == "member").map_or(es.len(), |p| i + 1 + p);
        if let Some(t) = transducer_from(e.line, &es[i + 1..end], &mut errors) {
            if label.len() == 1 {
                members.push((label[0], t));
            }
        }
        i = end;
    }
    if members.is_empty() && errors.is_empty() {
        errors.push(Diagnostic::at(kind_line, "a family needs `builtin:` or at least one `member:`"));
    }
    if errors.is_empty() {
        Ok(Family::Rational(members))
    } else {
        Err(errors)
    }
}

fn serialize_family(f: &Family) -> String {
    let mut out = header("kind", "family");
    match f {
        Family::Builtin(Builtin::Fig1) => out += &header("builtin", "fig1"),
        Family::Builtin(Builtin::RandomShift { seed }) => out += &header("builtin", &format!("random-shift {}", seed)),
        Family::Rational(members) => {
            for (a, t) in members {
                out += &header("member", a.as_str());
                out += &transducer_body(t);
            }
        }
    }
    out
}
