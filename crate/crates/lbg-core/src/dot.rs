//! Graphviz output and a reader for the subset this module writes.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::error::CoreError;
use crate::fragment::GraphFragment;
use crate::symbol::Symbol;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Renders a fragment as DOT. Nodes are sorted by display name and edges by
/// (source name, label, target name), so the text is byte-stable. Roots are
/// drawn as double circles and frontier vertices dashed.
pub fn to_dot(f: &GraphFragment) -> String {
    let mut nodes: Vec<(String, usize)> = (0..f.len()).map(|v| (f.label_of(v), v)).collect();
    nodes.sort();
    let mut out = String::from("digraph G {\n");
    for (name, v) in &nodes {
        let mut attrs = Vec::new();
        if f.roots().contains(v) {
            attrs.push("shape=doublecircle");
        }
        if f.frontier().contains(v) {
            attrs.push("style=dashed");
        }
        if attrs.is_empty() {
            let _ = writeln!(out, "  {};", quote(name));
        } else {
            let _ = writeln!(out, "  {} [{}];", quote(name), attrs.join(", "));
        }
    }
    let mut edges: Vec<(String, Symbol, String)> = f
        .edges()
        .map(|(s, a, t)| (f.label_of(s), a, f.label_of(t)))
        .collect();
    edges.sort();
    for (s, a, t) in &edges {
        let _ = writeln!(out, "  {} -> {} [label={}];", quote(s), quote(t), quote(a.as_str()));
    }
    out.push_str("}\n");
    out
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
}

#[derive(Debug, PartialEq)]
enum Tok {
    Str(String),
    Ident(String),
    Arrow,
    Punct(char),
}

impl<'a> Lexer<'a> {
    fn err(&self, message: impl Into<String>) -> CoreError {
        CoreError::DotSyntax { line: self.line, message: message.into() }
    }

    fn next(&mut self) -> Result<Option<Tok>, CoreError> {
        loop {
            match self.chars.peek() {
                Some('\n') => {
                    self.line += 1;
                    self.chars.next();
                }
                Some(c) if c.is_whitespace() => {
                    self.chars.next();
                }
                Some('/') => {
                    // line comment
                    self.chars.next();
                    if self.chars.next() != Some('/') {
                        return Err(self.err("unexpected '/'"));
                    }
                    while let Some(&c) = self.chars.peek() {
                        if c == '\n' {
                            break;
                        }
                        self.chars.next();
                    }
                }
                _ => break,
            }
        }
        let c = match self.chars.next() {
            None => return Ok(None),
            Some(c) => c,
        };
        match c {
            '"' => {
                let mut s = String::new();
                loop {
                    match self.chars.next() {
                        None => return Err(self.err("unterminated string")),
                        Some('"') => break,
                        Some('\\') => match self.chars.next() {
                            Some('n') => s.push('\n'),
                            Some(e) => s.push(e),
                            None => return Err(self.err("unterminated escape")),
                        },
                        Some('\n') => {
                            self.line += 1;
                            s.push('\n');
                        }
                        Some(ch) => s.push(ch),
                    }
                }
                Ok(Some(Tok::Str(s)))
            }
            '-' => {
                if self.chars.next() == Some('>') {
                    Ok(Some(Tok::Arrow))
                } else {
                    Err(self.err("expected '->'"))
                }
            }
            '{' | '}' | '[' | ']' | ';' | ',' | '=' => Ok(Some(Tok::Punct(c))),
            c if c.is_alphanumeric() || c == '_' => {
                let mut s = String::from(c);
                while let Some(&d) = self.chars.peek() {
                    if d.is_alphanumeric() || d == '_' || d == '.' {
                        s.push(d);
                        self.chars.next();
                    } else {
                        break;
                    }
                }
                Ok(Some(Tok::Ident(s)))
            }
            other => Err(self.err(format!("unexpected character {:?}", other))),
        }
    }
}

/// Reads DOT produced by [`to_dot`] (and simple hand-written files in the
/// same style) back into a fragment. Node attributes `shape=doublecircle`
/// and `style=dashed` restore roots and frontier; edge `label` gives the
/// edge symbol.
pub fn parse_dot(text: &str) -> Result<GraphFragment, CoreError> {
    let mut lx = Lexer { chars: text.chars().peekable(), line: 1 };
    let mut toks: Vec<(Tok, usize)> = Vec::new();
    while let Some(t) = lx.next()? {
        toks.push((t, lx.line));
    }
    let mut pos = 0;
    let line_at = |p: usize| toks.get(p).map(|t| t.1).unwrap_or(lx.line);
    let err = |p: usize, m: &str| CoreError::DotSyntax { line: line_at(p), message: m.to_string() };

    match toks.first() {
        Some((Tok::Ident(k), _)) if k == "digraph" => pos += 1,
        _ => return Err(err(0, "expected 'digraph'")),
    }
    if let Some((Tok::Ident(_), _)) | Some((Tok::Str(_), _)) = toks.get(pos) {
        pos += 1;
    }
    if toks.get(pos).map(|t| &t.0) != Some(&Tok::Punct('{')) {
        return Err(err(pos, "expected '{'"));
    }
    pos += 1;

    let mut f = GraphFragment::new();
    let mut index: BTreeMap<String, usize> = BTreeMap::new();
    let mut vertex = |f: &mut GraphFragment, name: &str| -> usize {
        *index.entry(name.to_string()).or_insert_with(|| f.add_named(name))
    };

    loop {
        let name = match toks.get(pos) {
            Some((Tok::Punct('}'), _)) => break,
            Some((Tok::Str(s), _)) | Some((Tok::Ident(s), _)) => s.clone(),
            None => return Err(err(pos, "missing '}'")),
            _ => return Err(err(pos, "expected node or edge statement")),
        };
        pos += 1;
        // graph-level attribute statements such as `rankdir=LR;`
        if toks.get(pos).map(|t| &t.0) == Some(&Tok::Punct('=')) {
            pos += 2;
            if toks.get(pos).map(|t| &t.0) == Some(&Tok::Punct(';')) {
                pos += 1;
            }
            continue;
        }
        let skip_stmt = matches!(name.as_str(), "node" | "edge" | "graph")
            && !matches!(toks.get(pos - 1), Some((Tok::Str(_), _)));
        let target = if toks.get(pos).map(|t| &t.0) == Some(&Tok::Arrow) {
            pos += 1;
            match toks.get(pos) {
                Some((Tok::Str(s), _)) | Some((Tok::Ident(s), _)) => {
                    pos += 1;
                    Some(s.clone())
                }
                _ => return Err(err(pos, "expected edge target")),
            }
        } else {
            None
        };
        let mut attrs: Vec<(String, String)> = Vec::new();
        if toks.get(pos).map(|t| &t.0) == Some(&Tok::Punct('[')) {
            pos += 1;
            loop {
                match toks.get(pos) {
                    Some((Tok::Punct(']'), _)) => {
                        pos += 1;
                        break;
                    }
                    Some((Tok::Punct(','), _)) | Some((Tok::Punct(';'), _)) => pos += 1,
                    Some((Tok::Ident(k), _)) | Some((Tok::Str(k), _)) => {
                        let k = k.clone();
                        if toks.get(pos + 1).map(|t| &t.0) != Some(&Tok::Punct('=')) {
                            return Err(err(pos, "expected '=' in attribute"));
                        }
                        let v = match toks.get(pos + 2) {
                            Some((Tok::Ident(v), _)) | Some((Tok::Str(v), _)) => v.clone(),
                            _ => return Err(err(pos + 2, "expected attribute value")),
                        };
                        attrs.push((k, v));
                        pos += 3;
                    }
                    _ => return Err(err(pos, "unterminated attribute list")),
                }
            }
        }
        if toks.get(pos).map(|t| &t.0) == Some(&Tok::Punct(';')) {
            pos += 1;
        }
        if skip_stmt && target.is_none() {
            continue;
        }
        let s = vertex(&mut f, &name);
        match target {
            Some(t) => {
                let t = vertex(&mut f, &t);
                let label = attrs
                    .iter()
                    .find(|(k, _)| k == "label")
                    .map(|(_, v)| v.clone())
                    .ok_or_else(|| err(pos.saturating_sub(1), "edge without label"))?;
                f.add_edge(s, Symbol::new(&label), t);
            }
            None => {
                for (k, v) in &attrs {
                    if k == "shape" && v == "doublecircle" {
                        f.set_root(s);
                    }
                    if k == "style" && v.split(',').any(|x| x.trim() == "dashed") {
                        f.set_frontier(s);
                    }
                }
            }
        }
    }
    Ok(f)
}
