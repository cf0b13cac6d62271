use std::fmt;

use lbg_core::Symbol;

use crate::model::{is_marker, left, right, LEFT, RIGHT};

/// A tape `[w]` with a control state and the index of the scanned cell.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    pub tape: Vec<Symbol>,
    pub state: Symbol,
    pub head: usize,
}

impl Configuration {
    /// `[q0]`, the start of every labeled run.
    pub fn initial_labeled(state: Symbol) -> Configuration {
        Configuration { tape: vec![left(), right()], state, head: 1 }
    }

    /// `[q0 w]`, the start of an unlabeled run on `w`.
    pub fn initial_unlabeled(state: Symbol, w: &[Symbol]) -> Configuration {
        let mut tape = vec![left()];
        tape.extend_from_slice(w);
        tape.push(right());
        Configuration { tape, state, head: 1 }
    }

    /// Builds `u q v` from the content between the markers; `head` indexes
    /// the full tape including `[`.
    pub fn with_content(content: &[Symbol], state: Symbol, head: usize) -> Configuration {
        let mut tape = vec![left()];
        tape.extend_from_slice(content);
        tape.push(right());
        Configuration { tape, state, head }
    }

    pub fn scanned(&self) -> Symbol {
        self.tape[self.head]
    }

    /// Tape content without the markers.
    pub fn content(&self) -> &[Symbol] {
        &self.tape[1..self.tape.len() - 1]
    }

    pub fn is_well_formed(&self) -> bool {
        let n = self.tape.len();
        n >= 2
            && self.tape[0].as_str() == LEFT
            && self.tape[n - 1].as_str() == RIGHT
            && self.tape[1..n - 1].iter().all(|s| !is_marker(*s))
            && self.head < n
    }

    /// Parses the inline notation, e.g. `[bq1a]` or `[ x q3 y ]`. With
    /// single-character tape symbols the state is found by trying the given
    /// state names at each position.
    pub fn parse(text: &str, states: &[Symbol]) -> Option<Configuration> {
        let text = text.trim();
        if text.contains(char::is_whitespace) {
            let toks: Vec<&str> = text.split_whitespace().collect();
            let pos = toks.iter().position(|t| states.iter().any(|s| s.as_str() == *t))?;
            let state = Symbol::new(toks[pos]);
            let tape: Vec<Symbol> = toks
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != pos)
                .map(|(_, t)| Symbol::new(t))
                .collect();
            let c = Configuration { tape, state, head: pos };
            return c.is_well_formed().then_some(c);
        }
        let mut by_len: Vec<Symbol> = states.to_vec();
        by_len.sort_by_key(|s| std::cmp::Reverse(s.as_str().len()));
        for (i, _) in text.char_indices() {
            for s in &by_len {
                if text[i..].starts_with(s.as_str()) {
                    let before = &text[..i];
                    let after = &text[i + s.as_str().len()..];
                    let chars = |t: &str| -> Vec<Symbol> {
                        t.chars().map(|c| Symbol::new(c.encode_utf8(&mut [0u8; 4]))).collect()
                    };
                    let mut tape = chars(before);
                    let head = tape.len();
                    tape.extend(chars(after));
                    let c = Configuration { tape, state: *s, head };
                    if c.is_well_formed() {
                        return Some(c);
                    }
                }
            }
        }
        None
    }
}

impl fmt::Display for Configuration {
    /// The state is written in front of the scanned cell: `[bq1a]`. When
    /// some tape symbol is longer than one character all tokens are
    /// separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.tape.iter().all(|s| s.is_char());
        let mut parts: Vec<&str> = Vec::with_capacity(self.tape.len() + 1);
        for (i, s) in self.tape.iter().enumerate() {
            if i == self.head {
                parts.push(self.state.as_str());
            }
            parts.push(s.as_str());
        }
        if compact {
            f.write_str(&parts.concat())
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}
