use std::fmt;

use lbg_core::{Alphabet, Symbol, Word};

use crate::error::RewritingError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: Word,
}

impl RewriteRule {
    pub fn new(lhs: Word, rhs: Word) -> RewriteRule {
        RewriteRule { lhs, rhs }
    }

    /// Parses `l -> r`; sides use the word notation, `ε` or nothing for
    /// the empty word.
    pub fn parse(text: &str) -> Option<RewriteRule> {
        let (l, r) = text.split_once("->")?;
        Some(RewriteRule::new(side(l), side(r)))
    }

    pub fn is_length_preserving(&self) -> bool {
        self.lhs.len() == self.rhs.len()
    }
}

fn side(text: &str) -> Word {
    let t = text.trim();
    if t.is_empty() || t == "ε" {
        Word::empty()
    } else {
        Word::parse(t)
    }
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.lhs, self.rhs)
    }
}

/// A finite length-decreasing rewriting system over `alphabet`; `labels`
/// are the letters used as edge labels of the Cayley-type graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewritingSystem {
    pub alphabet: Alphabet,
    pub labels: Alphabet,
    pub rules: Vec<RewriteRule>,
}

impl RewritingSystem {
    /// Checks every rule and keeps the first occurrence of duplicates.
    pub fn new(alphabet: Alphabet, labels: Alphabet, rules: Vec<RewriteRule>) -> Result<RewritingSystem, RewritingError> {
        if let Some(s) = labels.iter().find(|s| !alphabet.contains(s)) {
            return Err(RewritingError::UnknownSymbol(s.to_string()));
        }
        let mut kept: Vec<RewriteRule> = Vec::new();
        for r in rules {
            let bad = |reason: &str| RewritingError::InvalidRule { rule: r.to_string(), reason: reason.to_string() };
            if r.lhs.is_empty() {
                return Err(bad("empty left-hand side"));
            }
            if r.lhs.len() < r.rhs.len() {
                return Err(bad("right-hand side is longer than left-hand side"));
            }
            if !alphabet.accepts(&r.lhs) || !alphabet.accepts(&r.rhs) {
                return Err(bad("symbol outside the alphabet"));
            }
            if !kept.contains(&r) {
                kept.push(r);
            }
        }
        Ok(RewritingSystem { alphabet, labels, rules: kept })
    }

    /// Convenience constructor from rule texts such as `"1b -> b0"`.
    pub fn from_texts(alphabet: &str, labels: &str, rules: &[&str]) -> Result<RewritingSystem, RewritingError> {
        let parsed = rules
            .iter()
            .map(|t| {
                RewriteRule::parse(t)
                    .ok_or_else(|| RewritingError::InvalidRule { rule: t.to_string(), reason: "missing ->".into() })
            })
            .collect::<Result<Vec<_>, _>>()?;
        RewritingSystem::new(Alphabet::parse(alphabet), Alphabet::parse(labels), parsed)
    }

    pub fn has_length_preserving_rules(&self) -> bool {
        self.rules.iter().any(RewriteRule::is_length_preserving)
    }

    pub fn check_word(&self, w: &[Symbol]) -> Result<(), RewritingError> {
        match self.alphabet.first_foreign(w) {
            Some(s) => Err(RewritingError::UnknownSymbol(s.to_string())),
            None => Ok(()),
        }
    }
}
