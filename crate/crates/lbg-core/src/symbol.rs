use std::borrow::Borrow;
use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Deref, Index};
use std::sync::{Mutex, OnceLock};

/// An interned token. Symbols compare and hash by their text, so ordering
/// is stable no matter in which order they were interned.
#[derive(Clone, Copy)]
pub struct Symbol(&'static str);

fn interner() -> &'static Mutex<HashSet<&'static str>> {
    static POOL: OnceLock<Mutex<HashSet<&'static str>>> = OnceLock::new();
    POOL.get_or_init(|| Mutex::new(HashSet::new()))
}

impl Symbol {
    pub fn new(name: &str) -> Symbol {
        let mut pool = interner().lock().expect("symbol pool poisoned");
        if let Some(s) = pool.get(name) {
            return Symbol(s);
        }
        let leaked: &'static str = Box::leak(name.to_owned().into_boxed_str());
        pool.insert(leaked);
        Symbol(leaked)
    }

    pub fn as_str(&self) -> &'static str {
        self.0
    }

    /// True when the symbol's text is a single character; words made only of
    /// such symbols are displayed without separators.
    pub fn is_char(&self) -> bool {
        let mut it = self.0.chars();
        it.next().is_some() && it.next().is_none()
    }
}

impl PartialEq for Symbol {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.0, other.0) || self.0 == other.0
    }
}
impl Eq for Symbol {}

impl Hash for Symbol {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(other.0)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}
impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

impl From<&str> for Symbol {
    fn from(s: &str) -> Symbol {
        Symbol::new(s)
    }
}

pub fn sym(s: &str) -> Symbol {
    Symbol::new(s)
}

/// A finite sequence of symbols.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_symbols(symbols: Vec<Symbol>) -> Word {
        Word(symbols)
    }

    /// Splits on whitespace when present, otherwise one symbol per character.
    pub fn parse(text: &str) -> Word {
        let text = text.trim();
        if text.contains(char::is_whitespace) {
            Word(text.split_whitespace().map(Symbol::new).collect())
        } else {
            Word(
                text.chars()
                    .map(|c| Symbol::new(c.encode_utf8(&mut [0u8; 4])))
                    .collect(),
            )
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }

    pub fn push(&mut self, s: Symbol) {
        self.0.push(s)
    }

    pub fn appended(&self, s: Symbol) -> Word {
        let mut w = self.clone();
        w.0.push(s);
        w
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn starts_with(&self, prefix: &[Symbol]) -> bool {
        self.0.starts_with(prefix)
    }

    pub fn ends_with(&self, suffix: &[Symbol]) -> bool {
        self.0.ends_with(suffix)
    }

    pub fn last(&self) -> Option<Symbol> {
        self.0.last().copied()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Symbol> {
        self.0.iter()
    }

    /// Length-then-lexicographic comparison.
    pub fn shortlex_cmp(&self, other: &Word) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl Deref for Word {
    type Target = [Symbol];
    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl Index<usize> for Word {
    type Output = Symbol;
    fn index(&self, i: usize) -> &Symbol {
        &self.0[i]
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Words are ordered length-first so sorted word sets read naturally.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shortlex_cmp(other)
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Word {
        Word(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Word {
    type Item = &'a Symbol;
    type IntoIter = std::slice::Iter<'a, Symbol>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl Borrow<[Symbol]> for Word {
    fn borrow(&self) -> &[Symbol] {
        &self.0
    }
}

pub fn display_symbols(symbols: &[Symbol]) -> String {
    if symbols.iter().all(Symbol::is_char) {
        symbols.iter().map(|s| s.as_str()).collect()
    } else {
        symbols
            .iter()
            .map(|s| s.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("ε")
        } else {
            f.write_str(&display_symbols(&self.0))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self)
    }
}

/// A declared finite alphabet.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Alphabet(BTreeSet<Symbol>);

impl Alphabet {
    pub fn new<I: IntoIterator<Item = Symbol>>(symbols: I) -> Alphabet {
        Alphabet(symbols.into_iter().collect())
    }

    pub fn parse(text: &str) -> Alphabet {
        Alphabet(text.split_whitespace().map(Symbol::new).collect())
    }

    pub fn contains(&self, s: &Symbol) -> bool {
        self.0.contains(s)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.0.iter().copied()
    }

    pub fn symbols(&self) -> &BTreeSet<Symbol> {
        &self.0
    }

    pub fn insert(&mut self, s: Symbol) -> bool {
        self.0.insert(s)
    }

    /// Every symbol of `w` belongs to this alphabet.
    pub fn accepts(&self, w: &[Symbol]) -> bool {
        w.iter().all(|s| self.0.contains(s))
    }

    /// The first symbol of `w` outside the alphabet, if any.
    pub fn first_foreign(&self, w: &[Symbol]) -> Option<Symbol> {
        w.iter().copied().find(|s| !self.0.contains(s))
    }

    /// All words of exactly length `n`, in lexicographic order.
    pub fn words_of_len(&self, n: usize) -> Vec<Word> {
        let letters: Vec<Symbol> = self.iter().collect();
        let mut out = vec![Word::empty()];
        for _ in 0..n {
            let mut next = Vec::with_capacity(out.len() * letters.len());
            for w in &out {
                for &a in &letters {
                    next.push(w.appended(a));
                }
            }
            out = next;
        }
        out
    }

    /// All words of length at most `n`, length-then-lexicographic.
    pub fn words_up_to(&self, n: usize) -> Vec<Word> {
        (0..=n).flat_map(|k| self.words_of_len(k)).collect()
    }
}

impl FromIterator<Symbol> for Alphabet {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Alphabet {
        Alphabet(iter.into_iter().collect())
    }
}
