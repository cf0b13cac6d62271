use std::collections::BTreeSet;
use std::sync::Arc;

use lbg_core::{sym, Alphabet, Symbol, Word};

use crate::error::TransductionError;
use crate::transduction::{IncrementalTransduction, Provenance};

/// Encoding of words over Γ as words of blocks of `size` letters, all
/// blocks full except possibly the last. Letters must be single
/// characters; a block symbol is the concatenation of its letters.
#[derive(Clone, Debug)]
pub struct BlockCode {
    pub letters: Alphabet,
    pub size: usize,
}

impl BlockCode {
    pub fn new(letters: Alphabet, size: usize) -> Result<BlockCode, TransductionError> {
        if size == 0 {
            return Err(TransductionError::Encoding("block size must be positive".into()));
        }
        if let Some(s) = letters.iter().find(|s| !s.is_char()) {
            return Err(TransductionError::Encoding(format!("letter {} is not a single character", s)));
        }
        Ok(BlockCode { letters, size })
    }

    pub fn alphabet(&self) -> Alphabet {
        (1..=self.size)
            .flat_map(|n| self.letters.words_of_len(n))
            .map(|w| sym(&w.iter().map(|s| s.as_str()).collect::<String>()))
            .collect()
    }

    pub fn encode(&self, w: &Word) -> Word {
        Word::from_symbols(
            w.symbols().chunks(self.size).map(|c| sym(&c.iter().map(|s| s.as_str()).collect::<String>())).collect(),
        )
    }

    /// Inverse of `encode` on canonical encodings.
    pub fn decode(&self, w: &Word) -> Option<Word> {
        let mut out: Vec<Symbol> = Vec::new();
        for (i, block) in w.iter().enumerate() {
            let letters: Vec<Symbol> = block.as_str().chars().map(|c| sym(c.encode_utf8(&mut [0u8; 4]))).collect();
            let full = letters.len() == self.size;
            if letters.is_empty() || letters.len() > self.size || (!full && i + 1 != w.len()) {
                return None;
            }
            if !self.letters.accepts(&letters) {
                return None;
            }
            out.extend(letters);
        }
        Some(Word::from_symbols(out))
    }
}

/// A 1-incremental transduction over blocks of `k` letters whose graph is
/// isomorphic to the graph of `t` through [`BlockCode::encode`].
pub fn to_one_incremental(t: &IncrementalTransduction) -> Result<(IncrementalTransduction, BlockCode), TransductionError> {
    let code = BlockCode::new(t.alphabet.clone(), t.k.max(1))?;
    if !t.input_suffix.is_empty() {
        return Err(TransductionError::Encoding("input suffixes are not supported".into()));
    }
    let (c1, t1) = (code.clone(), t.clone());
    let decider = Arc::new(move |u: &Word, v: &Word| match (c1.decode(u), c1.decode(v)) {
        (Some(u), Some(v)) => t1.decide(&u, &v),
        _ => false,
    });
    let (c2, t2) = (code.clone(), t.clone());
    let generator = Arc::new(move |u: &Word| -> BTreeSet<Word> {
        match c2.decode(u) {
            Some(x) => t2.image(&x).unwrap_or_default().iter().map(|v| c2.encode(v)).collect(),
            None => BTreeSet::new(),
        }
    });
    let out = IncrementalTransduction::new(
        code.alphabet(),
        1,
        Provenance::Semantic { description: format!("blocks of {}", code.size), source: None },
        decider,
    )
    .with_generator(generator);
    Ok((out, code))
}
