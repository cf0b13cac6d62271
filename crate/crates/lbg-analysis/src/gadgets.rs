use std::sync::Arc;

use lbg_core::{ball, sym, CoreError, GraphFragment, Symbol, Word};

/// A decision procedure for a language.
pub type Language = Arc<dyn Fn(&Word) -> bool + Send + Sync>;

/// A graph given by its root and its edge generator.
pub trait Gadget {
    fn root(&self) -> Word;
    fn edges(&self, v: &Word) -> Vec<(Symbol, Word)>;

    fn ball(&self, radius: usize, cap: usize) -> Result<GraphFragment, CoreError> {
        let root = self.root();
        let gen = |v: &Word| -> Result<Vec<(Symbol, Word)>, CoreError> { Ok(self.edges(v)) };
        Ok(ball(std::slice::from_ref(&root), radius, cap, gen, |v| v.to_string())?.fragment)
    }
}

fn count(w: &[Symbol], s: &str) -> usize {
    w.iter().take_while(|x| x.as_str() == s).count()
}

/// `2ⁿ`, saturating.
fn pow2(n: usize) -> usize {
    u32::try_from(n).ok().and_then(|e| 1usize.checked_shl(e)).unwrap_or(usize::MAX)
}

/// Splits `u #ⁿ` with `u` over `letters`; `None` for any other shape.
fn split_hashes<'w>(w: &'w [Symbol], letters: &[&str]) -> Option<(&'w [Symbol], usize)> {
    let body = w.iter().take_while(|s| letters.contains(&s.as_str())).count();
    let hashes = count(&w[body..], "#");
    (body + hashes == w.len()).then(|| (&w[..body], hashes))
}

/// `#u -x-> #ux`, `#u#ⁿ -#-> #u#ⁿ⁺¹` while `n < 2^|u|`, and
/// `#u#^(2^|u|) -#-> u` for `u ∈ L`, over `u ∈ {a, b}*`.
pub struct Fig3 {
    pub language: Language,
}

impl Gadget for Fig3 {
    fn root(&self) -> Word {
        Word::parse("#")
    }

    fn edges(&self, v: &Word) -> Vec<(Symbol, Word)> {
        let s = v.symbols();
        let Some((first, rest)) = s.split_first() else { return Vec::new() };
        if first.as_str() != "#" {
            return Vec::new();
        }
        let Some((u, n)) = split_hashes(rest, &["a", "b"]) else { return Vec::new() };
        let hash = sym("#");
        let mut out = Vec::new();
        if n == 0 {
            for x in ["a", "b"] {
                out.push((sym(x), v.appended(sym(x))));
            }
        }
        if n < pow2(u.len()) {
            out.push((hash, v.appended(hash)));
        } else if n == pow2(u.len()) {
            let u = Word::from_symbols(u.to_vec());
            if (self.language)(&u) {
                out.push((hash, u));
            }
        }
        out
    }
}

/// Two binary trees over {0, 1}: a plain one rooted at `ε` in which `u`
/// grows a `#` chain of length `2^|u|`, and a barred one rooted at `~`
/// whose vertex `~u` receives the `#` edge ending the chain of `u` when
/// `u ∈ L`.
pub struct Bitree {
    pub language: Language,
}

impl Bitree {
    pub fn barred(u: &Word) -> Word {
        Word::from_symbols(std::iter::once(sym("~")).chain(u.iter().copied()).collect())
    }
}

impl Gadget for Bitree {
    fn root(&self) -> Word {
        Word::empty()
    }

    fn edges(&self, v: &Word) -> Vec<(Symbol, Word)> {
        let s = v.symbols();
        let letters = ["0", "1"];
        if s.first().map(|x| x.as_str()) == Some("~") {
            if s[1..].iter().all(|x| letters.contains(&x.as_str())) {
                return letters.iter().map(|x| (sym(x), v.appended(sym(x)))).collect();
            }
            return Vec::new();
        }
        let Some((u, n)) = split_hashes(s, &letters) else { return Vec::new() };
        let hash = sym("#");
        let mut out = Vec::new();
        if n == 0 {
            out.extend(letters.iter().map(|x| (sym(x), v.appended(sym(x)))));
        }
        if n < pow2(u.len()) {
            out.push((hash, v.appended(hash)));
        } else if n == pow2(u.len()) {
            let u = Word::from_symbols(u.to_vec());
            if (self.language)(&u) {
                out.push((hash, Bitree::barred(&u)));
            }
        }
        out
    }
}

/// Over {0, 1} with the single label `t`: `0ⁿ → 0ⁿ⁺¹`, `0ⁿ1ᵐ → 0ⁿ1ᵐ⁺¹`
/// while `m < g(n)`, and `0ⁿ1ᵐ → 0ⁿ` for `1 ≤ m ≤ g(n)`.
pub struct LemmaId {
    pub g: Arc<dyn Fn(usize) -> usize + Send + Sync>,
}

impl LemmaId {
    /// The relation with bound `g` as written; `0ⁿ` then has in-degree
    /// `g(n) + 1` for `n ≥ 1`.
    pub fn literal(g: impl Fn(usize) -> usize + Send + Sync + 'static) -> LemmaId {
        LemmaId { g: Arc::new(g) }
    }

    /// The graph in which `0ⁿ` has in-degree exactly `f(n)` for every
    /// `n ≥ 1` with `f(n) ≥ 1`: the bound `f − 1` plus the edge from
    /// `0ⁿ⁻¹`.
    pub fn with_in_degree(f: impl Fn(usize) -> usize + Send + Sync + 'static) -> LemmaId {
        LemmaId { g: Arc::new(move |n| f(n).saturating_sub(1)) }
    }

    pub fn zeros(n: usize) -> Word {
        Word::from_symbols(vec![sym("0"); n])
    }
}

impl Gadget for LemmaId {
    fn root(&self) -> Word {
        Word::empty()
    }

    fn edges(&self, v: &Word) -> Vec<(Symbol, Word)> {
        let s = v.symbols();
        let n = count(s, "0");
        let m = count(&s[n..], "1");
        if n + m != s.len() {
            return Vec::new();
        }
        let t = sym("t");
        let g = (self.g)(n);
        let mut out = Vec::new();
        if m == 0 {
            out.push((t, v.appended(sym("0"))));
        }
        if m < g {
            out.push((t, v.appended(sym("1"))));
        }
        if m >= 1 && m <= g {
            out.push((t, LemmaId::zeros(n)));
        }
        out
    }
}
