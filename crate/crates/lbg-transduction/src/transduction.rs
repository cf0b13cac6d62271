use std::any::Any;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use lbg_core::{Alphabet, CoreError, Symbol, Word};
use lbg_machine::MachineDescription;

use crate::error::TransductionError;

pub type Decider = Arc<dyn Fn(&Word, &Word) -> bool + Send + Sync>;
pub type ImageGenerator = Arc<dyn Fn(&Word) -> BTreeSet<Word> + Send + Sync>;

/// Default bound on the number of candidate outputs examined by `image`.
pub const CANDIDATE_CAP: usize = 2_000_000;

/// Where a transduction comes from.
#[derive(Clone)]
pub enum Provenance {
    /// `(u, v)` is in the relation iff the machine accepts `u sep v`.
    Acceptor { machine: Arc<MachineDescription>, separator: Symbol },
    /// Defined by a procedure of another module; `source` optionally
    /// carries the object it was built from.
    Semantic { description: String, source: Option<Arc<dyn Any + Send + Sync>> },
    Combinator(String),
}

impl fmt::Debug for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Acceptor { machine, separator } => {
                write!(f, "Acceptor({} states, separator {})", machine.states.len(), separator)
            }
            Provenance::Semantic { description, .. } => write!(f, "Semantic({})", description),
            Provenance::Combinator(d) => write!(f, "Combinator({})", d),
        }
    }
}

/// A relation `T ⊆ Γ* × Γ*` with `|v| ≤ |u| + k` for every pair, given by
/// an exact decision procedure.
#[derive(Clone)]
pub struct IncrementalTransduction {
    pub alphabet: Alphabet,
    pub k: usize,
    decider: Decider,
    generator: Option<ImageGenerator>,
    /// Graph edges out of `u` are the image of `u · input_suffix`.
    pub input_suffix: Word,
    pub provenance: Provenance,
    pub candidate_cap: usize,
}

impl fmt::Debug for IncrementalTransduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IncrementalTransduction")
            .field("alphabet", &self.alphabet)
            .field("k", &self.k)
            .field("input_suffix", &self.input_suffix)
            .field("provenance", &self.provenance)
            .finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoolOp {
    Union,
    Intersection,
}

impl IncrementalTransduction {
    pub fn new(alphabet: Alphabet, k: usize, provenance: Provenance, decider: Decider) -> Self {
        IncrementalTransduction {
            alphabet,
            k,
            decider,
            generator: None,
            input_suffix: Word::empty(),
            provenance,
            candidate_cap: CANDIDATE_CAP,
        }
    }

    /// Supplies a procedure listing the image directly; it must agree with
    /// the decider on `{v : |v| ≤ |u| + k}`.
    pub fn with_generator(mut self, generator: ImageGenerator) -> Self {
        self.generator = Some(generator);
        self
    }

    pub fn with_input_suffix(mut self, suffix: Word) -> Self {
        self.input_suffix = suffix;
        self
    }

    pub fn with_candidate_cap(mut self, cap: usize) -> Self {
        self.candidate_cap = cap;
        self
    }

    pub fn has_generator(&self) -> bool {
        self.generator.is_some()
    }

    /// The relation `∅`.
    pub fn empty(alphabet: Alphabet, k: usize) -> Self {
        let t = IncrementalTransduction::new(
            alphabet,
            k,
            Provenance::Semantic { description: "empty".into(), source: None },
            Arc::new(|_, _| false),
        );
        t.with_generator(Arc::new(|_| BTreeSet::new()))
    }

    /// The relation `E_k = {(u, v) : |v| ≤ |u| + k}`.
    pub fn full(alphabet: Alphabet, k: usize) -> Self {
        IncrementalTransduction::new(
            alphabet,
            k,
            Provenance::Semantic { description: format!("E_{}", k), source: None },
            Arc::new(|_, _| true),
        )
    }

    /// Membership of `(u, v)`; pairs outside `E_k` are rejected without
    /// consulting the decider.
    pub fn decide(&self, u: &Word, v: &Word) -> bool {
        v.len() <= u.len() + self.k && (self.decider)(u, v)
    }

    fn check(&self, w: &Word) -> Result<(), TransductionError> {
        match self.alphabet.first_foreign(w.symbols()) {
            Some(s) => Err(TransductionError::ForeignSymbol { word: w.to_string(), symbol: s.to_string() }),
            None => Ok(()),
        }
    }

    /// Number of candidates `Σ_{m ≤ n} |Γ|^m`, saturating.
    fn candidate_count(&self, n: usize) -> usize {
        let g = self.alphabet.len();
        let mut total: usize = 0;
        let mut layer: usize = 1;
        for _ in 0..=n {
            total = total.saturating_add(layer);
            layer = layer.saturating_mul(g);
        }
        total
    }

    /// Every `v` with `(u, v) ∈ T`, in length-then-lexicographic order.
    pub fn image(&self, u: &Word) -> Result<BTreeSet<Word>, TransductionError> {
        self.check(u)?;
        let bound = u.len() + self.k;
        if let Some(g) = &self.generator {
            let out: BTreeSet<Word> = g(u).into_iter().filter(|v| v.len() <= bound).collect();
            return Ok(out);
        }
        if self.candidate_count(bound) > self.candidate_cap {
            return Err(CoreError::SizeExceeded { cap: self.candidate_cap }.into());
        }
        let mut out = BTreeSet::new();
        for n in 0..=bound {
            for v in self.alphabet.words_of_len(n) {
                if (self.decider)(u, &v) {
                    out.insert(v);
                }
            }
        }
        Ok(out)
    }

    /// Targets of the graph edges leaving `u`.
    pub fn successors(&self, u: &Word) -> Result<BTreeSet<Word>, TransductionError> {
        if self.input_suffix.is_empty() {
            self.image(u)
        } else {
            self.image(&u.concat(&self.input_suffix))
        }
    }

    /// Keeps the pairs whose input satisfies `domain` and whose output
    /// satisfies `codomain`.
    pub fn restrict(
        &self,
        domain: impl Fn(&Word) -> bool + Send + Sync + 'static,
        codomain: impl Fn(&Word) -> bool + Send + Sync + 'static,
    ) -> IncrementalTransduction {
        let domain = Arc::new(domain);
        let codomain = Arc::new(codomain);
        let inner = self.decider.clone();
        let (d, c) = (domain.clone(), codomain.clone());
        let mut t = IncrementalTransduction {
            decider: Arc::new(move |u, v| d(u) && c(v) && inner(u, v)),
            generator: None,
            provenance: Provenance::Combinator("restriction".into()),
            ..self.clone()
        };
        if let Some(g) = self.generator.clone() {
            t.generator = Some(Arc::new(move |u| {
                if domain(u) {
                    g(u).into_iter().filter(|v| codomain(v)).collect()
                } else {
                    BTreeSet::new()
                }
            }));
        }
        t
    }
}

/// Pointwise union or intersection.
pub fn combine(
    t1: &IncrementalTransduction,
    t2: &IncrementalTransduction,
    op: BoolOp,
) -> Result<IncrementalTransduction, TransductionError> {
    if t1.alphabet != t2.alphabet {
        return Err(TransductionError::AlphabetMismatch(format!("{:?} vs {:?}", t1.alphabet, t2.alphabet)));
    }
    if t1.input_suffix != t2.input_suffix {
        return Err(TransductionError::AlphabetMismatch(format!(
            "input suffixes {} and {} differ",
            t1.input_suffix, t2.input_suffix
        )));
    }
    let (a, b) = (t1.clone(), t2.clone());
    let decider: Decider = match op {
        BoolOp::Union => Arc::new(move |u, v| a.decide(u, v) || b.decide(u, v)),
        BoolOp::Intersection => Arc::new(move |u, v| a.decide(u, v) && b.decide(u, v)),
    };
    let name = match op {
        BoolOp::Union => "union",
        BoolOp::Intersection => "intersection",
    };
    let mut t = IncrementalTransduction::new(t1.alphabet.clone(), t1.k.max(t2.k), Provenance::Combinator(name.into()), decider)
        .with_input_suffix(t1.input_suffix.clone())
        .with_candidate_cap(t1.candidate_cap.min(t2.candidate_cap));
    let (a, b) = (t1.clone(), t2.clone());
    t.generator = match (op, &t1.generator, &t2.generator) {
        (BoolOp::Union, Some(_), Some(_)) => Some(Arc::new(move |u| {
            let mut s = a.image(u).unwrap_or_default();
            s.extend(b.image(u).unwrap_or_default());
            s
        })),
        (BoolOp::Intersection, Some(_), _) => {
            Some(Arc::new(move |u| a.image(u).unwrap_or_default().into_iter().filter(|v| b.decide(u, v)).collect()))
        }
        (BoolOp::Intersection, None, Some(_)) => {
            Some(Arc::new(move |u| b.image(u).unwrap_or_default().into_iter().filter(|v| a.decide(u, v)).collect()))
        }
        _ => None,
    };
    Ok(t)
}

/// `E_k − T`.
pub fn complement(t: &IncrementalTransduction) -> IncrementalTransduction {
    let inner = t.clone();
    IncrementalTransduction::new(
        t.alphabet.clone(),
        t.k,
        Provenance::Combinator("complement".into()),
        Arc::new(move |u, v| !inner.decide(u, v)),
    )
    .with_input_suffix(t.input_suffix.clone())
    .with_candidate_cap(t.candidate_cap)
}

/// Builds a transduction from a decider alone.
pub fn semantic(
    alphabet: Alphabet,
    k: usize,
    description: &str,
    decider: impl Fn(&Word, &Word) -> bool + Send + Sync + 'static,
) -> IncrementalTransduction {
    IncrementalTransduction::new(
        alphabet,
        k,
        Provenance::Semantic { description: description.into(), source: None },
        Arc::new(decider),
    )
}
