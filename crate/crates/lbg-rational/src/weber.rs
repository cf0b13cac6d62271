use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use lbg_core::{ball, Alphabet, GraphFragment, Symbol, Word};

use crate::apply::apply_function;
use crate::error::RationalError;
use crate::transducer::FiniteTransducer;

/// A functional transducer `F_name` contributing to the edges labelled
/// `label`.
#[derive(Clone, Debug)]
pub struct WeberFunction {
    pub name: Symbol,
    pub label: Symbol,
    pub transducer: FiniteTransducer,
}

/// A source word `m` and a sequence `r` of function names; it denotes
/// the vertex reached from `m` by applying the functions of `r` in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalPair {
    pub m: Word,
    pub r: Word,
}

impl CanonicalPair {
    pub fn weight(&self) -> usize {
        self.m.len() + self.r.len()
    }
}

impl Ord for CanonicalPair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.m.shortlex_cmp(&other.m))
            .then_with(|| self.r.shortlex_cmp(&other.r))
    }
}

impl PartialOrd for CanonicalPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CanonicalPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.r)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct WeberParams {
    /// Breadth-first radius of the explored source graph.
    pub radius: usize,
    /// Vertices longer than this are left out of the source graph.
    pub max_vertex_len: usize,
    /// Intermediate words longer than this are not followed while
    /// searching for canonical pairs.
    pub word_cap: usize,
    /// Vertex cap of the exploration.
    pub cap: usize,
}

#[derive(Clone, Debug)]
pub struct WeberRenaming {
    pub original: GraphFragment,
    pub renamed: GraphFragment,
    /// Source vertex of each fragment index.
    pub vertices: Vec<Word>,
    /// Canonical pair of each fragment index.
    pub pairs: Vec<CanonicalPair>,
    /// Some intermediate word was dropped by `word_cap`.
    pub pruned: bool,
}

/// Memoised application of the functions.
pub struct Evaluator<'f> {
    functions: &'f [WeberFunction],
    word_cap: usize,
    memo: HashMap<(usize, Word), Option<Word>>,
}

impl<'f> Evaluator<'f> {
    pub fn new(functions: &'f [WeberFunction], word_cap: usize) -> Self {
        Evaluator { functions, word_cap, memo: HashMap::new() }
    }

    /// `F_i(w)`, or `None` outside its domain.
    pub fn apply(&mut self, i: usize, w: &Word) -> Result<Option<Word>, RationalError> {
        if let Some(v) = self.memo.get(&(i, w.clone())) {
            return Ok(v.clone());
        }
        let f = &self.functions[i];
        let v = apply_function(&f.transducer, w, self.word_cap.max(w.len() * 4 + 4)).map_err(|count| {
            RationalError::NotFunctional { name: f.name.to_string(), input: w.to_string(), count }
        })?;
        self.memo.insert((i, w.clone()), v.clone());
        Ok(v)
    }

    fn index_of(&self, name: Symbol) -> Option<usize> {
        self.functions.iter().position(|f| f.name == name)
    }

    /// Applies the functions named by `r` to `m` in order.
    pub fn replay(&mut self, pair: &CanonicalPair) -> Result<Option<Word>, RationalError> {
        let mut cur = pair.m.clone();
        for &name in pair.r.iter() {
            let Some(i) = self.index_of(name) else { return Ok(None) };
            match self.apply(i, &cur)? {
                Some(v) => cur = v,
                None => return Ok(None),
            }
        }
        Ok(Some(cur))
    }
}

/// Renames every vertex of a ball of the graph defined by `functions` to
/// its least pair under (weight, m, r) with `m` and `r` compared
/// length-first.
pub fn weber_rename(functions: &[WeberFunction], root: &Word, params: WeberParams) -> Result<WeberRenaming, RationalError> {
    let mut eval = Evaluator::new(functions, params.word_cap);

    let edges = |x: &Word| -> Result<Vec<(Symbol, Word)>, RationalError> {
        let mut out = Vec::new();
        for (i, f) in functions.iter().enumerate() {
            if let Some(y) = eval.apply(i, x)? {
                if y.len() <= params.max_vertex_len {
                    out.push((f.label, y));
                }
            }
        }
        Ok(out)
    };
    let b = ball(std::slice::from_ref(root), params.radius, params.cap, edges, |u| u.to_string())?;

    let index: HashMap<Word, usize> = b.vertices.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut pairs: Vec<Option<CanonicalPair>> = vec![None; b.vertices.len()];
    let mut missing = b.vertices.len();

    let mut gamma: Alphabet = functions.iter().flat_map(|f| f.transducer.input_alphabet()).collect();
    for &s in root.iter() {
        gamma.insert(s);
    }
    let mut order: Vec<usize> = (0..functions.len()).collect();
    order.sort_by_key(|&i| functions[i].name);

    // For each source word m (in length-lexicographic order) the current
    // layer: values reached with exactly `depth` applications, each with
    // its least sequence.
    let mut sources: Vec<Word> = Vec::new();
    let mut layers: Vec<Vec<(Word, Word)>> = Vec::new();
    let mut pruned = false;
    let max_weight = b.vertices.iter().map(Word::len).max().unwrap_or(0);

    for w in 0..=max_weight {
        if missing == 0 {
            break;
        }
        for m in gamma.words_of_len(w) {
            sources.push(m.clone());
            layers.push(vec![(m, Word::empty())]);
        }
        for (si, layer) in layers.iter_mut().enumerate() {
            if sources[si].len() < w {
                let mut next: Vec<(Word, Word)> = Vec::new();
                let mut seen: BTreeSet<Word> = BTreeSet::new();
                for (v, r) in layer.iter() {
                    for &i in &order {
                        if let Some(y) = eval.apply(i, v)? {
                            if y.len() > params.word_cap {
                                pruned = true;
                                continue;
                            }
                            if seen.insert(y.clone()) {
                                next.push((y, r.appended(functions[i].name)));
                            }
                        }
                    }
                }
                *layer = next;
            }
            for (v, r) in layer.iter() {
                if let Some(&x) = index.get(v) {
                    if pairs[x].is_none() {
                        pairs[x] = Some(CanonicalPair { m: sources[si].clone(), r: r.clone() });
                        missing -= 1;
                    }
                }
            }
        }
    }

    let pairs: Vec<CanonicalPair> = pairs
        .into_iter()
        .zip(&b.vertices)
        .map(|(p, x)| p.unwrap_or_else(|| CanonicalPair { m: x.clone(), r: Word::empty() }))
        .collect();
    let renamed = b.fragment.renamed(|v, _| Some(pairs[v].to_string()));
    Ok(WeberRenaming { original: b.fragment, renamed, vertices: b.vertices, pairs, pruned })
}
