use lbg_core::{CoreError, GraphFragment};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("root {0} is not a vertex of the fragment")]
    UnknownRoot(String),
    #[error("letter {0} is reserved for vertex marks")]
    ReservedLetter(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

/// Largest degrees per breadth-first layer of a rooted fragment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    /// Out-degree, counting edges cut off by the fragment boundary.
    pub out_degree: Vec<usize>,
    /// In-degree over edges inside the fragment.
    pub in_degree: Vec<usize>,
    /// Layers holding frontier vertices.
    pub unreliable: Vec<bool>,
}

impl DegreeProfile {
    pub fn radius(&self) -> usize {
        self.out_degree.len().saturating_sub(1)
    }
}

/// Layers the fragment from `root` and records the maximal degrees of
/// each layer.
pub fn degree_profile(f: &GraphFragment, root: &str) -> Result<DegreeProfile, AnalysisError> {
    let r = f.find(root).ok_or_else(|| AnalysisError::UnknownRoot(root.to_string()))?;
    let dist = f.distances_from(r);
    let radius = dist.iter().flatten().copied().max().unwrap_or(0);
    let mut p = DegreeProfile {
        out_degree: vec![0; radius + 1],
        in_degree: vec![0; radius + 1],
        unreliable: vec![false; radius + 1],
    };
    for (v, d) in dist.iter().enumerate() {
        let Some(d) = *d else { continue };
        p.out_degree[d] = p.out_degree[d].max(f.out_degree(v) + f.truncated(v));
        p.in_degree[d] = p.in_degree[d].max(f.in_degree(v));
        if f.frontier().contains(&v) {
            p.unreliable[d] = true;
        }
    }
    Ok(p)
}

/// Outcome of [`fit_outdegree_bound`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundFit {
    /// Smallest `c ≤ cap` with `outdeg(n) ≤ cⁿ` on every used layer.
    pub c: Option<u64>,
    /// Layers `n ≥ 1` the bound was checked on.
    pub layers: Vec<usize>,
}

/// Smallest `c` with `outdeg(n) ≤ cⁿ` for the layers `n ≥ 1`; unreliable
/// layers are skipped unless `include_unreliable` is set.
pub fn fit_outdegree_bound(p: &DegreeProfile, cap: u64, include_unreliable: bool) -> BoundFit {
    let layers: Vec<usize> =
        (1..p.out_degree.len()).filter(|&n| include_unreliable || !p.unreliable[n]).collect();
    let fits = |c: u64| {
        layers.iter().all(|&n| {
            let bound = u32::try_from(n).ok().and_then(|e| c.checked_pow(e)).unwrap_or(u64::MAX);
            p.out_degree[n] as u64 <= bound
        })
    };
    let c = (1..=cap).find(|&c| fits(c));
    BoundFit { c, layers }
}
