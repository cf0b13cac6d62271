use std::collections::BTreeSet;

use lbg_core::{sym, Symbol};

/// Label of a product edge: `(a,b)`.
pub fn product_label(a: Symbol, b: Symbol) -> Symbol {
    sym(&format!("({},{})", a, b))
}

/// Edge generator of the synchronized product: `(u,v) -(a,b)-> (u',v')`
/// whenever `u -a-> u'`, `v -b-> v'` and `(a,b)` is allowed.
pub fn synchronized_product<A, B, E, G1, G2>(
    mut g1: G1,
    mut g2: G2,
    constraints: BTreeSet<(Symbol, Symbol)>,
) -> impl FnMut(&(A, B)) -> Result<Vec<(Symbol, (A, B))>, E>
where
    A: Clone,
    B: Clone,
    G1: FnMut(&A) -> Result<Vec<(Symbol, A)>, E>,
    G2: FnMut(&B) -> Result<Vec<(Symbol, B)>, E>,
{
    move |(u, v): &(A, B)| {
        if constraints.is_empty() {
            return Ok(Vec::new());
        }
        let left = g1(u)?;
        let right = g2(v)?;
        let mut out = Vec::new();
        for (a, u2) in &left {
            for (b, v2) in &right {
                if constraints.contains(&(*a, *b)) {
                    out.push((product_label(*a, *b), (u2.clone(), v2.clone())));
                }
            }
        }
        Ok(out)
    }
}
