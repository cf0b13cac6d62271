use std::fmt;

use lbg_core::{isomorphic, verify_bijection, GraphFragment};

use crate::error::EquivalenceError;

/// Outcome of comparing the balls of a source object and its conversion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConversionReport {
    pub source: String,
    pub target: String,
    pub radii: Vec<usize>,
    /// Per radius: sizes of both balls and, when isomorphic, the bijection
    /// from source vertices to target vertices.
    pub checks: Vec<RadiusCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadiusCheck {
    pub radius: usize,
    pub source_size: (usize, usize),
    pub target_size: (usize, usize),
    pub witness: Option<Vec<usize>>,
}

impl ConversionReport {
    /// True when every requested radius has a verified bijection.
    pub fn success(&self) -> bool {
        !self.radii.is_empty()
            && self.radii.iter().all(|r| self.checks.iter().any(|c| c.radius == *r && c.witness.is_some()))
    }

    /// Builds the balls of both sides at every radius and searches for an
    /// isomorphism; witnesses are re-verified before they are stored.
    pub fn compare<S, T>(
        source: &str,
        target: &str,
        radii: &[usize],
        cap: usize,
        mut source_ball: S,
        mut target_ball: T,
    ) -> Result<ConversionReport, EquivalenceError>
    where
        S: FnMut(usize) -> Result<GraphFragment, EquivalenceError>,
        T: FnMut(usize) -> Result<GraphFragment, EquivalenceError>,
    {
        let mut checks = Vec::new();
        for &radius in radii {
            let f1 = source_ball(radius)?;
            let f2 = target_ball(radius)?;
            let witness = isomorphic(&f1, &f2, cap)?.filter(|w| verify_bijection(&f1, &f2, w));
            checks.push(RadiusCheck {
                radius,
                source_size: (f1.len(), f1.edge_count()),
                target_size: (f2.len(), f2.edge_count()),
                witness,
            });
        }
        Ok(ConversionReport { source: source.into(), target: target.into(), radii: radii.to_vec(), checks })
    }
}

impl fmt::Display for ConversionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "source: {}", self.source)?;
        writeln!(f, "target: {}", self.target)?;
        for c in &self.checks {
            writeln!(
                f,
                "radius {}: source {}v/{}e, target {}v/{}e, {}",
                c.radius,
                c.source_size.0,
                c.source_size.1,
                c.target_size.0,
                c.target_size.1,
                if c.witness.is_some() { "isomorphic" } else { "not isomorphic" }
            )?;
        }
        write!(f, "result: {}", if self.success() { "equivalent" } else { "mismatch" })
    }
}
