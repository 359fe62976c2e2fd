//! The retractivity criterion and transversality of generator pairs.

use std::collections::{BTreeSet, HashSet};

use crate::braid::Pair;
use crate::freegroup::FreeWord;
use crate::graphs::{CliqueFamily, Graph};

use super::{GraphicError, Presentation};

/// Sufficient criterion for a generator subset `s` to generate a subgroup
/// mapping injectively onto the quotient that kills the complement: the
/// projection of every relator must be empty or again a relator.
///
/// Matching is up to free equality, inversion, and cyclic permutation, so
/// a `false` answer means "criterion inconclusive", not "not retractive".
pub fn is_retractive(p: &Presentation, s: &BTreeSet<Pair>) -> bool {
    let mut known: HashSet<FreeWord<Pair>> = HashSet::new();
    for r in p.relators() {
        let core = r.cyclically_reduced();
        for rot in core.rotations() {
            known.insert(rot.clone());
            known.insert(rot.inverse());
        }
        known.insert(r.clone());
        known.insert(r.inverse());
    }
    p.relators().iter().all(|r| {
        let image = r.project(|sym| s.contains(sym));
        image.is_empty() || known.contains(&image) || known.contains(&image.cyclically_reduced())
    })
}

/// True iff no member of the family contains all endpoints of both
/// generators. Both pairs must be edge generators of `g`.
pub fn transverse(
    g: &Graph,
    a: Pair,
    b: Pair,
    fam: &CliqueFamily,
) -> Result<bool, GraphicError> {
    for p in [a, b] {
        if !g.has_edge(p.i(), p.j()) {
            return Err(GraphicError::NotAGenerator(p));
        }
    }
    let mut endpoints: Vec<usize> = vec![a.i(), a.j(), b.i(), b.j()];
    endpoints.sort_unstable();
    endpoints.dedup();
    Ok(!fam.some_member_contains(&endpoints))
}
