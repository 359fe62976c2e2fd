//! The extension of the quotient group by the graph automorphism group:
//! order and generators of the automorphism group, torsion witnesses, and
//! the finiteness verdict transferred along the finite-index inclusion.

use serde::Serialize;

use crate::graphs::{automorphisms, triangles, Graph, GraphError, Permutation};

use super::finiteness::{finiteness_type, FinitenessVerdict};
use super::flags::{property_flags, Flag, Status};

/// A certified source of torsion in the extension group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TorsionWitness {
    /// An automorphism interchanging two non-adjacent vertices lifts to an
    /// element of order 2: the lifted half twist squares to a killed
    /// generator.
    NonAdjacentSwap {
        automorphism: Vec<usize>,
        pair: (usize, usize),
        order: usize,
    },
    /// An exact wheel: rotating the rim lifts to an element whose rim-length
    /// power is a product of killed generators. Reported only for rim
    /// length at least 4 (a triangular rim leaves nothing killed).
    WheelRotation {
        automorphism: Vec<usize>,
        hub: usize,
        order: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BgammaReport {
    pub aut_order: usize,
    /// A small generating set of the automorphism group (greedy closure).
    pub aut_generators: Vec<Vec<usize>>,
    /// Index of the pure subgroup in the extension: `|Aut|`.
    pub pure_index: usize,
    pub torsion_witnesses: Vec<TorsionWitness>,
    pub torsion_free: Flag,
    /// Finiteness verdict of the pure subgroup; finiteness type transfers
    /// across finite index.
    pub finiteness: FinitenessVerdict,
    /// Closed-form structure when available.
    pub structure_note: Option<String>,
}

/// Assembles the extension-group report. `aut_bound` caps the exhaustive
/// automorphism search.
pub fn bgamma_report(g: &Graph, aut_bound: usize) -> Result<BgammaReport, GraphError> {
    let auts = automorphisms(g, aut_bound)?;
    let aut_order = auts.len();

    let mut witnesses: Vec<TorsionWitness> = Vec::new();
    for aut in &auts {
        if aut.is_identity() {
            continue;
        }
        if let Some(pair) = smallest_non_adjacent_swap(g, aut) {
            witnesses.push(TorsionWitness::NonAdjacentSwap {
                automorphism: aut.images().to_vec(),
                pair,
                order: 2,
            });
        }
    }
    if let Some((hub, rotation)) = exact_wheel_rotation(g) {
        witnesses.push(TorsionWitness::WheelRotation {
            order: rotation.order(),
            automorphism: rotation.images().to_vec(),
            hub,
        });
    }

    let torsion_free = if !witnesses.is_empty() {
        Flag {
            status: Status::No,
            citation: "a torsion witness exists".to_string(),
        }
    } else if aut_order == 1 {
        // the extension equals the pure subgroup
        let pure = property_flags(g);
        if pure.torsion_free.is_yes() {
            Flag {
                status: Status::Yes,
                citation: format!(
                    "trivial automorphism group: the extension is the pure subgroup; {}",
                    pure.torsion_free.citation
                ),
            }
        } else {
            Flag {
                status: Status::Unknown,
                citation: "trivial automorphism group, but torsion-freeness of the pure subgroup is unresolved here".to_string(),
            }
        }
    } else {
        Flag {
            status: Status::Unknown,
            citation: "no torsion witness found; absence of torsion is not decided here".to_string(),
        }
    };

    let structure_note = structure_note(g, aut_order);

    Ok(BgammaReport {
        aut_order,
        aut_generators: generating_set(&auts)
            .into_iter()
            .map(|p| p.images().to_vec())
            .collect(),
        pure_index: aut_order,
        torsion_witnesses: witnesses,
        torsion_free,
        finiteness: finiteness_type(g),
        structure_note,
    })
}

fn smallest_non_adjacent_swap(g: &Graph, aut: &Permutation) -> Option<(usize, usize)> {
    for u in 1..=g.n() {
        for v in (u + 1)..=g.n() {
            if !g.has_edge(u, v) && aut.swaps(u, v) {
                return Some((u, v));
            }
        }
    }
    None
}

/// Detects an exact wheel: a hub adjacent to every other vertex whose
/// complement induces a single chordless cycle of length >= 4. Returns the
/// rim rotation fixing the hub.
fn exact_wheel_rotation(g: &Graph) -> Option<(usize, Permutation)> {
    let n = g.n();
    let rim_len = n - 1;
    if rim_len < 4 {
        return None;
    }
    let hub = (1..=n).find(|&h| g.degree(h) == n - 1)?;
    let rim: Vec<usize> = (1..=n).filter(|&v| v != hub).collect();
    if rim.iter().any(|&v| g.degree(v) != 3) {
        return None;
    }
    // walk the rim cycle from its smallest vertex toward its smaller neighbor
    let start = rim[0];
    let mut nbrs = g.neighbors(start).filter(|&u| u != hub);
    let (a, b) = (nbrs.next()?, nbrs.next()?);
    let mut cycle = vec![start, a.min(b)];
    while cycle.len() < rim_len {
        let last = *cycle.last().expect("nonempty");
        let prev = cycle[cycle.len() - 2];
        let next = g.neighbors(last).find(|&u| u != hub && u != prev)?;
        if cycle.contains(&next) {
            return None;
        }
        cycle.push(next);
    }
    if !g.has_edge(*cycle.last().expect("nonempty"), start) {
        return None;
    }
    let mut images = vec![0usize; n];
    images[hub - 1] = hub;
    for (k, &v) in cycle.iter().enumerate() {
        images[v - 1] = cycle[(k + 1) % rim_len];
    }
    let rotation = Permutation::new(images).ok()?;
    // the rotation must actually preserve the graph
    let preserves = g
        .edges()
        .into_iter()
        .all(|(u, v)| g.has_edge(rotation.apply(u), rotation.apply(v)));
    preserves.then_some((hub, rotation))
}

/// Greedy generating set: walk the sorted element list, keeping anything
/// outside the closure of what is already kept.
fn generating_set(elements: &[Permutation]) -> Vec<Permutation> {
    let mut generators: Vec<Permutation> = Vec::new();
    let mut closure: Vec<Permutation> = elements
        .first()
        .map(|p| vec![Permutation::identity(p.n())])
        .unwrap_or_default();
    for e in elements {
        if closure.contains(e) {
            continue;
        }
        generators.push(e.clone());
        // regenerate the closure
        loop {
            let mut grew = false;
            let snapshot = closure.clone();
            for a in &snapshot {
                for gen in &generators {
                    let prod = a.compose(gen);
                    if !closure.contains(&prod) {
                        closure.push(prod);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
    }
    generators
}

/// Closed-form structure notes for the trivially understood cases: a
/// triangle-free graph has free abelian pure subgroup, so the extension is
/// a semidirect product with the automorphism group.
fn structure_note(g: &Graph, aut_order: usize) -> Option<String> {
    if !triangles(g).is_empty() {
        return None;
    }
    let e = g.edge_count();
    Some(match aut_order {
        1 => format!("the extension equals the pure subgroup Z^{e}"),
        2 => format!("Z^{e} ⋊ Z_2"),
        k => format!("Z^{e} ⋊ Aut, |Aut| = {k}"),
    })
}
