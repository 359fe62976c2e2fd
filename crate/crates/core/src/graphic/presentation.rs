//! Presentation of the quotient group: edge generators, and the pure braid
//! relators with every non-edge letter deleted.

use std::fmt;

use itertools::Itertools;

use crate::braid::{quad_relators_for, triple_relators_for, Pair};
use crate::exec;
use crate::freegroup::FreeWord;
use crate::graphs::Graph;

/// A finite presentation: generators and freely reduced relators over them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<Pair>,
    relators: Vec<FreeWord<Pair>>,
}

impl Presentation {
    /// Builds a presentation from explicit parts. Relators are reduced and
    /// must use only declared generators; empty relators and duplicates are
    /// dropped.
    pub fn new(generators: Vec<Pair>, relators: Vec<FreeWord<Pair>>) -> Presentation {
        let mut p = Presentation {
            generators,
            relators: Vec::new(),
        };
        for r in relators {
            debug_assert!(r.symbols().iter().all(|s| p.generators.contains(s)));
            p.push_relator(r);
        }
        p
    }

    fn push_relator(&mut self, r: FreeWord<Pair>) {
        if !r.is_empty() && !self.relators.contains(&r) {
            self.relators.push(r);
        }
    }

    pub fn generators(&self) -> &[Pair] {
        &self.generators
    }

    pub fn relators(&self) -> &[FreeWord<Pair>] {
        &self.relators
    }

    pub fn has_generator(&self, p: &Pair) -> bool {
        self.generators.contains(p)
    }
}

impl fmt::Display for Presentation {
    /// The plain-text listing: `gen` lines then `rel` lines.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.generators {
            writeln!(f, "gen {g}")?;
        }
        for r in &self.relators {
            writeln!(f, "rel {r}")?;
        }
        Ok(())
    }
}

/// The generator alphabet: one `a_{ij}` per edge, lexicographically.
pub fn edge_generators(g: &Graph) -> Vec<Pair> {
    g.edges().into_iter().map(|(i, j)| Pair::of(i, j)).collect()
}

/// The presentation of the quotient group of `g`: edge generators, and the
/// pure braid relators instantiated over all 3- and 4-element vertex
/// subsets with every letter on a non-edge deleted, freely reduced, empty
/// relators dropped and duplicates removed.
///
/// Only subsets containing at least one edge can contribute, which keeps
/// the relator count at `O(n^4)`.
pub fn presentation(g: &Graph) -> Presentation {
    let keep = |p: &Pair| g.has_edge(p.i(), p.j());

    let triples: Vec<Vec<usize>> = (1..=g.n()).combinations(3).collect();
    let quads: Vec<Vec<usize>> = (1..=g.n()).combinations(4).collect();

    let triple_batches = exec::map_vec(triples, |t| {
        let (i, j, r) = (t[0], t[1], t[2]);
        if !(g.has_edge(i, j) || g.has_edge(i, r) || g.has_edge(j, r)) {
            return Vec::new();
        }
        triple_relators_for(i, j, r)
            .into_iter()
            .map(|w| w.project(keep))
            .collect::<Vec<_>>()
    });
    let quad_batches = exec::map_vec(quads, |q| {
        let (w, x, y, z) = (q[0], q[1], q[2], q[3]);
        let pairs = [(w, x), (w, y), (w, z), (x, y), (x, z), (y, z)];
        if !pairs.iter().any(|&(a, b)| g.has_edge(a, b)) {
            return Vec::new();
        }
        quad_relators_for(w, x, y, z)
            .into_iter()
            .map(|r| r.project(keep))
            .collect::<Vec<_>>()
    });

    let mut p = Presentation {
        generators: edge_generators(g),
        relators: Vec::new(),
    };
    for batch in triple_batches.into_iter().chain(quad_batches) {
        for r in batch {
            p.push_relator(r);
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freegroup::FreeWord;
    use crate::graphs::parse_graph;

    fn gen(i: usize, j: usize) -> FreeWord<Pair> {
        FreeWord::generator(Pair::of(i, j))
    }

    #[test]
    fn path_presentation_collapses_to_one_commutator() {
        let path = parse_graph("n=3\n1 2\n2 3\n").unwrap();
        let p = presentation(&path);
        assert_eq!(p.generators(), &[Pair::of(1, 2), Pair::of(2, 3)]);
        assert_eq!(
            p.relators(),
            &[FreeWord::commutator(&gen(1, 2), &gen(2, 3))]
        );
    }

    #[test]
    fn triangle_presentation_keeps_both_triple_relators() {
        let k3 = crate::graphs::Graph::complete(3);
        let p = presentation(&k3);
        assert_eq!(p.generators().len(), 3);
        let expected = [
            FreeWord::commutator(&gen(1, 2).mul(&gen(1, 3)), &gen(2, 3)),
            FreeWord::commutator(&gen(1, 2), &gen(1, 3).mul(&gen(2, 3))),
        ];
        assert_eq!(p.relators(), &expected);
    }

    #[test]
    fn single_edge_is_free_of_rank_one() {
        let g = parse_graph("n=2\n1 2\n").unwrap();
        let p = presentation(&g);
        assert_eq!(p.generators(), &[Pair::of(1, 2)]);
        assert!(p.relators().is_empty());
    }

    #[test]
    fn listing_format() {
        let path = parse_graph("n=3\n1 2\n2 3\n").unwrap();
        let text = presentation(&path).to_string();
        assert_eq!(text, "gen a_1_2\ngen a_2_3\nrel a_1_2^-1 a_2_3^-1 a_1_2 a_2_3\n");
    }
}
