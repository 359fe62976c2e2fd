//! The six-vertex worked example: the smallest graph whose 4-cliques meet
//! in triangles yet whose clique-projection map is still injective.
//!
//! The graph is K6 minus the two non-adjacent edges {4,5} and {1,6}. Its
//! analysis runs through the kernel subgroup obtained by deleting the
//! 4-clique {1,2,3,4}, for which an explicit presentation is known; the
//! functions here expose that presentation, its three retractive generator
//! sets, and the nested-commutator obstruction witnessing that the plain
//! centralizer condition fails for this graph.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::braid::Pair;
use crate::freegroup::FreeWord;
use crate::graphs::Graph;

use super::Presentation;

/// K6 minus {4,5} and {1,6}.
pub fn example6_graph() -> Graph {
    Graph::new(
        6,
        (1..=6)
            .tuple_combinations()
            .filter(|&(i, j)| (i, j) != (4, 5) && (i, j) != (1, 6)),
    )
    .expect("fixed edge list")
}

fn gen(i: usize, j: usize) -> FreeWord<Pair> {
    FreeWord::generator(Pair::of(i, j))
}

/// Checks that `[[a_{35}, a_{25}], a_{15}]` is a nonempty reduced word in
/// the free group on `{a_{15}, a_{25}, a_{35}}` — the obstruction showing
/// the double-commutator centralizer condition fails for this example.
/// Returns `true` when the word is nontrivial.
pub fn example6_commutator_check() -> bool {
    let inner = FreeWord::commutator(&gen(3, 5), &gen(2, 5));
    let outer = FreeWord::commutator(&inner, &gen(1, 5));
    !outer.is_empty()
}

/// Presentation of the kernel of deleting vertices 5 and 6 back onto the
/// 4-clique {1,2,3,4}: generators `a_{ij}` with `j ∈ {5, 6}` minus the two
/// killed non-edge generators, relations from the pure braid group on
/// strands {2,3,5,6} (those not involving `a_{23}`) plus the commutation
/// forced by the killed generators.
pub fn example6_presentation() -> Presentation {
    let generators = vec![
        Pair::of(1, 5),
        Pair::of(2, 5),
        Pair::of(3, 5),
        Pair::of(2, 6),
        Pair::of(3, 6),
        Pair::of(4, 6),
        Pair::of(5, 6),
    ];

    let mut relators: Vec<FreeWord<Pair>> = Vec::new();
    // from the quadruple {2,3,5,6}: nested pair and crossing pair
    relators.push(FreeWord::commutator(&gen(2, 6), &gen(3, 5)));
    relators.push(FreeWord::commutator(
        &gen(3, 6),
        &gen(5, 6).mul(&gen(2, 5)).mul(&gen(5, 6).inverse()),
    ));
    // triples {2,5,6} and {3,5,6}
    for i in [2, 3] {
        relators.push(FreeWord::commutator(&gen(i, 5).mul(&gen(i, 6)), &gen(5, 6)));
        relators.push(FreeWord::commutator(&gen(i, 5), &gen(i, 6).mul(&gen(5, 6))));
    }
    // a_{15} commutes with every a_{i6} generator
    for i in [2, 3, 4, 5] {
        relators.push(FreeWord::commutator(&gen(1, 5), &gen(i, 6)));
    }
    // a_{46} commutes with every a_{i5} generator
    for i in [1, 2, 3] {
        relators.push(FreeWord::commutator(&gen(i, 5), &gen(4, 6)));
    }
    relators.push(FreeWord::commutator(&gen(4, 6), &gen(5, 6)));

    Presentation::new(generators, relators)
}

/// The three generator subsets whose retractivity carries the analysis of
/// the worked example: the free rank-3 blocks over each deleted vertex and
/// the kernel block of the pure braid group on strands {2,3,5,6}.
pub fn example6_retractive_sets() -> [BTreeSet<Pair>; 3] {
    [
        BTreeSet::from([Pair::of(1, 5), Pair::of(2, 5), Pair::of(3, 5)]),
        BTreeSet::from([Pair::of(2, 6), Pair::of(3, 6), Pair::of(4, 6)]),
        BTreeSet::from([
            Pair::of(2, 5),
            Pair::of(3, 5),
            Pair::of(2, 6),
            Pair::of(3, 6),
            Pair::of(5, 6),
        ]),
    ]
}
