//! Shared graph fixtures for unit tests.

use itertools::Itertools;

use crate::graphs::Graph;

/// K5 minus the edge {4,5}: two 4-cliques glued along the triangle {1,2,3}.
pub(crate) fn deleted_k5() -> Graph {
    Graph::new(
        5,
        (1..=5)
            .tuple_combinations()
            .filter(|&(i, j)| (i, j) != (4, 5)),
    )
    .unwrap()
}

/// K6 minus the two non-adjacent edges {4,5} and {1,6}: four 4-cliques
/// meeting in triangles, not chordal.
pub(crate) fn six_vertex_example() -> Graph {
    Graph::new(
        6,
        (1..=6)
            .tuple_combinations()
            .filter(|&(i, j)| (i, j) != (4, 5) && (i, j) != (1, 6)),
    )
    .unwrap()
}

/// Octahedron (complete tripartite K_{2,2,2}); antipodal pairs are {v, v+3}.
pub(crate) fn octahedron() -> Graph {
    Graph::new(6, (1..=6).tuple_combinations().filter(|&(i, j)| j != i + 3)).unwrap()
}

/// Wheel with hub 1 and rim cycle 2..=(k+1).
pub(crate) fn wheel(k: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (2..=k + 1).map(|v| (1, v)).collect();
    for v in 2..=k {
        edges.push((v, v + 1));
    }
    edges.push((2, k + 1));
    Graph::new(k + 1, edges).unwrap()
}

/// Path 1 - 2 - ... - n.
pub(crate) fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|v| (v, v + 1))).unwrap()
}
