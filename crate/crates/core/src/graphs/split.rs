//! Decomposition of a graph as a generalized parallel connection (clique
//! sum) of two proper induced subgraphs.

use itertools::Itertools;

use super::{Graph, InducedSubgraph};

/// A decomposition `Γ = Γ₁ ∪_X Γ₂`: the two induced parts overlap exactly
/// in the separating clique `X`, and every edge lives in one of the parts.
#[derive(Debug, Clone)]
pub struct CliqueSumSplit {
    pub part1: InducedSubgraph,
    pub part2: InducedSubgraph,
    pub separator: Vec<usize>,
}

/// Searches for a clique whose removal disconnects the graph. Returns the
/// split over the smallest such clique (ties broken lexicographically),
/// with part 1 built from the component containing the smallest vertex.
/// `None` if the graph is complete, disconnected, or has no separating
/// clique. Callers recurse on the parts if they need a full decomposition.
pub fn clique_sum_split(g: &Graph) -> Option<CliqueSumSplit> {
    if !g.is_connected() {
        return None;
    }
    let n = g.n();
    for size in 1..n {
        let mut candidates: Vec<Vec<usize>> = (1..=n)
            .combinations(size)
            .filter(|x| g.is_clique(x))
            .collect();
        candidates.sort();
        for x in candidates {
            if let Some(split) = try_split(g, &x) {
                return Some(split);
            }
        }
    }
    None
}

fn try_split(g: &Graph, x: &[usize]) -> Option<CliqueSumSplit> {
    let rest: Vec<usize> = (1..=g.n()).filter(|v| !x.contains(v)).collect();
    if rest.len() < 2 {
        return None;
    }
    // components of Γ − X
    let mut comp_id = vec![usize::MAX; g.n() + 1];
    let mut comps = 0usize;
    for &start in &rest {
        if comp_id[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        comp_id[start] = comps;
        while let Some(v) = stack.pop() {
            for u in g.neighbors(v) {
                if !x.contains(&u) && comp_id[u] == usize::MAX {
                    comp_id[u] = comps;
                    stack.push(u);
                }
            }
        }
        comps += 1;
    }
    if comps < 2 {
        return None;
    }
    let first_comp = comp_id[*rest.first().expect("rest nonempty")];
    let mut v1: Vec<usize> = x.to_vec();
    let mut v2: Vec<usize> = x.to_vec();
    for &v in &rest {
        if comp_id[v] == first_comp {
            v1.push(v);
        } else {
            v2.push(v);
        }
    }
    Some(CliqueSumSplit {
        part1: g.induced(&v1).expect("valid subset"),
        part2: g.induced(&v2).expect("valid subset"),
        separator: x.to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_fixtures::deleted_k5;
    use itertools::Itertools;

    #[test]
    fn deleted_k5_splits_over_the_triangle() {
        let g = deleted_k5();
        let split = clique_sum_split(&g).expect("splits");
        assert_eq!(split.separator, vec![1, 2, 3]);
        assert_eq!(split.part1.vertices, vec![1, 2, 3, 4]);
        assert_eq!(split.part2.vertices, vec![1, 2, 3, 5]);
        assert!(split.part1.graph.is_complete());
        assert!(split.part2.graph.is_complete());
    }

    #[test]
    fn complete_graphs_do_not_split() {
        assert!(clique_sum_split(&Graph::complete(4)).is_none());
    }

    #[test]
    fn cut_vertex_is_a_one_clique_separator() {
        // two triangles sharing vertex 1
        let g = Graph::new(5, [(1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (4, 5)]).unwrap();
        let split = clique_sum_split(&g).expect("splits");
        assert_eq!(split.separator, vec![1]);
        assert_eq!(split.part1.vertices, vec![1, 2, 3]);
        assert_eq!(split.part2.vertices, vec![1, 4, 5]);
    }

    #[test]
    fn split_edge_sets_cover_and_overlap_in_the_clique() {
        let g = deleted_k5();
        let split = clique_sum_split(&g).unwrap();
        let back = |part: &InducedSubgraph| -> Vec<(usize, usize)> {
            part.graph
                .edges()
                .into_iter()
                .map(|(a, b)| {
                    let (x, y) = (part.vertices[a - 1], part.vertices[b - 1]);
                    (x.min(y), x.max(y))
                })
                .collect()
        };
        let e1 = back(&split.part1);
        let e2 = back(&split.part2);
        let union: Vec<(usize, usize)> = e1.iter().chain(&e2).copied().sorted().dedup().collect();
        assert_eq!(union, g.edges());
        let inter: Vec<(usize, usize)> = e1.iter().filter(|e| e2.contains(e)).copied().collect();
        let clique_pairs: Vec<(usize, usize)> =
            split.separator.iter().copied().tuple_combinations().collect();
        assert_eq!(inter, clique_pairs);
        assert!(g.is_clique(&split.separator));
    }
}
