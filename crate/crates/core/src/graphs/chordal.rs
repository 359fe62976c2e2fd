//! Chordality via maximum cardinality search.
//!
//! MCS produces a perfect elimination ordering exactly when the graph is
//! chordal, so one verification pass decides the question and yields a
//! witness at the same time.

use super::Graph;

/// Returns a perfect elimination ordering `v_1, ..., v_n` if the graph is
/// chordal, i.e. an ordering in which the later neighbors of each vertex
/// form a clique. `None` means some induced cycle of length >= 4 exists.
pub fn perfect_elimination_ordering(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    // Maximum cardinality search, filling the ordering back to front.
    // Ties break toward the smallest vertex for determinism.
    let mut weight = vec![0usize; n + 1];
    let mut placed = vec![false; n + 1];
    let mut order = vec![0usize; n];
    for slot in (0..n).rev() {
        let v = (1..=n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unplaced vertex remains");
        placed[v] = true;
        order[slot] = v;
        for u in g.neighbors(v) {
            if !placed[u] {
                weight[u] += 1;
            }
        }
    }

    let mut position = vec![0usize; n + 1];
    for (idx, &v) in order.iter().enumerate() {
        position[v] = idx;
    }
    for (idx, &v) in order.iter().enumerate() {
        let later: Vec<usize> = g.neighbors(v).filter(|&u| position[u] > idx).collect();
        if !g.is_clique(&later) {
            return None;
        }
    }
    Some(order)
}

/// True iff the graph has no induced cycle of length >= 4.
pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_ordering(g).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_fixtures::{deleted_k5, six_vertex_example};

    #[test]
    fn deleted_k5_is_chordal_with_witness() {
        let g = deleted_k5();
        let peo = perfect_elimination_ordering(&g).expect("chordal");
        let position: Vec<usize> = {
            let mut p = vec![0; g.n() + 1];
            for (i, &v) in peo.iter().enumerate() {
                p[v] = i;
            }
            p
        };
        for (idx, &v) in peo.iter().enumerate() {
            let later: Vec<usize> = g.neighbors(v).filter(|&u| position[u] > idx).collect();
            assert!(g.is_clique(&later), "witness fails at {v}");
        }
    }

    #[test]
    fn six_vertex_example_is_not_chordal() {
        assert!(!is_chordal(&six_vertex_example()));
        // the obstruction: the induced subgraph on {1,4,5,6} is a 4-cycle
        let sub = six_vertex_example().induced(&[1, 4, 5, 6]).unwrap().graph;
        assert_eq!(sub.edge_count(), 4);
        assert!((1..=4).all(|v| sub.degree(v) == 2));
        assert!(sub.is_connected());
    }

    #[test]
    fn trees_and_cycles() {
        let tree = Graph::new(5, [(1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        assert!(is_chordal(&tree));
        let c4 = Graph::new(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        assert!(!is_chordal(&c4));
        assert!(is_chordal(&Graph::complete(5)));
    }
}
