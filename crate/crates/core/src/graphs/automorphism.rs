//! Exhaustive graph automorphism search with degree pruning.

use super::{Graph, GraphError, Permutation};

/// Default vertex-count bound for the exhaustive search.
pub const DEFAULT_AUT_BOUND: usize = 10;

/// All automorphisms of `g`, sorted lexicographically by image array.
/// The identity is always present and the result is closed under
/// composition and inverses.
///
/// The search assigns images vertex by vertex, pruning on degree mismatch
/// and on adjacency consistency with already-assigned vertices. Graphs
/// above `bound` vertices are rejected rather than searched.
pub fn automorphisms(g: &Graph, bound: usize) -> Result<Vec<Permutation>, GraphError> {
    let n = g.n();
    if n > bound {
        return Err(GraphError::AutBoundExceeded { n, bound });
    }
    let mut out = Vec::new();
    let mut image = vec![0usize; n + 1];
    let mut used = vec![false; n + 1];
    extend(g, 1, &mut image, &mut used, &mut out);
    Ok(out)
}

fn extend(
    g: &Graph,
    v: usize,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Permutation>,
) {
    let n = g.n();
    if v > n {
        out.push(Permutation::new(image[1..].to_vec()).expect("bijection by construction"));
        return;
    }
    for w in 1..=n {
        if used[w] || g.degree(v) != g.degree(w) {
            continue;
        }
        let consistent = (1..v).all(|u| g.has_edge(u, v) == g.has_edge(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        extend(g, v + 1, image, used, out);
        used[w] = false;
        image[v] = 0;
    }
}

/// Brute-force isomorphism test for small graphs (intended for n <= 8).
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut gd: Vec<usize> = (1..=g.n()).map(|v| g.degree(v)).collect();
    let mut hd: Vec<usize> = (1..=h.n()).map(|v| h.degree(v)).collect();
    gd.sort_unstable();
    hd.sort_unstable();
    if gd != hd {
        return false;
    }
    let n = g.n();
    let mut image = vec![0usize; n + 1];
    let mut used = vec![false; n + 1];
    extend_iso(g, h, 1, &mut image, &mut used)
}

fn extend_iso(g: &Graph, h: &Graph, v: usize, image: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
    let n = g.n();
    if v > n {
        return true;
    }
    for w in 1..=n {
        if used[w] || g.degree(v) != h.degree(w) {
            continue;
        }
        if !(1..v).all(|u| g.has_edge(u, v) == h.has_edge(image[u], w)) {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend_iso(g, h, v + 1, image, used) {
            return true;
        }
        used[w] = false;
        image[v] = 0;
    }
    false
}
