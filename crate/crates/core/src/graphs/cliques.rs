//! Clique enumeration and the clique-shape predicates used by the
//! classification theorems.

use itertools::Itertools;

use super::{Graph, GraphError};

/// A family of cliques of some graph, each of size at least 2, stored as
/// sorted vertex lists in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueFamily {
    members: Vec<Vec<usize>>,
}

impl CliqueFamily {
    /// Validates that every member is a clique of `g` with at least two
    /// vertices, then sorts members lexicographically.
    pub fn new(g: &Graph, members: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let mut sorted = Vec::with_capacity(members.len());
        for mut m in members {
            m.sort_unstable();
            m.dedup();
            if m.len() < 2 || !g.is_clique(&m) {
                return Err(GraphError::NotAClique(m));
            }
            sorted.push(m);
        }
        sorted.sort();
        sorted.dedup();
        Ok(CliqueFamily { members: sorted })
    }

    pub fn members(&self) -> &[Vec<usize>] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// True when some member contains every vertex of `set`.
    pub fn some_member_contains(&self, set: &[usize]) -> bool {
        self.members
            .iter()
            .any(|m| set.iter().all(|v| m.binary_search(v).is_ok()))
    }
}

/// All inclusion-maximal cliques of size at least 2, lexicographically
/// sorted. Bron–Kerbosch with pivoting on adjacency bitsets.
pub fn maximal_cliques(g: &Graph) -> CliqueFamily {
    let mut found: Vec<u64> = Vec::new();
    let all: u64 = if g.n() == 64 { !0 } else { (1u64 << g.n()) - 1 };
    bron_kerbosch(g, 0, all, 0, &mut found);
    let mut members: Vec<Vec<usize>> = found
        .into_iter()
        .filter(|r| r.count_ones() >= 2)
        .map(|r| (1..=g.n()).filter(|v| r & (1 << (v - 1)) != 0).collect())
        .collect();
    members.sort();
    CliqueFamily { members }
}

fn bron_kerbosch(g: &Graph, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    // pivot on the candidate covering the most of P
    let pivot = iter_bits(p | x)
        .max_by_key(|&u| (p & g.adjacency_mask(u)).count_ones())
        .expect("p | x nonempty");
    let todo = p & !g.adjacency_mask(pivot);
    for v in iter_bits(todo) {
        let bit = 1u64 << (v - 1);
        let nv = g.adjacency_mask(v);
        bron_kerbosch(g, r | bit, p & nv, x & nv, out);
        p &= !bit;
        x |= bit;
    }
}

fn iter_bits(mask: u64) -> impl Iterator<Item = usize> {
    (1..=64usize).filter(move |v| mask & (1 << (v - 1)) != 0)
}

/// All 3-cliques, lexicographically sorted.
pub fn triangles(g: &Graph) -> CliqueFamily {
    let mut members = Vec::new();
    for i in 1..=g.n() {
        for j in (i + 1)..=g.n() {
            if !g.has_edge(i, j) {
                continue;
            }
            let common = g.adjacency_mask(i) & g.adjacency_mask(j);
            for k in iter_bits(common) {
                if k > j {
                    members.push(vec![i, j, k]);
                }
            }
        }
    }
    members.sort();
    CliqueFamily { members }
}

/// True iff the graph has no 4-clique.
pub fn is_k4_free(g: &Graph) -> bool {
    four_cliques(g).is_empty()
}

fn four_cliques(g: &Graph) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for t in triangles(g).members() {
        let (i, j, k) = (t[0], t[1], t[2]);
        let common = g.adjacency_mask(i) & g.adjacency_mask(j) & g.adjacency_mask(k);
        for l in iter_bits(common) {
            if l > k {
                out.push([i, j, k, l]);
            }
        }
    }
    out
}

/// True iff every pair of distinct 4-cliques shares at most 2 vertices
/// (equivalently, at most one edge). Vacuously true on K4-free graphs.
pub fn four_cliques_almost_disjoint(g: &Graph) -> bool {
    let cliques = four_cliques(g);
    cliques.iter().tuple_combinations().all(|(a, b)| {
        let shared = a.iter().filter(|v| b.contains(v)).count();
        shared <= 2
    })
}
