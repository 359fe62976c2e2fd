//! Bipartite incidence graph of edge generators versus clique-family
//! members, with the invariants the finiteness theorems read off it: first
//! Betti number and presence of isthmuses (bridges).

use super::{CliqueFamily, Graph};

/// The bipartite graph with left vertices the edges of Γ, right vertices
/// the members of a clique family, and an adjacency whenever both endpoints
/// of the edge lie in the member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceGraph {
    left: Vec<(usize, usize)>,
    right: Vec<Vec<usize>>,
    adj: Vec<(usize, usize)>,
    components: usize,
}

/// Builds the incidence graph of `g`'s edges with the members of `fam`.
pub fn incidence_graph(g: &Graph, fam: &CliqueFamily) -> IncidenceGraph {
    let left = g.edges();
    let right: Vec<Vec<usize>> = fam.members().to_vec();
    let mut adj = Vec::new();
    for (li, &(a, b)) in left.iter().enumerate() {
        for (ri, member) in right.iter().enumerate() {
            if member.binary_search(&a).is_ok() && member.binary_search(&b).is_ok() {
                adj.push((li, ri));
            }
        }
    }
    let components = count_components(left.len(), right.len(), &adj, None);
    IncidenceGraph {
        left,
        right,
        adj,
        components,
    }
}

fn count_components(
    nl: usize,
    nr: usize,
    adj: &[(usize, usize)],
    skip: Option<usize>,
) -> usize {
    let total = nl + nr;
    if total == 0 {
        return 0;
    }
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let mut comps = total;
    for (idx, &(l, r)) in adj.iter().enumerate() {
        if Some(idx) == skip {
            continue;
        }
        let (a, b) = (find(&mut parent, l), find(&mut parent, nl + r));
        if a != b {
            parent[a] = b;
            comps -= 1;
        }
    }
    comps
}

impl IncidenceGraph {
    /// Left vertices: the edges of the underlying graph.
    pub fn left(&self) -> &[(usize, usize)] {
        &self.left
    }

    /// Right vertices: the family members.
    pub fn right(&self) -> &[Vec<usize>] {
        &self.right
    }

    pub fn vertex_count(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.len()
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn is_connected(&self) -> bool {
        self.components == 1
    }

    /// First Betti number: `|E| - |V| + #components`.
    pub fn betti1(&self) -> usize {
        (self.adj.len() + self.components) - self.vertex_count()
    }

    /// True iff some edge is a bridge, i.e. its removal increases the
    /// component count. Any degree-1 vertex forces one.
    pub fn has_isthmus(&self) -> bool {
        (0..self.adj.len()).any(|idx| {
            count_components(self.left.len(), self.right.len(), &self.adj, Some(idx))
                > self.components
        })
    }
}
