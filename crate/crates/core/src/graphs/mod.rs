//! Simple-graph combinatorics at desk scale.
//!
//! Vertices are labelled `1..=n` throughout, matching the generator
//! subscripts used everywhere else in the crate. Graphs are immutable after
//! construction and cheap to clone (adjacency bitsets).

mod automorphism;
mod chordal;
mod cliques;
mod incidence;
mod parse;
mod perm;
mod split;

pub use automorphism::{automorphisms, is_isomorphic, DEFAULT_AUT_BOUND};
pub use chordal::{is_chordal, perfect_elimination_ordering};
pub use cliques::{four_cliques_almost_disjoint, is_k4_free, maximal_cliques, triangles, CliqueFamily};
pub use incidence::{incidence_graph, IncidenceGraph};
pub use parse::{parse_dot, parse_edge_list, parse_graph, parse_inline};
pub use perm::Permutation;
pub use split::{clique_sum_split, CliqueSumSplit};

use thiserror::Error;

/// Hard cap imposed by the bitset representation.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("at most {MAX_VERTICES} vertices are supported, got {0}")]
    TooManyVertices(usize),
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("empty vertex subset")]
    EmptySubset,
    #[error("subset {0:?} is not a clique")]
    NotAClique(Vec<usize>),
    #[error("graph has {n} vertices; exhaustive automorphism search is bounded at {bound} (raise the bound to override)")]
    AutBoundExceeded { n: usize, bound: usize },
    #[error("not a bijection of 1..={0}")]
    NotAPermutation(usize),
}

/// A simple undirected graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Edges may be given in either
    /// orientation; self-loops and duplicates are rejected.
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut g = Graph { n, adj: vec![0; n] };
        for (a, b) in edges {
            g.insert_edge(a, b)?;
        }
        Ok(g)
    }

    fn insert_edge(&mut self, a: usize, b: usize) -> Result<(), GraphError> {
        let n = self.n;
        for v in [a, b] {
            if v == 0 || v > n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
        }
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        let (i, j) = (a.min(b), a.max(b));
        if self.adj[i - 1] & (1 << (j - 1)) != 0 {
            return Err(GraphError::DuplicateEdge(i, j));
        }
        self.adj[i - 1] |= 1 << (j - 1);
        self.adj[j - 1] |= 1 << (i - 1);
        Ok(())
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n, []).expect("valid n");
        for i in 1..=n {
            for j in (i + 1)..=n {
                g.adj[i - 1] |= 1 << (j - 1);
                g.adj[j - 1] |= 1 << (i - 1);
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b
            && a >= 1
            && b >= 1
            && a <= self.n
            && b <= self.n
            && self.adj[a - 1] & (1 << (b - 1)) != 0
    }

    /// Edges as sorted pairs `(i, j)` with `i < j`, lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in (i + 1)..=self.n {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Non-edges as sorted pairs, lexicographically.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in (i + 1)..=self.n {
                if !self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mask = self.adj[v - 1];
        (1..=self.n).filter(move |u| mask & (1 << (u - 1)) != 0)
    }

    pub(crate) fn adjacency_mask(&self, v: usize) -> u64 {
        self.adj[v - 1]
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(k, &a)| {
            set[k + 1..]
                .iter()
                .all(|&b| a != b && self.has_edge(a, b))
        })
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 1..=self.n {
            if seen[start - 1] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start - 1] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for u in self.neighbors(v) {
                    if !seen[u - 1] {
                        seen[u - 1] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// The induced subgraph on `x`, relabelled to `1..=|x|` in sorted order.
    /// The returned label map records position `k` ↦ original vertex.
    pub fn induced(&self, x: &[usize]) -> Result<InducedSubgraph, GraphError> {
        if x.is_empty() {
            return Err(GraphError::EmptySubset);
        }
        let mut vertices: Vec<usize> = x.to_vec();
        vertices.sort_unstable();
        vertices.dedup();
        for &v in &vertices {
            if v == 0 || v > self.n {
                return Err(GraphError::VertexOutOfRange { v, n: self.n });
            }
        }
        let mut edges = Vec::new();
        for (p, &a) in vertices.iter().enumerate() {
            for (q, &b) in vertices.iter().enumerate().skip(p + 1) {
                if self.has_edge(a, b) {
                    edges.push((p + 1, q + 1));
                }
            }
        }
        Ok(InducedSubgraph {
            graph: Graph::new(vertices.len(), edges)?,
            vertices,
        })
    }
}

/// An induced subgraph together with its original vertex labels:
/// vertex `k` of `graph` corresponds to `vertices[k - 1]` in the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub vertices: Vec<usize>,
}

impl InducedSubgraph {
    /// Maps a parent-graph vertex to its label in the induced subgraph.
    pub fn rank_of(&self, original: usize) -> Option<usize> {
        self.vertices.iter().position(|&v| v == original).map(|p| p + 1)
    }
}
