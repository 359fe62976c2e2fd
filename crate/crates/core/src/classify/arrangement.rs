//! Hyperplane arrangements attached to a graph: the arrangement of
//! coordinate differences over the edges, and the affine arrangement whose
//! complement is the kernel of the splitting over a clique.

use std::fmt;

use serde::Serialize;

use crate::graphs::{Graph, Permutation};

use super::ClassifyError;

/// One hyperplane, in the coordinates of its ambient arrangement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Hyperplane {
    /// `x_i = x_j` with `i < j`.
    Difference { i: usize, j: usize },
    /// `x_coord = value`.
    AffinePoint { coord: usize, value: usize },
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hyperplane::Difference { i, j } => write!(f, "x_{i} - x_{j} = 0"),
            Hyperplane::AffinePoint { coord, value } => write!(f, "x_{coord} = {value}"),
        }
    }
}

impl Serialize for Hyperplane {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        match self {
            Hyperplane::Difference { i, j } => {
                let mut s = serializer.serialize_struct("Hyperplane", 4)?;
                s.serialize_field("kind", "difference")?;
                s.serialize_field("i", i)?;
                s.serialize_field("j", j)?;
                s.serialize_field("text", &self.to_string())?;
                s.end()
            }
            Hyperplane::AffinePoint { coord, value } => {
                let mut s = serializer.serialize_struct("Hyperplane", 4)?;
                s.serialize_field("kind", "affine_point")?;
                s.serialize_field("coord", coord)?;
                s.serialize_field("value", value)?;
                s.serialize_field("text", &self.to_string())?;
                s.end()
            }
        }
    }
}

/// A hyperplane list in coordinates `x_{coord_lo}, ..., x_{coord_hi}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Arrangement {
    pub coord_lo: usize,
    pub coord_hi: usize,
    pub hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    pub fn dimension(&self) -> usize {
        self.coord_hi + 1 - self.coord_lo
    }

    fn validate(&self) {
        for h in &self.hyperplanes {
            match *h {
                Hyperplane::Difference { i, j } => {
                    debug_assert!(self.coord_lo <= i && i < j && j <= self.coord_hi);
                }
                Hyperplane::AffinePoint { coord, .. } => {
                    debug_assert!(self.coord_lo <= coord && coord <= self.coord_hi);
                }
            }
        }
    }
}

/// The arrangement `{x_i = x_j : {i,j} an edge}` in n coordinates. Its
/// complement has the quotient group of `g` as fundamental group.
pub fn graphic_arrangement(g: &Graph) -> Arrangement {
    let arr = Arrangement {
        coord_lo: 1,
        coord_hi: g.n(),
        hyperplanes: g
            .edges()
            .into_iter()
            .map(|(i, j)| Hyperplane::Difference { i, j })
            .collect(),
    };
    arr.validate();
    arr
}

/// The affine arrangement of the kernel of the splitting over an m-clique:
/// in coordinates `x_{m+1}, ..., x_n` (after relabelling the clique to
/// `1..=m`), keep `x_j = i` for edges `{i, j}` with `i <= m < j`, and
/// `x_i = x_j` for edges with `m < i < j`. Hyperplanes whose pair is absent
/// from the graph are deleted.
///
/// Returns the arrangement together with the order-preserving relabelling
/// that sends the clique to `1..=m`.
pub fn graphic_discriminantal(
    g: &Graph,
    clique: &[usize],
) -> Result<(Arrangement, Permutation), ClassifyError> {
    let relabel = clique_relabelling(g, clique)?;
    let m = clique.len();
    let n = g.n();
    let original = relabel.inverse();
    let edge_after_relabel = |a: usize, b: usize| g.has_edge(original.apply(a), original.apply(b));

    let mut hyperplanes = Vec::new();
    for j in (m + 1)..=n {
        for i in 1..=m {
            if edge_after_relabel(i, j) {
                hyperplanes.push(Hyperplane::AffinePoint { coord: j, value: i });
            }
        }
    }
    for i in (m + 1)..=n {
        for j in (i + 1)..=n {
            if edge_after_relabel(i, j) {
                hyperplanes.push(Hyperplane::Difference { i, j });
            }
        }
    }
    let arr = Arrangement {
        coord_lo: m + 1,
        coord_hi: n,
        hyperplanes,
    };
    arr.validate();
    Ok((arr, relabel))
}

/// The order-preserving permutation of `1..=n` sending the clique to
/// `1..=m` and the remaining vertices to `m+1..=n`.
pub(crate) fn clique_relabelling(g: &Graph, clique: &[usize]) -> Result<Permutation, ClassifyError> {
    let mut sorted = clique.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != clique.len()
        || sorted.iter().any(|&v| v == 0 || v > g.n())
        || !g.is_clique(&sorted)
    {
        return Err(ClassifyError::NotAClique(clique.to_vec()));
    }
    let mut images = vec![0usize; g.n()];
    for (rank, &v) in sorted.iter().enumerate() {
        images[v - 1] = rank + 1;
    }
    let mut next = sorted.len() + 1;
    for v in 1..=g.n() {
        if images[v - 1] == 0 {
            images[v - 1] = next;
            next += 1;
        }
    }
    Ok(Permutation::new(images).expect("bijection by construction"))
}
