//! The semidirect splitting of the quotient group over a clique: deleting
//! the vertices outside an m-clique is a split surjection onto the pure
//! braid group on m strands, with kernel the group of an affine
//! arrangement.

use serde::Serialize;

use crate::braid::Pair;
use crate::graphs::{Graph, Permutation};

use super::arrangement::{clique_relabelling, graphic_discriminantal, Arrangement};
use super::ClassifyError;

/// Splitting data over one clique.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemidirectSplit {
    /// The clique, sorted.
    pub clique: Vec<usize>,
    /// Order-preserving relabelling sending the clique to `1..=m`
    /// (image array, 1-based).
    pub relabel: Vec<usize>,
    /// The quotient is the pure braid group on this many strands.
    pub quotient_strands: usize,
    /// Kernel: the affine arrangement whose complement realizes it.
    pub kernel: Arrangement,
    /// Closed-form kernel description when one exists (a free group when
    /// only one vertex is deleted).
    pub kernel_description: Option<String>,
    /// The section: each quotient generator `a_{ij}` (relabelled
    /// coordinates, first entry) maps to the edge generator of the graph
    /// it came from (original coordinates, second entry).
    pub section: Vec<(String, String)>,
}

/// Computes the splitting of the quotient group over `clique`.
pub fn semidirect_split(g: &Graph, clique: &[usize]) -> Result<SemidirectSplit, ClassifyError> {
    let relabel: Permutation = clique_relabelling(g, clique)?;
    let (kernel, _) = graphic_discriminantal(g, clique)?;
    let mut sorted = clique.to_vec();
    sorted.sort_unstable();
    let m = sorted.len();

    let mut section = Vec::new();
    for (a, &u) in sorted.iter().enumerate() {
        for &v in &sorted[a + 1..] {
            let quotient_gen = Pair::sorted(relabel.apply(u), relabel.apply(v));
            let graph_gen = Pair::sorted(u, v);
            section.push((quotient_gen.to_string(), graph_gen.to_string()));
        }
    }

    let kernel_description = if g.n() == m + 1 {
        Some(format!("F_{}", kernel.hyperplanes.len()))
    } else {
        None
    };

    Ok(SemidirectSplit {
        clique: sorted,
        relabel: relabel.images().to_vec(),
        quotient_strands: m,
        kernel,
        kernel_description,
        section,
    })
}
