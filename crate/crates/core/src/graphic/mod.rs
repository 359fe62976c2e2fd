//! The graph-determined quotient of the pure braid group.
//!
//! Killing the generators `a_{ij}` attached to non-edges of a simple graph
//! turns the pure braid group on `n` strands into the group studied here.
//! This module builds its presentation, evaluates the deletion
//! homomorphisms onto induced subgraphs, checks the retractivity criterion
//! for generator subsets, maintains the knowledge base of proven
//! injectivity cases for the clique-projection map, and assembles those
//! pieces into a three-valued word-problem solver.

mod example6;
mod injectivity;
mod presentation;
mod projection;
mod retract;
mod word_problem;

pub use example6::{
    example6_commutator_check, example6_graph, example6_presentation, example6_retractive_sets,
};
pub use injectivity::{injectivity_status, InjectivityCertificate, InjectivityRule};
pub use presentation::{edge_generators, presentation, Presentation};
pub use projection::{rho, rho_family, ProjectionComponent, ProjectionImage};
pub use retract::{is_retractive, transverse};
pub use word_problem::{
    word_problem, word_problem_with_family, UnknownReason, WordProblemSolver, WordVerdict,
};

use thiserror::Error;

use crate::braid::Pair;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphicError {
    #[error("{0} is not an edge generator of the graph")]
    NotAGenerator(Pair),
    #[error("{0} is not a generator of the presentation")]
    NotAPresentationGenerator(Pair),
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error(transparent)]
    Graph(#[from] crate::graphs::GraphError),
}
