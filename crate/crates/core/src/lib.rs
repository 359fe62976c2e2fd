//! Computations with graphic arrangement groups.
//!
//! A simple graph on vertices `1..=n` determines a quotient of the `n`-strand
//! pure braid group, obtained by killing the generators attached to non-edges.
//! This crate builds presentations of these groups, evaluates the deletion
//! homomorphisms onto induced subgraphs, decides the word problem where the
//! clique-projection map is known to be injective, and classifies residual,
//! torsion, and homological finiteness properties of the group and of its
//! extension by the graph automorphism group.
//!
//! The crate is organised around the mathematical layers:
//!
//! * [`graphs`] — simple-graph combinatorics: cliques, chordality, clique-sum
//!   decomposition, automorphisms, and bipartite incidence graphs.
//! * [`freegroup`] — exact free-group computation: reduced words, coordinate
//!   projections, and endomorphisms with composition.
//! * [`braid`] — braid and pure braid groups acting on free groups, with an
//!   exact triviality oracle for pure braid words.
//! * [`graphic`] — the graph-determined quotient group: presentation,
//!   deletion maps, retractivity, injectivity certificates, word problem.
//! * [`classify`] — theorem-driven classification and report assembly.
//!
//! With the default `parallel` feature the per-clique projections inside the
//! word-problem solver and the relator instantiation inside presentation
//! building run on rayon; disabling default features gives a fully
//! sequential build with identical results.

pub mod braid;
pub mod classify;
mod exec;
pub mod freegroup;
pub mod graphic;
pub mod graphs;
#[cfg(test)]
pub(crate) mod test_fixtures;
