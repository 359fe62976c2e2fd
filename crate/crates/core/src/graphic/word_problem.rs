//! Three-valued word-problem solver.
//!
//! A word over the edge generators projects onto every member of a clique
//! family. Each projection lands in a genuine pure braid group, where
//! triviality is decidable exactly. A nontrivial projection certifies
//! nontriviality unconditionally (projections are homomorphisms); all
//! projections trivial certifies triviality only when the projection map
//! is known injective for the family. Everything else is `Unknown`.

use crate::braid::{is_trivial_pure_with_limit, Pair};
use crate::exec;
use crate::freegroup::{EvalError, FreeWord, DEFAULT_WORD_LIMIT};
use crate::graphs::{maximal_cliques, CliqueFamily, Graph};

use super::injectivity::injectivity_status;
use super::projection::{project_component, validate_word};
use super::GraphicError;

/// Why the solver returned `Unknown`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnknownReason {
    /// All projections were trivial but no injectivity certificate covers
    /// the family, so triviality cannot be concluded.
    NoCertificate { note: String },
    /// Some projection hit the word-length guard; the verdict is
    /// indeterminate, never wrong.
    ResourceLimit { note: String },
}

/// The solver's verdict on one word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordVerdict {
    /// The word is the identity. Issued only under a proven certificate
    /// (or for the freely empty word, which is the identity outright).
    Trivial,
    /// The word is not the identity; `witness` is a family member whose
    /// projection is nontrivial.
    Nontrivial { witness: Vec<usize> },
    Unknown { reason: UnknownReason },
}

/// A solver with the clique family and injectivity certificate computed
/// once, for deciding many words on the same graph.
pub struct WordProblemSolver<'g> {
    graph: &'g Graph,
    family: CliqueFamily,
    certified: bool,
    word_limit: usize,
}

impl<'g> WordProblemSolver<'g> {
    /// Precomputes the maximal-clique family and its injectivity
    /// certificate.
    pub fn new(graph: &'g Graph) -> Self {
        let family = maximal_cliques(graph);
        let certified = injectivity_status(graph).is_proven();
        WordProblemSolver {
            graph,
            family,
            certified,
            word_limit: DEFAULT_WORD_LIMIT,
        }
    }

    /// Uses an arbitrary clique family. Triviality can then be certified
    /// only when the family is the maximal-clique family and the
    /// certificate holds.
    pub fn with_family(graph: &'g Graph, family: CliqueFamily, word_limit: usize) -> Self {
        let certified =
            family == maximal_cliques(graph) && injectivity_status(graph).is_proven();
        WordProblemSolver {
            graph,
            family,
            certified,
            word_limit,
        }
    }

    pub fn family(&self) -> &CliqueFamily {
        &self.family
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    /// Decides triviality of one word.
    ///
    /// The per-member projections and triviality checks are independent
    /// and run in parallel under the `parallel` feature; the verdict is a
    /// deterministic fold of the componentwise results.
    pub fn decide(&self, w: &FreeWord<Pair>) -> Result<WordVerdict, GraphicError> {
        validate_word(self.graph, w)?;
        if w.is_empty() {
            // free reduction already proves the identity in any quotient
            return Ok(WordVerdict::Trivial);
        }

        let members: Vec<Vec<usize>> = self.family.members().to_vec();
        let word_limit = self.word_limit;
        let results: Vec<(Vec<usize>, Result<bool, EvalError>)> =
            exec::map_vec(members, |member| {
                let component = project_component(self.graph, w, &member);
                let trivial = is_trivial_pure_with_limit(&component.relabelled, word_limit);
                (member, trivial)
            });

        let mut breached = false;
        for (member, result) in &results {
            match result {
                Ok(false) => {
                    return Ok(WordVerdict::Nontrivial {
                        witness: member.clone(),
                    })
                }
                Ok(true) => {}
                Err(EvalError::LengthLimit { .. }) => breached = true,
                Err(e) => {
                    // unreachable for validated words; surface it as a resource note
                    return Ok(WordVerdict::Unknown {
                        reason: UnknownReason::ResourceLimit {
                            note: format!("evaluation failed: {e}"),
                        },
                    });
                }
            }
        }
        if breached {
            return Ok(WordVerdict::Unknown {
                reason: UnknownReason::ResourceLimit {
                    note: format!(
                        "a projection exceeded the word-length limit of {word_limit}; raise the limit to decide"
                    ),
                },
            });
        }

        // every projection is trivial: conclude only under a certificate
        if self.certified {
            Ok(WordVerdict::Trivial)
        } else {
            Ok(WordVerdict::Unknown {
                reason: UnknownReason::NoCertificate {
                    note: "all projections are trivial, but no injectivity certificate covers this family"
                        .to_string(),
                },
            })
        }
    }
}

/// Decides triviality of `w` in the quotient group of `g`, projecting over
/// the family of maximal cliques.
pub fn word_problem(g: &Graph, w: &FreeWord<Pair>) -> Result<WordVerdict, GraphicError> {
    WordProblemSolver::new(g).decide(w)
}

/// Decides triviality of `w`, projecting over an arbitrary clique family.
pub fn word_problem_with_family(
    g: &Graph,
    w: &FreeWord<Pair>,
    fam: &CliqueFamily,
    word_limit: usize,
) -> Result<WordVerdict, GraphicError> {
    WordProblemSolver::with_family(g, fam.clone(), word_limit).decide(w)
}
