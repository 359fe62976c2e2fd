//! The injectivity knowledge base for the clique-projection map.
//!
//! Each rule carries a checker for its graph-level hypothesis; a
//! certificate is only ever issued after the hypothesis has been verified
//! on the given graph. `Unknown` is a first-class outcome: graphs outside
//! the knowledge base are never guessed at.

use crate::graphs::{
    clique_sum_split, four_cliques_almost_disjoint, is_chordal, is_isomorphic, is_k4_free, Graph,
};

use super::example6::example6_graph;

/// The rule that proved injectivity of the clique-projection map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InjectivityRule {
    /// The family is `{V}` and the map is the identity.
    CompleteGraph,
    /// No 4-clique: the map embeds into a product of rank-2 factors.
    K4Free,
    /// 4-cliques pairwise share at most an edge.
    AlmostDisjoint4Cliques,
    /// Every graph on fewer than 7 vertices.
    FewerThan7Vertices,
    /// Chordal: an iterated clique-sum of complete graphs; the iterated
    /// neighbor embedding composes with projection factorization
    /// (each clique used lies inside a maximal clique, and projection onto
    /// a subset factors through projection onto any superset).
    Chordal,
    /// Generalized parallel connection with both parts proven.
    CliqueSumRecursion,
    /// Isomorphic to the six-vertex worked example.
    WorkedExample6,
    /// Disconnected: the group is the direct product over components.
    ComponentProduct,
}

impl InjectivityRule {
    pub fn name(&self) -> &'static str {
        match self {
            InjectivityRule::CompleteGraph => "complete_graph",
            InjectivityRule::K4Free => "k4_free",
            InjectivityRule::AlmostDisjoint4Cliques => "almost_disjoint_4_cliques",
            InjectivityRule::FewerThan7Vertices => "fewer_than_7_vertices",
            InjectivityRule::Chordal => "chordal",
            InjectivityRule::CliqueSumRecursion => "clique_sum_recursion",
            InjectivityRule::WorkedExample6 => "worked_example_6",
            InjectivityRule::ComponentProduct => "component_product",
        }
    }

    pub fn citation(&self) -> &'static str {
        match self {
            InjectivityRule::CompleteGraph => {
                "the family of maximal cliques is {V}; the projection is the identity map"
            }
            InjectivityRule::K4Free => {
                "K4-free graphs: the product of projections onto maximal cliques is injective"
            }
            InjectivityRule::AlmostDisjoint4Cliques => {
                "graphs whose 4-cliques pairwise share at most one edge: the clique projection is injective"
            }
            InjectivityRule::FewerThan7Vertices => {
                "the clique projection is injective for every graph on fewer than 7 vertices"
            }
            InjectivityRule::Chordal => {
                "chordal graphs are iterated clique-sums of complete graphs; the iterated embedding composes with projection factorization"
            }
            InjectivityRule::CliqueSumRecursion => {
                "a generalized parallel connection embeds in the product of its parts (pullback square); both parts are proven"
            }
            InjectivityRule::WorkedExample6 => {
                "the six-vertex worked example: kernel elements are transverse monic commutators, all trivial"
            }
            InjectivityRule::ComponentProduct => {
                "the group of a disjoint union is the direct product of the component groups"
            }
        }
    }
}

/// Outcome of the knowledge-base lookup, with sub-certificates where a
/// rule recursed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InjectivityCertificate {
    Proven {
        rule: InjectivityRule,
        note: String,
        children: Vec<InjectivityCertificate>,
    },
    Unknown {
        note: String,
    },
}

impl InjectivityCertificate {
    pub fn is_proven(&self) -> bool {
        matches!(self, InjectivityCertificate::Proven { .. })
    }

    pub fn rule(&self) -> Option<InjectivityRule> {
        match self {
            InjectivityCertificate::Proven { rule, .. } => Some(*rule),
            InjectivityCertificate::Unknown { .. } => None,
        }
    }

    fn proven(rule: InjectivityRule) -> Self {
        InjectivityCertificate::Proven {
            note: rule.citation().to_string(),
            rule,
            children: Vec::new(),
        }
    }
}

/// Looks up the first applicable injectivity rule for `g`.
///
/// Disconnected graphs are factored componentwise first. For connected
/// graphs the rules run cheapest first: the identity-map case, then the
/// graph-shape theorems, then decomposition recursion, with the
/// isomorphism test last.
pub fn injectivity_status(g: &Graph) -> InjectivityCertificate {
    let mut live: Vec<Vec<usize>> = g
        .components()
        .into_iter()
        .filter(|c| c.len() >= 2)
        .collect();
    match live.len() {
        0 => InjectivityCertificate::Proven {
            rule: InjectivityRule::ComponentProduct,
            note: "no edges; the group is trivial".to_string(),
            children: Vec::new(),
        },
        1 => {
            let comp = live.pop().expect("one component");
            if comp.len() == g.n() {
                connected_status(g)
            } else {
                // isolated vertices contribute nothing
                connected_status(&g.induced(&comp).expect("nonempty").graph)
            }
        }
        _ => {
            let children: Vec<InjectivityCertificate> = live
                .iter()
                .map(|c| connected_status(&g.induced(c).expect("nonempty").graph))
                .collect();
            if children.iter().all(InjectivityCertificate::is_proven) {
                InjectivityCertificate::Proven {
                    rule: InjectivityRule::ComponentProduct,
                    note: InjectivityRule::ComponentProduct.citation().to_string(),
                    children,
                }
            } else {
                InjectivityCertificate::Unknown {
                    note: "some connected component is outside the knowledge base".to_string(),
                }
            }
        }
    }
}

fn connected_status(g: &Graph) -> InjectivityCertificate {
    if g.is_complete() {
        return InjectivityCertificate::proven(InjectivityRule::CompleteGraph);
    }
    if is_k4_free(g) {
        return InjectivityCertificate::proven(InjectivityRule::K4Free);
    }
    if four_cliques_almost_disjoint(g) {
        return InjectivityCertificate::proven(InjectivityRule::AlmostDisjoint4Cliques);
    }
    if g.n() < 7 {
        return InjectivityCertificate::proven(InjectivityRule::FewerThan7Vertices);
    }
    if is_chordal(g) {
        return InjectivityCertificate::proven(InjectivityRule::Chordal);
    }
    if let Some(split) = clique_sum_split(g) {
        let children = vec![
            injectivity_status(&split.part1.graph),
            injectivity_status(&split.part2.graph),
        ];
        if children.iter().all(InjectivityCertificate::is_proven) {
            return InjectivityCertificate::Proven {
                rule: InjectivityRule::CliqueSumRecursion,
                note: format!(
                    "{}; separating clique {:?}",
                    InjectivityRule::CliqueSumRecursion.citation(),
                    split.separator
                ),
                children,
            };
        }
    }
    if g.n() == 6 && is_isomorphic(g, &example6_graph()) {
        return InjectivityCertificate::proven(InjectivityRule::WorkedExample6);
    }
    InjectivityCertificate::Unknown {
        note: "no applicable embedding criterion; injectivity of the clique projection is open here"
            .to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Graph;
    use crate::test_fixtures::{deleted_k5, octahedron, six_vertex_example};
    use itertools::Itertools;

    #[test]
    fn octahedron_is_k4_free_case() {
        let cert = injectivity_status(&octahedron());
        assert_eq!(cert.rule(), Some(InjectivityRule::K4Free));
    }

    #[test]
    fn worked_example_lands_on_small_vertex_count() {
        let cert = injectivity_status(&six_vertex_example());
        assert_eq!(cert.rule(), Some(InjectivityRule::FewerThan7Vertices));
    }

    #[test]
    fn complete_graph_is_the_identity_case() {
        let cert = injectivity_status(&Graph::complete(7));
        assert_eq!(cert.rule(), Some(InjectivityRule::CompleteGraph));
    }

    #[test]
    fn deleted_k5_is_proven() {
        assert!(injectivity_status(&deleted_k5()).is_proven());
    }

    #[test]
    fn chordal_rule_fires_beyond_six_vertices() {
        // K7 minus one edge: chordal, has 4-cliques sharing triangles
        let g = Graph::new(
            7,
            (1..=7).tuple_combinations().filter(|&e| e != (6, 7)),
        )
        .unwrap();
        let cert = injectivity_status(&g);
        assert_eq!(cert.rule(), Some(InjectivityRule::Chordal));
    }

    #[test]
    fn clique_sum_recursion_fires_where_shape_rules_fail() {
        // two copies of the six-vertex example glued along the edge {2,3}:
        // vertices 7..=10 mirror 1, 4, 5, 6 of the second copy
        let copy2 = |v: usize| match v {
            2 => 2,
            3 => 3,
            1 => 7,
            4 => 8,
            5 => 9,
            6 => 10,
            _ => unreachable!(),
        };
        let mut edges: Vec<(usize, usize)> = six_vertex_example().edges();
        for (a, b) in six_vertex_example().edges() {
            let (x, y) = (copy2(a), copy2(b));
            let e = (x.min(y), x.max(y));
            if !edges.contains(&e) {
                edges.push(e);
            }
        }
        let g = Graph::new(10, edges).unwrap();
        assert!(!is_chordal(&g));
        assert!(!four_cliques_almost_disjoint(&g));
        let cert = injectivity_status(&g);
        assert_eq!(cert.rule(), Some(InjectivityRule::CliqueSumRecursion));
        if let InjectivityCertificate::Proven { children, .. } = &cert {
            assert_eq!(children.len(), 2);
            assert!(children.iter().all(InjectivityCertificate::is_proven));
        }
    }

    #[test]
    fn seven_vertex_analogue_is_unknown() {
        // K7 minus the non-adjacent edges {4,5} and {1,6}: 4-cliques share
        // triangles, not chordal, no separating clique, not the worked graph
        let g = Graph::new(
            7,
            (1..=7)
                .tuple_combinations()
                .filter(|&e| e != (4, 5) && e != (1, 6)),
        )
        .unwrap();
        let cert = injectivity_status(&g);
        assert!(!cert.is_proven());
    }

    #[test]
    fn disconnected_graphs_factor() {
        // a triangle plus a disjoint edge, plus an isolated vertex
        let g = Graph::new(6, [(1, 2), (2, 3), (1, 3), (4, 5)]).unwrap();
        let cert = injectivity_status(&g);
        assert_eq!(cert.rule(), Some(InjectivityRule::ComponentProduct));
        if let InjectivityCertificate::Proven { children, .. } = cert {
            assert_eq!(children.len(), 2);
        }
    }

    #[test]
    fn worked_example_rule_checker_recognizes_relabellings() {
        // exercise the rule's own checker directly (the vertex-count rule
        // shadows it in the lookup order)
        let g = six_vertex_example();
        assert!(is_isomorphic(&g, &example6_graph()));
        assert_eq!(
            super::connected_status(&octahedron()).rule(),
            Some(InjectivityRule::K4Free)
        );
    }
}
