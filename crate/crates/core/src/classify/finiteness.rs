//! Homological finiteness type through the incidence graph of edges and
//! triangles, and the one-directional asphericity obstruction.

use serde::Serialize;

use crate::graphs::{incidence_graph, is_k4_free, maximal_cliques, triangles, Graph};

/// Classification of the finiteness type of the quotient group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FinitenessClass {
    /// A closed-form isomorphism type.
    Exact { description: String },
    /// Of type FP_holds but not of type FP_fails (= holds + 1).
    FpRange { holds: usize, fails: usize },
    /// The theorems' hypotheses do not apply.
    Indeterminate { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FinitenessVerdict {
    /// Number of 3-cliques.
    pub triangle_count: usize,
    #[serde(flatten)]
    pub class: FinitenessClass,
}

/// Finiteness type of the quotient group of a connected graph.
///
/// When every maximal clique is a triangle, the incidence graph Λ of edges
/// and triangles decides everything: a forest gives the exact product type
/// `(F_2)^m × Z^m`; a connected Λ with a cycle and no isthmus gives type
/// FP_{m-1} but not FP_m. All four hypotheses are re-checked at emission.
pub fn finiteness_type(g: &Graph) -> FinitenessVerdict {
    let tri = triangles(g);
    let m = tri.len();
    if !g.is_connected() {
        return FinitenessVerdict {
            triangle_count: m,
            class: FinitenessClass::Indeterminate {
                reason: "the graph is disconnected; analyze components separately".to_string(),
            },
        };
    }
    let maximal = maximal_cliques(g);
    if let Some(bad) = maximal.members().iter().find(|c| c.len() != 3) {
        let reason = if bad.len() > 3 {
            format!(
                "a {}-clique {:?} is present; the finiteness theorems require every maximal clique to be a triangle",
                bad.len(),
                bad
            )
        } else {
            format!(
                "the maximal 2-clique {:?} is present; the finiteness theorems require every maximal clique to be a triangle",
                bad
            )
        };
        return FinitenessVerdict {
            triangle_count: m,
            class: FinitenessClass::Indeterminate { reason },
        };
    }

    let lambda = incidence_graph(g, &tri);
    let b1 = lambda.betti1();
    if b1 == 0 {
        return FinitenessVerdict {
            triangle_count: m,
            class: FinitenessClass::Exact {
                description: format!("(F_2)^{m} x Z^{m}"),
            },
        };
    }
    if !lambda.has_isthmus() && lambda.is_connected() {
        FinitenessVerdict {
            triangle_count: m,
            class: FinitenessClass::FpRange {
                holds: m - 1,
                fails: m,
            },
        }
    } else {
        FinitenessVerdict {
            triangle_count: m,
            class: FinitenessClass::Indeterminate {
                reason: "the incidence graph of edges and triangles has an isthmus; the finiteness range theorem does not apply".to_string(),
            },
        }
    }
}

/// Asphericity verdict for the arrangement of a K4-free graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum KPi1Verdict {
    /// The incidence graph of edges and triangles contains a cycle, so the
    /// arrangement complement is not aspherical.
    NotKPi1 { betti1: usize },
    /// The obstruction is silent (it is one-directional).
    Unknown { note: String },
}

/// The asphericity obstruction: for a K4-free graph whose edge/triangle
/// incidence graph contains a cycle, the arrangement is not aspherical.
/// Never returns a positive asphericity claim.
pub fn kpi1_verdict(g: &Graph) -> KPi1Verdict {
    if !is_k4_free(g) {
        return KPi1Verdict::Unknown {
            note: "the graph has a 4-clique; the obstruction requires K4-freeness".to_string(),
        };
    }
    let lambda = incidence_graph(g, &triangles(g));
    let b1 = lambda.betti1();
    if b1 > 0 {
        KPi1Verdict::NotKPi1 { betti1: b1 }
    } else {
        KPi1Verdict::Unknown {
            note: "the incidence graph of edges and triangles is a forest; the obstruction is silent".to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Graph;
    use crate::test_fixtures::{octahedron, wheel};

    #[test]
    fn triangle_has_exact_type() {
        let v = finiteness_type(&Graph::complete(3));
        assert_eq!(v.triangle_count, 1);
        assert_eq!(
            v.class,
            FinitenessClass::Exact {
                description: "(F_2)^1 x Z^1".to_string()
            }
        );
    }

    #[test]
    fn octahedron_is_fp7_not_fp8() {
        let v = finiteness_type(&octahedron());
        assert_eq!(v.triangle_count, 8);
        assert_eq!(v.class, FinitenessClass::FpRange { holds: 7, fails: 8 });
    }

    #[test]
    fn four_wheel_is_indeterminate_by_isthmus() {
        let v = finiteness_type(&wheel(4));
        assert_eq!(v.triangle_count, 4);
        assert!(matches!(v.class, FinitenessClass::Indeterminate { ref reason }
            if reason.contains("isthmus")));
    }

    #[test]
    fn hypothesis_failures_are_reported() {
        let v = finiteness_type(&Graph::complete(4));
        assert!(matches!(v.class, FinitenessClass::Indeterminate { ref reason }
            if reason.contains("4-clique")));
        let v = finiteness_type(&crate::test_fixtures::path(3));
        assert!(matches!(v.class, FinitenessClass::Indeterminate { ref reason }
            if reason.contains("2-clique")));
        let v = finiteness_type(&Graph::new(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).unwrap());
        assert!(matches!(v.class, FinitenessClass::Indeterminate { ref reason }
            if reason.contains("disconnected")));
    }

    #[test]
    fn kpi1_verdicts() {
        assert_eq!(kpi1_verdict(&octahedron()), KPi1Verdict::NotKPi1 { betti1: 5 });
        assert!(matches!(
            kpi1_verdict(&Graph::complete(3)),
            KPi1Verdict::Unknown { .. }
        ));
        assert!(matches!(
            kpi1_verdict(&Graph::complete(4)),
            KPi1Verdict::Unknown { .. }
        ));
    }
}
