//! Deletion homomorphisms: forgetting every vertex outside a subset kills
//! the generators with an endpoint there, realized as letter deletion.

use crate::braid::{Pair, PureBraidWord};
use crate::freegroup::FreeWord;
use crate::graphs::{CliqueFamily, Graph};

use super::GraphicError;

/// Projects a word onto the generators supported inside `x`: letters
/// `a_{ij}` survive exactly when both endpoints lie in `x` and `{i, j}` is
/// an edge of `g`.
pub fn rho(g: &Graph, w: &FreeWord<Pair>, x: &[usize]) -> FreeWord<Pair> {
    w.project(|p| {
        x.contains(&p.i()) && x.contains(&p.j()) && g.has_edge(p.i(), p.j())
    })
}

/// One component of a product projection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionComponent {
    /// The clique projected onto, as sorted original vertex labels.
    pub member: Vec<usize>,
    /// The image word in the original generator labels.
    pub image: FreeWord<Pair>,
    /// The image rewritten over strands `1..=|member|`, ready for
    /// evaluation in the pure braid group of that size.
    pub relabelled: PureBraidWord,
    /// Original vertex ↦ strand label used by `relabelled`.
    pub relabelling: Vec<(usize, usize)>,
}

/// The product of the per-member projections of one word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionImage {
    pub components: Vec<ProjectionComponent>,
}

/// Applies `rho` componentwise over a clique family, recording the
/// relabelling each component needs for downstream evaluation.
pub fn rho_family(
    g: &Graph,
    w: &FreeWord<Pair>,
    fam: &CliqueFamily,
) -> Result<ProjectionImage, GraphicError> {
    validate_word(g, w)?;
    let components = fam
        .members()
        .iter()
        .map(|member| project_component(g, w, member))
        .collect();
    Ok(ProjectionImage { components })
}

pub(crate) fn project_component(
    g: &Graph,
    w: &FreeWord<Pair>,
    member: &[usize],
) -> ProjectionComponent {
    let image = rho(g, w, member);
    let rank = |v: usize| member.iter().position(|&u| u == v).expect("endpoint in member") + 1;
    let relabelled_word = FreeWord::from_letters(image.letters().iter().map(|l| {
        crate::freegroup::Letter::new(Pair::sorted(rank(l.symbol.i()), rank(l.symbol.j())), l.sign)
    }));
    let relabelled = PureBraidWord::new(member.len().max(2), relabelled_word)
        .expect("relabelled pairs in range");
    ProjectionComponent {
        member: member.to_vec(),
        image,
        relabelled,
        relabelling: member.iter().enumerate().map(|(k, &v)| (v, k + 1)).collect(),
    }
}

pub(crate) fn validate_word(g: &Graph, w: &FreeWord<Pair>) -> Result<(), GraphicError> {
    for p in w.symbols() {
        if !g.has_edge(p.i(), p.j()) {
            return Err(GraphicError::NotAGenerator(p));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::maximal_cliques;
    use crate::test_fixtures::deleted_k5;

    fn gen(i: usize, j: usize) -> FreeWord<Pair> {
        FreeWord::generator(Pair::of(i, j))
    }

    #[test]
    fn rho_deletes_outside_generators() {
        let g = crate::graphs::Graph::complete(4);
        let w = gen(1, 2).mul(&gen(3, 4));
        assert_eq!(rho(&g, &w, &[1, 2]), gen(1, 2));
        assert_eq!(rho(&g, &w, &[1, 2, 3, 4]), w);
        let c = FreeWord::commutator(&gen(1, 3), &gen(2, 3));
        assert!(rho(&g, &c, &[1, 3]).is_empty());
    }

    #[test]
    fn family_projection_relabels() {
        let g = deleted_k5();
        let fam = maximal_cliques(&g);
        let w = gen(2, 4);
        let img = rho_family(&g, &w, &fam).unwrap();
        assert_eq!(img.components.len(), 2);
        // inside {1,2,3,4}: a_2_4 relabels to itself
        assert_eq!(img.components[0].image, w);
        assert_eq!(img.components[0].relabelled.to_string(), "a_2_4");
        // inside {1,2,3,5}: the generator dies
        assert!(img.components[1].image.is_empty());
    }

    #[test]
    fn relabelling_compresses_strands() {
        let g = deleted_k5();
        let fam = maximal_cliques(&g);
        let w = gen(2, 5).mul(&gen(3, 5));
        let img = rho_family(&g, &w, &fam).unwrap();
        // member {1,2,3,5}: 5 becomes strand 4
        let c = &img.components[1];
        assert_eq!(c.relabelled.to_string(), "a_2_4 a_3_4");
        assert_eq!(c.relabelling, vec![(1, 1), (2, 2), (3, 3), (5, 4)]);
    }

    #[test]
    fn component_images_agree_on_the_overlap() {
        // the two 4-clique projections of any word restrict to the same
        // word on the shared triangle {1,2,3}
        let g = deleted_k5();
        let fam = maximal_cliques(&g);
        let words = [
            gen(1, 4).mul(&gen(2, 5)).mul(&gen(1, 2)),
            FreeWord::commutator(&gen(1, 3), &gen(2, 4)).mul(&gen(3, 5).inverse()),
        ];
        for w in words {
            let img = rho_family(&g, &w, &fam).unwrap();
            let overlap = [1, 2, 3];
            assert_eq!(
                rho(&g, &img.components[0].image, &overlap),
                rho(&g, &img.components[1].image, &overlap)
            );
        }
    }

    #[test]
    fn word_validation_rejects_non_edges() {
        let g = deleted_k5();
        let fam = maximal_cliques(&g);
        let w = gen(4, 5);
        assert!(matches!(
            rho_family(&g, &w, &fam),
            Err(GraphicError::NotAGenerator(_))
        ));
    }
}
