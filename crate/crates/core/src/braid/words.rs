//! Distinguished words: the pure braid generators, the full twist, the
//! conjugation action of braid generators on pure generators, and the
//! relator families of the standard presentations.

use itertools::Itertools;

use crate::freegroup::FreeWord;

use super::{BraidError, BraidWord, Pair, PureBraidWord, Sigma};

/// The pure braid generator as a braid word:
/// `a_{ij} = σ_{j-1} ⋯ σ_{i+1} σ_i² σ_{i+1}⁻¹ ⋯ σ_{j-1}⁻¹`, of length
/// `2(j - i)`.
pub fn pure_generator(i: usize, j: usize, n: usize) -> Result<BraidWord, BraidError> {
    let pair = Pair::new(i, j)?;
    if pair.j() > n {
        return Err(BraidError::PairOutOfRange { i, j, n });
    }
    let mut word = FreeWord::identity();
    for k in ((i + 1)..j).rev() {
        word = word.mul(&FreeWord::generator(Sigma(k)));
    }
    let si = FreeWord::generator(Sigma(i));
    word = word.mul(&si).mul(&si);
    for k in (i + 1)..j {
        word = word.mul(&FreeWord::generator(Sigma(k)).inverse());
    }
    BraidWord::new(n, word)
}

/// The full twist `Δ² = a_{12} a_{13} a_{23} a_{14} a_{24} a_{34} ⋯`,
/// ordered by increasing `j` then increasing `i`. Generates the center of
/// the pure braid group.
pub fn full_twist(n: usize) -> PureBraidWord {
    let mut word = FreeWord::identity();
    for j in 2..=n {
        for i in 1..j {
            word = word.mul(&FreeWord::generator(Pair::of(i, j)));
        }
    }
    PureBraidWord::new(n, word).expect("pairs in range")
}

fn pure_word(n: usize, letters: impl IntoIterator<Item = (usize, usize, i64)>) -> PureBraidWord {
    let mut word = FreeWord::identity();
    for (i, j, e) in letters {
        let g = FreeWord::generator(Pair::of(i, j));
        let factor = if e >= 0 { g } else { g.inverse() };
        for _ in 0..e.unsigned_abs() {
            word = word.mul(&factor);
        }
    }
    PureBraidWord::new(n, word).expect("pairs in range")
}

/// The conjugate `σ_k a_{ij} σ_k⁻¹` expressed as a pure braid word, by the
/// five-case formula:
///
/// ```text
/// a_{i-1,i} a_{i-1,j} a_{i-1,i}⁻¹   if k = i-1
/// a_{i+1,j}                          if k = i < j-1
/// a_{j-1,j} a_{i,j-1} a_{j-1,j}⁻¹   if k = j-1 > i
/// a_{i,j+1}                          if k = j
/// a_{ij}                             otherwise
/// ```
///
/// Every case is validated against the free-group action in the test suite
/// rather than taken on faith.
pub fn conjugate_by_sigma(k: usize, gen: Pair, n: usize) -> Result<PureBraidWord, BraidError> {
    let (i, j) = (gen.i(), gen.j());
    if j > n {
        return Err(BraidError::PairOutOfRange { i, j, n });
    }
    if k == 0 || k >= n {
        return Err(BraidError::SigmaOutOfRange { k, max: n - 1, n });
    }
    let word = if k + 1 == i {
        pure_word(n, [(i - 1, i, 1), (i - 1, j, 1), (i - 1, i, -1)])
    } else if k == i && k + 1 < j {
        pure_word(n, [(i + 1, j, 1)])
    } else if k + 1 == j && k > i {
        pure_word(n, [(j - 1, j, 1), (i, j - 1, 1), (j - 1, j, -1)])
    } else if k == j {
        pure_word(n, [(i, j + 1, 1)])
    } else {
        pure_word(n, [(i, j, 1)])
    };
    Ok(word)
}

/// The conjugate `σ_k⁻¹ a_{ij} σ_k`, solved case by case from the same
/// formula (validated against the free-group action in the test suite).
pub fn conjugate_by_sigma_inv(k: usize, gen: Pair, n: usize) -> Result<PureBraidWord, BraidError> {
    let (i, j) = (gen.i(), gen.j());
    if j > n {
        return Err(BraidError::PairOutOfRange { i, j, n });
    }
    if k == 0 || k >= n {
        return Err(BraidError::SigmaOutOfRange { k, max: n - 1, n });
    }
    let word = if k + 1 == i {
        pure_word(n, [(i - 1, j, 1)])
    } else if k == i && k + 1 < j {
        pure_word(n, [(i, i + 1, -1), (i + 1, j, 1), (i, i + 1, 1)])
    } else if k + 1 == j && k > i {
        pure_word(n, [(i, j - 1, 1)])
    } else if k == j {
        pure_word(n, [(j, j + 1, -1), (i, j + 1, 1), (j, j + 1, 1)])
    } else {
        pure_word(n, [(i, j, 1)])
    };
    Ok(word)
}

/// Relators of the compact presentation of the pure braid group, one batch
/// per 3- and 4-element strand subset:
///
/// * disjoint or nested pairs commute,
/// * a crossing pair commutes after conjugation,
/// * triples satisfy the two "triple twist" commutation relations.
pub fn artin_relators(n: usize) -> Vec<PureBraidWord> {
    let mut out = Vec::new();
    for t in (1..=n).combinations(3) {
        let (i, j, r) = (t[0], t[1], t[2]);
        out.extend(
            triple_relators_for(i, j, r)
                .into_iter()
                .map(|w| PureBraidWord::new(n, w).expect("in range")),
        );
    }
    for q in (1..=n).combinations(4) {
        let (w, x, y, z) = (q[0], q[1], q[2], q[3]);
        out.extend(
            quad_relators_for(w, x, y, z)
                .into_iter()
                .map(|r| PureBraidWord::new(n, r).expect("in range")),
        );
    }
    out
}

/// The two relators from a strand triple `i < j < r`, as bare words:
/// `[a_{ij} a_{ir}, a_{jr}]` and `[a_{ij}, a_{ir} a_{jr}]`.
pub(crate) fn triple_relators_for(i: usize, j: usize, r: usize) -> [FreeWord<Pair>; 2] {
    let aij = FreeWord::generator(Pair::of(i, j));
    let air = FreeWord::generator(Pair::of(i, r));
    let ajr = FreeWord::generator(Pair::of(j, r));
    [
        FreeWord::commutator(&aij.mul(&air), &ajr),
        FreeWord::commutator(&aij, &air.mul(&ajr)),
    ]
}

/// The three relators from a strand quadruple `w < x < y < z`, as bare
/// words: the disjoint pair, the nested pair, and the crossing pair
/// (conjugated).
pub(crate) fn quad_relators_for(w: usize, x: usize, y: usize, z: usize) -> [FreeWord<Pair>; 3] {
    let g = |a: usize, b: usize| FreeWord::generator(Pair::of(a, b));
    // (w,x) ⊔ (y,z) disjoint and (w,z) ⊃ (x,y) nested: plain commutators
    let disjoint = FreeWord::commutator(&g(y, z), &g(w, x));
    let nested = FreeWord::commutator(&g(w, z), &g(x, y));
    // (x,z) crossing (w,y): [a_{xz}, a_{yz} a_{wy} a_{yz}⁻¹]
    let conj = g(y, z).mul(&g(w, y)).mul(&g(y, z).inverse());
    let crossing = FreeWord::commutator(&g(x, z), &conj);
    [disjoint, nested, crossing]
}

/// Relators of the conjugation-form presentation: for every `r < s < j`
/// and `i < j`, the word `a_{rs}⁻¹ a_{ij} a_{rs} · rhs⁻¹` where `rhs` is
/// the matching case of the five-case action table.
pub fn conjugation_relators(n: usize) -> Vec<PureBraidWord> {
    let mut out = Vec::new();
    for j in 3..=n {
        for (r, s) in (1..j).tuple_combinations() {
            for i in 1..j {
                let ars = FreeWord::generator(Pair::of(r, s));
                let aij = FreeWord::generator(Pair::of(i, j));
                let lhs = ars.inverse().mul(&aij).mul(&ars);
                let rhs = five_case_rhs(r, s, i, j);
                let relator = lhs.mul(&rhs.inverse());
                out.push(PureBraidWord::new(n, relator).expect("in range"));
            }
        }
    }
    out
}

/// Right side of `a_{rs}⁻¹ a_{ij} a_{rs} = ...` for `r < s < j`, `i < j`.
fn five_case_rhs(r: usize, s: usize, i: usize, j: usize) -> FreeWord<Pair> {
    let g = |a: usize, b: usize| FreeWord::generator(Pair::of(a, b));
    if s < i {
        // r < s < i < j
        g(i, j)
    } else if s == i {
        // r < s = i < j
        g(r, j).mul(&g(i, j)).mul(&g(r, j).inverse())
    } else if r < i && i < s {
        // r < i < s < j: conjugate by u = a_{rj} a_{sj} a_{rj}⁻¹ a_{sj}⁻¹
        let u = g(r, j)
            .mul(&g(s, j))
            .mul(&g(r, j).inverse())
            .mul(&g(s, j).inverse());
        u.mul(&g(i, j)).mul(&u.inverse())
    } else if r == i {
        // r = i < s < j
        g(r, j)
            .mul(&g(s, j))
            .mul(&g(i, j))
            .mul(&g(s, j).inverse())
            .mul(&g(r, j).inverse())
    } else {
        // i < r < s < j
        g(i, j)
    }
}

/// Consequences of the presentation used throughout the quotient analysis:
/// the swap identity `a_{sj} a_{rs} a_{sj}⁻¹ = a_{rj}⁻¹ a_{rs} a_{rj}` for
/// `r < s < j`, and the three conjugated variants of the crossing relation
/// for `r < i < s < j`. Returned as relators (LHS · RHS⁻¹).
pub fn auxiliary_relators(n: usize) -> Vec<PureBraidWord> {
    let g = |a: usize, b: usize| FreeWord::generator(Pair::of(a, b));
    let mut out = Vec::new();
    for t in (1..=n).combinations(3) {
        let (r, s, j) = (t[0], t[1], t[2]);
        let lhs = g(s, j).mul(&g(r, s)).mul(&g(s, j).inverse());
        let rhs = g(r, j).inverse().mul(&g(r, s)).mul(&g(r, j));
        out.push(PureBraidWord::new(n, lhs.mul(&rhs.inverse())).expect("in range"));
    }
    for q in (1..=n).combinations(4) {
        let (r, i, s, j) = (q[0], q[1], q[2], q[3]);
        let variants = [
            FreeWord::commutator(&g(i, j), &g(r, i).mul(&g(r, s)).mul(&g(r, i).inverse())),
            FreeWord::commutator(&g(r, s), &g(i, s).mul(&g(i, j)).mul(&g(i, s).inverse())),
            FreeWord::commutator(&g(r, s), &g(r, j).mul(&g(i, j)).mul(&g(r, j).inverse())),
        ];
        for v in variants {
            out.push(PureBraidWord::new(n, v).expect("in range"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::{braid_to_endo, is_trivial_pure, pure_to_endo};
    use super::*;
    use crate::freegroup::Sign;

    #[test]
    fn pure_generator_shapes() {
        assert_eq!(pure_generator(1, 2, 2).unwrap().to_string(), "s1 s1");
        assert_eq!(pure_generator(1, 3, 3).unwrap().to_string(), "s2 s1 s1 s2^-1");
        assert_eq!(pure_generator(2, 3, 3).unwrap().to_string(), "s2 s2");
        for (i, j) in [(1, 2), (1, 4), (2, 5), (3, 4)] {
            assert_eq!(pure_generator(i, j, 5).unwrap().word().len(), 2 * (j - i));
        }
        assert!(pure_generator(1, 6, 5).is_err());
    }

    #[test]
    fn full_twist_ordering() {
        assert_eq!(full_twist(2).to_string(), "a_1_2");
        assert_eq!(full_twist(3).to_string(), "a_1_2 a_1_3 a_2_3");
        assert_eq!(
            full_twist(4).to_string(),
            "a_1_2 a_1_3 a_2_3 a_1_4 a_2_4 a_3_4"
        );
    }

    #[test]
    fn full_twist_is_central() {
        for n in 2..=4 {
            let delta2 = full_twist(n);
            for i in 1..=n {
                for j in (i + 1)..=n {
                    let a = PureBraidWord::generator(n, i, j).unwrap();
                    let c = PureBraidWord::commutator(&delta2, &a);
                    assert!(is_trivial_pure(&c).unwrap(), "[Δ², a_{i}_{j}] in P_{n}");
                }
            }
        }
    }

    #[test]
    fn full_twist_exponent_sums() {
        let d = full_twist(3);
        assert_eq!(d.word().exponent_sum(&Pair::of(1, 2)), 1);
        assert_eq!(d.word().exponent_sum(&Pair::of(2, 3)), 1);
    }

    fn conjugation_matches(k: usize, i: usize, j: usize, n: usize, inverse: bool) -> bool {
        use crate::freegroup::Letter;
        let pair = Pair::of(i, j);
        let sigma_sign = if inverse { Sign::Minus } else { Sign::Plus };
        let gen = pure_generator(i, j, n).unwrap();
        let sigma = BraidWord::new(
            n,
            FreeWord::from_letters([Letter::new(Sigma(k), sigma_sign)]),
        )
        .unwrap();
        let conjugated = sigma.mul(&gen).mul(&sigma.inverse());
        let table = if inverse {
            conjugate_by_sigma_inv(k, pair, n).unwrap()
        } else {
            conjugate_by_sigma(k, pair, n).unwrap()
        };
        braid_to_endo(&conjugated).unwrap() == pure_to_endo(&table).unwrap()
    }

    #[test]
    fn conjugation_action_matches_free_group_action() {
        for n in 2..=5 {
            for k in 1..n {
                for i in 1..=n {
                    for j in (i + 1)..=n {
                        assert!(
                            conjugation_matches(k, i, j, n, false),
                            "σ_{k} a_{i}_{j} σ_{k}⁻¹ in B_{n}"
                        );
                        assert!(
                            conjugation_matches(k, i, j, n, true),
                            "σ_{k}⁻¹ a_{i}_{j} σ_{k} in B_{n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn conjugation_spot_values() {
        // σ_1 a_1_2 σ_1⁻¹ = a_1_2 (otherwise case: k = i = j-1)
        assert_eq!(
            conjugate_by_sigma(1, Pair::of(1, 2), 3).unwrap().to_string(),
            "a_1_2"
        );
        // σ_2 a_1_2 σ_2⁻¹ = a_1_3 (case k = j)
        assert_eq!(
            conjugate_by_sigma(2, Pair::of(1, 2), 3).unwrap().to_string(),
            "a_1_3"
        );
        // σ_3 a_1_2 σ_3⁻¹ = a_1_2 (disjoint)
        assert_eq!(
            conjugate_by_sigma(3, Pair::of(1, 2), 4).unwrap().to_string(),
            "a_1_2"
        );
    }

    #[test]
    fn relator_families_are_trivial() {
        for n in 3..=4 {
            for rel in artin_relators(n)
                .into_iter()
                .chain(conjugation_relators(n))
                .chain(auxiliary_relators(n))
            {
                assert!(is_trivial_pure(&rel).unwrap(), "relator {rel} in P_{n}");
            }
        }
    }
}
