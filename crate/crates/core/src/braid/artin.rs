//! The representation of braids by free-group automorphisms, and the exact
//! triviality oracle built on its faithfulness.

use crate::freegroup::{Endomorphism, EvalError, FreeWord, Letter, Sign, DEFAULT_WORD_LIMIT};
use crate::graphs::Permutation;

use super::{BraidError, BraidWord, PureBraidWord, Strand};

/// The automorphism of the free group on `x_1, ..., x_n` induced by the
/// generator `σ_k` (sign `Plus`) or its inverse (sign `Minus`):
///
/// ```text
/// σ_k:      x_k ↦ x_k x_{k+1} x_k⁻¹,   x_{k+1} ↦ x_k,        others fixed
/// σ_k⁻¹:    x_k ↦ x_{k+1},             x_{k+1} ↦ x_{k+1}⁻¹ x_k x_{k+1}
/// ```
///
/// The inverse is stored explicitly rather than computed by a general
/// inversion routine.
pub fn sigma_endo(k: usize, n: usize, sign: Sign) -> Result<Endomorphism<Strand>, BraidError> {
    if n < 2 {
        return Err(BraidError::TooFewStrands(n));
    }
    if k == 0 || k >= n {
        return Err(BraidError::SigmaOutOfRange { k, max: n - 1, n });
    }
    let (img_k, img_k1) = sigma_images(k, sign);
    Ok(Endomorphism::from_images((1..=n).map(|t| {
        let s = Strand(t);
        if t == k {
            (s, img_k.clone())
        } else if t == k + 1 {
            (s, img_k1.clone())
        } else {
            (s, FreeWord::generator(s))
        }
    })))
}

fn sigma_images(k: usize, sign: Sign) -> (FreeWord<Strand>, FreeWord<Strand>) {
    let xk = Strand(k);
    let xk1 = Strand(k + 1);
    match sign {
        Sign::Plus => (
            FreeWord::from_letters([
                Letter::new(xk, Sign::Plus),
                Letter::new(xk1, Sign::Plus),
                Letter::new(xk, Sign::Minus),
            ]),
            FreeWord::generator(xk),
        ),
        Sign::Minus => (
            FreeWord::generator(xk1),
            FreeWord::from_letters([
                Letter::new(xk1, Sign::Minus),
                Letter::new(xk, Sign::Plus),
                Letter::new(xk1, Sign::Plus),
            ]),
        ),
    }
}

/// Substitutes the `σ_k^±1` images into `w` in one pass.
fn apply_sigma(
    k: usize,
    sign: Sign,
    w: &FreeWord<Strand>,
    limit: usize,
) -> Result<FreeWord<Strand>, EvalError> {
    let (img_k, img_k1) = sigma_images(k, sign);
    let mut out: Vec<Letter<Strand>> = Vec::with_capacity(w.len());
    let push = |out: &mut Vec<Letter<Strand>>, l: Letter<Strand>| match out.last() {
        Some(last) if last.symbol == l.symbol && last.sign != l.sign => {
            out.pop();
        }
        _ => out.push(l),
    };
    for letter in w.letters() {
        let image = if letter.symbol.0 == k {
            Some(&img_k)
        } else if letter.symbol.0 == k + 1 {
            Some(&img_k1)
        } else {
            None
        };
        match image {
            None => push(&mut out, letter.clone()),
            Some(img) => match letter.sign {
                Sign::Plus => {
                    for l in img.letters() {
                        push(&mut out, l.clone());
                    }
                }
                Sign::Minus => {
                    for l in img.letters().iter().rev() {
                        push(&mut out, l.inverse());
                    }
                }
            },
        }
        if out.len() > limit {
            return Err(EvalError::LengthLimit { limit });
        }
    }
    Ok(FreeWord::from_letters(out))
}

/// Image of the free-group generator `x_t` under the automorphism of a
/// braid word: letters feed left to right, the rightmost acting first.
fn image_of_strand(
    b: &BraidWord,
    t: usize,
    limit: usize,
) -> Result<FreeWord<Strand>, EvalError> {
    let mut w = FreeWord::generator(Strand(t));
    for letter in b.word().letters().iter().rev() {
        w = apply_sigma(letter.symbol.0, letter.sign, &w, limit)?;
    }
    Ok(w)
}

/// The endomorphism of the free group on `x_1, ..., x_n` induced by a braid
/// word. Homomorphic: `endo(uv) = compose(endo(u), endo(v))`.
pub fn braid_to_endo(b: &BraidWord) -> Result<Endomorphism<Strand>, EvalError> {
    braid_to_endo_with_limit(b, DEFAULT_WORD_LIMIT)
}

pub fn braid_to_endo_with_limit(
    b: &BraidWord,
    limit: usize,
) -> Result<Endomorphism<Strand>, EvalError> {
    let mut images = Vec::with_capacity(b.n());
    for t in 1..=b.n() {
        images.push((Strand(t), image_of_strand(b, t, limit)?));
    }
    Ok(Endomorphism::from_images(images))
}

/// The Artin representation restricted to pure braid words: expand the
/// `a_{ij}` letters and evaluate.
pub fn pure_to_endo(w: &PureBraidWord) -> Result<Endomorphism<Strand>, EvalError> {
    pure_to_endo_with_limit(w, DEFAULT_WORD_LIMIT)
}

pub fn pure_to_endo_with_limit(
    w: &PureBraidWord,
    limit: usize,
) -> Result<Endomorphism<Strand>, EvalError> {
    braid_to_endo_with_limit(&w.expand(), limit)
}

/// The permutation of strand endpoints induced by a braid word, under the
/// same left-to-right convention as the free-group action. Pure braid
/// words are exactly the kernel.
pub fn braid_permutation(b: &BraidWord) -> Permutation {
    let mut acc = Permutation::identity(b.n());
    for letter in b.word().letters() {
        let k = letter.symbol.0;
        acc = acc.compose(&Permutation::transposition(b.n(), k, k + 1));
    }
    acc
}

/// Exact triviality test for a pure braid word, via faithfulness of the
/// free-group action.
///
/// A nonzero exponent sum on any generator already certifies nontriviality
/// (the abelianization is free abelian on the `a_{ij}`), so that cheap
/// filter runs before the endomorphism comparison.
pub fn is_trivial_pure(w: &PureBraidWord) -> Result<bool, EvalError> {
    is_trivial_pure_with_limit(w, DEFAULT_WORD_LIMIT)
}

pub fn is_trivial_pure_with_limit(w: &PureBraidWord, limit: usize) -> Result<bool, EvalError> {
    for symbol in w.word().symbols() {
        if w.word().exponent_sum(&symbol) != 0 {
            return Ok(false);
        }
    }
    let expanded = w.expand();
    for t in 1..=w.n() {
        if image_of_strand(&expanded, t, limit)? != FreeWord::generator(Strand(t)) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::super::{pure_generator, Pair};
    use super::*;
    use crate::freegroup::Endomorphism;

    fn x(t: usize) -> FreeWord<Strand> {
        FreeWord::generator(Strand(t))
    }

    #[test]
    fn sigma_endo_formulas() {
        let s = sigma_endo(1, 2, Sign::Plus).unwrap();
        assert_eq!(
            s.image(&Strand(1)).unwrap(),
            &x(1).mul(&x(2)).mul(&x(1).inverse())
        );
        assert_eq!(s.image(&Strand(2)).unwrap(), &x(1));

        let s13 = sigma_endo(1, 3, Sign::Plus).unwrap();
        assert_eq!(s13.image(&Strand(3)).unwrap(), &x(3));

        assert!(sigma_endo(2, 2, Sign::Plus).is_err());
    }

    #[test]
    fn sigma_inverse_pair_composes_to_identity() {
        let f = sigma_endo(1, 2, Sign::Plus).unwrap();
        let g = sigma_endo(1, 2, Sign::Minus).unwrap();
        assert!(Endomorphism::compose(&f, &g).unwrap().is_identity());
        assert!(Endomorphism::compose(&g, &f).unwrap().is_identity());
    }

    #[test]
    fn braid_relations_hold_as_endomorphisms() {
        for n in 3..=6 {
            for i in 1..n - 1 {
                let lhs = BraidWord::parse(n, &format!("s{i} s{} s{i}", i + 1)).unwrap();
                let rhs = BraidWord::parse(n, &format!("s{} s{i} s{}", i + 1, i + 1)).unwrap();
                assert_eq!(braid_to_endo(&lhs).unwrap(), braid_to_endo(&rhs).unwrap());
            }
            for i in 1..n {
                for j in 1..n {
                    if i.abs_diff(j) >= 2 {
                        let lhs = BraidWord::parse(n, &format!("s{i} s{j}")).unwrap();
                        let rhs = BraidWord::parse(n, &format!("s{j} s{i}")).unwrap();
                        assert_eq!(braid_to_endo(&lhs).unwrap(), braid_to_endo(&rhs).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn empty_word_is_identity() {
        let e = braid_to_endo(&BraidWord::identity(4)).unwrap();
        assert!(e.is_identity());
    }

    #[test]
    fn pure_a12_action_on_two_strands() {
        let a12 = PureBraidWord::generator(2, 1, 2).unwrap();
        let endo = pure_to_endo(&a12).unwrap();
        let x1x2 = x(1).mul(&x(2));
        assert_eq!(
            endo.image(&Strand(1)).unwrap(),
            &x1x2.mul(&x(1)).mul(&x1x2.inverse())
        );
        assert_eq!(
            endo.image(&Strand(2)).unwrap(),
            &x(1).mul(&x(2)).mul(&x(1).inverse())
        );
    }

    #[test]
    fn triviality_oracle() {
        let n = 3;
        let a13 = PureBraidWord::generator(n, 1, 3).unwrap();
        let a23 = PureBraidWord::generator(n, 2, 3).unwrap();
        assert!(is_trivial_pure(&a13.mul(&a13.inverse())).unwrap());
        assert!(!is_trivial_pure(&PureBraidWord::commutator(&a13, &a23)).unwrap());
        assert!(!is_trivial_pure(&a13).unwrap());
    }

    #[test]
    fn triviality_implies_zero_exponent_sums() {
        use proptest::prelude::*;
        let arb = proptest::collection::vec((1usize..=4, 1usize..=4, prop::bool::ANY), 0..8)
            .prop_filter_map("distinct", |ls| {
                let letters: Vec<Letter<Pair>> = ls
                    .into_iter()
                    .filter(|(a, b, _)| a != b)
                    .map(|(a, b, neg)| {
                        Letter::new(
                            Pair::sorted(a, b),
                            if neg { Sign::Minus } else { Sign::Plus },
                        )
                    })
                    .collect();
                PureBraidWord::new(4, FreeWord::from_letters(letters)).ok()
            });
        proptest!(ProptestConfig::with_cases(128), |(w in arb)| {
            if is_trivial_pure(&w).unwrap() {
                for s in w.word().symbols() {
                    prop_assert_eq!(w.word().exponent_sum(&s), 0);
                }
            }
        });
    }

    #[test]
    fn braid_permutation_convention() {
        let b = BraidWord::parse(3, "s1").unwrap();
        assert!(braid_permutation(&b).swaps(1, 2));

        let b = BraidWord::parse(3, "s1 s2").unwrap();
        let p = braid_permutation(&b);
        assert_eq!(p.images(), &[2, 3, 1]); // 1 → 2 → 3 → 1

        for (i, j, n) in [(1, 2, 2), (1, 3, 3), (2, 4, 5)] {
            let gen = pure_generator(i, j, n).unwrap();
            assert!(braid_permutation(&gen).is_identity());
        }
        let _ = Pair::of(1, 2);
    }
}
