//! Cross-validates the free-group-action triviality oracle on 3 strands
//! against an independent decision procedure.
//!
//! The 3-strand pure braid group splits as (center) x (free of rank 2):
//! with a = a_{12}, b = a_{13}, c = a_{23} and the central element
//! z = a b c, the map
//!
//! ```text
//! a ↦ (1, (uv)⁻¹),   b ↦ (0, u),   c ↦ (0, v)
//! ```
//!
//! into Z × F(u, v) is an isomorphism. A word is trivial exactly when its
//! a-exponent sum vanishes and its substituted image reduces to the empty
//! word — no braid machinery involved, so agreement here exercises the
//! generator expansion, the substitution engine, and the composition
//! convention end to end.

use graphic_braids::braid::{is_trivial_pure, Pair, PureBraidWord};
use graphic_braids::freegroup::{FreeWord, Letter, Sign};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn split_oracle_trivial(w: &FreeWord<Pair>) -> bool {
    if w.exponent_sum(&Pair::of(1, 2)) != 0 {
        return false;
    }
    let mut letters: Vec<Letter<char>> = Vec::new();
    for l in w.letters() {
        let image: Vec<Letter<char>> = match (l.symbol.i(), l.symbol.j()) {
            (1, 2) => vec![
                Letter::new('v', Sign::Minus),
                Letter::new('u', Sign::Minus),
            ],
            (1, 3) => vec![Letter::new('u', Sign::Plus)],
            (2, 3) => vec![Letter::new('v', Sign::Plus)],
            other => panic!("unexpected generator {other:?}"),
        };
        match l.sign {
            Sign::Plus => letters.extend(image),
            Sign::Minus => letters.extend(image.into_iter().rev().map(|x| x.inverse())),
        }
    }
    FreeWord::from_letters(letters).is_empty()
}

const GENS: [(usize, usize); 3] = [(1, 2), (1, 3), (2, 3)];

fn word_from_digits(digits: &[usize]) -> FreeWord<Pair> {
    FreeWord::from_letters(digits.iter().map(|&d| {
        let (i, j) = GENS[d % 3];
        let sign = if d < 3 { Sign::Plus } else { Sign::Minus };
        Letter::new(Pair::of(i, j), sign)
    }))
}

#[test]
fn oracles_agree_on_all_short_words() {
    // every word of length <= 6 over the six signed generators
    for len in 0..=6usize {
        let mut digits = vec![0usize; len];
        loop {
            let w = word_from_digits(&digits);
            let pure = PureBraidWord::new(3, w.clone()).unwrap();
            assert_eq!(
                is_trivial_pure(&pure).unwrap(),
                split_oracle_trivial(&w),
                "disagreement on {w}"
            );
            // odometer
            let mut pos = 0;
            loop {
                if pos == len {
                    break;
                }
                digits[pos] += 1;
                if digits[pos] < 6 {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if pos == len {
                break;
            }
        }
    }
}

#[test]
fn oracles_agree_on_random_long_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0bac1e);
    for _ in 0..2000 {
        let len = rng.random_range(0..=14);
        let digits: Vec<usize> = (0..len).map(|_| rng.random_range(0..6)).collect();
        let w = word_from_digits(&digits);
        let pure = PureBraidWord::new(3, w.clone()).unwrap();
        assert_eq!(
            is_trivial_pure(&pure).unwrap(),
            split_oracle_trivial(&w),
            "disagreement on {w}"
        );
    }
}

#[test]
fn oracles_agree_on_crafted_trivial_words() {
    // conjugated relator products are trivial but reduce nontrivially
    let gen = |i, j| FreeWord::generator(Pair::of(i, j));
    let relator = FreeWord::commutator(&gen(1, 2).mul(&gen(1, 3)), &gen(2, 3));
    let central = gen(1, 2).mul(&gen(1, 3)).mul(&gen(2, 3));
    let cases = [
        gen(1, 3).mul(&relator).mul(&gen(1, 3).inverse()),
        FreeWord::commutator(&central, &gen(1, 2).mul(&gen(2, 3))),
        relator.mul(&FreeWord::commutator(&central, &gen(1, 3))),
    ];
    for w in cases {
        assert!(split_oracle_trivial(&w), "oracle rejects {w}");
        let pure = PureBraidWord::new(3, w).unwrap();
        assert!(is_trivial_pure(&pure).unwrap());
    }
}
