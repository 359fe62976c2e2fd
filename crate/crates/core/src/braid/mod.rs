//! Braid and pure braid groups as concrete computational objects.
//!
//! Braid words are sequences of signed generators `σ_k`; pure braid words
//! are sequences of signed generators `a_{ij}`. Both act on the free group
//! on strand generators `x_1, ..., x_n` through the Artin representation,
//! which is faithful, so equality of induced endomorphisms decides equality
//! of braids exactly.
//!
//! # Composition convention
//!
//! A word read left to right maps to the function composition of its letter
//! automorphisms in the same left-to-right order, with functions composing
//! right to left: `endo(uv) = endo(u) ∘ endo(v)`, the rightmost factor
//! acting first on the argument. The same convention drives the symmetric
//! group image: `perm(σ_1 σ_2)` sends `1 → 2 → 3 → 1` on three strands.
//! The relation and conjugation test suites pin this choice.

mod artin;
mod words;

pub use artin::{
    braid_permutation, braid_to_endo, braid_to_endo_with_limit, is_trivial_pure,
    is_trivial_pure_with_limit, pure_to_endo, pure_to_endo_with_limit, sigma_endo,
};
pub use words::{
    artin_relators, auxiliary_relators, conjugate_by_sigma, conjugate_by_sigma_inv,
    conjugation_relators, full_twist, pure_generator,
};
pub(crate) use words::{quad_relators_for, triple_relators_for};

use std::fmt;

use thiserror::Error;

use crate::freegroup::{FreeWord, Letter, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("braid generator index {k} out of range 1..={max} for {n} strands")]
    SigmaOutOfRange { k: usize, max: usize, n: usize },
    #[error("strand pair ({i}, {j}) invalid: need 1 <= i < j <= {n}")]
    PairOutOfRange { i: usize, j: usize, n: usize },
    #[error("strand count must be at least 2, got {0}")]
    TooFewStrands(usize),
    #[error("cannot parse word token `{0}`")]
    BadToken(String),
}

/// Free-group generator `x_k`, one per strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Strand(pub usize);

impl fmt::Display for Strand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x_{}", self.0)
    }
}

/// Pure braid generator subscript: an unordered strand pair, stored with
/// `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair {
    i: usize,
    j: usize,
}

impl Pair {
    pub fn new(i: usize, j: usize) -> Result<Pair, BraidError> {
        if i == 0 || i >= j {
            return Err(BraidError::PairOutOfRange { i, j, n: 0 });
        }
        Ok(Pair { i, j })
    }

    /// Infallible constructor for literals; panics on `i >= j` or `i == 0`.
    pub fn of(i: usize, j: usize) -> Pair {
        Pair::new(i, j).expect("valid strand pair")
    }

    /// The pair {a, b} in sorted order.
    pub fn sorted(a: usize, b: usize) -> Pair {
        Pair::of(a.min(b), a.max(b))
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn contains(&self, v: usize) -> bool {
        self.i == v || self.j == v
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a_{}_{}", self.i, self.j)
    }
}

/// Braid generator symbol `σ_k` (printed `s<k>`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sigma(pub usize);

impl fmt::Display for Sigma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.0)
    }
}

/// A word in the braid generators of `B_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    n: usize,
    word: FreeWord<Sigma>,
}

impl BraidWord {
    pub fn new(n: usize, word: FreeWord<Sigma>) -> Result<Self, BraidError> {
        if n < 2 {
            return Err(BraidError::TooFewStrands(n));
        }
        for letter in word.letters() {
            let k = letter.symbol.0;
            if k == 0 || k >= n {
                return Err(BraidError::SigmaOutOfRange { k, max: n - 1, n });
            }
        }
        Ok(BraidWord { n, word })
    }

    pub fn identity(n: usize) -> Self {
        BraidWord {
            n,
            word: FreeWord::identity(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn word(&self) -> &FreeWord<Sigma> {
        &self.word
    }

    pub fn mul(&self, other: &BraidWord) -> BraidWord {
        debug_assert_eq!(self.n, other.n);
        BraidWord {
            n: self.n,
            word: self.word.mul(&other.word),
        }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            word: self.word.inverse(),
        }
    }

    /// Parses whitespace-separated tokens `s<k>`, `s<k>^<e>`; `e` is the
    /// empty word.
    pub fn parse(n: usize, text: &str) -> Result<Self, BraidError> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            if token == "e" {
                continue;
            }
            let (base, exp) = split_exponent(token)?;
            let k: usize = base
                .strip_prefix('s')
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| BraidError::BadToken(token.to_string()))?;
            push_power(&mut letters, Sigma(k), exp);
        }
        BraidWord::new(n, FreeWord::from_letters(letters))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word)
    }
}

/// A word in the pure braid generators `a_{ij}` of `P_n`.
///
/// Words are stored freely reduced; free reduction never changes the group
/// element, so this is harmless for every quotient interpretation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PureBraidWord {
    n: usize,
    word: FreeWord<Pair>,
}

impl PureBraidWord {
    pub fn new(n: usize, word: FreeWord<Pair>) -> Result<Self, BraidError> {
        if n < 2 {
            return Err(BraidError::TooFewStrands(n));
        }
        for letter in word.letters() {
            let p = letter.symbol;
            if p.j > n {
                return Err(BraidError::PairOutOfRange { i: p.i, j: p.j, n });
            }
        }
        Ok(PureBraidWord { n, word })
    }

    pub fn identity(n: usize) -> Self {
        PureBraidWord {
            n,
            word: FreeWord::identity(),
        }
    }

    /// The one-letter word `a_{ij}` in `P_n`.
    pub fn generator(n: usize, i: usize, j: usize) -> Result<Self, BraidError> {
        let pair = Pair::new(i, j)?;
        PureBraidWord::new(n, FreeWord::generator(pair))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn word(&self) -> &FreeWord<Pair> {
        &self.word
    }

    pub fn mul(&self, other: &PureBraidWord) -> PureBraidWord {
        debug_assert_eq!(self.n, other.n);
        PureBraidWord {
            n: self.n,
            word: self.word.mul(&other.word),
        }
    }

    pub fn inverse(&self) -> PureBraidWord {
        PureBraidWord {
            n: self.n,
            word: self.word.inverse(),
        }
    }

    pub fn commutator(u: &PureBraidWord, v: &PureBraidWord) -> PureBraidWord {
        debug_assert_eq!(u.n, v.n);
        PureBraidWord {
            n: u.n,
            word: FreeWord::commutator(&u.word, &v.word),
        }
    }

    /// Expands every `a_{ij}` letter into its braid word in the `σ_k`.
    pub fn expand(&self) -> BraidWord {
        let mut acc = FreeWord::identity();
        for letter in self.word.letters() {
            let gen = words::pure_generator(letter.symbol.i, letter.symbol.j, self.n)
                .expect("letters validated at construction");
            let factor = match letter.sign {
                Sign::Plus => gen.word,
                Sign::Minus => gen.word.inverse(),
            };
            acc = acc.mul(&factor);
        }
        BraidWord { n: self.n, word: acc }
    }

    /// Parses whitespace-separated tokens `a_<i>_<j>`, `a_<i>_<j>^<e>`;
    /// `e` is the empty word.
    pub fn parse(n: usize, text: &str) -> Result<Self, BraidError> {
        let word = parse_pair_word(text)?;
        PureBraidWord::new(n, word)
    }
}

impl fmt::Display for PureBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word)
    }
}

/// Parses a word over the free-group alphabet `x_<k>`; `e` is the empty
/// word.
pub fn parse_strand_word(text: &str) -> Result<FreeWord<Strand>, BraidError> {
    let mut letters = Vec::new();
    for token in text.split_whitespace() {
        if token == "e" {
            continue;
        }
        let (base, exp) = split_exponent(token)?;
        let k: usize = base
            .strip_prefix("x_")
            .and_then(|t| t.parse().ok())
            .filter(|&k| k > 0)
            .ok_or_else(|| BraidError::BadToken(token.to_string()))?;
        push_power(&mut letters, Strand(k), exp);
    }
    Ok(FreeWord::from_letters(letters))
}

/// Parses a word over the `a_<i>_<j>` alphabet without pinning a strand
/// count (used for words over a graph's edge generators).
pub fn parse_pair_word(text: &str) -> Result<FreeWord<Pair>, BraidError> {
    let mut letters = Vec::new();
    for token in text.split_whitespace() {
        if token == "e" {
            continue;
        }
        let (base, exp) = split_exponent(token)?;
        let rest = base
            .strip_prefix("a_")
            .ok_or_else(|| BraidError::BadToken(token.to_string()))?;
        let (i, j) = rest
            .split_once('_')
            .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
            .ok_or_else(|| BraidError::BadToken(token.to_string()))?;
        let pair = Pair::new(i, j).map_err(|_| BraidError::BadToken(token.to_string()))?;
        push_power(&mut letters, pair, exp);
    }
    Ok(FreeWord::from_letters(letters))
}

fn split_exponent(token: &str) -> Result<(&str, i64), BraidError> {
    match token.split_once('^') {
        None => Ok((token, 1)),
        Some((base, exp)) => {
            let e: i64 = exp
                .parse()
                .map_err(|_| BraidError::BadToken(token.to_string()))?;
            Ok((base, e))
        }
    }
}

fn push_power<S: crate::freegroup::Symbol>(letters: &mut Vec<Letter<S>>, symbol: S, exp: i64) {
    let sign = if exp >= 0 { Sign::Plus } else { Sign::Minus };
    for _ in 0..exp.unsigned_abs() {
        letters.push(Letter::new(symbol.clone(), sign));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_validation() {
        assert!(Pair::new(2, 2).is_err());
        assert!(Pair::new(0, 1).is_err());
        assert_eq!(Pair::sorted(3, 1), Pair::of(1, 3));
    }

    #[test]
    fn word_parsing_round_trips() {
        let w = PureBraidWord::parse(4, "a_1_2 a_3_4^-1 a_1_2^2").unwrap();
        assert_eq!(w.to_string(), "a_1_2 a_3_4^-1 a_1_2 a_1_2");
        assert_eq!(PureBraidWord::parse(4, "e").unwrap().to_string(), "e");
        assert!(PureBraidWord::parse(3, "a_1_4").is_err());
        assert!(PureBraidWord::parse(3, "b_1_2").is_err());

        let b = BraidWord::parse(3, "s1 s2^-1").unwrap();
        assert_eq!(b.to_string(), "s1 s2^-1");
        assert!(BraidWord::parse(3, "s3").is_err());

        let x = parse_strand_word("x_1 x_2^-1 e x_1^2").unwrap();
        assert_eq!(x.to_string(), "x_1 x_2^-1 x_1 x_1");
        assert!(parse_strand_word("x_0").is_err());
    }

    #[test]
    fn expansion_validates_range() {
        assert!(PureBraidWord::generator(3, 1, 4).is_err());
        let w = PureBraidWord::generator(3, 1, 3).unwrap();
        assert_eq!(w.expand().word().len(), 4);
    }
}
