//! Exact free-group computation over an abstract alphabet.
//!
//! Words are kept freely reduced at all times: a [`FreeWord`] never contains
//! an adjacent pair `s s^-1` or `s^-1 s`. Equality of reduced words is
//! equality in the free group, so `==` decides the word problem here.
//!
//! The same engine serves several alphabets: strand generators `x_k` of a
//! free group, pure braid generators `a_{ij}`, and projected quotients of
//! either. Letters therefore carry an opaque [`Symbol`] rather than a fixed
//! generator type.
//!
//! # Composition convention
//!
//! `compose(f, g)` is the map "apply `g` first, then `f`", i.e. ordinary
//! function composition `f ∘ g`. Braid words feed their letters left to
//! right into this convention; see the `braid` module.
//!
//! # Length guard
//!
//! Applying an endomorphism can grow words exponentially (Artin images of
//! long braid words do). Substitution operations therefore take a length
//! limit and fail with [`EvalError::LengthLimit`] instead of exhausting
//! memory. The limit only ever produces an error, never a wrong answer.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use thiserror::Error;

/// Default cap on intermediate word length during substitution.
pub const DEFAULT_WORD_LIMIT: usize = 1_000_000;

/// Anything usable as a generator symbol.
pub trait Symbol: Clone + Eq + Ord + Hash + fmt::Debug {}
impl<T: Clone + Eq + Ord + Hash + fmt::Debug> Symbol for T {}

/// Failure modes of substitution-based evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    /// An intermediate word exceeded the configured length limit.
    #[error("intermediate word exceeded the length limit of {limit} letters")]
    LengthLimit { limit: usize },
    /// A word contained a symbol outside the endomorphism's domain.
    #[error("symbol {0} is not in the endomorphism domain")]
    UnknownSymbol(String),
}

/// Sign of a letter: a generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A single signed generator occurrence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter<S> {
    pub symbol: S,
    pub sign: Sign,
}

impl<S: Symbol> Letter<S> {
    pub fn new(symbol: S, sign: Sign) -> Self {
        Letter { symbol, sign }
    }

    pub fn inverse(&self) -> Letter<S> {
        Letter {
            symbol: self.symbol.clone(),
            sign: self.sign.flip(),
        }
    }

    fn cancels(&self, other: &Letter<S>) -> bool {
        self.symbol == other.symbol && self.sign != other.sign
    }
}

/// A freely reduced word over symbols of type `S`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FreeWord<S: Symbol> {
    letters: Vec<Letter<S>>,
}

fn push_reduced<S: Symbol>(out: &mut Vec<Letter<S>>, letter: Letter<S>) {
    match out.last() {
        Some(last) if last.cancels(&letter) => {
            out.pop();
        }
        _ => out.push(letter),
    }
}

impl<S: Symbol> FreeWord<S> {
    /// The empty word.
    pub fn identity() -> Self {
        FreeWord { letters: Vec::new() }
    }

    /// The one-letter word `s`.
    pub fn generator(symbol: S) -> Self {
        FreeWord {
            letters: vec![Letter::new(symbol, Sign::Plus)],
        }
    }

    /// Freely reduces an arbitrary letter sequence. Idempotent.
    pub fn from_letters<I: IntoIterator<Item = Letter<S>>>(letters: I) -> Self {
        let mut out = Vec::new();
        for letter in letters {
            push_reduced(&mut out, letter);
        }
        FreeWord { letters: out }
    }

    pub fn letters(&self) -> &[Letter<S>] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Reduced product `self · other`.
    pub fn mul(&self, other: &FreeWord<S>) -> FreeWord<S> {
        let mut out = self.letters.clone();
        for letter in &other.letters {
            push_reduced(&mut out, letter.clone());
        }
        FreeWord { letters: out }
    }

    /// Reduced inverse.
    pub fn inverse(&self) -> FreeWord<S> {
        FreeWord {
            letters: self.letters.iter().rev().map(Letter::inverse).collect(),
        }
    }

    /// The commutator `[u, v] = u^-1 v^-1 u v`.
    pub fn commutator(u: &FreeWord<S>, v: &FreeWord<S>) -> FreeWord<S> {
        u.inverse().mul(&v.inverse()).mul(u).mul(v)
    }

    /// Deletes every letter whose symbol fails `keep`, then reduces.
    ///
    /// This is the coordinate projection: a homomorphism onto the subgroup
    /// generated by the kept symbols.
    pub fn project<F: Fn(&S) -> bool>(&self, keep: F) -> FreeWord<S> {
        FreeWord::from_letters(self.letters.iter().filter(|l| keep(&l.symbol)).cloned())
    }

    /// Signed count of occurrences of `s`.
    pub fn exponent_sum(&self, s: &S) -> i64 {
        self.letters
            .iter()
            .filter(|l| &l.symbol == s)
            .map(|l| l.sign.as_i64())
            .sum()
    }

    /// Distinct symbols occurring in the word, in order of first occurrence.
    pub fn symbols(&self) -> Vec<S> {
        let mut seen = Vec::new();
        for l in &self.letters {
            if !seen.contains(&l.symbol) {
                seen.push(l.symbol.clone());
            }
        }
        seen
    }

    /// Strips matching first/last inverse pairs: the cyclically reduced core.
    pub fn cyclically_reduced(&self) -> FreeWord<S> {
        let mut letters = self.letters.clone();
        while letters.len() >= 2 {
            let first = letters.first().unwrap();
            let last = letters.last().unwrap();
            if first.cancels(last) {
                letters.remove(0);
                letters.pop();
            } else {
                break;
            }
        }
        FreeWord { letters }
    }

    /// All cyclic rotations. Only meaningful on cyclically reduced words,
    /// where every rotation is again reduced.
    pub fn rotations(&self) -> Vec<FreeWord<S>> {
        let k = self.letters.len().max(1);
        (0..k)
            .map(|r| {
                let rotated = self
                    .letters
                    .iter()
                    .cycle()
                    .skip(r)
                    .take(self.letters.len())
                    .cloned();
                FreeWord::from_letters(rotated)
            })
            .collect()
    }
}

impl<S: Symbol + fmt::Display> fmt::Display for FreeWord<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (k, letter) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            match letter.sign {
                Sign::Plus => write!(f, "{}", letter.symbol)?,
                Sign::Minus => write!(f, "{}^-1", letter.symbol)?,
            }
        }
        Ok(())
    }
}

/// A map from a finite alphabet into the free group on that alphabet.
///
/// Endomorphisms are containers with composition only; two are equal exactly
/// when their domains agree and all images agree as reduced words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Endomorphism<S: Symbol> {
    images: BTreeMap<S, FreeWord<S>>,
}

impl<S: Symbol> Endomorphism<S> {
    /// The identity on the given alphabet.
    pub fn identity<I: IntoIterator<Item = S>>(alphabet: I) -> Self {
        Endomorphism {
            images: alphabet
                .into_iter()
                .map(|s| (s.clone(), FreeWord::generator(s)))
                .collect(),
        }
    }

    /// Builds an endomorphism from explicit images.
    pub fn from_images<I: IntoIterator<Item = (S, FreeWord<S>)>>(images: I) -> Self {
        Endomorphism {
            images: images.into_iter().collect(),
        }
    }

    pub fn domain(&self) -> impl Iterator<Item = &S> {
        self.images.keys()
    }

    pub fn image(&self, s: &S) -> Option<&FreeWord<S>> {
        self.images.get(s)
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .all(|(s, w)| *w == FreeWord::generator(s.clone()))
    }

    /// Substitutes images into `w` and reduces, under the default length limit.
    pub fn apply(&self, w: &FreeWord<S>) -> Result<FreeWord<S>, EvalError> {
        self.apply_with_limit(w, DEFAULT_WORD_LIMIT)
    }

    /// Substitutes images into `w` and reduces, failing if the result would
    /// exceed `limit` letters.
    pub fn apply_with_limit(&self, w: &FreeWord<S>, limit: usize) -> Result<FreeWord<S>, EvalError> {
        let mut out: Vec<Letter<S>> = Vec::new();
        for letter in w.letters() {
            let image = self
                .images
                .get(&letter.symbol)
                .ok_or_else(|| EvalError::UnknownSymbol(format!("{:?}", letter.symbol)))?;
            match letter.sign {
                Sign::Plus => {
                    for l in image.letters() {
                        push_reduced(&mut out, l.clone());
                    }
                }
                Sign::Minus => {
                    for l in image.letters().iter().rev() {
                        push_reduced(&mut out, l.inverse());
                    }
                }
            }
            if out.len() > limit {
                return Err(EvalError::LengthLimit { limit });
            }
        }
        Ok(FreeWord { letters: out })
    }

    /// Function composition: `compose(f, g)` applies `g` first, then `f`.
    ///
    /// The domain is `g`'s domain; `f` must cover every symbol appearing in
    /// `g`'s images.
    pub fn compose(f: &Endomorphism<S>, g: &Endomorphism<S>) -> Result<Endomorphism<S>, EvalError> {
        Self::compose_with_limit(f, g, DEFAULT_WORD_LIMIT)
    }

    pub fn compose_with_limit(
        f: &Endomorphism<S>,
        g: &Endomorphism<S>,
        limit: usize,
    ) -> Result<Endomorphism<S>, EvalError> {
        let mut images = BTreeMap::new();
        for (s, w) in &g.images {
            images.insert(s.clone(), f.apply_with_limit(w, limit)?);
        }
        Ok(Endomorphism { images })
    }
}
