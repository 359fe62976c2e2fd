//! Permutations of `1..=n`, used for graph automorphisms and for the
//! symmetric-group image of braid words.

use std::fmt;

use super::GraphError;

/// A bijection of `1..=n`, stored as the image array.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, GraphError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(GraphError::NotAPermutation(n));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Function composition `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: (1..=self.n()).map(|v| self.apply(other.apply(v))).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn order(&self) -> usize {
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = acc.compose(self);
            k += 1;
        }
        k
    }

    /// Nontrivial cycles, each rotated to start at its smallest element,
    /// sorted by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut v = self.apply(start);
            while v != start {
                seen[v] = true;
                cycle.push(v);
                v = self.apply(v);
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }

    /// True when the permutation transposes `a` and `b`.
    pub fn swaps(&self, a: usize, b: usize) -> bool {
        self.apply(a) == b && self.apply(b) == a
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "id");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, v) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}
