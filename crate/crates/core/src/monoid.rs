//! A semigroup with a freshly adjoined identity, and words over it.
//!
//! Equation sides may be empty; an empty side evaluates to the adjoined
//! identity, so every side always denotes an element of the monoid.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{Semigroup, IDENTITY_MARKER};

/// A finite, possibly empty sequence of element indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(entries: Vec<usize>) -> Self {
        Word(entries)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Renders as `[x y z]` using element names of `s`.
    pub fn display<'a>(&'a self, s: &'a Semigroup) -> WordDisplay<'a> {
        WordDisplay { word: self, s }
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl<const N: usize> From<[usize; N]> for Word {
    fn from(v: [usize; N]) -> Self {
        Word(v.to_vec())
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    s: &'a Semigroup,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, &x) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match self.s.names().get(x) {
                Some(name) => f.write_str(name)?,
                None => f.write_str(IDENTITY_MARKER)?,
            }
        }
        f.write_str("]")
    }
}

/// `base` extended by one extra element, index `base.order()`, acting as a
/// two-sided identity. The adjoined element is added even when `base`
/// already has an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monoid1 {
    base: Semigroup,
    table: Vec<usize>,
}

pub fn adjoin_identity(s: &Semigroup) -> Monoid1 {
    let n = s.order();
    let m = n + 1;
    let mut table = vec![0; m * m];
    for i in 0..m {
        for j in 0..m {
            table[i * m + j] = match (i == n, j == n) {
                (true, _) => j,
                (_, true) => i,
                _ => s.mul(i, j),
            };
        }
    }
    Monoid1 {
        base: s.clone(),
        table,
    }
}

impl Monoid1 {
    pub fn base(&self) -> &Semigroup {
        &self.base
    }

    #[inline]
    pub fn identity_index(&self) -> usize {
        self.base.order()
    }

    /// Number of elements including the adjoined identity.
    #[inline]
    pub fn order(&self) -> usize {
        self.base.order() + 1
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order() + j]
    }

    /// Name of an element; the adjoined identity is named by the marker.
    pub fn name(&self, i: usize) -> &str {
        if i == self.identity_index() {
            IDENTITY_MARKER
        } else {
            self.base.name(i)
        }
    }

    /// Left-to-right product of a word; the empty word is the identity.
    pub fn eval(&self, w: &Word) -> Result<usize> {
        self.eval_slice(w.entries())
    }

    pub fn eval_slice(&self, w: &[usize]) -> Result<usize> {
        let mut acc = self.identity_index();
        for &x in w {
            if x >= self.order() {
                return Err(Error::OutOfRange {
                    index: x,
                    order: self.order(),
                });
            }
            acc = self.mul(acc, x);
        }
        Ok(acc)
    }
}

pub fn eval_word(m: &Monoid1, w: &Word) -> Result<usize> {
    m.eval(w)
}
