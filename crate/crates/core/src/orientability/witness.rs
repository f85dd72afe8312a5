use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monoid::{Monoid1, Word};
use crate::semigroup::Semigroup;

/// Certificate that an element `g` satisfies the one-variable equation
/// `a = b t c`: the factors of `a` and of `b, c` together form the same
/// multiset, and `a = b g c` holds.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OneVarWitness {
    pub a: Word,
    pub b: Word,
    pub c: Word,
}

/// Certificate that a pair `(u, v)` satisfies `a t1 b = c t2 d`, with the
/// factors of `a, b` and of `c, d` forming the same non-empty multiset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TwoVarWitness {
    pub a: Word,
    pub b: Word,
    pub c: Word,
    pub d: Word,
}

/// The first clause of the definition a witness fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// One-variable: the left side `a` has no factors.
    EmptyLeft,
    /// One-variable: both `b` and `c` are empty.
    EmptyRight,
    /// Two-variable: no factors at all.
    NoFactors,
    LengthMismatch { left: usize, right: usize },
    /// Factor multisets differ across the equality sign.
    Unbalanced,
    /// Substituting the variable(s) gives different elements.
    NotSatisfied { lhs: usize, rhs: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyLeft => f.write_str("left side `a` is empty"),
            Violation::EmptyRight => f.write_str("both `b` and `c` are empty"),
            Violation::NoFactors => f.write_str("equation has no factors"),
            Violation::LengthMismatch { left, right } => {
                write!(f, "{left} factors on the left, {right} on the right")
            }
            Violation::Unbalanced => f.write_str("factors cannot be paired across the equality"),
            Violation::NotSatisfied { lhs, rhs } => {
                write!(f, "substitution fails: left evaluates to {lhs}, right to {rhs}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Violation),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

fn check_factors(m: &Monoid1, words: &[&Word]) -> Result<()> {
    let n = m.base().order();
    for w in words {
        if let Some(&x) = w.entries().iter().find(|&&x| x >= n) {
            return Err(Error::OutOfRange { index: x, order: n });
        }
    }
    Ok(())
}

fn check_element(m: &Monoid1, g: usize) -> Result<()> {
    let n = m.base().order();
    if g >= n {
        return Err(Error::OutOfRange { index: g, order: n });
    }
    Ok(())
}

fn balanced(order: usize, left: &[&Word], right: &[&Word]) -> bool {
    let mut count = vec![0i64; order];
    for w in left {
        for &x in w.entries() {
            count[x] += 1;
        }
    }
    for w in right {
        for &x in w.entries() {
            count[x] -= 1;
        }
    }
    count.iter().all(|&c| c == 0)
}

impl OneVarWitness {
    pub fn new(a: impl Into<Word>, b: impl Into<Word>, c: impl Into<Word>) -> Self {
        OneVarWitness {
            a: a.into(),
            b: b.into(),
            c: c.into(),
        }
    }

    /// Number of paired factors, `|a|`.
    pub fn size(&self) -> usize {
        self.a.len()
    }

    /// Renders `[a] = [b] * t * [c]`.
    pub fn render(&self, s: &Semigroup) -> String {
        format!(
            "{} = {} * t * {}",
            self.a.display(s),
            self.b.display(s),
            self.c.display(s)
        )
    }
}

impl TwoVarWitness {
    pub fn new(
        a: impl Into<Word>,
        b: impl Into<Word>,
        c: impl Into<Word>,
        d: impl Into<Word>,
    ) -> Self {
        TwoVarWitness {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    /// Number of paired factors, `|a| + |b|`.
    pub fn size(&self) -> usize {
        self.a.len() + self.b.len()
    }

    /// Renders `[a] * t1 * [b] = [c] * t2 * [d]`.
    pub fn render(&self, s: &Semigroup) -> String {
        format!(
            "{} * t1 * {} = {} * t2 * {}",
            self.a.display(s),
            self.b.display(s),
            self.c.display(s),
            self.d.display(s)
        )
    }

    /// The same equation read right to left, certifying `(v, u)`.
    pub fn swapped(&self) -> TwoVarWitness {
        TwoVarWitness {
            a: self.c.clone(),
            b: self.d.clone(),
            c: self.a.clone(),
            d: self.b.clone(),
        }
    }
}

/// Checks a one-variable witness for `g`. Factor entries must be base
/// elements; the adjoined identity is rejected as out of range.
pub fn validate_one_var(m: &Monoid1, g: usize, w: &OneVarWitness) -> Result<Verdict> {
    check_element(m, g)?;
    check_factors(m, &[&w.a, &w.b, &w.c])?;
    let violation = if w.a.is_empty() {
        Some(Violation::EmptyLeft)
    } else if w.b.is_empty() && w.c.is_empty() {
        Some(Violation::EmptyRight)
    } else if w.a.len() != w.b.len() + w.c.len() {
        Some(Violation::LengthMismatch {
            left: w.a.len(),
            right: w.b.len() + w.c.len(),
        })
    } else if !balanced(m.base().order(), &[&w.a], &[&w.b, &w.c]) {
        Some(Violation::Unbalanced)
    } else {
        let lhs = m.eval(&w.a)?;
        let rhs = m.mul(m.mul(m.eval(&w.b)?, g), m.eval(&w.c)?);
        (lhs != rhs).then_some(Violation::NotSatisfied { lhs, rhs })
    };
    Ok(violation.map_or(Verdict::Valid, Verdict::Invalid))
}

/// Checks a two-variable witness for the ordered pair `(u, v)`:
/// `a u b = c v d`.
pub fn validate_two_var(m: &Monoid1, u: usize, v: usize, w: &TwoVarWitness) -> Result<Verdict> {
    check_element(m, u)?;
    check_element(m, v)?;
    check_factors(m, &[&w.a, &w.b, &w.c, &w.d])?;
    let left = w.a.len() + w.b.len();
    let right = w.c.len() + w.d.len();
    let violation = if left == 0 && right == 0 {
        Some(Violation::NoFactors)
    } else if left != right {
        Some(Violation::LengthMismatch { left, right })
    } else if !balanced(m.base().order(), &[&w.a, &w.b], &[&w.c, &w.d]) {
        Some(Violation::Unbalanced)
    } else {
        let lhs = m.mul(m.mul(m.eval(&w.a)?, u), m.eval(&w.b)?);
        let rhs = m.mul(m.mul(m.eval(&w.c)?, v), m.eval(&w.d)?);
        (lhs != rhs).then_some(Violation::NotSatisfied { lhs, rhs })
    };
    Ok(violation.map_or(Verdict::Valid, Verdict::Invalid))
}

/// Serialized form of a witness, with element names in place of indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub kind: WitnessKind,
    pub a: Vec<String>,
    pub b: Vec<String>,
    pub c: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<(String, String)>,
    pub valid: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    OneVar,
    TwoVar,
}

/// A witness resolved against a semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ResolvedWitness {
    OneVar { element: usize, witness: OneVarWitness },
    TwoVar { pair: (usize, usize), witness: TwoVarWitness },
}

fn names(s: &Semigroup, w: &Word) -> Vec<String> {
    w.entries().iter().map(|&x| s.name(x).to_string()).collect()
}

fn resolve(s: &Semigroup, name: &str) -> Result<usize> {
    s.index_of(name).ok_or_else(|| Error::UnknownName {
        name: name.to_string(),
        line: 0,
        column: 0,
    })
}

fn resolve_word(s: &Semigroup, names: &[String]) -> Result<Word> {
    names.iter().map(|n| resolve(s, n)).collect::<Result<Vec<_>>>().map(Word)
}

impl WitnessRecord {
    pub fn one_var(m: &Monoid1, g: usize, w: &OneVarWitness) -> Result<Self> {
        let s = m.base();
        Ok(WitnessRecord {
            kind: WitnessKind::OneVar,
            a: names(s, &w.a),
            b: names(s, &w.b),
            c: names(s, &w.c),
            d: None,
            element: Some(s.name(g).to_string()),
            pair: None,
            valid: validate_one_var(m, g, w)?.is_valid(),
        })
    }

    pub fn two_var(m: &Monoid1, u: usize, v: usize, w: &TwoVarWitness) -> Result<Self> {
        let s = m.base();
        Ok(WitnessRecord {
            kind: WitnessKind::TwoVar,
            a: names(s, &w.a),
            b: names(s, &w.b),
            c: names(s, &w.c),
            d: Some(names(s, &w.d)),
            element: None,
            pair: Some((s.name(u).to_string(), s.name(v).to_string())),
            valid: validate_two_var(m, u, v, w)?.is_valid(),
        })
    }

    /// Resolves names against `s`; the stored `valid` flag is ignored.
    pub fn resolve(&self, s: &Semigroup) -> Result<ResolvedWitness> {
        let (a, b, c) = (
            resolve_word(s, &self.a)?,
            resolve_word(s, &self.b)?,
            resolve_word(s, &self.c)?,
        );
        let missing = |field: &str| Error::InvalidTable(format!("witness record lacks `{field}`"));
        match self.kind {
            WitnessKind::OneVar => {
                let element = resolve(s, self.element.as_deref().ok_or_else(|| missing("element"))?)?;
                Ok(ResolvedWitness::OneVar {
                    element,
                    witness: OneVarWitness { a, b, c },
                })
            }
            WitnessKind::TwoVar => {
                let d = resolve_word(s, self.d.as_deref().ok_or_else(|| missing("d"))?)?;
                let (u, v) = self.pair.as_ref().ok_or_else(|| missing("pair"))?;
                Ok(ResolvedWitness::TwoVar {
                    pair: (resolve(s, u)?, resolve(s, v)?),
                    witness: TwoVarWitness { a, b, c, d },
                })
            }
        }
    }
}

impl ResolvedWitness {
    pub fn validate(&self, m: &Monoid1) -> Result<Verdict> {
        match self {
            ResolvedWitness::OneVar { element, witness } => validate_one_var(m, *element, witness),
            ResolvedWitness::TwoVar { pair, witness } => {
                validate_two_var(m, pair.0, pair.1, witness)
            }
        }
    }
}
