//! Finite semigroups given by a Cayley table.

use std::collections::HashSet;

use crate::error::{Error, Result};

/// Name given to the identity adjoined by [`crate::adjoin_identity`].
/// No element of a [`Semigroup`] may carry it.
pub const IDENTITY_MARKER: &str = "@1";

/// A finite semigroup on the indices `0..order`, with a name per element.
///
/// The table is stored row-major: `product(i, j) == table[i * order + j]`.
/// Construction always validates range and associativity, so every value of
/// this type is a genuine semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Semigroup {
    names: Vec<String>,
    table: Vec<usize>,
}

impl Semigroup {
    pub fn new(names: Vec<String>, table: Vec<usize>) -> Result<Self> {
        let n = names.len();
        check_names(&names)?;
        if table.len() != n * n {
            return Err(Error::NonSquare {
                message: format!("{} entries for {} elements", table.len(), n),
            });
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= n) {
            return Err(Error::OutOfRange {
                index: bad,
                order: n,
            });
        }
        if let Some((i, j, k)) = check_associativity(n, &table) {
            return Err(Error::NotAssociative { i, j, k });
        }
        Ok(Semigroup { names, table })
    }

    /// Builds a table from a product function on indices.
    pub fn from_fn<F>(names: Vec<String>, mut mul: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> usize,
    {
        let n = names.len();
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push(mul(i, j));
            }
        }
        Semigroup::new(names, table)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order() + j]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Row-major Cayley table.
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (i + 1..n).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// Every row and every column of the table is injective.
    pub fn is_cancellative(&self) -> bool {
        let n = self.order();
        let mut seen = vec![false; n];
        for i in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let p = self.mul(i, j);
                if std::mem::replace(&mut seen[p], true) {
                    return false;
                }
            }
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let p = self.mul(j, i);
                if std::mem::replace(&mut seen[p], true) {
                    return false;
                }
            }
        }
        true
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&e| self.mul(e, e) == e).collect()
    }

    /// A two-sided identity, if one exists.
    pub fn identity(&self) -> Option<usize> {
        let n = self.order();
        (0..n).find(|&e| (0..n).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }
}

/// Returns the lexicographically first triple `(i, j, k)` with
/// `(ij)k != i(jk)`, or `None` when the table is associative.
///
/// `table` must be a row-major `n * n` table with entries below `n`.
pub fn check_associativity(n: usize, table: &[usize]) -> Option<(usize, usize, usize)> {
    debug_assert_eq!(table.len(), n * n);
    for i in 0..n {
        for j in 0..n {
            let ij = table[i * n + j];
            for k in 0..n {
                if table[ij * n + k] != table[i * n + table[j * n + k]] {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

fn check_names(names: &[String]) -> Result<()> {
    if names.is_empty() {
        return Err(Error::InvalidTable("a semigroup needs at least one element".into()));
    }
    let mut seen = HashSet::new();
    for name in names {
        if name.is_empty() || name.chars().any(char::is_whitespace) || name.starts_with('#') {
            return Err(Error::InvalidTable(format!("invalid element name `{name}`")));
        }
        if name == IDENTITY_MARKER {
            return Err(Error::ReservedName { name: name.clone() });
        }
        if !seen.insert(name.as_str()) {
            return Err(Error::DuplicateName {
                name: name.clone(),
                line: 0,
                column: 0,
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn cyclic_table_is_associative() {
        let z4 = Semigroup::from_fn(names(4), |i, j| (i + j) % 4).unwrap();
        assert_eq!(check_associativity(4, z4.table()), None);
        assert!(z4.is_commutative());
        assert!(z4.is_cancellative());
        assert_eq!(z4.identity(), Some(0));
    }

    #[test]
    fn left_zero_is_associative_but_not_cancellative() {
        let lz = Semigroup::from_fn(names(3), |i, _| i).unwrap();
        assert!(!lz.is_commutative());
        assert!(!lz.is_cancellative());
        assert_eq!(lz.idempotents(), vec![0, 1, 2]);
        assert_eq!(lz.identity(), None);
    }

    #[test]
    fn nand_magma_reports_first_violation() {
        // 0*0 = 1, 0*1 = 1, 1*0 = 1, 1*1 = 0.
        // (0,0,0): (0*0)*0 = 1*0 = 1, 0*(0*0) = 0*1 = 1 -> fine.
        // (0,0,1): (0*0)*1 = 1*1 = 0, 0*(0*1) = 0*1 = 1 -> violation.
        assert_eq!(check_associativity(2, &[1, 1, 1, 0]), Some((0, 0, 1)));
        let err = Semigroup::new(names(2), vec![1, 1, 1, 0]).unwrap_err();
        assert_eq!(err, Error::NotAssociative { i: 0, j: 0, k: 1 });
    }

    #[test]
    fn rejects_reserved_and_duplicate_names() {
        let err = Semigroup::new(vec![IDENTITY_MARKER.into()], vec![0]).unwrap_err();
        assert!(matches!(err, Error::ReservedName { .. }));
        let err = Semigroup::new(vec!["a".into(), "a".into()], vec![0; 4]).unwrap_err();
        assert!(matches!(err, Error::DuplicateName { .. }));
    }

    #[test]
    fn rejects_out_of_range_entries() {
        let err = Semigroup::new(names(2), vec![0, 1, 2, 0]).unwrap_err();
        assert_eq!(err, Error::OutOfRange { index: 2, order: 2 });
    }
}
