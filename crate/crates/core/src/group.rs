//! Group structure on a finite semigroup: commutators, the commutator
//! subgroup and the abelianization.

use crate::congruence::{quotient, Congruence};
use crate::error::{Error, NotAGroupReason, Result};
use crate::semigroup::Semigroup;

/// A semigroup together with its identity and inverse map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupStructure {
    base: Semigroup,
    identity: usize,
    inverse: Vec<usize>,
}

/// Detects a group: a two-sided identity plus a Latin-square table.
pub fn group_structure(s: &Semigroup) -> Result<GroupStructure> {
    let identity = s
        .identity()
        .ok_or(Error::NotAGroup(NotAGroupReason::NoIdentity))?;
    if !s.is_cancellative() {
        return Err(Error::NotAGroup(NotAGroupReason::NotLatin));
    }
    // Latin: column `identity` holds exactly one x with x * g = identity.
    let inverse = s
        .elements()
        .map(|g| {
            s.elements()
                .find(|&x| s.mul(x, g) == identity)
                .expect("Latin square has identity in every column")
        })
        .collect();
    Ok(GroupStructure {
        base: s.clone(),
        identity,
        inverse,
    })
}

impl GroupStructure {
    pub fn base(&self) -> &Semigroup {
        &self.base
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn order(&self) -> usize {
        self.base.order()
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.base.mul(x, y)
    }

    #[inline]
    pub fn inverse(&self, x: usize) -> usize {
        self.inverse[x]
    }

    /// `x y x^-1 y^-1`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let xy = self.mul(x, y);
        let xyx = self.mul(xy, self.inverse(x));
        self.mul(xyx, self.inverse(y))
    }

    /// Distinct commutator values, ascending.
    pub fn commutators(&self) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        for x in self.base.elements() {
            for y in self.base.elements() {
                seen[self.commutator(x, y)] = true;
            }
        }
        (0..self.order()).filter(|&c| seen[c]).collect()
    }

    /// Smallest subgroup containing every commutator, sorted ascending.
    ///
    /// Breadth-first product closure of the commutator set. The set is
    /// closed under conjugation and inversion, so the closure is already a
    /// normal subgroup.
    pub fn commutator_subgroup(&self) -> Vec<usize> {
        let gens = self.commutators();
        let mut member = vec![false; self.order()];
        let mut queue = std::collections::VecDeque::new();
        member[self.identity] = true;
        queue.push_back(self.identity);
        while let Some(h) = queue.pop_front() {
            for &c in &gens {
                let hc = self.mul(h, c);
                if !member[hc] {
                    member[hc] = true;
                    queue.push_back(hc);
                }
            }
        }
        let sub: Vec<usize> = (0..self.order()).filter(|&x| member[x]).collect();
        debug_assert!(self.is_normal_subgroup(&sub));
        sub
    }

    /// Contains the identity, is closed under products and inverses, and is
    /// closed under conjugation.
    pub fn is_normal_subgroup(&self, h: &[usize]) -> bool {
        let mut member = vec![false; self.order()];
        for &x in h {
            member[x] = true;
        }
        member[self.identity]
            && h.iter().all(|&x| member[self.inverse(x)])
            && h.iter().all(|&x| h.iter().all(|&y| member[self.mul(x, y)]))
            && h.iter().all(|&x| {
                self.base
                    .elements()
                    .all(|g| member[self.mul(self.mul(g, x), self.inverse(g))])
            })
    }

    /// Partition into cosets of the commutator subgroup: `g ~ h` iff
    /// `g h^-1` lies in it.
    pub fn coset_congruence(&self) -> Congruence {
        let sub = self.commutator_subgroup();
        let mut member = vec![false; self.order()];
        for &x in &sub {
            member[x] = true;
        }
        // label each element by the smallest member of its coset
        let labels: Vec<usize> = self
            .base
            .elements()
            .map(|g| {
                self.base
                    .elements()
                    .find(|&h| member[self.mul(g, self.inverse(h))])
                    .expect("g is in its own coset")
            })
            .collect();
        Congruence::from_labels(&labels)
    }

    pub fn abelianization(&self) -> Semigroup {
        quotient(&self.base, &self.coset_congruence()).expect("cosets of a normal subgroup")
    }

    /// Whether `g` maps to the identity of the abelianization.
    pub fn in_commutator_subgroup(&self, g: usize) -> bool {
        self.coset_congruence().related(g, self.identity)
    }
}
