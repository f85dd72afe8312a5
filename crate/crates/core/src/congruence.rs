//! Congruences on finite semigroups: closure from generating pairs and
//! quotients.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

/// Union-find with union by smaller root index and path halving.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `true` when two distinct classes were merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// A partition of the elements of a semigroup.
///
/// Class ids are dense and ordered by the smallest member of each class, so
/// two equal partitions always compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Congruence {
    class_of: Vec<usize>,
    num_classes: usize,
}

impl Congruence {
    /// Renumbers an arbitrary labelling into canonical class ids.
    pub fn from_labels<T: PartialEq>(labels: &[T]) -> Self {
        let mut class_of = Vec::with_capacity(labels.len());
        let mut reps: Vec<usize> = Vec::new();
        for (i, l) in labels.iter().enumerate() {
            match reps.iter().position(|&r| labels[r] == *l) {
                Some(c) => class_of.push(c),
                None => {
                    class_of.push(reps.len());
                    reps.push(i);
                }
            }
        }
        Congruence {
            num_classes: reps.len(),
            class_of,
        }
    }

    pub fn identity(n: usize) -> Self {
        Congruence {
            class_of: (0..n).collect(),
            num_classes: n,
        }
    }

    fn from_union_find(uf: &mut UnionFind, n: usize) -> Self {
        let roots: Vec<usize> = (0..n).map(|i| uf.find(i)).collect();
        Congruence::from_labels(&roots)
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn classes_vec(&self) -> &[usize] {
        &self.class_of
    }

    pub fn num_classes(&self) -> usize {
        self.num_classes
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn related(&self, u: usize, v: usize) -> bool {
        self.class_of[u] == self.class_of[v]
    }

    /// Members of each class, in class-id order, each sorted ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_classes];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    /// First quadruple `(u, u', v, v')` with `u ~ u'`, `v ~ v'` and
    /// `uv`, `u'v'` in different classes.
    pub fn compatibility_violation(&self, s: &Semigroup) -> Option<(usize, usize, usize, usize)> {
        let k = self.num_classes;
        let mut witness: Vec<Option<(usize, usize)>> = vec![None; k * k];
        for u in s.elements() {
            for v in s.elements() {
                let slot = self.class_of[u] * k + self.class_of[v];
                match witness[slot] {
                    None => witness[slot] = Some((u, v)),
                    Some((u0, v0)) => {
                        if self.class_of[s.mul(u0, v0)] != self.class_of[s.mul(u, v)] {
                            return Some((u0, u, v0, v));
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_congruence_on(&self, s: &Semigroup) -> bool {
        self.len() == s.order() && self.compatibility_violation(s).is_none()
    }

    /// Every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Congruence) -> bool {
        self.len() == other.len()
            && (0..self.len()).all(|x| {
                (0..self.len())
                    .filter(|&y| self.related(x, y))
                    .all(|y| other.related(x, y))
            })
    }
}

/// Smallest congruence containing `pairs`.
///
/// Union-find seeded with the pairs; every successful merge of `u` and `v`
/// queues the translates `(su, sv)` and `(us, vs)` until nothing new merges.
pub fn generated_congruence(
    s: &Semigroup,
    pairs: impl IntoIterator<Item = (usize, usize)>,
) -> Result<Congruence> {
    let n = s.order();
    let mut uf = UnionFind::new(n);
    let mut queue = VecDeque::new();
    for (u, v) in pairs {
        for x in [u, v] {
            if x >= n {
                return Err(Error::OutOfRange { index: x, order: n });
            }
        }
        if uf.union(u, v) {
            queue.push_back((u, v));
        }
    }
    while let Some((u, v)) = queue.pop_front() {
        for t in 0..n {
            let (a, b) = (s.mul(t, u), s.mul(t, v));
            if uf.union(a, b) {
                queue.push_back((a, b));
            }
            let (a, b) = (s.mul(u, t), s.mul(v, t));
            if uf.union(a, b) {
                queue.push_back((a, b));
            }
        }
    }
    Ok(Congruence::from_union_find(&mut uf, n))
}

/// Pairs `(xy, yx)` for all `x`, `y`.
pub fn commutation_pairs(s: &Semigroup) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for x in s.elements() {
        for y in s.elements() {
            let (a, b) = (s.mul(x, y), s.mul(y, x));
            if a != b {
                out.push((a, b));
            }
        }
    }
    out
}

/// Smallest congruence with a commutative quotient.
pub fn commutative_congruence(s: &Semigroup) -> Congruence {
    generated_congruence(s, commutation_pairs(s)).expect("pairs come from the table")
}

/// Smallest congruence whose quotient is commutative and cancellative.
///
/// Starts from the commutative congruence and repeatedly merges `x`, `y`
/// whenever `[a][x] = [a][y]` in the current quotient, then re-closes.
pub fn commutative_cancellative_congruence(s: &Semigroup) -> Congruence {
    let mut cong = commutative_congruence(s);
    loop {
        let mut extra = Vec::new();
        for x in s.elements() {
            for y in x + 1..s.order() {
                if cong.related(x, y) {
                    continue;
                }
                let collapses = s
                    .elements()
                    .any(|a| cong.related(s.mul(a, x), s.mul(a, y)));
                if collapses {
                    extra.push((x, y));
                }
            }
        }
        if extra.is_empty() {
            return cong;
        }
        let seed = (0..s.order())
            .flat_map(|x| (0..s.order()).map(move |y| (x, y)))
            .filter(|&(x, y)| x < y && cong.related(x, y))
            .chain(extra);
        cong = generated_congruence(s, seed).expect("indices in range");
    }
}

/// The quotient table on class ids; element `c` is named `[x]` after the
/// smallest member `x` of class `c`.
pub fn quotient(s: &Semigroup, c: &Congruence) -> Result<Semigroup> {
    if c.len() != s.order() {
        return Err(Error::InvalidTable(format!(
            "partition has {} elements, semigroup has {}",
            c.len(),
            s.order()
        )));
    }
    if let Some((u, u2, v, v2)) = c.compatibility_violation(s) {
        return Err(Error::IncompatibleCongruence { u, u2, v, v2 });
    }
    let classes = c.classes();
    let names = classes
        .iter()
        .map(|members| format!("[{}]", s.name(members[0])))
        .collect();
    Semigroup::from_fn(names, |a, b| c.class_of(s.mul(classes[a][0], classes[b][0])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> Semigroup {
        Semigroup::from_fn((0..n).map(|i| i.to_string()).collect(), |i, j| (i + j) % n).unwrap()
    }

    fn left_zero(n: usize) -> Semigroup {
        Semigroup::from_fn((0..n).map(|i| i.to_string()).collect(), |i, _| i).unwrap()
    }

    #[test]
    fn empty_generators_give_identity_partition() {
        let s = cyclic(5);
        let c = generated_congruence(&s, []).unwrap();
        assert_eq!(c, Congruence::identity(5));
    }

    #[test]
    fn left_zero_pair_collapses_everything() {
        let c = generated_congruence(&left_zero(2), [(0, 1)]).unwrap();
        assert_eq!(c.num_classes(), 1);
    }

    #[test]
    fn cyclic_four_mod_two() {
        let s = cyclic(4);
        let c = generated_congruence(&s, [(0, 2)]).unwrap();
        assert_eq!(c.classes(), vec![vec![0, 2], vec![1, 3]]);
        let q = quotient(&s, &c).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(q.table(), &[0, 1, 1, 0]);
        assert_eq!(q.names(), &["[0]".to_string(), "[1]".to_string()]);
    }

    #[test]
    fn identity_quotient_is_a_copy() {
        let s = left_zero(3);
        let q = quotient(&s, &Congruence::identity(3)).unwrap();
        assert_eq!(q.table(), s.table());
    }

    #[test]
    fn incompatible_partition_is_rejected() {
        let s = cyclic(4);
        let c = Congruence::from_labels(&[0, 0, 1, 1]);
        assert!(matches!(
            quotient(&s, &c).unwrap_err(),
            Error::IncompatibleCongruence { .. }
        ));
        let (u, u2, v, v2) = c.compatibility_violation(&s).unwrap();
        assert!(c.related(u, u2) && c.related(v, v2));
        assert!(!c.related(s.mul(u, v), s.mul(u2, v2)));
    }

    #[test]
    fn canonical_class_ids() {
        let c = Congruence::from_labels(&["x", "y", "x", "z"]);
        assert_eq!(c.classes_vec(), &[0, 1, 0, 2]);
        assert_eq!(c.num_classes(), 3);
    }

    #[test]
    fn cancellative_congruence_on_left_zero_is_total() {
        // [a][x] = [a][y] holds for all x, y once the quotient is commutative
        let c = commutative_cancellative_congruence(&left_zero(3));
        assert_eq!(c.num_classes(), 1);
    }

    #[test]
    fn out_of_range_pair() {
        assert!(generated_congruence(&cyclic(2), [(0, 7)]).is_err());
    }
}
