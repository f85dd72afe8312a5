//! Exhaustive bounded search for orientable-equation witnesses.
//!
//! For each size `n`, every multiset of `n` base elements is visited; each
//! distinct ordering of the multiset is one candidate factor word, and a
//! split point turns an ordering into the two words flanking a variable.
//! Both sides of an orientable equation are orderings of the same
//! multiset, so this covers every witness of size `n` exactly once.
//!
//! The returned witness is canonical: smallest `n` first, then the
//! smallest equation read as a sequence with the variable slots sorting
//! after every element (so `[x] = [x] * t * []` precedes
//! `[x] = [] * t * [x]`).

use std::cmp::Ordering;

use itertools::Itertools;
use rayon::prelude::*;

use super::witness::{OneVarWitness, TwoVarWitness};
use crate::monoid::{Monoid1, Word};

/// Advances `v` to the next lexicographic permutation; returns `false`
/// once `v` was the last one.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let pivot = i - 1;
    let j = (i..v.len()).rev().find(|&j| v[j] > v[pivot]).expect("v[i] > v[pivot]");
    v.swap(pivot, j);
    v[i..].reverse();
    true
}

/// Distinct orderings of a sorted multiset, in lexicographic order.
fn orderings(sorted: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = sorted.to_vec();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

/// Compares `p[..i] ++ [t] ++ p[i..]` with `q[..j] ++ [t] ++ q[j..]`,
/// where the variable `t` sorts after every element.
fn cmp_split(p: &[usize], i: usize, q: &[usize], j: usize) -> Ordering {
    const SLOT: usize = usize::MAX;
    let at = |w: &[usize], split: usize, k: usize| match k.cmp(&split) {
        Ordering::Less => w[k],
        Ordering::Equal => SLOT,
        Ordering::Greater => w[k - 1],
    };
    debug_assert_eq!(p.len(), q.len());
    (0..=p.len())
        .map(|k| at(p, i, k).cmp(&at(q, j, k)))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Products of every prefix and suffix of one ordering.
struct Sides {
    prefix: Vec<usize>,
    suffix: Vec<usize>,
}

impl Sides {
    fn new(m: &Monoid1, w: &[usize]) -> Self {
        let n = w.len();
        let mut prefix = vec![m.identity_index(); n + 1];
        let mut suffix = vec![m.identity_index(); n + 1];
        for k in 0..n {
            prefix[k + 1] = m.mul(prefix[k], w[k]);
        }
        for k in (0..n).rev() {
            suffix[k] = m.mul(w[k], suffix[k + 1]);
        }
        Sides { prefix, suffix }
    }

    /// Value of `w[..k] * x * w[k..]`.
    #[inline]
    fn around(&self, m: &Monoid1, k: usize, x: usize) -> usize {
        m.mul(m.mul(self.prefix[k], x), self.suffix[k])
    }

    #[inline]
    fn whole(&self) -> usize {
        self.prefix[self.prefix.len() - 1]
    }
}

/// Best `(ordering index, split)` per value of `w[..k] * x * w[k..]` over
/// all orderings and splits of one multiset.
fn best_splits(
    m: &Monoid1,
    orders: &[Vec<usize>],
    sides: &[Sides],
    x: usize,
) -> Vec<Option<(usize, usize)>> {
    let mut best: Vec<Option<(usize, usize)>> = vec![None; m.order()];
    for (qi, (q, side)) in orders.iter().zip(sides).enumerate() {
        for k in 0..=q.len() {
            let val = side.around(m, k, x);
            let better = match best[val] {
                None => true,
                Some((bq, bk)) => cmp_split(q, k, &orders[bq], bk).is_lt(),
            };
            if better {
                best[val] = Some((qi, k));
            }
        }
    }
    best
}

fn split_words(w: &[usize], k: usize) -> (Word, Word) {
    (Word(w[..k].to_vec()), Word(w[k..].to_vec()))
}

/// Canonical smallest witness of size exactly `n` for `g`, if any.
fn one_var_of_size(m: &Monoid1, g: usize, n: usize) -> Option<OneVarWitness> {
    // (a, right ordering, right split)
    let mut best: Option<(Vec<usize>, Vec<usize>, usize)> = None;
    for ms in (0..m.base().order()).combinations_with_replacement(n) {
        // every ordering of `ms` is at least `ms` itself, and multisets
        // arrive in increasing order
        if let Some((a, _, _)) = &best {
            if ms.as_slice() > a.as_slice() {
                break;
            }
        }
        let orders = orderings(&ms);
        let sides: Vec<Sides> = orders.iter().map(|o| Sides::new(m, o)).collect();
        let right = best_splits(m, &orders, &sides, g);
        let found = orders
            .iter()
            .zip(&sides)
            .find_map(|(p, side)| right[side.whole()].map(|(qi, k)| (p, qi, k)));
        if let Some((p, qi, k)) = found {
            let candidate = (p.clone(), orders[qi].clone(), k);
            let better = match &best {
                None => true,
                Some((a, q, bk)) => candidate
                    .0
                    .cmp(a)
                    .then_with(|| cmp_split(&candidate.1, candidate.2, q, *bk))
                    .is_lt(),
            };
            if better {
                best = Some(candidate);
            }
        }
    }
    best.map(|(a, q, k)| {
        let (b, c) = split_words(&q, k);
        OneVarWitness { a: Word(a), b, c }
    })
}

/// Smallest one-variable witness for `g` with at most `bound` paired
/// factors. `None` only means no witness exists up to `bound`.
pub fn search_one_var(m: &Monoid1, g: usize, bound: usize) -> Option<OneVarWitness> {
    assert!(g < m.base().order(), "element out of range");
    (1..=bound).find_map(|n| one_var_of_size(m, g, n))
}

/// Runs [`search_one_var`] for every element, in element order.
pub fn orientable_set(m: &Monoid1, bound: usize) -> Vec<Option<OneVarWitness>> {
    m.base()
        .elements()
        .into_par_iter()
        .map(|g| search_one_var(m, g, bound))
        .collect()
}

fn two_var_of_size(m: &Monoid1, u: usize, v: usize, n: usize) -> Option<TwoVarWitness> {
    // (left ordering, left split, right ordering, right split)
    type Candidate = (Vec<usize>, usize, Vec<usize>, usize);
    let mut best: Option<Candidate> = None;
    let cmp = |x: &Candidate, y: &Candidate| {
        cmp_split(&x.0, x.1, &y.0, y.1).then_with(|| cmp_split(&x.2, x.3, &y.2, y.3))
    };
    for ms in (0..m.base().order()).combinations_with_replacement(n) {
        let orders = orderings(&ms);
        let sides: Vec<Sides> = orders.iter().map(|o| Sides::new(m, o)).collect();
        let right = best_splits(m, &orders, &sides, v);
        let left = best_splits(m, &orders, &sides, u);
        for (val, l) in left.iter().enumerate() {
            let (Some((pi, k)), Some((qi, j))) = (l, right[val]) else {
                continue;
            };
            let candidate = (orders[*pi].clone(), *k, orders[qi].clone(), j);
            if best.as_ref().is_none_or(|b| cmp(&candidate, b).is_lt()) {
                best = Some(candidate);
            }
        }
    }
    best.map(|(p, k, q, j)| {
        let (a, b) = split_words(&p, k);
        let (c, d) = split_words(&q, j);
        TwoVarWitness { a, b, c, d }
    })
}

/// Smallest two-variable witness for the ordered pair `(u, v)` with at most
/// `bound` factors per side.
pub fn search_two_var(m: &Monoid1, u: usize, v: usize, bound: usize) -> Option<TwoVarWitness> {
    assert!(u < m.base().order() && v < m.base().order(), "element out of range");
    (1..=bound).find_map(|n| two_var_of_size(m, u, v, n))
}
