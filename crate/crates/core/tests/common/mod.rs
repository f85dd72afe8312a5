//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls the search, congruence or group code of the crate.

#![allow(dead_code)]

use std::path::PathBuf;

use orient_core::Semigroup;

pub const SLOT: usize = usize::MAX;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests")
        .join("fixtures")
        .join(name)
}

pub fn naive_associative(n: usize, t: &[usize]) -> bool {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if t[t[x * n + y] * n + z] != t[x * n + t[y * n + z]] {
                    return false;
                }
            }
        }
    }
    true
}

/// Every table of order `n` (associative or not), in counting order.
pub fn all_tables(n: usize) -> Vec<Vec<usize>> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    (0..total)
        .map(|mut code| {
            (0..cells)
                .map(|_| {
                    let d = code % n;
                    code /= n;
                    d
                })
                .collect()
        })
        .collect()
}

fn letter_names(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

/// All labelled semigroups of order `1..=max`.
pub fn all_semigroups(max: usize) -> Vec<Semigroup> {
    (1..=max)
        .flat_map(|n| {
            all_tables(n)
                .into_iter()
                .filter(move |t| naive_associative(n, t))
                .map(move |t| Semigroup::new(letter_names(n), t).expect("associative table"))
        })
        .collect()
}

/// Product in `s` with `None` standing for an adjoined identity.
pub fn ref_eval(s: &Semigroup, w: &[Option<usize>]) -> Option<usize> {
    let t = s.table();
    let n = s.order();
    w.iter().fold(None, |acc, &x| match (acc, x) {
        (None, x) => x,
        (a, None) => a,
        (Some(a), Some(b)) => Some(t[a * n + b]),
    })
}

fn lift(w: &[usize]) -> Vec<Option<usize>> {
    w.iter().map(|&x| Some(x)).collect()
}

/// `w[..k] x w[k..]` evaluated directly.
pub fn eval_around(s: &Semigroup, w: &[usize], k: usize, x: usize) -> Option<usize> {
    let mut v = lift(&w[..k]);
    v.push(Some(x));
    v.extend(lift(&w[k..]));
    ref_eval(s, &v)
}

/// All words of length `len` over `0..n`.
pub fn words(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..n).map(move |x| {
                    let mut w = w.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn sorted(w: &[usize]) -> Vec<usize> {
    let mut v = w.to_vec();
    v.sort_unstable();
    v
}

/// `w` with the variable inserted at `k`.
pub fn with_slot(w: &[usize], k: usize) -> Vec<usize> {
    let mut v = w[..k].to_vec();
    v.push(SLOT);
    v.extend_from_slice(&w[k..]);
    v
}

/// `(a, b, c)` with `a = b g c`, smallest size first, then smallest by
/// `(a, b t c)` with `t` after every element.
pub type Words3 = (Vec<usize>, Vec<usize>, Vec<usize>);
pub type Words4 = (Vec<usize>, Vec<usize>, Vec<usize>, Vec<usize>);

pub fn ref_one_var(s: &Semigroup, g: usize, bound: usize) -> Option<Words3> {
    let n = s.order();
    for size in 1..=bound {
        let all = words(n, size);
        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        for a in &all {
            let lhs = ref_eval(s, &lift(a));
            for q in all.iter().filter(|q| sorted(q) == sorted(a)) {
                for k in 0..=size {
                    if eval_around(s, q, k, g) != lhs {
                        continue;
                    }
                    let key = (a.clone(), with_slot(q, k));
                    if best.as_ref().is_none_or(|b| key < *b) {
                        best = Some(key);
                    }
                }
            }
        }
        if let Some((a, q)) = best {
            let k = q.iter().position(|&x| x == SLOT).unwrap();
            return Some((a, q[..k].to_vec(), q[k + 1..].to_vec()));
        }
    }
    None
}

/// `(a, b, c, d)` with `a u b = c v d`, ordered as in [`ref_one_var`].
pub fn ref_two_var(
    s: &Semigroup,
    u: usize,
    v: usize,
    bound: usize,
) -> Option<Words4> {
    let n = s.order();
    for size in 1..=bound {
        let all = words(n, size);
        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        for p in &all {
            for k in 0..=size {
                let lhs = eval_around(s, p, k, u);
                for q in all.iter().filter(|q| sorted(q) == sorted(p)) {
                    for j in 0..=size {
                        if eval_around(s, q, j, v) != lhs {
                            continue;
                        }
                        let key = (with_slot(p, k), with_slot(q, j));
                        if best.as_ref().is_none_or(|b| key < *b) {
                            best = Some(key);
                        }
                    }
                }
            }
        }
        if let Some((l, r)) = best {
            let k = l.iter().position(|&x| x == SLOT).unwrap();
            let j = r.iter().position(|&x| x == SLOT).unwrap();
            return Some((
                l[..k].to_vec(),
                l[k + 1..].to_vec(),
                r[..j].to_vec(),
                r[j + 1..].to_vec(),
            ));
        }
    }
    None
}

/// Identity and inverses found by scanning the table.
pub struct RefGroup {
    pub n: usize,
    pub t: Vec<usize>,
    pub e: usize,
    pub inv: Vec<usize>,
}

impl RefGroup {
    pub fn new(s: &Semigroup) -> Self {
        let n = s.order();
        let t = s.table().to_vec();
        let e = (0..n)
            .find(|&e| (0..n).all(|x| t[e * n + x] == x && t[x * n + e] == x))
            .expect("identity");
        let inv = (0..n)
            .map(|x| (0..n).find(|&y| t[x * n + y] == e).expect("inverse"))
            .collect();
        RefGroup { n, t, e, inv }
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.t[x * self.n + y]
    }

    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let xy = self.mul(x, y);
        self.mul(self.mul(xy, self.inv[x]), self.inv[y])
    }

    /// Closure of the commutator set under products, as a membership mask.
    pub fn derived(&self) -> Vec<bool> {
        let mut inside = vec![false; self.n];
        for x in 0..self.n {
            for y in 0..self.n {
                inside[self.commutator(x, y)] = true;
            }
        }
        loop {
            let mut grew = false;
            for x in 0..self.n {
                for y in 0..self.n {
                    if inside[x] && inside[y] && !inside[self.mul(x, y)] {
                        inside[self.mul(x, y)] = true;
                        grew = true;
                    }
                }
            }
            if !grew {
                return inside;
            }
        }
    }

    /// Smallest member of each left coset `x D`, per element.
    pub fn coset_labels(&self) -> Vec<usize> {
        let d = self.derived();
        (0..self.n)
            .map(|x| (0..self.n).filter(|&h| d[h]).map(|h| self.mul(x, h)).min().unwrap())
            .collect()
    }
}

/// True when two labelings induce the same partition.
pub fn same_partition(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len()
        && (0..a.len()).all(|x| (0..a.len()).all(|y| (a[x] == a[y]) == (b[x] == b[y])))
}
