//! Verification suites over concrete semigroups and groups.
//!
//! Group checks are exact. For general semigroups the searches are bounded,
//! so claims that a bounded search cannot establish are recorded as
//! `soft-report` rather than failing the suite.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::construct::{build_orientable_witness, build_two_var_witness_with};
use super::decomposition::DecompositionTable;
use crate::congruence::{quotient, Congruence};
use crate::error::Result;
use crate::group::{group_structure, GroupStructure};
use crate::monoid::{adjoin_identity, Monoid1};
use crate::orientability::{
    orientable_set, sigma_report, validate_one_var, validate_two_var,
    OneVarWitness, SigmaReport, TwoVarWitness, Verdict,
};
use crate::semigroup::Semigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SoftReport,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SoftReport => "soft-report",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub details: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl Check {
    fn hard(id: &str, details: String, counterexample: Option<String>) -> Self {
        Check {
            id: id.to_string(),
            status: if counterexample.is_none() {
                Status::Pass
            } else {
                Status::Fail
            },
            details,
            counterexample,
        }
    }

    fn soft(id: &str, details: String, counterexample: Option<String>) -> Self {
        Check {
            id: id.to_string(),
            status: Status::SoftReport,
            details,
            counterexample,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub subject: String,
    pub bound: usize,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("subject: {}\nbound: {}\n", self.subject, self.bound);
        for c in &self.checks {
            out.push_str(&format!("{:<12} {:<28} {}\n", c.status, c.id, c.details));
            if let Some(ce) = &c.counterexample {
                out.push_str(&format!("{:<12} {:<28} counterexample: {}\n", "", "", ce));
            }
        }
        out
    }
}

fn first_failure<T, F>(items: impl IntoParallelIterator<Item = T>, check: F) -> Option<String>
where
    T: Send,
    F: Fn(T) -> Option<String> + Sync + Send,
{
    // deterministic: the earliest failing item in iteration order
    items
        .into_par_iter()
        .map(check)
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .next()
}

fn one_var_valid(m: &Monoid1, g: usize, w: &OneVarWitness) -> bool {
    matches!(validate_one_var(m, g, w), Ok(Verdict::Valid))
}

fn two_var_valid(m: &Monoid1, u: usize, v: usize, w: &TwoVarWitness) -> bool {
    matches!(validate_two_var(m, u, v, w), Ok(Verdict::Valid))
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).collect()
}

fn names(s: &Semigroup, xs: &[usize]) -> String {
    let v: Vec<&str> = xs.iter().map(|&x| s.name(x)).collect();
    format!("{{{}}}", v.join(", "))
}

/// Bound at which the bounded orientable set provably contains every
/// constructed witness: `max(bound, 2 + 4(k_max - 1))`.
pub fn theorem1_bound(table: &DecompositionTable, bound: usize) -> usize {
    let k = table.max_length().max(1);
    bound.max(2 + 4 * (k - 1))
}

/// Orientable elements of a group coincide with its commutator subgroup.
pub fn verify_theorem1(grp: &GroupStructure, subject: &str, bound: usize) -> VerificationReport {
    let s = grp.base();
    let m = adjoin_identity(s);
    let table = DecompositionTable::new(grp);
    let derived = grp.commutator_subgroup();
    let cosets = grp.coset_congruence();
    let mut checks = Vec::new();

    let failure = first_failure(derived.clone(), |g| {
        let d = match table.decompose(grp, g) {
            Ok(d) => d,
            Err(e) => return Some(format!("{}: {e}", s.name(g))),
        };
        let w = build_orientable_witness(grp, &d);
        let expected = if d.is_empty() { 2 } else { 2 + 4 * (d.len() - 1) };
        if w.size() != expected {
            return Some(format!("{}: size {} != {expected}", s.name(g), w.size()));
        }
        (!one_var_valid(&m, g, &w)).then(|| format!("{}: {}", s.name(g), w.render(s)))
    });
    checks.push(Check::hard(
        "t1.constructive",
        format!(
            "constructed witnesses validate for all {} elements of [G,G]",
            derived.len()
        ),
        failure,
    ));

    let bounded = orientable_set(&m, bound);
    let failure = bounded.iter().enumerate().find_map(|(g, w)| {
        let w = w.as_ref()?;
        if !one_var_valid(&m, g, w) {
            return Some(format!("{}: invalid {}", s.name(g), w.render(s)));
        }
        (!cosets.related(g, grp.identity()))
            .then(|| format!("{}: witness {} outside [G,G]", s.name(g), w.render(s)))
    });
    let found = bounded.iter().filter(|w| w.is_some()).count();
    checks.push(Check::hard(
        "t1.search-sound",
        format!("{found} elements with a witness of size <= {bound}; all in [G,G]"),
        failure,
    ));

    let full_bound = theorem1_bound(&table, bound);
    let full = if full_bound == bound {
        bounded
    } else {
        orientable_set(&m, full_bound)
    };
    let orientable: Vec<usize> = (0..s.order()).filter(|&g| full[g].is_some()).collect();
    let failure = (orientable != derived).then(|| {
        format!(
            "orientable {} vs [G,G] {}",
            names(s, &orientable),
            names(s, &derived)
        )
    });
    checks.push(Check::hard(
        "t1.orientable-equals-derived",
        format!(
            "orientable set at bound {full_bound} = [G,G] = {}",
            names(s, &derived)
        ),
        failure,
    ));

    VerificationReport {
        subject: subject.to_string(),
        bound,
        checks,
    }
}

/// Relabelling of `q`'s elements onto `ab`'s that is an isomorphism, via
/// a shared map from the base group.
fn isomorphic_via(
    base: &Semigroup,
    left: &Congruence,
    q: &Semigroup,
    right: &Congruence,
    ab: &Semigroup,
) -> bool {
    if q.order() != ab.order() || left.len() != base.order() || right.len() != base.order() {
        return false;
    }
    let mut phi = vec![None; q.order()];
    for x in base.elements() {
        let (a, b) = (left.class_of(x), right.class_of(x));
        match phi[a] {
            None => phi[a] = Some(b),
            Some(prev) if prev != b => return false,
            _ => {}
        }
    }
    let phi: Vec<usize> = phi.into_iter().map(|p| p.expect("surjective")).collect();
    let mut image = phi.clone();
    image.sort_unstable();
    image.dedup();
    image.len() == phi.len()
        && q
            .elements()
            .all(|a| q.elements().all(|b| phi[q.mul(a, b)] == ab.mul(phi[a], phi[b])))
}

/// Orientable equivalence on a group coincides with the commutator-coset
/// congruence.
pub fn verify_theorem2(grp: &GroupStructure, subject: &str, bound: usize) -> Result<VerificationReport> {
    let s = grp.base();
    let m = adjoin_identity(s);
    let table = DecompositionTable::new(grp);
    let cosets = grp.coset_congruence();
    let mut checks = Vec::new();

    let same: Vec<(usize, usize)> = all_pairs(s.order())
        .into_iter()
        .filter(|&(u, v)| cosets.related(u, v))
        .collect();
    let count = same.len();
    let failure = first_failure(same, |(u, v)| match build_two_var_witness_with(grp, &table, v, u) {
        Ok(w) => (!two_var_valid(&m, u, v, &w))
            .then(|| format!("({}, {}): {}", s.name(u), s.name(v), w.render(s))),
        Err(e) => Some(format!("({}, {}): {e}", s.name(u), s.name(v))),
    });
    checks.push(Check::hard(
        "t2.constructive",
        format!("constructed witnesses validate for all {count} same-coset pairs"),
        failure,
    ));

    let bounded = sigma_report(&m, bound, false)?;
    let failure = bounded.found_pairs.iter().find_map(|p| {
        if !two_var_valid(&m, p.u, p.v, &p.witness) {
            return Some(format!("({}, {}): invalid {}", s.name(p.u), s.name(p.v), p.witness.render(s)));
        }
        (!cosets.related(p.u, p.v)).then(|| {
            format!(
                "({}, {}) related by {} across cosets",
                s.name(p.u),
                s.name(p.v),
                p.witness.render(s)
            )
        })
    });
    checks.push(Check::hard(
        "t2.search-sound",
        format!(
            "{} pairs with a witness of size <= {bound}; all within cosets",
            bounded.found_pairs.len()
        ),
        failure,
    ));

    let exact = sigma_report(&m, bound, true)?;
    let failure = exact
        .found_pairs
        .iter()
        .find(|p| !two_var_valid(&m, p.u, p.v, &p.witness))
        .map(|p| format!("({}, {}): {}", s.name(p.u), s.name(p.v), p.witness.render(s)))
        .or_else(|| {
            (exact.induced_congruence != cosets).then(|| {
                format!(
                    "sigma classes {:?} vs cosets {:?}",
                    exact.induced_congruence.classes(),
                    cosets.classes()
                )
            })
        });
    checks.push(Check::hard(
        "t2.sigma-equals-cosets",
        format!(
            "{} sigma classes = {} cosets of [G,G]",
            exact.induced_congruence.num_classes(),
            cosets.num_classes()
        ),
        failure,
    ));

    let q = quotient(s, &exact.induced_congruence)?;
    let ab = grp.abelianization();
    let expected_order = s.order() / grp.commutator_subgroup().len();
    let failure = if !q.is_commutative() {
        Some("quotient is not commutative".to_string())
    } else if !q.is_cancellative() {
        Some("quotient is not cancellative".to_string())
    } else if q.order() != expected_order {
        Some(format!("quotient order {} != {expected_order}", q.order()))
    } else if !isomorphic_via(s, &exact.induced_congruence, &q, &cosets, &ab) {
        Some("quotient differs from the abelianization".to_string())
    } else {
        None
    };
    checks.push(Check::hard(
        "t2.quotient-is-abelianization",
        format!("G/sigma has order {} and matches G/[G,G]", q.order()),
        failure,
    ));

    Ok(VerificationReport {
        subject: subject.to_string(),
        bound,
        checks,
    })
}

/// Pair-level checks on a bounded sigma relation.
struct SigmaFacts<'a> {
    report: &'a SigmaReport,
    s: &'a Semigroup,
}

impl SigmaFacts<'_> {
    fn has(&self, u: usize, v: usize) -> bool {
        self.report.contains(u, v)
    }

    fn pair(&self, u: usize, v: usize) -> String {
        format!("({}, {})", self.s.name(u), self.s.name(v))
    }

    fn symmetry_gap(&self) -> Option<String> {
        self.report
            .found_pairs
            .iter()
            .find(|p| !self.has(p.v, p.u))
            .map(|p| format!("{} found but not {}", self.pair(p.u, p.v), self.pair(p.v, p.u)))
    }

    fn transitivity_gap(&self) -> Option<String> {
        for p in &self.report.found_pairs {
            for q in self.report.found_pairs.iter().filter(|q| q.u == p.v) {
                if !self.has(p.u, q.v) {
                    return Some(format!(
                        "{} and {} found but not {}",
                        self.pair(p.u, p.v),
                        self.pair(q.u, q.v),
                        self.pair(p.u, q.v)
                    ));
                }
            }
        }
        None
    }

    fn compatibility_gap(&self) -> Option<String> {
        let s = self.s;
        for p in &self.report.found_pairs {
            for t in s.elements() {
                for (a, b) in [
                    (s.mul(t, p.u), s.mul(t, p.v)),
                    (s.mul(p.u, t), s.mul(p.v, t)),
                ] {
                    if !self.has(a, b) {
                        return Some(format!(
                            "{} found but not its translate {} by {}",
                            self.pair(p.u, p.v),
                            self.pair(a, b),
                            s.name(t)
                        ));
                    }
                }
            }
        }
        None
    }
}

fn soft_detail(holds: bool, what: &str, bound: usize) -> String {
    if holds {
        format!("{what}: holds for witnesses of size <= {bound}")
    } else {
        format!("{what}: not established by witnesses of size <= {bound}")
    }
}

/// Structural claims about orientable elements and orientable equivalence
/// on any finite semigroup. Groups get exact versions of the bounded
/// checks.
pub fn verify_propositions(s: &Semigroup, subject: &str, bound: usize) -> Result<VerificationReport> {
    let m = adjoin_identity(s);
    let n = s.order();
    let mut checks = Vec::new();

    let failure = s.elements().find_map(|u| {
        let w = TwoVarWitness::new([0], [], [0], []);
        (!two_var_valid(&m, u, u, &w)).then(|| format!("({0}, {0}): {1}", s.name(u), w.render(s)))
    });
    checks.push(Check::hard(
        "p.reflexivity",
        format!("[x] * t1 * [] = [x] * t2 * [] relates (u, u) for all {n} elements"),
        failure,
    ));

    let failure = first_failure(all_pairs(n), |(u, v)| {
        let w = TwoVarWitness::new([v], [], [], [v]);
        let (uv, vu) = (s.mul(u, v), s.mul(v, u));
        (!two_var_valid(&m, uv, vu, &w))
            .then(|| format!("({}, {}): {}", s.name(uv), s.name(vu), w.render(s)))
    });
    checks.push(Check::hard(
        "p.commutation",
        format!("[v] * t1 * [] = [] * t2 * [v] relates (uv, vu) for all {} pairs", n * n),
        failure,
    ));

    let idempotents = s.idempotents();
    let failure = idempotents.iter().find_map(|&e| {
        let w = OneVarWitness::new([e, e], [e], [e]);
        (!one_var_valid(&m, e, &w)).then(|| format!("{}: {}", s.name(e), w.render(s)))
    });
    checks.push(Check::hard(
        "p.idempotents",
        format!(
            "[e e] = [e] * t * [e] certifies all idempotents {}",
            names(s, &idempotents)
        ),
        failure,
    ));

    let at_bound = orientable_set(&m, bound);
    let at_next = orientable_set(&m, bound + 1);
    let failure = at_bound.iter().enumerate().find_map(|(g, w)| {
        let w = w.as_ref()?;
        (at_next[g].as_ref() != Some(w)).then(|| {
            format!(
                "{}: {} at bound {bound} but {:?} at bound {}",
                s.name(g),
                w.render(s),
                at_next[g].as_ref().map(|w| w.render(s)),
                bound + 1
            )
        })
    });
    checks.push(Check::hard(
        "p.monotonicity",
        format!("every witness at bound {bound} is kept at bound {}", bound + 1),
        failure,
    ));

    let sigma = sigma_report(&m, bound, false)?;
    let q = quotient(s, &sigma.induced_congruence)?;
    checks.push(Check::hard(
        "p.quotient-commutative",
        format!(
            "S/sigma (bound {bound}) has {} classes and is commutative",
            q.order()
        ),
        (!q.is_commutative()).then(|| "quotient table is not symmetric".to_string()),
    ));

    let orientable: Vec<usize> = (0..n).filter(|&g| at_bound[g].is_some()).collect();
    match group_structure(s) {
        Ok(grp) => checks.extend(exact_group_checks(&grp, &orientable, &sigma, bound)),
        Err(_) => checks.extend(bounded_checks(s, &orientable, &sigma, &q, bound)),
    }

    Ok(VerificationReport {
        subject: subject.to_string(),
        bound,
        checks,
    })
}

fn bounded_checks(
    s: &Semigroup,
    orientable: &[usize],
    sigma: &SigmaReport,
    q: &Semigroup,
    bound: usize,
) -> Vec<Check> {
    let mut checks = Vec::new();
    let mut member = vec![false; s.order()];
    for &x in orientable {
        member[x] = true;
    }
    let gap = orientable.iter().find_map(|&x| {
        orientable.iter().find_map(|&y| {
            let xy = s.mul(x, y);
            (!member[xy]).then(|| format!("{} * {} = {}", s.name(x), s.name(y), s.name(xy)))
        })
    });
    checks.push(Check::soft(
        "p.orientable-closure",
        soft_detail(
            gap.is_none(),
            &format!("orientable set {} closed under products", names(s, orientable)),
            bound,
        ),
        gap,
    ));

    let facts = SigmaFacts { report: sigma, s };
    for (id, what, gap) in [
        ("p.sigma-symmetric", "found sigma pairs symmetric", facts.symmetry_gap()),
        ("p.sigma-transitive", "found sigma pairs transitive", facts.transitivity_gap()),
        ("p.sigma-compatible", "found sigma pairs compatible with products", facts.compatibility_gap()),
    ] {
        checks.push(Check::soft(id, soft_detail(gap.is_none(), what, bound), gap));
    }

    let gap = orientable.iter().find_map(|&u| {
        s.elements().find_map(|t| {
            [(s.mul(u, t), t), (s.mul(t, u), t)]
                .into_iter()
                .find(|&(a, b)| !facts.has(a, b))
                .map(|(a, b)| format!("{} not found (orientable {})", facts.pair(a, b), s.name(u)))
        })
    });
    checks.push(Check::soft(
        "p.identity-class",
        soft_detail(gap.is_none(), "orientable u gives u*s ~ s and s*u ~ s", bound),
        gap,
    ));

    let cancellative = q.is_cancellative();
    checks.push(Check::soft(
        "p.quotient-cancellative",
        format!(
            "S/sigma (bound {bound}) is {}cancellative",
            if cancellative { "" } else { "not " }
        ),
        None,
    ));
    checks
}

/// On a group the orientable set is the commutator subgroup and sigma is
/// the coset congruence, so every bounded check has an exact counterpart.
fn exact_group_checks(
    grp: &GroupStructure,
    orientable: &[usize],
    sigma: &SigmaReport,
    bound: usize,
) -> Vec<Check> {
    let s = grp.base();
    let derived = grp.commutator_subgroup();
    let cosets = grp.coset_congruence();
    let mut checks = Vec::new();

    let failure = if !grp.is_normal_subgroup(&derived) {
        Some(format!("{} is not a normal subgroup", names(s, &derived)))
    } else {
        orientable
            .iter()
            .find(|x| !derived.contains(x))
            .map(|&x| format!("{} orientable but outside [G,G]", s.name(x)))
    };
    checks.push(Check::hard(
        "p.orientable-closure",
        format!("Orientable(G) = [G,G] = {} is a subgroup", names(s, &derived)),
        failure,
    ));

    let failure = cosets
        .compatibility_violation(s)
        .map(|(u, u2, v, v2)| format!("({}, {}) and ({}, {})", s.name(u), s.name(u2), s.name(v), s.name(v2)))
        .or_else(|| {
            sigma
                .found_pairs
                .iter()
                .find(|p| !cosets.related(p.u, p.v))
                .map(|p| format!("({}, {}) found across cosets", s.name(p.u), s.name(p.v)))
        });
    checks.push(Check::hard(
        "p.sigma-congruence",
        format!(
            "sigma = coset congruence with {} classes; bounded pairs at {bound} lie inside it",
            cosets.num_classes()
        ),
        failure,
    ));

    let failure = derived.iter().find_map(|&u| {
        s.elements().find_map(|t| {
            (!cosets.related(s.mul(u, t), t) || !cosets.related(s.mul(t, u), t))
                .then(|| format!("{} * {}", s.name(u), s.name(t)))
        })
    });
    checks.push(Check::hard(
        "p.identity-class",
        "[G,G] acts as the identity class of G/sigma".to_string(),
        failure,
    ));

    let ab = grp.abelianization();
    checks.push(Check::hard(
        "p.quotient-cancellative",
        format!("G/sigma = G/[G,G] of order {} is cancellative", ab.order()),
        (!ab.is_cancellative()).then(|| "abelianization is not cancellative".to_string()),
    ));
    checks
}
