mod common;

use std::collections::BTreeMap;
use std::fs;

use common::{fixture, same_partition, RefGroup};
use orient_core::congruence::generated_congruence;
use orient_core::families::group_catalog;
use orient_core::orientability::{validate_one_var, validate_two_var, Verdict};
use orient_core::theorem::{
    build_orientable_witness, build_two_var_witness, CommutatorDecomposition, DecompositionTable,
};
use orient_core::{adjoin_identity, group_structure, make_family, parse_table, Semigroup};

fn catalog() -> Vec<(String, Semigroup)> {
    group_catalog()
        .into_iter()
        .map(|f| (f.to_string(), f.build().unwrap()))
        .collect()
}

fn mask(n: usize, xs: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &x in xs {
        m[x] = true;
    }
    m
}

#[test]
fn commutator_subgroup_matches_closure_oracle() {
    let expected: BTreeMap<&str, usize> = [
        ("klein4", 1),
        ("symmetric:3", 3),
        ("dihedral:4", 2),
        ("quaternion8", 2),
        ("alternating:4", 4),
    ]
    .into();
    for (name, s) in catalog() {
        let g = group_structure(&s).unwrap();
        let r = RefGroup::new(&s);
        let derived = g.commutator_subgroup();
        assert_eq!(mask(s.order(), &derived), r.derived(), "{name}");
        assert_eq!(derived.len(), expected.get(name.as_str()).copied().unwrap_or(1), "{name}");
        assert_eq!(g.identity(), r.e);
        for x in s.elements() {
            assert_eq!(g.inverse(x), r.inv[x]);
        }
    }
}

#[test]
fn cosets_and_abelianization_match_oracle() {
    for (name, s) in catalog() {
        let g = group_structure(&s).unwrap();
        let labels = RefGroup::new(&s).coset_labels();
        let cosets = g.coset_congruence();
        assert!(same_partition(cosets.classes_vec(), &labels), "{name}");
        let pairs: Vec<(usize, usize)> = s
            .elements()
            .flat_map(|x| s.elements().map(move |y| (x, y)))
            .map(|(x, y)| (s.mul(x, y), s.mul(y, x)))
            .collect();
        let generated = generated_congruence(&s, pairs).unwrap();
        assert!(same_partition(generated.classes_vec(), &labels), "{name}");
        let ab = g.abelianization();
        assert_eq!(ab.order() * g.commutator_subgroup().len(), s.order(), "{name}");
        assert!(ab.is_commutative() && ab.is_cancellative(), "{name}");
    }
}

fn compose(x: &[usize], y: &[usize]) -> Vec<usize> {
    x.iter().map(|&i| y[i]).collect()
}

#[test]
fn s3_fixture_matches_permutation_composition() {
    let s = parse_table(&fs::read_to_string(fixture("s3.tbl")).unwrap()).unwrap();
    let r = vec![1, 2, 0];
    let t = vec![1, 0, 2];
    let e = vec![0, 1, 2];
    let rr = compose(&r, &r);
    let perms: BTreeMap<&str, Vec<usize>> = [
        ("e", e),
        ("r", r.clone()),
        ("rr", rr.clone()),
        ("s", t.clone()),
        ("rs", compose(&r, &t)),
        ("rrs", compose(&rr, &t)),
    ]
    .into();
    for x in s.elements() {
        for y in s.elements() {
            let want = compose(&perms[s.name(x)], &perms[s.name(y)]);
            assert_eq!(perms[s.name(s.mul(x, y))], want);
        }
    }
    let g = group_structure(&s).unwrap();
    let derived: Vec<&str> = g.commutator_subgroup().iter().map(|&x| s.name(x)).collect();
    assert_eq!(derived, vec!["e", "r", "rr"]);
}

#[test]
fn symmetric_family_composes_on_the_right() {
    let s = make_family("symmetric:3").unwrap();
    let parse = |name: &str| -> Vec<usize> {
        name.bytes().map(|b| (b - b'1') as usize).collect()
    };
    for x in s.elements() {
        for y in s.elements() {
            let want = compose(&parse(s.name(x)), &parse(s.name(y)));
            assert_eq!(parse(s.name(s.mul(x, y))), want);
        }
    }
}

/// Minimal number of commutator factors per element, by enumerating every
/// product of up to `k` commutators.
fn min_lengths(r: &RefGroup, k: usize) -> Vec<Option<usize>> {
    let mut comms: Vec<usize> = (0..r.n)
        .flat_map(|x| (0..r.n).map(move |y| (x, y)))
        .map(|(x, y)| r.commutator(x, y))
        .collect();
    comms.sort_unstable();
    comms.dedup();
    let mut best = vec![None; r.n];
    best[r.e] = Some(0);
    let mut products = vec![r.e];
    for len in 1..=k {
        let mut next = Vec::new();
        for &p in &products {
            for &c in &comms {
                next.push(r.mul(p, c));
            }
        }
        for &x in &next {
            best[x].get_or_insert(len);
        }
        products = next;
    }
    best
}

#[test]
fn decomposition_lengths_are_minimal() {
    for (name, s) in catalog() {
        let g = group_structure(&s).unwrap();
        let table = DecompositionTable::new(&g);
        let want = min_lengths(&RefGroup::new(&s), 3);
        for x in s.elements() {
            assert_eq!(table.length(x), want[x], "{name} element {x}");
            if let Some(k) = want[x] {
                let d = table.decompose(&g, x).unwrap();
                assert_eq!(d.len(), k);
            }
        }
    }
}

#[test]
fn constructed_witness_sizes_for_longer_decompositions() {
    // products of k commutators, each decomposition forced by hand
    for spec in ["symmetric:3", "quaternion8", "dihedral:4", "alternating:4"] {
        let s = make_family(spec).unwrap();
        let g = group_structure(&s).unwrap();
        let m = adjoin_identity(&s);
        let n = s.order();
        for k in 1..=3usize {
            for seed in 0..(n * n) {
                let pairs: Vec<(usize, usize)> = (0..k)
                    .map(|i| {
                        let c = (seed * (i + 3) + i * 7) % (n * n);
                        (c / n, c % n)
                    })
                    .collect();
                let element = pairs
                    .iter()
                    .fold(g.identity(), |acc, &(x, y)| g.mul(acc, g.commutator(x, y)));
                let d = CommutatorDecomposition::new(&g, element, pairs).unwrap();
                let w = build_orientable_witness(&g, &d);
                assert_eq!(w.a.len(), 2 + 4 * (k - 1));
                assert_eq!(w.size(), 2 + 4 * (k - 1));
                assert_eq!(validate_one_var(&m, element, &w).unwrap(), Verdict::Valid, "{spec}");
            }
        }
    }
}

#[test]
fn two_var_witnesses_exactly_on_cosets() {
    for (name, s) in catalog() {
        let g = group_structure(&s).unwrap();
        let m = adjoin_identity(&s);
        let labels = RefGroup::new(&s).coset_labels();
        for u in s.elements() {
            for v in s.elements() {
                match build_two_var_witness(&g, v, u) {
                    Ok(w) => {
                        assert_eq!(labels[u], labels[v], "{name}");
                        assert_eq!(validate_two_var(&m, u, v, &w).unwrap(), Verdict::Valid, "{name}");
                    }
                    Err(_) => assert_ne!(labels[u], labels[v], "{name}"),
                }
            }
        }
    }
}
