mod common;

use proptest::prelude::*;

use common::{ref_eval, sorted, RefGroup};
use orient_core::congruence::{generated_congruence, quotient};
use orient_core::families::{group_catalog, non_group_catalog};
use orient_core::orientability::{
    search_one_var, search_two_var, validate_one_var, validate_two_var, OneVarWitness,
    TwoVarWitness, Verdict,
};
use orient_core::{adjoin_identity, parse_table, serialize, Semigroup, Word};

fn catalog() -> Vec<Semigroup> {
    group_catalog()
        .into_iter()
        .chain(non_group_catalog())
        .map(|f| f.build().unwrap())
        .collect()
}

fn small_groups() -> Vec<Semigroup> {
    ["symmetric:3", "dihedral:4", "quaternion8", "klein4", "cyclic:4"]
        .iter()
        .map(|s| orient_core::make_family(s).unwrap())
        .collect()
}

fn any_member() -> impl Strategy<Value = Semigroup> {
    let all = catalog();
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn words_in(n: usize, max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..n, 0..=max_len)
}

fn lift(w: &[usize]) -> Vec<Option<usize>> {
    w.iter().map(|&x| Some(x)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn eval_is_a_homomorphism(
        (s, p, q) in any_member().prop_flat_map(|s| {
            let n = s.order();
            (Just(s), words_in(n, 8), words_in(n, 8))
        })
    ) {
        let m = adjoin_identity(&s);
        let joined = Word(p.clone()).concat(&Word(q.clone()));
        let whole = m.eval(&joined).unwrap();
        prop_assert_eq!(whole, m.mul(m.eval(&Word(p.clone())).unwrap(), m.eval(&Word(q)).unwrap()));
        let direct = ref_eval(&s, &lift(&joined.0)).unwrap_or(m.identity_index());
        prop_assert_eq!(whole, direct);
    }

    #[test]
    fn serialize_then_parse_is_identity(
        (s, names) in any_member().prop_flat_map(|s| {
            let n = s.order();
            (Just(s), prop::collection::hash_set("[a-zA-Z0-9_.()^-]{1,6}", n))
        })
    ) {
        let names: Vec<String> = names.into_iter().filter(|x| x != "@1").collect();
        prop_assume!(names.len() == s.order());
        let renamed = Semigroup::new(names, s.table().to_vec()).unwrap();
        let text = serialize(&renamed);
        let back = parse_table(&text).unwrap();
        prop_assert_eq!(&back, &renamed);
        prop_assert_eq!(serialize(&back), text);
    }

    #[test]
    fn generated_congruence_is_compatible(
        (s, pairs) in any_member().prop_flat_map(|s| {
            let n = s.order();
            (Just(s), prop::collection::vec((0..n, 0..n), 0..4))
        })
    ) {
        let c = generated_congruence(&s, pairs.clone()).unwrap();
        for &(u, v) in &pairs {
            prop_assert!(c.related(u, v));
        }
        for u in s.elements() {
            for v in s.elements().filter(|&v| c.related(u, v)) {
                for x in s.elements() {
                    prop_assert!(c.related(s.mul(u, x), s.mul(v, x)));
                    prop_assert!(c.related(s.mul(x, u), s.mul(x, v)));
                }
            }
        }
        let q = quotient(&s, &c).unwrap();
        prop_assert_eq!(q.order(), c.num_classes());
    }

    #[test]
    fn found_witnesses_validate_and_stay_at_larger_bounds(
        (s, g, bound) in any_member().prop_flat_map(|s| {
            let n = s.order();
            (Just(s), 0..n, 1usize..=3)
        })
    ) {
        let m = adjoin_identity(&s);
        let w = search_one_var(&m, g, bound);
        if let Some(w) = &w {
            prop_assert!(w.size() <= bound);
            prop_assert_eq!(validate_one_var(&m, g, w).unwrap(), Verdict::Valid);
        }
        let wider = search_one_var(&m, g, bound + 1);
        if w.is_some() {
            prop_assert_eq!(wider, w);
        }
    }

    #[test]
    fn two_var_witnesses_respect_cosets(
        (s, u, v) in (0..5usize).prop_flat_map(|i| {
            let s = small_groups().swap_remove(i);
            let n = s.order();
            (Just(s), 0..n, 0..n)
        })
    ) {
        let m = adjoin_identity(&s);
        let labels = RefGroup::new(&s).coset_labels();
        match search_two_var(&m, u, v, 2) {
            Some(w) => {
                prop_assert_eq!(labels[u], labels[v]);
                prop_assert_eq!(validate_two_var(&m, u, v, &w).unwrap(), Verdict::Valid);
            }
            None => prop_assert_ne!(u, v),
        }
    }

    #[test]
    fn one_var_witnesses_lie_in_commutator_subgroup(
        (s, g) in (0..5usize).prop_flat_map(|i| {
            let s = small_groups().swap_remove(i);
            let n = s.order();
            (Just(s), 0..n)
        })
    ) {
        let m = adjoin_identity(&s);
        let derived = RefGroup::new(&s).derived();
        if search_one_var(&m, g, 3).is_some() {
            prop_assert!(derived[g]);
        }
    }

    #[test]
    fn validator_matches_direct_check(
        (s, g, a, b, c) in any_member().prop_flat_map(|s| {
            let n = s.order();
            (Just(s), 0..n, words_in(n, 3), words_in(n, 2), words_in(n, 2))
        })
    ) {
        let m = adjoin_identity(&s);
        let w = OneVarWitness::new(a.clone(), b.clone(), c.clone());
        let mut right = b.clone();
        right.extend(&c);
        let mut around = lift(&b);
        around.push(Some(g));
        around.extend(lift(&c));
        let want = !a.is_empty()
            && !right.is_empty()
            && sorted(&a) == sorted(&right)
            && ref_eval(&s, &lift(&a)) == ref_eval(&s, &around);
        prop_assert_eq!(validate_one_var(&m, g, &w).unwrap().is_valid(), want);
    }

    #[test]
    fn two_var_validator_matches_direct_check(
        (s, u, v, a, b, c, d) in any_member().prop_flat_map(|s| {
            let n = s.order();
            (Just(s), 0..n, 0..n, words_in(n, 2), words_in(n, 2), words_in(n, 2), words_in(n, 2))
        })
    ) {
        let m = adjoin_identity(&s);
        let w = TwoVarWitness::new(a.clone(), b.clone(), c.clone(), d.clone());
        let side = |x: &[usize], t: usize, y: &[usize]| {
            let mut v = lift(x);
            v.push(Some(t));
            v.extend(lift(y));
            ref_eval(&s, &v)
        };
        let joined = |x: &[usize], y: &[usize]| {
            let mut v = x.to_vec();
            v.extend_from_slice(y);
            sorted(&v)
        };
        let want = !(a.is_empty() && b.is_empty())
            && joined(&a, &b) == joined(&c, &d)
            && side(&a, u, &b) == side(&c, v, &d);
        prop_assert_eq!(validate_two_var(&m, u, v, &w).unwrap().is_valid(), want);
    }
}
