use std::collections::BTreeSet;

use proptest::prelude::*;

use hyperring::analysis::RingAnalysis;
use hyperring::classify::PrimeMode;
use hyperring::construct::quotient;
use hyperring::harness::{Flag, Reading};
use hyperring::ideal::{colon, enumerate_hyperideal_sets, radical_via_powers};
use hyperring::io;
use hyperring::ring::zn_with_a;
use hyperring::{ElementSubset, HyperRing};

fn subset_of(n: usize) -> impl Strategy<Value = BTreeSet<usize>> {
    proptest::collection::btree_set(0..n, 0..=n)
}

/// `(n, A)` with `A` a nonempty subset of `Z_n`.
fn zn_a() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (2usize..=14).prop_flat_map(|n| (Just(n), proptest::collection::btree_set(0..n, 1..=3)))
        .prop_map(|(n, a)| (n, a.into_iter().collect()))
}

fn ring(n: usize, a: &[usize]) -> HyperRing {
    HyperRing::validate(&zn_with_a(n, a)).expect("Z_n with A is a hyperring")
}

fn to_set(s: &BTreeSet<usize>) -> ElementSubset {
    s.iter().copied().collect()
}

proptest! {
    #[test]
    fn subset_algebra_matches_btreeset(a in subset_of(200), b in subset_of(200)) {
        let (x, y) = (to_set(&a), to_set(&b));
        let as_vec = |s: &BTreeSet<usize>| s.iter().copied().collect::<Vec<_>>();
        prop_assert_eq!(x.union(&y).to_vec(), as_vec(&(&a | &b)));
        prop_assert_eq!(x.intersection(&y).to_vec(), as_vec(&(&a & &b)));
        prop_assert_eq!(x.difference(&y).to_vec(), as_vec(&(&a - &b)));
        prop_assert_eq!(x.is_subset(&y), a.is_subset(&b));
        prop_assert_eq!(x.intersects(&y), !a.is_disjoint(&b));
        prop_assert_eq!(x.len(), a.len());
        let full: BTreeSet<usize> = (0..200).collect();
        prop_assert_eq!(x.complement(200).to_vec(), as_vec(&(&full - &a)));
        if a.len() != b.len() {
            prop_assert_eq!(x.canonical_cmp(&y), a.len().cmp(&b.len()));
        }
    }

    #[test]
    fn zn_with_a_validates_and_round_trips((n, a) in zn_a()) {
        let r = ring(n, &a);
        let text = io::to_json(&r, None);
        let back = io::parse_definition(&text).unwrap().validate().unwrap();
        prop_assert!(back.same_tables(&r));
        prop_assert_eq!(io::to_json(&back, None), text);
    }

    #[test]
    fn hyperideals_are_closed((n, a) in zn_a()) {
        let r = ring(n, &a);
        let ideals = enumerate_hyperideal_sets(&r, 16).unwrap();
        prop_assert!(ideals.contains(&r.full()));
        for i in &ideals {
            for x in i.iter() {
                prop_assert!(i.contains(r.neg(x)));
                for y in i.iter() {
                    prop_assert!(i.contains(r.add(x, y)));
                }
                for y in 0..n {
                    prop_assert!(r.mul(x, y).is_subset(i));
                }
            }
            for j in &ideals {
                prop_assert!(ideals.contains(&i.intersection(j)));
                prop_assert!(ideals.contains(&colon(&r, i, j)));
            }
        }
    }

    #[test]
    fn class_inclusions((n, a) in zn_a()) {
        let r = ring(n, &a);
        let an = RingAnalysis::new(&r, 16).unwrap();
        let rad0 = an.radical(&an.zero(), PrimeMode::Relaxed);
        for (k, i) in an.ideals.iter().enumerate() {
            let rad = an.radical(i, PrimeMode::Relaxed);
            prop_assert!(i.is_subset(&rad));
            prop_assert!(radical_via_powers(&r, i).is_subset(&rad));
            if an.c_flags[k] {
                prop_assert_eq!(radical_via_powers(&r, i), rad);
            }
            if an.is_n(i, PrimeMode::Relaxed) {
                prop_assert!(an.is_r(i));
                prop_assert!(i.is_subset(&rad0));
            }
            if an.is_prime(i, PrimeMode::Relaxed) {
                prop_assert_eq!(rad, *i);
            }
        }
    }

    #[test]
    fn quotients_validate((n, a) in zn_a(), pick in any::<prop::sample::Index>()) {
        let r = ring(n, &a);
        let ideals = enumerate_hyperideal_sets(&r, 16).unwrap();
        let j = &ideals[pick.index(ideals.len())];
        if let Ok(q) = quotient(&r, j) {
            prop_assert_eq!(q.ring.size() * j.len(), n);
            for x in 0..n {
                for y in 0..n {
                    let s = r.add(x, y);
                    prop_assert_eq!(q.projection[s], q.ring.add(q.projection[x], q.projection[y]));
                }
            }
        }
    }

    #[test]
    fn reading_descriptions_parse_back(regular in 0usize..2, prime in 0usize..2, gamma in 0usize..2) {
        let text = format!(
            "regular={},prime={},gamma={}",
            ["nzd", "vnr"][regular],
            ["relaxed", "strict"][prime],
            ["repetition", "distinct-factors"][gamma]
        );
        let r = Reading::parse(&text).unwrap();
        let described: Vec<String> = r
            .describe(&Flag::ALL)
            .into_iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        prop_assert_eq!(Reading::parse(&described.join(",")).unwrap(), r);
    }
}
