mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::*;
use fintop::enumeration::*;
use fintop::properties::is_t0;
use fintop::{PointSet, Space};
use proptest::prelude::*;

fn family(space: &Space) -> Vec<u64> {
    let mut fam: Vec<u64> = space.open_family().unwrap().opens().iter().map(|o| o.bits()).collect();
    fam.sort_unstable();
    fam
}

fn relabel(space: &Space, perm: &[usize]) -> Space {
    let opens = family(space).into_iter().map(|o| PointSet::from_bits(permute_set(o, perm)));
    Space::from_opens(space.labels().to_vec(), opens).unwrap()
}

#[test]
fn labeled_enumeration_matches_brute_force() {
    for n in 1..=4 {
        let got: Vec<Vec<u64>> = enumerate_labeled(n).unwrap().map(|s| family(&s)).collect();
        let unique: BTreeSet<Vec<u64>> = got.iter().cloned().collect();
        assert_eq!(unique.len(), got.len(), "duplicates at n = {n}");
        let oracle: BTreeSet<Vec<u64>> = all_topologies(n).into_iter().collect();
        assert_eq!(unique, oracle);
    }
    assert_eq!(enumerate_labeled(5).unwrap().count(), 6942);
}

#[test]
fn class_partition_matches_relabelling_oracle() {
    for n in 1..=4 {
        let perms = permutations(n);
        let spaces: Vec<Space> = enumerate_labeled(n).unwrap().collect();
        let mut by_key: BTreeMap<Vec<u64>, BTreeSet<usize>> = BTreeMap::new();
        let mut by_form: BTreeMap<CanonicalForm, BTreeSet<usize>> = BTreeMap::new();
        for (i, s) in spaces.iter().enumerate() {
            by_key.entry(family_class_key(&family(s), &perms)).or_default().insert(i);
            by_form.entry(canonical_form(s)).or_default().insert(i);
        }
        let a: BTreeSet<_> = by_key.into_values().collect();
        let b: BTreeSet<_> = by_form.into_values().collect();
        assert_eq!(a, b, "n = {n}");
    }
}

#[test]
fn class_counts() {
    let counts: Vec<usize> = (1..=5).map(|n| enumerate_classes(n).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 3, 9, 33, 139]);
    for n in 1..=5 {
        let classes = enumerate_classes(n).unwrap();
        let total: usize = classes.iter().map(|c| c.labeled_count).sum();
        assert_eq!(total, enumerate_labeled(n).unwrap().count());
    }
}

#[test]
fn t0_classes_are_posets() {
    for n in 1..=5 {
        let t0 = enumerate_classes(n)
            .unwrap()
            .iter()
            .filter(|c| is_t0(&c.representative))
            .count();
        assert_eq!(t0, poset_class_count(n), "n = {n}");
    }
    let labeled: Vec<usize> = (1..=4)
        .map(|n| all_topologies(n).iter().filter(|f| family_is_t0(n, f)).count())
        .collect();
    assert_eq!(labeled, vec![1, 3, 19, 219]);
    for (n, &want) in labeled.iter().enumerate() {
        assert_eq!(enumerate_labeled(n + 1).unwrap().filter(is_t0).count(), want);
    }
}

#[test]
fn catalog_hits_every_three_point_class() {
    let forms: BTreeSet<CanonicalForm> = catalog().iter().map(canonical_form).collect();
    let classes: BTreeSet<CanonicalForm> = enumerate_classes(3).unwrap().into_iter().map(|c| c.form).collect();
    assert_eq!(forms, classes);
}

#[test]
fn output_order_is_deterministic() {
    let run = || -> Vec<(String, Vec<u64>, usize)> {
        enumerate_classes(5)
            .unwrap()
            .into_iter()
            .map(|c| (c.form.to_hex(), family(&c.representative), c.labeled_count))
            .collect()
    };
    let first = run();
    assert_eq!(first, run());
    assert!(first.windows(2).all(|w| w[0].0 < w[1].0));
    let labeled: Vec<Vec<u64>> = enumerate_labeled(4).unwrap().map(|s| family(&s)).collect();
    let again: Vec<Vec<u64>> = enumerate_labeled(4).unwrap().map(|s| family(&s)).collect();
    assert_eq!(labeled, again);
}

fn spaces_up_to_five() -> Vec<Space> {
    (1..=5).flat_map(|n| enumerate_labeled(n).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, ..ProptestConfig::default() })]

    #[test]
    fn canonical_form_ignores_labels(
        (space, perm) in prop::sample::select(spaces_up_to_five()).prop_flat_map(|s| {
            let n = s.n();
            (Just(s), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
        })
    ) {
        let moved = relabel(&space, &perm);
        prop_assert_eq!(canonical_form(&moved), canonical_form(&space));
        prop_assert!(is_homeomorphic(&moved, &space));
    }
}
