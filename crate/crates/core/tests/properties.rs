//! Property tests over randomly sampled corpus groups and seeds.

use ccs_core::corpus::standard_corpus;
use ccs_core::{structure, Bounds, GroupTable};
use proptest::prelude::*;
use std::sync::OnceLock;

fn small_corpus() -> &'static Vec<(String, GroupTable)> {
    static CORPUS: OnceLock<Vec<(String, GroupTable)>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        standard_corpus(&Bounds::default())
            .unwrap()
            .into_iter()
            .filter(|e| e.table.order() <= 64)
            .map(|e| (e.name, e.table))
            .collect()
    })
}

/// Relabels a table through a permutation fixing the identity; the result is
/// a group isomorphic to the original by construction.
fn relabel(g: &GroupTable, perm: &[usize]) -> GroupTable {
    let n = g.order();
    let mut inv = vec![0usize; n];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    let rows: Vec<Vec<u16>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| perm[g.mul(inv[a], inv[b])] as u16)
                .collect()
        })
        .collect();
    GroupTable::from_mul_table(rows, &Bounds::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_subgroups_satisfy_lagrange(
        idx in 0usize..1000,
        seeds in proptest::collection::vec(0usize..1000, 0..4),
    ) {
        let corpus = small_corpus();
        let (_, g) = &corpus[idx % corpus.len()];
        let seeds: Vec<usize> = seeds.iter().map(|&s| s % g.order()).collect();
        let sub = g.generated_subgroup(&seeds);
        prop_assert!(sub.is_subgroup(g));
        prop_assert_eq!(g.order() % sub.len(), 0);
        prop_assert!(seeds.iter().all(|&s| sub.contains(s)));
    }

    #[test]
    fn normal_closures_are_normal(
        idx in 0usize..1000,
        seeds in proptest::collection::vec(0usize..1000, 0..3),
    ) {
        let corpus = small_corpus();
        let (_, g) = &corpus[idx % corpus.len()];
        let seeds: Vec<usize> = seeds.iter().map(|&s| s % g.order()).collect();
        let nc = g.normal_closure(&seeds);
        prop_assert!(nc.is_subgroup(g));
        prop_assert!(g.is_normal(&nc));
        prop_assert!(seeds.iter().all(|&s| nc.contains(s)));
    }

    #[test]
    fn relabeled_tables_are_isomorphic(
        idx in 0usize..1000,
        shuffle in proptest::collection::vec(0u32..u32::MAX, 64),
    ) {
        let corpus = small_corpus();
        let (_, g) = &corpus[idx % corpus.len()];
        let n = g.order();
        // permutation of 1..n driven by the shuffle keys; identity stays 0
        let mut rest: Vec<usize> = (1..n).collect();
        rest.sort_by_key(|&i| shuffle[(i - 1) % shuffle.len()]);
        let mut perm = vec![0usize; n];
        for (slot, &elt) in rest.iter().enumerate() {
            perm[elt] = slot + 1;
        }
        let relabeled = relabel(g, &perm);
        prop_assert!(structure::is_isomorphic(g, &relabeled, &Bounds::default()).unwrap());
    }

    #[test]
    fn subgroup_tables_embed_homomorphically(
        idx in 0usize..1000,
        seeds in proptest::collection::vec(0usize..1000, 1..3),
    ) {
        let corpus = small_corpus();
        let (_, g) = &corpus[idx % corpus.len()];
        let seeds: Vec<usize> = seeds.iter().map(|&s| s % g.order()).collect();
        let sub = g.generated_subgroup(&seeds);
        let (t, embed) = g.subgroup_table(&sub, &Bounds::default()).unwrap();
        prop_assert_eq!(t.order(), sub.len());
        for a in 0..t.order() {
            for b in 0..t.order() {
                prop_assert_eq!(embed[t.mul(a, b)], g.mul(embed[a], embed[b]));
            }
        }
    }
}
