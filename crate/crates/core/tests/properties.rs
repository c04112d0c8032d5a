use cliquescope::generators;
use cliquescope::learn::{FeatureCache, FeatureKind};
use cliquescope::metrics::{clique_profile, clustering_summary, higher_order_cc};
use cliquescope::{brute_force_counts, CliqueCountVector, CliqueCounter, DatasetBundle, Graph};
use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (
        1..=max_n,
        prop::sample::select(vec![0.2, 0.5, 0.8]),
        any::<u64>(),
    )
        .prop_map(|(n, p, seed)| generators::gnp(n, p, seed))
}

fn binom(n: usize, r: usize) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    (0..r).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pivot_engine_matches_oracle(g in arb_graph(25), kmax in 3usize..=10) {
        let (totals, nodes) = CliqueCounter::new(kmax).unwrap().count_all(&g);
        let (bt, bn) = brute_force_counts(&g, kmax).unwrap();
        prop_assert_eq!(&totals, &bt);
        prop_assert_eq!(&nodes, &bn);
        prop_assert_eq!(nodes.totals(), totals);
    }

    #[test]
    fn count_vector_invariants(g in arb_graph(30)) {
        let (totals, nodes) = CliqueCounter::new(8).unwrap().count_all(&g);
        prop_assert_eq!(totals.get(1), &BigUint::from(g.node_count()));
        prop_assert_eq!(totals.get(2), &BigUint::from(g.edge_count()));
        let mut dead = false;
        for j in 1..=8 {
            prop_assert!(totals.get(j) <= &binom(g.node_count(), j));
            if dead {
                prop_assert!(totals.get(j).is_zero());
            }
            dead |= totals.get(j).is_zero();
        }
        for v in 0..g.node_count() {
            prop_assert_eq!(nodes.get(v, 1), &BigUint::from(1u32));
            prop_assert_eq!(nodes.get(v, 2), &BigUint::from(g.degree(v)));
            for j in 2..=8 {
                prop_assert!(nodes.get(v, j) <= &binom(g.degree(v), j - 1));
            }
        }
    }

    #[test]
    fn hocc_stays_in_unit_interval(g in arb_graph(25)) {
        let nodes = CliqueCounter::new(8).unwrap().count_per_node(&g);
        for k in 2..=8 {
            let h = higher_order_cc(&g, &nodes, k).unwrap();
            prop_assert!((0.0..=1.0).contains(&h.global));
            prop_assert!(h.per_node.iter().all(|m| (0.0..=1.0).contains(m)));
        }
        let h3 = higher_order_cc(&g, &nodes, 3).unwrap();
        let s = clustering_summary(&g);
        prop_assert!((h3.global - s.cc).abs() < 1e-12);
    }

    #[test]
    fn profiles_ignore_count_scale(g in arb_graph(25), factor in 1u64..1_000_000_000) {
        let counts = CliqueCounter::new(8).unwrap().count(&g);
        let scaled = CliqueCountVector::from_counts(
            counts.as_slice().iter().map(|c| c * factor).collect(),
        );
        for k in 3..=8 {
            let a = clique_profile(&counts, k).unwrap();
            let b = clique_profile(&scaled, k).unwrap();
            for (x, y) in a.as_slice().iter().zip(b.as_slice()) {
                prop_assert!((x - y).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn counting_is_deterministic(g in arb_graph(40)) {
        let counter = CliqueCounter::new(6).unwrap();
        prop_assert_eq!(counter.count_all(&g), counter.serial().count_all(&g));
        prop_assert_eq!(counter.clique_tree(&g), counter.clique_tree(&g));
    }
}

#[test]
fn feature_rows_are_scale_free() {
    // blowing every graph up into disjoint copies multiplies all clique
    // counts by the copy number; C_k rows must not move
    let base: Vec<Graph> = (0..6).map(|s| generators::gnp(14, 0.5, s)).collect();
    let tripled: Vec<Graph> = base
        .iter()
        .map(|g| {
            let n = g.node_count();
            let edges: Vec<(usize, usize)> = (0..3)
                .flat_map(|c| g.edges().map(move |(u, v)| (u + c * n, v + c * n)))
                .collect();
            Graph::from_edges(3 * n, edges)
        })
        .collect();
    let labels = [0, 1, 0, 1, 0, 1];
    let a = FeatureCache::build(&DatasetBundle::new("a", base, &labels).unwrap(), 10).unwrap();
    let b = FeatureCache::build(&DatasetBundle::new("b", tripled, &labels).unwrap(), 10).unwrap();
    for k in 4..=10 {
        let (ma, mb) = (
            a.matrix(FeatureKind::Profile(k)).unwrap(),
            b.matrix(FeatureKind::Profile(k)).unwrap(),
        );
        for (ra, rb) in ma.rows.iter().zip(&mb.rows) {
            for (x, y) in ra.iter().zip(rb) {
                assert!((x - y).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn loaded_graphs_satisfy_structure_invariants() {
    for seed in 0..10 {
        let g = generators::gnp(50, 0.3, seed);
        assert!(g.validate());
        let degree_sum: usize = (0..g.node_count()).map(|v| g.degree(v)).sum();
        assert_eq!(degree_sum, 2 * g.edge_count());
    }
}
