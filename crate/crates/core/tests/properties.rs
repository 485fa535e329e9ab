//! Property tests over random graphs: census conservation, edge-list
//! round-tripping, and path-length transpose symmetry.

use mbn_core::catalog::{build_catalog, MotifSize};
use mbn_core::graph::{read_edge_list, write_edge_list, Digraph};
use mbn_core::metrics::{clustering_coefficient, harmonic_path_length, local_clustering};
use proptest::prelude::*;

fn arb_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (4..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(any::<bool>(), n * (n - 1)),
            )
        })
        .prop_map(|(n, bits)| {
            let mut g = Digraph::new(n);
            let mut idx = 0;
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        if bits[idx] {
                            g.add_edge(i, j).unwrap();
                        }
                        idx += 1;
                    }
                }
            }
            g
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn census_counts_partition_all_subsets(g in arb_digraph(10)) {
        let n = g.node_count() as u64;
        let cat3 = build_catalog(MotifSize::Three);
        prop_assert_eq!(cat3.census(&g).unwrap().total(), n * (n - 1) * (n - 2) / 6);
        let cat4 = build_catalog(MotifSize::Four);
        prop_assert_eq!(
            cat4.census(&g).unwrap().total(),
            n * (n - 1) * (n - 2) * (n - 3) / 24
        );
    }

    #[test]
    fn edge_list_round_trip(g in arb_digraph(20)) {
        let text = write_edge_list(&g);
        prop_assert_eq!(read_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn path_length_is_transpose_invariant(g in arb_digraph(16)) {
        let a = harmonic_path_length(&g);
        let b = harmonic_path_length(&g.transpose());
        prop_assert_eq!(a.reachable_pairs, b.reachable_pairs);
        if a.harmonic_mean.is_finite() {
            prop_assert!((a.harmonic_mean - b.harmonic_mean).abs() < 1e-9);
        } else {
            prop_assert!(b.harmonic_mean.is_infinite());
        }
    }

    #[test]
    fn clustering_values_stay_in_unit_interval(g in arb_digraph(12)) {
        for i in 0..g.node_count() {
            let c = local_clustering(&g, i);
            prop_assert!((0.0..=1.0).contains(&c));
        }
        let c = clustering_coefficient(&g);
        prop_assert!((0.0..=1.0).contains(&c));
    }
}
