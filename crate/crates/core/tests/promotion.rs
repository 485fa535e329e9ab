//! Promotion dominance for the 2-edge and 4-edge class groups: the network
//! generated under a delta weight on class m carries more m-patterns than
//! random networks and than networks promoting any sibling class of equal
//! edge count. (The 3-edge groups run at full scale in the acceptance
//! suite.)

use mbn_core::baselines::generate_random_network;
use mbn_core::catalog::{build_catalog, MotifCatalog, MotifClassId, MotifSize};
use mbn_core::generator::{generate_mbn, MbnOptions};
use mbn_core::graph::InDegreeSpec;
use mbn_core::rng::RngStream;
use mbn_core::stats::{median, rank_sum_test};

const SAMPLES: usize = 10;
const N: usize = 100;

fn censuses(
    cat: &MotifCatalog,
    spec: &InDegreeSpec,
    weights: Option<&[f64]>,
    seed: u64,
) -> Vec<Vec<u64>> {
    (0..SAMPLES)
        .map(|s| {
            let mut rng = RngStream::new(seed).derive(s as u64);
            let g = match weights {
                Some(w) => {
                    generate_mbn(cat, N, spec, w, &MbnOptions::default(), &mut rng).unwrap()
                }
                None => generate_random_network(N, spec, &mut rng).unwrap(),
            };
            cat.census(&g).unwrap().counts
        })
        .collect()
}

fn class_counts(censuses: &[Vec<u64>], class: usize) -> Vec<f64> {
    censuses.iter().map(|c| c[class - 1] as f64).collect()
}

fn assert_dominates(promoted: &[f64], other: &[f64], label: &str) {
    let r = rank_sum_test(other, promoted).unwrap();
    assert!(
        r.p_less < 0.05,
        "{label}: p = {:.3} (medians {} vs {})",
        r.p_less,
        median(promoted),
        median(other)
    );
    assert!(median(promoted) > median(other), "{label}: median ordering");
}

fn check_group(cat: &MotifCatalog, group: &[usize], p: f64, seed: u64) {
    let spec = InDegreeSpec::Binomial { p };
    let rn = censuses(cat, &spec, None, seed);
    let per_condition: Vec<Vec<Vec<u64>>> = group
        .iter()
        .map(|&m| {
            let w = mbn_core::delta_weights(cat.size(), m).unwrap();
            censuses(cat, &spec, Some(&w), seed + m as u64)
        })
        .collect();
    for (gi, &m) in group.iter().enumerate() {
        let own = class_counts(&per_condition[gi], m);
        assert_dominates(&own, &class_counts(&rn, m), &format!("class {m} vs RN at p={p}"));
        for (gj, &other) in group.iter().enumerate() {
            if gi != gj {
                assert_dominates(
                    &own,
                    &class_counts(&per_condition[gj], m),
                    &format!("class {m} vs promoter of {other} at p={p}"),
                );
            }
        }
    }
}

#[test]
fn two_edge_classes_dominate() {
    let cat = build_catalog(MotifSize::Three);
    check_group(&cat, &[3, 4, 5, 6], 0.2, 9000);
}

#[test]
fn four_edge_classes_dominate() {
    let cat = build_catalog(MotifSize::Three);
    check_group(&cat, &[11, 12, 13, 14], 0.3, 9100);
}

#[test]
fn singleton_edge_count_classes_dominate_random_networks() {
    // Classes without same-edge-count siblings (single edge, five-edge,
    // complete) are compared to random networks only.
    let cat = build_catalog(MotifSize::Three);
    for (m, p, seed) in [(2usize, 0.1, 9200u64), (15, 0.3, 9300), (16, 0.3, 9400)] {
        let spec = InDegreeSpec::Binomial { p };
        let w = mbn_core::delta_weights(MotifSize::Three, m).unwrap();
        let promoted = censuses(&cat, &spec, Some(&w), seed);
        let rn = censuses(&cat, &spec, None, seed + 1);
        assert_dominates(
            &class_counts(&promoted, m),
            &class_counts(&rn, m),
            &format!("singleton class {m} vs RN at p={p}"),
        );
    }
}

#[test]
fn sparse_limit_is_all_empty_patterns() {
    let cat = build_catalog(MotifSize::Three);
    let w = mbn_core::delta_weights(MotifSize::Three, 8).unwrap();
    let g = generate_mbn(
        &cat,
        30,
        &InDegreeSpec::Binomial { p: 0.0 },
        &w,
        &MbnOptions::default(),
        &mut RngStream::new(4),
    )
    .unwrap();
    let census = cat.census(&g).unwrap();
    assert_eq!(census.count(MotifClassId(1)), census.total());
}
