//! Reference-network sanity against closed-form expectations: the random
//! construction is equivalent to independent Bernoulli edges (a binomially
//! sized uniform subset is an iid edge set), so its expected census follows
//! from per-triple pattern probabilities; the rewired ring attains a
//! small-worldness index well above 1 in the sparse-rewiring regime.

use mbn_core::baselines::{generate_random_network, generate_ws_directed};
use mbn_core::catalog::{build_catalog, MotifSize};
use mbn_core::graph::InDegreeSpec;
use mbn_core::metrics::small_worldness;
use mbn_core::rng::RngStream;

#[test]
fn random_network_census_matches_bernoulli_expectation() {
    let cat = build_catalog(MotifSize::Three);
    let (n, p) = (100usize, 0.2f64);
    let triples = (n * (n - 1) * (n - 2) / 6) as f64;

    // Orbit sizes from the classification table itself; the expectation
    // only uses independence, never the census path under test.
    let mut class_probability = [0.0f64; 16];
    for code in 0..64u16 {
        let edges = code.count_ones() as i32;
        class_probability[cat.classify(code).index()] +=
            p.powi(edges) * (1.0 - p).powi(6 - edges);
    }
    assert!((class_probability.iter().sum::<f64>() - 1.0).abs() < 1e-12);

    let samples = 5;
    let mut mean = [0.0f64; 16];
    for s in 0..samples {
        let mut rng = RngStream::new(0xBE11).derive(s);
        let g = generate_random_network(n, &InDegreeSpec::Binomial { p }, &mut rng).unwrap();
        for (m, &c) in cat.census(&g).unwrap().counts.iter().enumerate() {
            mean[m] += c as f64 / samples as f64;
        }
    }
    for class in [1usize, 2] {
        let expected = triples * class_probability[class - 1];
        let got = mean[class - 1];
        assert!(
            (got - expected).abs() / expected < 0.05,
            "class {class}: mean {got} vs expected {expected}"
        );
    }
}

#[test]
fn sparsely_rewired_ring_is_small_world() {
    let mut rng = RngStream::new(0x3357);
    let g = generate_ws_directed(200, 4, 0.05, &mut rng).unwrap();
    let spec = InDegreeSpec::Delta { k: 4 };
    let report = small_worldness(&g, &spec, 10, &mut rng).unwrap();
    assert!(report.s > 1.0, "S = {}", report.s);
}
