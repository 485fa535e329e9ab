//! Desk-scale checks of the tuned presets through the optimization
//! objectives: each preset must beat the all-zero (random-equivalent)
//! weight vector on its own measure, and the zero vector's small-worldness
//! objective sits near 1.

use mbn_core::catalog::{build_catalog, MotifSize};
use mbn_core::optimizer::{
    objective_modularity, objective_smallworld, preset_modularity, preset_smallworld,
    ModularityObjective, SmallWorldObjective,
};
use mbn_core::rng::RngStream;

#[test]
fn smallworld_preset_beats_zero_weights() {
    let cat = build_catalog(MotifSize::Three);
    let cfg = SmallWorldObjective {
        k_values: vec![3, 4, 5],
        network_size: 100,
        networks_per_case: 5,
        reference_samples: 5,
    };
    let preset = objective_smallworld(&cat, &preset_smallworld(), &cfg, &mut RngStream::new(41));
    let zero = objective_smallworld(&cat, &[0.0; 16], &cfg, &mut RngStream::new(42));
    assert!(
        preset > zero,
        "preset objective {preset} must exceed zero-weight objective {zero}"
    );
    assert!((zero - 1.0).abs() < 0.2, "zero-weight objective {zero} should be near 1");
    assert!(preset > 2.0, "preset objective {preset} unexpectedly weak");
}

#[test]
fn modularity_preset_beats_zero_weights() {
    let cat = build_catalog(MotifSize::Three);
    let cfg = ModularityObjective {
        n_clust_values: vec![10],
        network_size: 60,
        networks_per_case: 5,
    };
    let preset = objective_modularity(&cat, &preset_modularity(), &cfg, &mut RngStream::new(43));
    let zero = objective_modularity(&cat, &[0.0; 16], &cfg, &mut RngStream::new(44));
    assert!(
        preset > zero,
        "preset objective {preset} must exceed zero-weight objective {zero}"
    );
    assert!(preset > 0.4, "preset objective {preset} unexpectedly weak");
    assert!(zero.abs() < 0.2, "zero-weight modularity {zero} should be near 0");
}
