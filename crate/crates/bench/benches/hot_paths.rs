//! Hot-path benchmarks: candidate scoring (both motif sizes), full
//! censuses, and end-to-end generation at the experiment sizes.

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use mbn_core::baselines::generate_random_network;
use mbn_core::catalog::{build_catalog, MotifSize};
use mbn_core::generator::{calculate_points_3, calculate_points_4, generate_mbn, MbnOptions};
use mbn_core::graph::{Digraph, InDegreeSpec};
use mbn_core::rng::RngStream;

fn fixture(n: usize, p: f64, seed: u64) -> Digraph {
    let mut rng = RngStream::new(seed);
    generate_random_network(n, &InDegreeSpec::Binomial { p }, &mut rng).unwrap()
}

fn bench_scoring(c: &mut Criterion) {
    let cat3 = build_catalog(MotifSize::Three);
    let w3: Vec<f64> = (0..16).map(|m| (m as f64 * 0.37).sin()).collect();
    let v3 = cat3.premotif_values(&w3);
    let g100 = fixture(100, 0.2, 1);
    c.bench_function("score_3/n=100", |b| {
        b.iter(|| calculate_points_3(black_box(17), black_box(&g100), black_box(&v3)))
    });
    let g1000 = fixture(1000, 0.02, 2);
    c.bench_function("score_3/n=1000", |b| {
        b.iter(|| calculate_points_3(black_box(17), black_box(&g1000), black_box(&v3)))
    });

    let cat4 = build_catalog(MotifSize::Four);
    let w4: Vec<f64> = (0..218).map(|m| (m as f64 * 0.11).cos()).collect();
    let v4 = cat4.premotif_values(&w4);
    let g30 = fixture(30, 0.2, 3);
    c.bench_function("score_4/n=30", |b| {
        b.iter(|| calculate_points_4(black_box(5), black_box(&g30), black_box(&v4)))
    });
}

fn bench_census(c: &mut Criterion) {
    let cat3 = build_catalog(MotifSize::Three);
    let g200 = fixture(200, 0.1, 4);
    c.bench_function("census_3/n=200", |b| {
        b.iter(|| cat3.census(black_box(&g200)).unwrap())
    });
    let cat4 = build_catalog(MotifSize::Four);
    let g30 = fixture(30, 0.2, 5);
    c.bench_function("census_4/n=30", |b| {
        b.iter(|| cat4.census(black_box(&g30)).unwrap())
    });
}

fn bench_generation(c: &mut Criterion) {
    let cat3 = build_catalog(MotifSize::Three);
    let w8 = mbn_core::delta_weights(MotifSize::Three, 8).unwrap();
    c.bench_function("generate_3/n=100,p=0.2", |b| {
        let mut seed = 0u64;
        b.iter(|| {
            seed += 1;
            let mut rng = RngStream::new(seed);
            generate_mbn(
                &cat3,
                100,
                &InDegreeSpec::Binomial { p: 0.2 },
                &w8,
                &MbnOptions::default(),
                &mut rng,
            )
            .unwrap()
        })
    });
    let cat4 = build_catalog(MotifSize::Four);
    let w10 = mbn_core::delta_weights(MotifSize::Four, 10).unwrap();
    c.bench_function("generate_4/n=30,p=0.2", |b| {
        let mut seed = 0u64;
        b.iter(|| {
            seed += 1;
            let mut rng = RngStream::new(seed);
            generate_mbn(
                &cat4,
                30,
                &InDegreeSpec::Binomial { p: 0.2 },
                &w10,
                &MbnOptions::default(),
                &mut rng,
            )
            .unwrap()
        })
    });
}

criterion_group!(benches, bench_scoring, bench_census, bench_generation);
criterion_main!(benches);
