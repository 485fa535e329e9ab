//! Weight adaptation must agree bit-for-bit with the truncated power series
//! computed independently in exact rational arithmetic.

use mbn_core::catalog::{build_catalog, MotifSize};
use mbn_core::rng::RngStream;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;

/// Series route: wtilde + X wtilde / n + X^2 wtilde / n^2 + ... where X is
/// the one-edge extension matrix; terminates because X is nilpotent.
fn series_adapt(extension: &[Vec<u8>], wtilde: &[f64], n: usize) -> Vec<f64> {
    let dim = wtilde.len();
    let big_n = BigRational::from_integer(BigInt::from(n));
    let mut term: Vec<BigRational> = wtilde
        .iter()
        .map(|&x| BigRational::from_float(x).expect("finite weight"))
        .collect();
    let mut sum = term.clone();
    loop {
        let mut next = vec![BigRational::zero(); dim];
        for i in 0..dim {
            for j in 0..dim {
                if extension[i][j] == 1 && !term[j].is_zero() {
                    next[i] += &term[j];
                }
            }
            if !next[i].is_zero() {
                next[i] /= &big_n;
            }
        }
        if next.iter().all(Zero::is_zero) {
            break;
        }
        for (s, t) in sum.iter_mut().zip(&next) {
            *s += t;
        }
        term = next;
    }
    sum.iter().map(|r| r.to_f64().unwrap()).collect()
}

#[test]
fn back_substitution_equals_series_exactly() {
    let mut rng = RngStream::new(0x5E12);
    for size in [MotifSize::Three, MotifSize::Four] {
        let cat = build_catalog(size);
        let extension = cat.extension_matrix();
        for n in [5usize, 50] {
            for _ in 0..3 {
                let wtilde: Vec<f64> = (0..size.class_count())
                    .map(|_| rng.gen_range(-1.0..1.0))
                    .collect();
                let solved = cat.adapt_weights(&wtilde, n).unwrap().w;
                let series = series_adapt(&extension, &wtilde, n);
                assert_eq!(solved, series, "size {size:?}, n = {n}");
            }
        }
    }
}

#[test]
fn adaptation_rewards_every_path_multiplicity() {
    // Promoting the complete 3-node motif must reward the 5-edge class with
    // 1/n and each 4-edge class with 1/n^2 (single path each), and so on
    // down to the empty class.
    let cat = build_catalog(MotifSize::Three);
    let n = 10usize;
    let wtilde = mbn_core::delta_weights(MotifSize::Three, 16).unwrap();
    let w = cat.adapt_weights(&wtilde, n).unwrap().w;
    assert_eq!(w[15], 1.0);
    assert_eq!(w[14], 1.0 / n as f64);
    for idx in 10..14 {
        assert_eq!(w[idx], 1.0 / (n * n) as f64, "class {}", idx + 1);
    }
}
