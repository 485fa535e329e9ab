//! Rank-sum (Mann-Whitney U) test.
//!
//! Small samples without ties get the exact null distribution via the
//! standard counting recurrence; larger samples, or tied samples, use the
//! normal approximation with tie correction and continuity correction.

use crate::error::{Error, Result};
use statrs::distribution::{ContinuousCDF, Normal};

#[derive(Debug, Clone, Copy)]
pub struct RankSumResult {
    /// U statistic of the first sample.
    pub u: f64,
    pub p_two_sided: f64,
    /// Lower tail: alternative "sample a tends to be smaller than sample b".
    pub p_less: f64,
    /// Upper tail: alternative "sample a tends to be larger than sample b".
    pub p_greater: f64,
    pub exact: bool,
}

const EXACT_LIMIT: usize = 20;

/// Mann-Whitney U test of two independent samples.
pub fn rank_sum_test(a: &[f64], b: &[f64]) -> Result<RankSumResult> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySample);
    }
    let na = a.len();
    let nb = b.len();

    // Midranks over the pooled sample.
    let mut pooled: Vec<(f64, usize)> = a
        .iter()
        .map(|&x| (x, 0))
        .chain(b.iter().map(|&x| (x, 1)))
        .collect();
    pooled.sort_by(|x, y| x.0.partial_cmp(&y.0).expect("finite sample values"));
    let mut rank_sum_a = 0.0;
    let mut tie_sizes: Vec<usize> = Vec::new();
    let mut i = 0;
    while i < pooled.len() {
        let mut j = i + 1;
        while j < pooled.len() && pooled[j].0 == pooled[i].0 {
            j += 1;
        }
        let midrank = (i + 1 + j) as f64 / 2.0;
        let group_a = pooled[i..j].iter().filter(|&&(_, g)| g == 0).count();
        rank_sum_a += midrank * group_a as f64;
        if j - i > 1 {
            tie_sizes.push(j - i);
        }
        i = j;
    }
    let u = rank_sum_a - (na * (na + 1)) as f64 / 2.0;
    let mean = (na * nb) as f64 / 2.0;

    if na.min(nb) < EXACT_LIMIT && tie_sizes.is_empty() {
        // U is integral without ties.
        let u_int = u.round() as u64;
        let cdf = exact_u_cdf(na, nb);
        let total = cdf[cdf.len() - 1];
        let p_less = cdf[u_int as usize] / total;
        let upper_from = (na * nb) as u64 - u_int;
        let p_greater = cdf[cdf.len() - 1 - upper_from as usize] / total;
        let p_two = (2.0 * p_less.min(p_greater)).min(1.0);
        return Ok(RankSumResult {
            u,
            p_two_sided: p_two,
            p_less,
            p_greater,
            exact: true,
        });
    }

    let n = (na + nb) as f64;
    let tie_term: f64 = tie_sizes
        .iter()
        .map(|&t| (t * t * t - t) as f64)
        .sum::<f64>()
        / (n * (n - 1.0));
    let variance = (na * nb) as f64 / 12.0 * (n + 1.0 - tie_term);
    if variance <= 0.0 {
        // Every observation tied: no evidence either way.
        return Ok(RankSumResult {
            u,
            p_two_sided: 1.0,
            p_less: 0.5,
            p_greater: 0.5,
            exact: false,
        });
    }
    let sd = variance.sqrt();
    let normal = Normal::new(0.0, 1.0).expect("unit normal");
    // Continuity correction of 1/2 toward the mean.
    let p_less = normal.cdf((u - mean + 0.5) / sd);
    let p_greater = 1.0 - normal.cdf((u - mean - 0.5) / sd);
    Ok(RankSumResult {
        u,
        p_two_sided: (2.0 * p_less.min(p_greater)).min(1.0),
        p_less,
        p_greater,
        exact: false,
    })
}

/// Cumulative counts of the exact U distribution: entry u holds the number
/// of rank arrangements with statistic <= u, out of C(na+nb, na) total.
/// Classic recurrence: conditioning on whether the largest pooled value
/// comes from a or b.
fn exact_u_cdf(na: usize, nb: usize) -> Vec<f64> {
    fn dist(m: usize, n: usize, memo: &mut Vec<Vec<Option<Vec<f64>>>>) -> Vec<f64> {
        if let Some(d) = &memo[m][n] {
            return d.clone();
        }
        let d = if m == 0 || n == 0 {
            vec![1.0]
        } else {
            let with_b = dist(m, n - 1, memo); // largest value from b: U unchanged
            let with_a = dist(m - 1, n, memo); // largest value from a: U gains n
            let mut out = vec![0.0; m * n + 1];
            for (u, &c) in with_b.iter().enumerate() {
                out[u] += c;
            }
            for (u, &c) in with_a.iter().enumerate() {
                out[u + n] += c;
            }
            out
        };
        memo[m][n] = Some(d.clone());
        d
    }
    let mut memo = vec![vec![None; nb + 1]; na + 1];
    let d = dist(na, nb, &mut memo);
    let mut cdf = Vec::with_capacity(d.len());
    let mut acc = 0.0;
    for c in d {
        acc += c;
        cdf.push(acc);
    }
    cdf
}

/// Sample median (mean of the central pair for even lengths).
pub fn median(sample: &[f64]) -> f64 {
    assert!(!sample.is_empty());
    let mut sorted = sample.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite sample values"));
    let mid = sorted.len() / 2;
    if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        (sorted[mid - 1] + sorted[mid]) / 2.0
    }
}
