//! Motif-based network generation.
//!
//! The loop: draw per-node in-degree targets, then repeatedly pick a target
//! node (probability proportional to its unassigned inputs), score every
//! candidate source by the weighted motif turnover the new edge would cause,
//! and connect the best-scoring source (uniform among ties). Scores come
//! from pre-motif counting, never from recomputing censuses.

use crate::catalog::{MotifCatalog, MotifSize};
use crate::error::{Error, Result};
use crate::graph::{draw_in_degrees, DegreePlan, Digraph, InDegreeSpec};
use crate::rng::RngStream;
use rand::Rng;

/// Scores of candidate source nodes for one target.
#[derive(Debug, Clone)]
pub struct ScoreVector {
    /// Meaningful only where `eligible`.
    pub lambda: Vec<f64>,
    /// Candidate i is eligible when i != target and the edge i -> target is
    /// absent. Nodes that still miss inputs of their own stay eligible.
    pub eligible: Vec<bool>,
}

/// Two scores within `TIE_REL_TOL * max|lambda|` count as tied. Scores are
/// sums of products of small integers and weight entries, so exact ties are
/// the norm and must not be broken by floating-point noise.
pub const TIE_REL_TOL: f64 = 1e-9;

/// Knobs for a generation run.
#[derive(Debug, Clone)]
pub struct MbnOptions {
    /// Solve for effective weights before scoring (on by default); when off,
    /// the preferred weights are used verbatim.
    pub adapt_weights: bool,
}

impl Default for MbnOptions {
    fn default() -> Self {
        Self {
            adapt_weights: true,
        }
    }
}

/// Counters for the work bound: total auxiliary-node visits across all
/// score evaluations stay within O(E N^2) for size 3 and O(E N^3) for
/// size 4.
#[derive(Debug, Clone, Copy, Default)]
pub struct GenerationStats {
    pub edges_added: usize,
    pub score_evaluations: usize,
    pub aux_visits: u64,
}

/// Generates a motif-based network. In-degrees match the drawn plan
/// exactly; every edge is an argmax of the candidate scores with uniform
/// random tie-breaking; effective weights are computed once per run for
/// this `n`.
pub fn generate_mbn(
    cat: &MotifCatalog,
    n: usize,
    spec: &InDegreeSpec,
    wtilde: &[f64],
    options: &MbnOptions,
    rng: &mut RngStream,
) -> Result<Digraph> {
    generate_mbn_with_stats(cat, n, spec, wtilde, options, rng).map(|(g, _)| g)
}

pub fn generate_mbn_with_stats(
    cat: &MotifCatalog,
    n: usize,
    spec: &InDegreeSpec,
    wtilde: &[f64],
    options: &MbnOptions,
    rng: &mut RngStream,
) -> Result<(Digraph, GenerationStats)> {
    let size = cat.size();
    if n < size.nodes() {
        return Err(Error::GraphTooSmall {
            n,
            required: size.nodes(),
        });
    }
    let w = if options.adapt_weights {
        cat.adapt_weights(wtilde, n)?.w
    } else {
        if wtilde.len() != cat.class_count() {
            return Err(Error::InvalidWeights(format!(
                "expected {} weights, got {}",
                cat.class_count(),
                wtilde.len()
            )));
        }
        wtilde.to_vec()
    };
    let values = cat.premotif_values(&w);

    let mut plan = draw_in_degrees(spec, n, rng)?;
    let mut g = Digraph::new(n);
    let mut stats = GenerationStats::default();

    while let Some(k) = pick_target(&plan, rng) {
        let scores = match size {
            MotifSize::Three => calculate_points_3(k, &g, &values),
            MotifSize::Four => calculate_points_4(k, &g, &values),
        };
        let eligible = scores.eligible.iter().filter(|&&e| e).count();
        stats.score_evaluations += eligible;
        let aux = match size {
            MotifSize::Three => (n - 2) as u64,
            MotifSize::Four => ((n - 2) * (n - 3)) as u64,
        };
        stats.aux_visits += eligible as u64 * aux;

        let source = pick_source(&scores, rng)?;
        g.add_edge(source, k)?;
        plan.assign_one(k);
        stats.edges_added += 1;
    }

    debug_assert_eq!(g.in_degrees(), plan.targets().to_vec());
    Ok((g, stats))
}

/// Picks the node to receive an input, with probability proportional to its
/// unassigned input count. `None` once the plan is satisfied.
pub fn pick_target(plan: &DegreePlan, rng: &mut RngStream) -> Option<usize> {
    let total = plan.total_unassigned();
    if total == 0 {
        return None;
    }
    let mut x = rng.gen_range(0..total);
    for (node, &u) in plan.unassigned().iter().enumerate() {
        if x < u {
            return Some(node);
        }
        x -= u;
    }
    unreachable!("total unassigned covers the draw range")
}

/// Picks a highest-scoring eligible source, uniformly among near-ties.
pub fn pick_source(scores: &ScoreVector, rng: &mut RngStream) -> Result<usize> {
    let mut max = f64::NEG_INFINITY;
    let mut max_abs = 0.0f64;
    for (i, &e) in scores.eligible.iter().enumerate() {
        if e {
            max = max.max(scores.lambda[i]);
            max_abs = max_abs.max(scores.lambda[i].abs());
        }
    }
    if max == f64::NEG_INFINITY {
        return Err(Error::InvalidNodes(
            "no eligible source node for target".into(),
        ));
    }
    let tol = TIE_REL_TOL * max_abs;
    let tied: Vec<usize> = scores
        .eligible
        .iter()
        .enumerate()
        .filter(|&(i, &e)| e && scores.lambda[i] >= max - tol)
        .map(|(i, _)| i)
        .collect();
    Ok(tied[rng.gen_range(0..tied.len())])
}

/// Scores every candidate source for target `k` using 3-node pre-motif
/// counts. `values` must be the catalog's per-pre-motif contributions for
/// the effective weights (length 32).
///
/// For candidate i and auxiliary j, the pre-motif code packs the pair state
/// of (i, j) in bits 0-1, of (j, k) in bits 2-3, and the k -> i arc in bit
/// 4. The per-(a, b) auxiliary counts are taken with bitwise word ops over
/// the packed adjacency rows, so each candidate costs a handful of popcounts
/// per 64 auxiliaries.
pub fn calculate_points_3(k: usize, g: &Digraph, values: &[f64]) -> ScoreVector {
    let n = g.node_count();
    debug_assert_eq!(values.len(), 32);
    let words = g.words_per_row();
    let mut lambda = vec![0.0; n];
    let mut eligible = vec![false; n];

    // Valid auxiliary bits: all nodes except k (and, per candidate, i).
    let mut base_mask = vec![u64::MAX; words];
    if !n.is_multiple_of(64) {
        base_mask[words - 1] = (1u64 << (n % 64)) - 1;
    }
    base_mask[k / 64] &= !(1u64 << (k % 64));

    let to_k = g.in_row(k);
    let from_k = g.out_row(k);

    for i in 0..n {
        if i == k || g.has_edge(i, k) {
            continue;
        }
        eligible[i] = true;
        let from_i = g.out_row(i);
        let to_i = g.in_row(i);
        let c_offset = if g.has_edge(k, i) { 16 } else { 0 };

        let mut counts = [0u32; 16];
        for w in 0..words {
            let mut mask = base_mask[w];
            if w == i / 64 {
                mask &= !(1u64 << (i % 64));
            }
            if mask == 0 {
                continue;
            }
            let x1 = from_i[w]; // bit j: i -> j
            let x2 = to_i[w]; // bit j: j -> i
            let x3 = to_k[w]; // bit j: j -> k
            let x4 = from_k[w]; // bit j: k -> j
            for a in 0..4usize {
                let wa = match a {
                    0 => !x1 & !x2,
                    1 => x1 & !x2,
                    2 => !x1 & x2,
                    _ => x1 & x2,
                } & mask;
                if wa == 0 {
                    continue;
                }
                for b in 0..4usize {
                    let wb = match b {
                        0 => !x3 & !x4,
                        1 => x3 & !x4,
                        2 => !x3 & x4,
                        _ => x3 & x4,
                    };
                    counts[a + 4 * b] += (wa & wb).count_ones();
                }
            }
        }
        let mut acc = 0.0;
        for (ab, &c) in counts.iter().enumerate() {
            if c != 0 {
                acc += c as f64 * values[ab + c_offset];
            }
        }
        lambda[i] = acc;
    }
    ScoreVector { lambda, eligible }
}

/// Scores every candidate source for target `k` using 4-node pre-motif
/// counts (`values` length 2048). Auxiliaries are visited as ordered pairs
/// (j1, j2), so each unordered node set is counted twice; the resulting
/// uniform factor 2 never changes the argmax.
///
/// Pre-motif code layout: pair states of (i, j1), (i, j2), (j1, j2),
/// (j1, k), (j2, k) as base-4 digits 0..4, then the k -> i arc as bit 10.
pub fn calculate_points_4(k: usize, g: &Digraph, values: &[f64]) -> ScoreVector {
    let n = g.node_count();
    debug_assert_eq!(values.len(), 2048);
    let mut lambda = vec![0.0; n];
    let mut eligible = vec![false; n];

    let aux: Vec<usize> = (0..n).filter(|&j| j != k).collect();
    let mut first = vec![0usize; n]; // digit contributions of j as j1
    let mut second = vec![0usize; n]; // digit contributions of j as j2

    for i in 0..n {
        if i == k || g.has_edge(i, k) {
            continue;
        }
        eligible[i] = true;
        let c_offset = if g.has_edge(k, i) { 1024 } else { 0 };
        for &j in &aux {
            if j == i {
                continue;
            }
            let ij = usize::from(g.has_edge(i, j)) | usize::from(g.has_edge(j, i)) << 1;
            let jk = usize::from(g.has_edge(j, k)) | usize::from(g.has_edge(k, j)) << 1;
            first[j] = ij | jk << 6; // digits 0 and 3
            second[j] = ij << 2 | jk << 8; // digits 1 and 4
        }
        let mut acc = 0.0;
        for &j1 in &aux {
            if j1 == i {
                continue;
            }
            let base = first[j1] | c_offset;
            let row_j1 = g.out_row(j1);
            let col_j1 = g.in_row(j1);
            for &j2 in &aux {
                if j2 == i || j2 == j1 {
                    continue;
                }
                let d2 = (row_j1[j2 / 64] >> (j2 % 64) & 1 | (col_j1[j2 / 64] >> (j2 % 64) & 1) << 1)
                    as usize;
                acc += values[base | second[j2] | d2 << 4];
            }
        }
        lambda[i] = acc;
    }
    ScoreVector { lambda, eligible }
}
