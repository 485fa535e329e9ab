//! Global structure measures: clustering coefficient, harmonic-mean path
//! length, small-worldness, modularity, and the two partitioning schemes
//! used to evaluate it.

use crate::baselines::generate_random_network;
use crate::error::{Error, Result};
use crate::graph::{Digraph, InDegreeSpec};
use crate::rng::RngStream;
use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// Assignment of every node to one of `n_clust` contiguous labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    assignment: Vec<usize>,
    n_clust: usize,
}

impl Partition {
    pub fn new(assignment: Vec<usize>) -> Result<Self> {
        let n_clust = assignment.iter().copied().max().map_or(0, |m| m + 1);
        if assignment.is_empty() {
            return Err(Error::InvalidPartition("no nodes".into()));
        }
        let mut seen = vec![false; n_clust];
        for &label in &assignment {
            seen[label] = true;
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::InvalidPartition(
                "labels do not form a contiguous range".into(),
            ));
        }
        Ok(Self {
            assignment,
            n_clust,
        })
    }

    pub fn single_cluster(n: usize) -> Self {
        Self {
            assignment: vec![0; n],
            n_clust: 1,
        }
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn n_clust(&self) -> usize {
        self.n_clust
    }

    pub fn cluster_members(&self) -> Vec<Vec<usize>> {
        let mut members = vec![Vec::new(); self.n_clust];
        for (node, &label) in self.assignment.iter().enumerate() {
            members[label].push(node);
        }
        members
    }
}

// ---------------------------------------------------------------------------
// Clustering coefficient
// ---------------------------------------------------------------------------

/// Local clustering of node `i`: triangle weight over its undirected
/// neighbourhood, each edge counted once per direction, normalized by
/// 8 * C(m_i, 2) so a fully reciprocal neighbourhood scores 1. Nodes with
/// fewer than two neighbours score 0.
pub fn local_clustering(g: &Digraph, i: usize) -> f64 {
    let pair_weight = |a: usize, b: usize| -> f64 {
        u8::from(g.has_edge(a, b)) as f64 + u8::from(g.has_edge(b, a)) as f64
    };
    let neighbours: Vec<usize> = (0..g.node_count())
        .filter(|&j| j != i && (g.has_edge(i, j) || g.has_edge(j, i)))
        .collect();
    let m = neighbours.len();
    if m < 2 {
        return 0.0;
    }
    let mut sum = 0.0;
    for (idx, &j) in neighbours.iter().enumerate() {
        let wij = pair_weight(i, j);
        for &k in &neighbours[..idx] {
            sum += wij * pair_weight(i, k) * pair_weight(j, k);
        }
    }
    sum / (8.0 * (m * (m - 1) / 2) as f64)
}

/// Mean local clustering over all nodes.
pub fn clustering_coefficient(g: &Digraph) -> f64 {
    let n = g.node_count();
    (0..n).map(|i| local_clustering(g, i)).sum::<f64>() / n as f64
}

// ---------------------------------------------------------------------------
// Path lengths
// ---------------------------------------------------------------------------

/// Harmonic mean of directed shortest-path lengths over all ordered pairs;
/// unreachable pairs contribute nothing to the reciprocal sum, which is the
/// point of using the harmonic mean. `harmonic_mean` is infinite only when
/// no pair is reachable at all.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct PathStats {
    pub harmonic_mean: f64,
    pub reachable_pairs: usize,
}

pub fn harmonic_path_length(g: &Digraph) -> PathStats {
    let n = g.node_count();
    let mut reciprocal_sum = 0.0;
    let mut reachable = 0usize;
    let mut dist = vec![u32::MAX; n];
    let mut queue = VecDeque::new();
    for start in 0..n {
        dist.fill(u32::MAX);
        dist[start] = 0;
        queue.clear();
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            let row = g.out_row(u);
            for (w, &word) in row.iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let v = w * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    if dist[v] == u32::MAX {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
        }
        for (v, &d) in dist.iter().enumerate() {
            if v != start && d != u32::MAX {
                reciprocal_sum += 1.0 / d as f64;
                reachable += 1;
            }
        }
    }
    let pairs = (n * (n - 1)) as f64;
    PathStats {
        harmonic_mean: if reciprocal_sum > 0.0 {
            pairs / reciprocal_sum
        } else {
            f64::INFINITY
        },
        reachable_pairs: reachable,
    }
}

// ---------------------------------------------------------------------------
// Small-worldness
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SmallWorldnessReport {
    pub s: f64,
    pub c: f64,
    pub l: f64,
    pub c_rand: f64,
    pub l_rand: f64,
    pub n_reference: usize,
}

/// Small-worldness index: clustering and path length of `g`, each normalized
/// by the mean over `r` random networks drawn with the same in-degree
/// specification.
pub fn small_worldness(
    g: &Digraph,
    spec: &InDegreeSpec,
    r: usize,
    rng: &mut RngStream,
) -> Result<SmallWorldnessReport> {
    assert!(r >= 1, "need at least one reference network");
    let n = g.node_count();
    let mut c_sum = 0.0;
    let mut l_sum = 0.0;
    for _ in 0..r {
        let reference = generate_random_network(n, spec, rng)?;
        c_sum += clustering_coefficient(&reference);
        l_sum += harmonic_path_length(&reference).harmonic_mean;
    }
    let c_rand = c_sum / r as f64;
    let l_rand = l_sum / r as f64;
    if c_rand == 0.0 {
        return Err(Error::DegenerateTerm("C_rand"));
    }
    if !l_rand.is_finite() {
        return Err(Error::DegenerateTerm("L_rand"));
    }
    let c = clustering_coefficient(g);
    let l = harmonic_path_length(g).harmonic_mean;
    if !l.is_finite() {
        return Err(Error::DegenerateTerm("L"));
    }
    Ok(SmallWorldnessReport {
        s: (c / c_rand) / (l / l_rand),
        c,
        l,
        c_rand,
        l_rand,
        n_reference: r,
    })
}

// ---------------------------------------------------------------------------
// Modularity
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModularityVariant {
    /// Expected intra-cluster weight from out/in degree products.
    Full,
    /// Expected weight approximated by the mean connection probability
    /// E / (N (N - 1)).
    Simplified,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModularityReport {
    pub q: f64,
    pub partition: Partition,
    pub variant: ModularityVariant,
}

/// Modularity of a partition. Cluster sums run over all ordered node pairs
/// of the cluster including the diagonal; self-edges are impossible, so the
/// diagonal only affects the expected term, and a one-cluster partition
/// scores exactly 0.
pub fn modularity(
    g: &Digraph,
    partition: &Partition,
    variant: ModularityVariant,
) -> Result<ModularityReport> {
    let n = g.node_count();
    if partition.assignment().len() != n {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} nodes, graph has {n}",
            partition.assignment().len()
        )));
    }
    let e = g.edge_count() as f64;
    if g.edge_count() == 0 {
        return Err(Error::UndefinedModularity);
    }
    let mut q = 0.0;
    for members in partition.cluster_members() {
        let mut within = 0.0;
        let mut out_sum = 0.0;
        let mut in_sum = 0.0;
        for &i in &members {
            out_sum += g.out_degree(i) as f64;
            in_sum += g.in_degree(i) as f64;
            for &j in &members {
                if g.has_edge(i, j) {
                    within += 1.0;
                }
            }
        }
        let expected = match variant {
            ModularityVariant::Full => out_sum * in_sum / e,
            ModularityVariant::Simplified => {
                let p = e / (n * (n - 1)) as f64;
                (members.len() * members.len()) as f64 * p
            }
        };
        q += within - expected;
    }
    Ok(ModularityReport {
        q: q / e,
        partition: partition.clone(),
        variant,
    })
}

// ---------------------------------------------------------------------------
// Hamming-distance hierarchical clustering
// ---------------------------------------------------------------------------

/// Pairwise distance in output and input patterns, positions i and j
/// excluded: half the Hamming distance of the two out-rows plus the two
/// in-rows.
pub fn hamming_distance_matrix(g: &Digraph) -> Vec<Vec<f64>> {
    let n = g.node_count();
    let words = g.words_per_row();
    let mut d = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let mut diff = 0u32;
            for w in 0..words {
                let mut mask = u64::MAX;
                if w == i / 64 {
                    mask &= !(1u64 << (i % 64));
                }
                if w == j / 64 {
                    mask &= !(1u64 << (j % 64));
                }
                diff += ((g.out_row(i)[w] ^ g.out_row(j)[w]) & mask).count_ones();
                diff += ((g.in_row(i)[w] ^ g.in_row(j)[w]) & mask).count_ones();
            }
            let dist = diff as f64 / 2.0;
            d[i][j] = dist;
            d[j][i] = dist;
        }
    }
    d
}

/// Agglomerative clustering on a distance matrix: repeatedly merge the
/// closest pair (ties to the lowest slot pair), updating distances to the
/// merged cluster as the plain average of the two parts, until `n_clust`
/// clusters remain. Cluster labels come out in slot order.
pub fn hierarchical_clustering(distances: &[Vec<f64>], n_clust: usize) -> Result<Partition> {
    let n = distances.len();
    if n_clust < 1 || n_clust > n {
        return Err(Error::InvalidPartition(format!(
            "cannot form {n_clust} clusters from {n} nodes"
        )));
    }
    let mut dist: Vec<Vec<f64>> = distances.to_vec();
    let mut members: Vec<Option<Vec<usize>>> = (0..n).map(|i| Some(vec![i])).collect();
    let mut active = n;
    while active > n_clust {
        let mut best: Option<(f64, usize, usize)> = None;
        for a in 0..n {
            if members[a].is_none() {
                continue;
            }
            for b in a + 1..n {
                if members[b].is_none() {
                    continue;
                }
                if best.is_none_or(|(d, _, _)| dist[a][b] < d) {
                    best = Some((dist[a][b], a, b));
                }
            }
        }
        let (_, a, b) = best.expect("more than one active cluster");
        let absorbed = members[b].take().expect("active cluster");
        members[a].as_mut().expect("active cluster").extend(absorbed);
        for j in 0..n {
            if j != a && members[j].is_some() {
                let merged = 0.5 * dist[a][j] + 0.5 * dist[b][j];
                dist[a][j] = merged;
                dist[j][a] = merged;
            }
        }
        active -= 1;
    }
    let mut assignment = vec![0usize; n];
    let mut label = 0;
    for slot in members.iter().flatten() {
        for &node in slot {
            assignment[node] = label;
        }
        label += 1;
    }
    Partition::new(assignment)
}

// ---------------------------------------------------------------------------
// Iterative bisection clustering
// ---------------------------------------------------------------------------

/// Proposes a two-way split of one cluster's members.
pub trait SplitHeuristic {
    /// Both halves must be non-empty when `members.len() >= 2`.
    fn split(
        &mut self,
        g: &Digraph,
        members: &[usize],
        rng: &mut RngStream,
    ) -> (Vec<usize>, Vec<usize>);
}

/// Default split: random balanced halves refined by greedy single-node
/// moves that improve the two halves' modularity contribution, best of a
/// few restarts.
#[derive(Debug, Clone)]
pub struct GreedyModularitySplit {
    pub restarts: usize,
    pub max_passes: usize,
}

impl Default for GreedyModularitySplit {
    fn default() -> Self {
        Self {
            restarts: 4,
            max_passes: 8,
        }
    }
}

impl SplitHeuristic for GreedyModularitySplit {
    fn split(
        &mut self,
        g: &Digraph,
        members: &[usize],
        rng: &mut RngStream,
    ) -> (Vec<usize>, Vec<usize>) {
        assert!(members.len() >= 2);
        let e = g.edge_count().max(1) as f64;
        let contribution = |side: &[usize]| -> f64 {
            let mut within = 0.0;
            let mut out_sum = 0.0;
            let mut in_sum = 0.0;
            for &i in side {
                out_sum += g.out_degree(i) as f64;
                in_sum += g.in_degree(i) as f64;
                for &j in side {
                    if g.has_edge(i, j) {
                        within += 1.0;
                    }
                }
            }
            (within - out_sum * in_sum / e) / e
        };

        let mut best: Option<(f64, Vec<usize>, Vec<usize>)> = None;
        for _ in 0..self.restarts {
            let mut shuffled = members.to_vec();
            shuffled.shuffle(rng);
            let (mut a, mut b) = (
                shuffled[..members.len() / 2].to_vec(),
                shuffled[members.len() / 2..].to_vec(),
            );
            let mut score = contribution(&a) + contribution(&b);
            for _ in 0..self.max_passes {
                let mut improved = false;
                for &node in members {
                    let in_a = a.contains(&node);
                    let (from, to) = if in_a { (&mut a, &mut b) } else { (&mut b, &mut a) };
                    if from.len() == 1 {
                        continue;
                    }
                    from.retain(|&x| x != node);
                    to.push(node);
                    let candidate = contribution(&a) + contribution(&b);
                    if candidate > score + 1e-12 {
                        score = candidate;
                        improved = true;
                    } else {
                        // Undo.
                        let (from, to) = if in_a { (&mut a, &mut b) } else { (&mut b, &mut a) };
                        to.retain(|&x| x != node);
                        from.push(node);
                    }
                }
                if !improved {
                    break;
                }
            }
            if best.as_ref().is_none_or(|(s, _, _)| score > *s) {
                best = Some((score, a, b));
            }
        }
        let (_, a, b) = best.expect("at least one restart");
        (a, b)
    }
}

/// Starts from one population-wide cluster and repeatedly applies the single
/// tentative split (over all current clusters) that yields the largest
/// full-variant modularity, until `n_clust` clusters exist.
pub fn bisection_clustering(
    g: &Digraph,
    n_clust: usize,
    heuristic: &mut dyn SplitHeuristic,
    rng: &mut RngStream,
) -> Result<Partition> {
    let n = g.node_count();
    if n_clust < 1 || n_clust > n {
        return Err(Error::InvalidPartition(format!(
            "cannot form {n_clust} clusters from {n} nodes"
        )));
    }
    let mut clusters: Vec<Vec<usize>> = vec![(0..n).collect()];
    while clusters.len() < n_clust {
        let mut best: Option<(f64, usize, Vec<usize>, Vec<usize>)> = None;
        for idx in 0..clusters.len() {
            if clusters[idx].len() < 2 {
                continue;
            }
            let (a, b) = heuristic.split(g, &clusters[idx], rng);
            debug_assert!(!a.is_empty() && !b.is_empty());
            let mut proposal = clusters.clone();
            proposal[idx] = a.clone();
            proposal.push(b.clone());
            let q = modularity(g, &partition_from_clusters(n, &proposal)?, ModularityVariant::Full)?
                .q;
            if best.as_ref().is_none_or(|(bq, _, _, _)| q > *bq) {
                best = Some((q, idx, a, b));
            }
        }
        let (_, idx, a, b) = best.expect("some cluster of size >= 2 must exist");
        clusters[idx] = a;
        clusters.push(b);
    }
    partition_from_clusters(n, &clusters)
}

fn partition_from_clusters(n: usize, clusters: &[Vec<usize>]) -> Result<Partition> {
    let mut assignment = vec![usize::MAX; n];
    for (label, members) in clusters.iter().enumerate() {
        for &node in members {
            assignment[node] = label;
        }
    }
    if assignment.contains(&usize::MAX) {
        return Err(Error::InvalidPartition("node left unassigned".into()));
    }
    Partition::new(assignment)
}
