//! Dense directed graphs over a fixed node set.
//!
//! The adjacency relation is stored twice as bit-packed rows: once by source
//! (out-edges) and once by target (in-edges). Every scoring and census loop
//! in this crate scans whole rows or columns, so the duplicated transpose
//! buys word-at-a-time access in both directions for graphs of the sizes
//! handled here (N up to ~1000).

use crate::error::{Error, Result};
use crate::rng::RngStream;
use rand::Rng;
use std::fmt::Write as _;

const WORD_BITS: usize = 64;

/// Directed, unweighted graph without self-loops. Entry (i, j) means an edge
/// from node `i` to node `j`.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    words: usize,
    /// `out[i * words ..][j]` bit set iff edge i -> j.
    out: Vec<u64>,
    /// `inc[j * words ..][i]` bit set iff edge i -> j (transpose of `out`).
    inc: Vec<u64>,
    edges: usize,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "graph needs at least one node");
        let words = n.div_ceil(WORD_BITS);
        Self {
            n,
            words,
            out: vec![0; n * words],
            inc: vec![0; n * words],
            edges: 0,
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::new(n);
        for (i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn words_per_row(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.n && j < self.n);
        self.out[i * self.words + j / WORD_BITS] >> (j % WORD_BITS) & 1 == 1
    }

    /// Adds edge i -> j. Rejects self-loops, out-of-range ids, and duplicates.
    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        if i >= self.n || j >= self.n {
            return Err(Error::InvalidNodes(format!(
                "edge ({i}, {j}) out of range for {} nodes",
                self.n
            )));
        }
        if i == j {
            return Err(Error::InvalidNodes(format!("self-loop at node {i}")));
        }
        if self.has_edge(i, j) {
            return Err(Error::InvalidNodes(format!("duplicate edge ({i}, {j})")));
        }
        self.out[i * self.words + j / WORD_BITS] |= 1 << (j % WORD_BITS);
        self.inc[j * self.words + i / WORD_BITS] |= 1 << (i % WORD_BITS);
        self.edges += 1;
        Ok(())
    }

    /// Removes edge i -> j; no-op error if absent.
    pub fn remove_edge(&mut self, i: usize, j: usize) -> Result<()> {
        if i >= self.n || j >= self.n || !self.has_edge(i, j) {
            return Err(Error::InvalidNodes(format!("edge ({i}, {j}) not present")));
        }
        self.out[i * self.words + j / WORD_BITS] &= !(1 << (j % WORD_BITS));
        self.inc[j * self.words + i / WORD_BITS] &= !(1 << (i % WORD_BITS));
        self.edges -= 1;
        Ok(())
    }

    /// Bit-packed out-neighbourhood of `i`: bit j set iff i -> j.
    #[inline]
    pub fn out_row(&self, i: usize) -> &[u64] {
        &self.out[i * self.words..(i + 1) * self.words]
    }

    /// Bit-packed in-neighbourhood of `j`: bit i set iff i -> j.
    #[inline]
    pub fn in_row(&self, j: usize) -> &[u64] {
        &self.inc[j * self.words..(j + 1) * self.words]
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.out_row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn in_degree(&self, j: usize) -> usize {
        self.in_row(j).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        (0..self.n).map(|j| self.in_degree(j)).collect()
    }

    /// Edges in (source, target) lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| {
            (0..self.n).filter_map(move |j| self.has_edge(i, j).then_some((i, j)))
        })
    }

    /// Graph with every edge reversed.
    pub fn transpose(&self) -> Digraph {
        Digraph {
            n: self.n,
            words: self.words,
            out: self.inc.clone(),
            inc: self.out.clone(),
            edges: self.edges,
        }
    }

    /// Packed off-diagonal adjacency of the induced subgraph on an ordered
    /// tuple of 3 or 4 distinct nodes. Bit positions follow row-major order
    /// over ordered pairs of tuple slots, diagonal skipped: for a tuple
    /// (a, b, c) the bits are (a,b), (a,c), (b,a), (b,c), (c,a), (c,b) from
    /// bit 0 upward, and analogously for 12 bits on 4-tuples.
    pub fn induced_code(&self, nodes: &[usize]) -> Result<u16> {
        let s = nodes.len();
        if s != 3 && s != 4 {
            return Err(Error::UnsupportedMotifSize(s));
        }
        for (idx, &v) in nodes.iter().enumerate() {
            if v >= self.n {
                return Err(Error::InvalidNodes(format!("node {v} out of range")));
            }
            if nodes[..idx].contains(&v) {
                return Err(Error::InvalidNodes(format!("duplicate node {v}")));
            }
        }
        let mut code = 0u16;
        let mut bit = 0;
        for &a in nodes {
            for &b in nodes {
                if a == b {
                    continue;
                }
                if self.has_edge(a, b) {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        Ok(code)
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Target in-degree distribution.
#[derive(Debug, Clone, PartialEq)]
pub enum InDegreeSpec {
    /// Each node draws Binomial(N-1, p): one independent trial per potential
    /// input. N-1 trials is the only count consistent with forbidden
    /// self-connections and a maximum in-degree of N-1.
    Binomial { p: f64 },
    /// Every node gets exactly `k` inputs.
    Delta { k: usize },
    /// Per-node targets given verbatim.
    Explicit(Vec<usize>),
}

impl InDegreeSpec {
    pub fn validate(&self, n: usize) -> Result<()> {
        match self {
            InDegreeSpec::Binomial { p } => {
                if !(0.0..=1.0).contains(p) {
                    return Err(Error::InvalidDegreeSpec(format!(
                        "binomial probability {p} outside [0, 1]"
                    )));
                }
            }
            InDegreeSpec::Delta { k } => {
                if *k > n - 1 {
                    return Err(Error::InvalidDegreeSpec(format!(
                        "delta in-degree {k} exceeds maximum {} for {n} nodes",
                        n - 1
                    )));
                }
            }
            InDegreeSpec::Explicit(targets) => {
                if targets.len() != n {
                    return Err(Error::InvalidDegreeSpec(format!(
                        "explicit list has {} entries for {n} nodes",
                        targets.len()
                    )));
                }
                if let Some(bad) = targets.iter().find(|&&t| t > n - 1) {
                    return Err(Error::InvalidDegreeSpec(format!(
                        "explicit in-degree {bad} exceeds maximum {}",
                        n - 1
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Per-node in-degree targets and the not-yet-assigned remainder.
#[derive(Debug, Clone)]
pub struct DegreePlan {
    targets: Vec<usize>,
    unassigned: Vec<usize>,
}

impl DegreePlan {
    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    pub fn unassigned(&self) -> &[usize] {
        &self.unassigned
    }

    pub fn total_unassigned(&self) -> usize {
        self.unassigned.iter().sum()
    }

    pub fn assign_one(&mut self, node: usize) {
        assert!(self.unassigned[node] > 0, "node {node} already satisfied");
        self.unassigned[node] -= 1;
    }
}

/// Draws a degree plan: one target per node, all of it initially unassigned.
pub fn draw_in_degrees(spec: &InDegreeSpec, n: usize, rng: &mut RngStream) -> Result<DegreePlan> {
    if n < 2 {
        return Err(Error::GraphTooSmall { n, required: 2 });
    }
    spec.validate(n)?;
    let targets: Vec<usize> = match spec {
        InDegreeSpec::Binomial { p } => (0..n)
            .map(|_| (0..n - 1).filter(|_| rng.gen_bool(*p)).count())
            .collect(),
        InDegreeSpec::Delta { k } => vec![*k; n],
        InDegreeSpec::Explicit(targets) => targets.clone(),
    };
    Ok(DegreePlan {
        unassigned: targets.clone(),
        targets,
    })
}

/// Serializes a graph in the edge-list text format: an `n=<count>` header
/// followed by one `source,target` line per edge, LF-terminated, edges in
/// (source, target) order.
pub fn write_edge_list(g: &Digraph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "n={}", g.node_count());
    for (i, j) in g.edges() {
        let _ = writeln!(s, "{i},{j}");
    }
    s
}

/// Parses the edge-list text format. Rejects self-loops, out-of-range ids,
/// and duplicate edges.
pub fn read_edge_list(text: &str) -> Result<Digraph> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(Error::EdgeListParse {
        line: 1,
        reason: "empty input".into(),
    })?;
    let n: usize = header
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse().ok())
        .filter(|&v| v >= 1)
        .ok_or_else(|| Error::EdgeListParse {
            line: 1,
            reason: format!("expected header `n=<count>`, got `{header}`"),
        })?;
    let mut g = Digraph::new(n);
    for (idx, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let parse = |s: &str| -> Option<usize> { s.trim().parse().ok() };
        let (a, b) = line
            .split_once(',')
            .and_then(|(a, b)| Some((parse(a)?, parse(b)?)))
            .ok_or_else(|| Error::EdgeListParse {
                line: idx + 1,
                reason: format!("expected `source,target`, got `{line}`"),
            })?;
        g.add_edge(a, b).map_err(|e| Error::EdgeListParse {
            line: idx + 1,
            reason: e.to_string(),
        })?;
    }
    Ok(g)
}
