//! Motif classes for 3- and 4-node directed subgraphs.
//!
//! A *motif class* is an isomorphism orbit of labeled subgraph codes (see
//! [`Digraph::induced_code`] for the bit layout). The catalog enumerates all
//! orbits for the requested subgraph size, assigns stable ids, and derives
//! two tables the generator depends on:
//!
//! * the *extension table*: which classes are reachable from a given class
//!   by adding exactly one edge (drives weight adaptation), and
//! * the *pre-motif effect table*: for every labeled connectivity pattern
//!   around a candidate edge, which class the pattern currently realizes and
//!   which class it becomes once the candidate edge is drawn (drives
//!   candidate scoring).
//!
//! Both tables are computed by exhaustive enumeration over the orbit map, not
//! hand-entered.

use crate::error::{Error, Result};
use crate::graph::Digraph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

/// Subgraph size handled by a catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MotifSize {
    Three,
    Four,
}

impl MotifSize {
    pub fn from_nodes(nodes: usize) -> Result<Self> {
        match nodes {
            3 => Ok(MotifSize::Three),
            4 => Ok(MotifSize::Four),
            other => Err(Error::UnsupportedMotifSize(other)),
        }
    }

    pub fn nodes(self) -> usize {
        match self {
            MotifSize::Three => 3,
            MotifSize::Four => 4,
        }
    }

    /// Off-diagonal ordered pairs, i.e. bits in a labeled code.
    pub fn code_bits(self) -> usize {
        let s = self.nodes();
        s * (s - 1)
    }

    pub fn class_count(self) -> usize {
        match self {
            MotifSize::Three => 16,
            MotifSize::Four => 218,
        }
    }

    /// Labeled patterns distinguished around a candidate edge: every pair
    /// state among source, auxiliaries, and target, with the candidate edge
    /// itself absent. 4^2 * 2 = 32 for size 3, 4^5 * 2 = 2048 for size 4.
    pub fn premotif_count(self) -> usize {
        match self {
            MotifSize::Three => 32,
            MotifSize::Four => 2048,
        }
    }
}

/// 1-based motif class id. For size 3 the numbering is the conventional
/// 16-class order (see [`three_node_representatives`]); for size 4 ids are
/// assigned by (edge count, canonical code) order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MotifClassId(pub u16);

impl MotifClassId {
    pub fn id(self) -> usize {
        self.0 as usize
    }

    /// 0-based position in census/weight vectors.
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }
}

/// One motif class: its id, canonical labeled code, and edge count.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MotifClass {
    pub id: MotifClassId,
    pub canonical_code: u16,
    pub edge_count: usize,
}

/// Effect of drawing the candidate edge on a pre-motif: the class the
/// pattern leaves and the class it enters. Exactly one of each, always.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeEffect {
    pub destroyed: MotifClassId,
    pub formed: MotifClassId,
}

#[derive(Debug, Clone)]
pub struct MotifCatalog {
    size: MotifSize,
    classes: Vec<MotifClass>,
    /// Class id for every labeled code, constant on isomorphism orbits.
    class_of_code: Vec<u16>,
    /// extensions[m] = sorted ids of the classes reachable from class m+1
    /// by adding one edge.
    extensions: Vec<Vec<u16>>,
    /// effects[r] = (destroyed, formed) for pre-motif code r.
    effects: Vec<EdgeEffect>,
}

/// Motif counts over all node subsets of the catalog's size. Classes
/// partition the subsets (the empty pattern is a class), so the counts sum
/// to C(N, 3) or C(N, 4).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MotifCensus {
    pub size: MotifSize,
    pub counts: Vec<u64>,
}

impl MotifCensus {
    pub fn count(&self, class: MotifClassId) -> u64 {
        self.counts[class.index()]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Preferred weights and the effective weights conveyed to the generator.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WeightVector {
    pub size: MotifSize,
    pub wtilde: Vec<f64>,
    pub w: Vec<f64>,
}

/// Weight vector with a single 1 at class `id`.
pub fn delta_weights(size: MotifSize, id: usize) -> Result<Vec<f64>> {
    if id < 1 || id > size.class_count() {
        return Err(Error::InvalidWeights(format!(
            "class id {id} out of range 1..={}",
            size.class_count()
        )));
    }
    let mut w = vec![0.0; size.class_count()];
    w[id - 1] = 1.0;
    Ok(w)
}

// ---------------------------------------------------------------------------
// Labeled-code plumbing
// ---------------------------------------------------------------------------

/// Bit position of the ordered slot pair (a, b) in a labeled code.
#[inline]
pub fn code_bit(s: usize, a: usize, b: usize) -> usize {
    debug_assert!(a != b && a < s && b < s);
    a * (s - 1) + b - usize::from(b > a)
}

fn permutations(s: usize) -> Vec<Vec<usize>> {
    let mut perms = Vec::new();
    let mut items: Vec<usize> = (0..s).collect();
    heap_permute(&mut items, 0, &mut perms);
    perms
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        heap_permute(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Applies a node relabeling to a code: the new pair (a, b) takes the bit of
/// the old pair (perm[a], perm[b]).
fn permute_code(code: u16, s: usize, perm: &[usize]) -> u16 {
    let mut out = 0u16;
    for a in 0..s {
        for b in 0..s {
            if a == b {
                continue;
            }
            if code >> code_bit(s, perm[a], perm[b]) & 1 == 1 {
                out |= 1 << code_bit(s, a, b);
            }
        }
    }
    out
}

fn code_of_arcs(s: usize, arcs: &[(usize, usize)]) -> u16 {
    let mut code = 0u16;
    for &(a, b) in arcs {
        code |= 1 << code_bit(s, a, b);
    }
    code
}

/// Fixed representatives pinning the 16 three-node class ids. The 2-, 3-,
/// and 4-edge assignments are the unique ones consistent with the extension
/// table (e.g. the chain must reach all four 3-edge classes, a convergent
/// pair only the triangle and the fed dyad), so this table is fully
/// determined by the structural descriptions below.
fn three_node_representatives() -> [(usize, &'static [(usize, usize)]); 16] {
    [
        (1, &[]),                                         // empty
        (2, &[(0, 1)]),                                   // single edge
        (3, &[(0, 2), (1, 2)]),                           // convergent pair
        (4, &[(0, 1), (1, 0)]),                           // mutual dyad
        (5, &[(0, 1), (1, 2)]),                           // chain
        (6, &[(0, 1), (0, 2)]),                           // divergent pair
        (7, &[(0, 1), (1, 0), (2, 0)]),                   // edge into a dyad
        (8, &[(0, 1), (0, 2), (1, 2)]),                   // feed-forward triangle
        (9, &[(0, 1), (1, 0), (0, 2)]),                   // edge out of a dyad
        (10, &[(0, 1), (1, 2), (2, 0)]),                  // three-cycle
        (11, &[(0, 1), (1, 0), (2, 0), (2, 1)]),          // dyad fed by one source
        (12, &[(0, 1), (1, 0), (1, 2), (2, 1)]),          // two dyads sharing a node
        (13, &[(0, 1), (1, 2), (2, 0), (1, 0)]),          // three-cycle plus reciprocal
        (14, &[(0, 1), (1, 0), (0, 2), (1, 2)]),          // dyad onto one target
        (15, &[(0, 1), (1, 0), (0, 2), (2, 0), (1, 2)]),  // one edge short of complete
        (16, &[(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]), // complete
    ]
}

// ---------------------------------------------------------------------------
// Pre-motif codes
// ---------------------------------------------------------------------------

/// Decodes a pre-motif code into labeled arcs.
///
/// Node layout: source = 0, auxiliaries = 1 (and 2 for size 4), target =
/// last slot. The candidate edge source -> target is absent by construction.
///
/// Size 3 (target = 2): code = a + 4b + 16c with two-bit pair states
/// a = (0->1, 1->0), b = (1->2, 2->1), and c the 2->0 arc.
///
/// Size 4 (target = 3): five two-bit pair states for (0,1), (0,2), (1,2),
/// (1,3), (2,3) in base-4 order, then the 3->0 arc as bit 10.
pub fn premotif_arcs(size: MotifSize, code: usize) -> Vec<(usize, usize)> {
    debug_assert!(code < size.premotif_count());
    let pairs: &[(usize, usize)] = match size {
        MotifSize::Three => &[(0, 1), (1, 2)],
        MotifSize::Four => &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)],
    };
    let mut arcs = Vec::new();
    for (d, &(a, b)) in pairs.iter().enumerate() {
        let state = code >> (2 * d) & 3;
        if state & 1 == 1 {
            arcs.push((a, b));
        }
        if state & 2 == 2 {
            arcs.push((b, a));
        }
    }
    if code >> (2 * pairs.len()) & 1 == 1 {
        let target = size.nodes() - 1;
        arcs.push((target, 0));
    }
    arcs
}

// ---------------------------------------------------------------------------
// Catalog construction
// ---------------------------------------------------------------------------

/// Enumerates the motif classes for the given subgraph size and derives the
/// extension and pre-motif effect tables.
pub fn build_catalog(size: MotifSize) -> MotifCatalog {
    let s = size.nodes();
    let bits = size.code_bits();
    let perms = permutations(s);

    // Canonical form: numerically smallest code over all node relabelings.
    let mut canon_of = vec![0u16; 1 << bits];
    for code in 0..(1u32 << bits) as u16 {
        let canon = perms
            .iter()
            .map(|p| permute_code(code, s, p))
            .min()
            .unwrap();
        canon_of[code as usize] = canon;
    }
    let mut canons: Vec<u16> = canon_of.clone();
    canons.sort_unstable();
    canons.dedup();
    assert_eq!(
        canons.len(),
        size.class_count(),
        "orbit enumeration must yield the known class count"
    );

    // Assign ids: size 3 through the pinned representative table, size 4 by
    // (edge count, canonical code).
    let id_of_canon: Vec<(u16, u16)> = match size {
        MotifSize::Three => {
            let mut pairs: Vec<(u16, u16)> = three_node_representatives()
                .iter()
                .map(|&(id, arcs)| (canon_of[code_of_arcs(3, arcs) as usize], id as u16))
                .collect();
            pairs.sort_unstable();
            assert!(
                pairs.windows(2).all(|w| w[0].0 != w[1].0),
                "three-node representatives must cover distinct orbits"
            );
            pairs
        }
        MotifSize::Four => {
            let mut ordered: Vec<u16> = canons.clone();
            ordered.sort_by_key(|&c| (c.count_ones(), c));
            let mut pairs: Vec<(u16, u16)> = ordered
                .iter()
                .enumerate()
                .map(|(idx, &c)| (c, idx as u16 + 1))
                .collect();
            pairs.sort_unstable();
            pairs
        }
    };
    let id_for = |canon: u16| -> u16 {
        let pos = id_of_canon.binary_search_by_key(&canon, |&(c, _)| c).unwrap();
        id_of_canon[pos].1
    };

    let mut classes: Vec<MotifClass> = canons
        .iter()
        .map(|&c| MotifClass {
            id: MotifClassId(id_for(c)),
            canonical_code: c,
            edge_count: c.count_ones() as usize,
        })
        .collect();
    classes.sort_by_key(|c| c.id);

    let class_of_code: Vec<u16> = canon_of.iter().map(|&c| id_for(c)).collect();

    // Extension table: one-edge additions from each class representative.
    let mut extensions: Vec<Vec<u16>> = vec![Vec::new(); size.class_count()];
    for class in &classes {
        let code = class.canonical_code;
        let mut targets: Vec<u16> = (0..bits)
            .filter(|&b| code >> b & 1 == 0)
            .map(|b| class_of_code[(code | 1 << b) as usize])
            .collect();
        targets.sort_unstable();
        targets.dedup();
        extensions[class.id.index()] = targets;
    }

    // Pre-motif effects: class before and after the candidate edge.
    let candidate_bit = code_bit(s, 0, s - 1);
    let effects: Vec<EdgeEffect> = (0..size.premotif_count())
        .map(|r| {
            let before = code_of_arcs(s, &premotif_arcs(size, r));
            debug_assert_eq!(before >> candidate_bit & 1, 0);
            let after = before | 1 << candidate_bit;
            EdgeEffect {
                destroyed: MotifClassId(class_of_code[before as usize]),
                formed: MotifClassId(class_of_code[after as usize]),
            }
        })
        .collect();

    MotifCatalog {
        size,
        classes,
        class_of_code,
        extensions,
        effects,
    }
}

impl MotifCatalog {
    pub fn size(&self) -> MotifSize {
        self.size
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[MotifClass] {
        &self.classes
    }

    pub fn class(&self, id: MotifClassId) -> &MotifClass {
        &self.classes[id.index()]
    }

    /// Class of a labeled code; invariant under node permutations.
    #[inline]
    pub fn classify(&self, code: u16) -> MotifClassId {
        MotifClassId(self.class_of_code[code as usize])
    }

    /// Classes reachable from `id` by adding exactly one edge.
    pub fn extensions_of(&self, id: MotifClassId) -> &[u16] {
        &self.extensions[id.index()]
    }

    /// Dense 0/1 extension matrix, row = from-class index, column =
    /// to-class index. Strictly upper triangular because ids never decrease
    /// with edge count.
    pub fn extension_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.class_count();
        let mut m = vec![vec![0u8; n]; n];
        for (i, targets) in self.extensions.iter().enumerate() {
            for &t in targets {
                m[i][t as usize - 1] = 1;
            }
        }
        m
    }

    pub fn premotif_count(&self) -> usize {
        self.effects.len()
    }

    pub fn effect(&self, premotif: usize) -> EdgeEffect {
        self.effects[premotif]
    }

    pub fn effects(&self) -> &[EdgeEffect] {
        &self.effects
    }

    /// Per-pre-motif score contribution for effective weights `w`:
    /// value[r] = w[formed] - w[destroyed].
    pub fn premotif_values(&self, w: &[f64]) -> Vec<f64> {
        assert_eq!(w.len(), self.class_count());
        self.effects
            .iter()
            .map(|e| w[e.formed.index()] - w[e.destroyed.index()])
            .collect()
    }

    /// Brute-force motif census over all node subsets of the catalog size.
    pub fn census(&self, g: &Digraph) -> Result<MotifCensus> {
        let n = g.node_count();
        let s = self.size.nodes();
        if n < s {
            return Err(Error::GraphTooSmall { n, required: s });
        }
        let mut counts = vec![0u64; self.class_count()];
        match self.size {
            MotifSize::Three => {
                for i in 0..n {
                    for j in i + 1..n {
                        for k in j + 1..n {
                            let code = triple_code(g, i, j, k);
                            counts[self.class_of_code[code as usize] as usize - 1] += 1;
                        }
                    }
                }
            }
            MotifSize::Four => {
                for i in 0..n {
                    for j in i + 1..n {
                        for k in j + 1..n {
                            for l in k + 1..n {
                                let code = g.induced_code(&[i, j, k, l]).expect("distinct nodes");
                                counts[self.class_of_code[code as usize] as usize - 1] += 1;
                            }
                        }
                    }
                }
            }
        }
        Ok(MotifCensus {
            size: self.size,
            counts,
        })
    }

    /// Effective weights for network size `n`: the unique solution of
    /// (I - X/n) w = wtilde where X is the extension matrix. Solved by exact
    /// rational back-substitution (unit diagonal, nilpotent upper part), so
    /// the result is the correctly rounded value of the exact series
    /// wtilde + X wtilde / n + X^2 wtilde / n^2 + ...
    pub fn adapt_weights(&self, wtilde: &[f64], n: usize) -> Result<WeightVector> {
        if wtilde.len() != self.class_count() {
            return Err(Error::InvalidWeights(format!(
                "expected {} weights, got {}",
                self.class_count(),
                wtilde.len()
            )));
        }
        if n < 2 {
            return Err(Error::GraphTooSmall { n, required: 2 });
        }
        let big_n = BigRational::from_integer(BigInt::from(n));
        let mut w: Vec<BigRational> = wtilde
            .iter()
            .map(|&x| {
                BigRational::from_float(x).ok_or_else(|| {
                    Error::InvalidWeights(format!("non-finite weight {x}"))
                })
            })
            .collect::<Result<_>>()?;
        // Extension targets always have more edges, hence strictly larger
        // ids; solving from the last id down visits finished entries only.
        for m in (0..self.class_count()).rev() {
            let mut acc = BigRational::from_integer(BigInt::from(0));
            for &t in &self.extensions[m] {
                acc += &w[t as usize - 1];
            }
            if !num_traits::Zero::is_zero(&acc) {
                let inc = acc / &big_n;
                w[m] += inc;
            }
        }
        Ok(WeightVector {
            size: self.size,
            wtilde: wtilde.to_vec(),
            w: w.iter()
                .map(|r| r.to_f64().expect("finite rational"))
                .collect(),
        })
    }

    /// Serializable dump of classes and derived tables.
    pub fn dump(&self) -> CatalogDump {
        CatalogDump {
            size: self.size.nodes(),
            class_count: self.class_count(),
            premotif_count: self.premotif_count(),
            classes: self.classes.clone(),
            extensions: self
                .extensions
                .iter()
                .map(|t| t.iter().map(|&x| x as usize).collect())
                .collect(),
            premotif_effects: self
                .effects
                .iter()
                .enumerate()
                .map(|(code, e)| PremotifEffectDump {
                    code,
                    destroyed: e.destroyed.id(),
                    formed: e.formed.id(),
                })
                .collect(),
        }
    }
}

/// Labeled code of the ordered triple (i, j, k) without the tuple-validity
/// checks of [`Digraph::induced_code`]; census hot path.
#[inline]
fn triple_code(g: &Digraph, i: usize, j: usize, k: usize) -> u16 {
    u16::from(g.has_edge(i, j))
        | u16::from(g.has_edge(i, k)) << 1
        | u16::from(g.has_edge(j, i)) << 2
        | u16::from(g.has_edge(j, k)) << 3
        | u16::from(g.has_edge(k, i)) << 4
        | u16::from(g.has_edge(k, j)) << 5
}

/// JSON-facing view of a catalog.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogDump {
    pub size: usize,
    pub class_count: usize,
    pub premotif_count: usize,
    pub classes: Vec<MotifClass>,
    /// Row m-1 lists the class ids reachable from class m by one edge.
    pub extensions: Vec<Vec<usize>>,
    pub premotif_effects: Vec<PremotifEffectDump>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PremotifEffectDump {
    pub code: usize,
    pub destroyed: usize,
    pub formed: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Digraph;

    fn cat3() -> MotifCatalog {
        build_catalog(MotifSize::Three)
    }

    #[test]
    fn class_counts() {
        assert_eq!(cat3().class_count(), 16);
        assert_eq!(build_catalog(MotifSize::Four).class_count(), 218);
    }

    #[test]
    fn three_node_classes_group_by_edge_count() {
        let cat = cat3();
        let mut per_edges = [0usize; 7];
        for class in cat.classes() {
            per_edges[class.edge_count] += 1;
        }
        assert_eq!(per_edges, [1, 1, 4, 4, 4, 1, 1]);
        // Ids ordered by non-decreasing edge count.
        let counts: Vec<usize> = cat.classes().iter().map(|c| c.edge_count).collect();
        assert!(counts.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn classify_known_three_node_patterns() {
        let cat = cat3();
        let code = |arcs: &[(usize, usize)]| code_of_arcs(3, arcs);
        assert_eq!(cat.classify(0).id(), 1);
        assert_eq!(cat.classify(code(&[(0, 1), (0, 2), (1, 2)])).id(), 8);
        assert_eq!(cat.classify(code(&[(0, 1), (1, 2), (2, 0)])).id(), 10);
        assert_eq!(cat.classify(code(&[(1, 2), (2, 1)])).id(), 4);
        assert_eq!(cat.classify(0b111111).id(), 16);
    }

    #[test]
    fn classify_is_permutation_invariant_exhaustively() {
        for size in [MotifSize::Three, MotifSize::Four] {
            let cat = build_catalog(size);
            let s = size.nodes();
            for code in 0..(1u32 << size.code_bits()) as u16 {
                let base = cat.classify(code);
                for perm in permutations(s) {
                    assert_eq!(cat.classify(permute_code(code, s, &perm)), base);
                }
            }
        }
    }

    #[test]
    fn four_node_single_edge_class_is_two() {
        let cat = build_catalog(MotifSize::Four);
        assert_eq!(cat.classify(0).id(), 1);
        assert_eq!(cat.classify(1).id(), 2);
        assert_eq!(cat.classify(0xfff).id(), 218);
    }

    #[test]
    fn census_trivial_cases() {
        let cat = cat3();
        let empty = Digraph::new(5);
        let census = cat.census(&empty).unwrap();
        assert_eq!(census.count(MotifClassId(1)), 10);
        assert_eq!(census.total(), 10);

        let mut full = Digraph::new(4);
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    full.add_edge(i, j).unwrap();
                }
            }
        }
        let census = cat.census(&full).unwrap();
        assert_eq!(census.count(MotifClassId(16)), 4);
        assert_eq!(census.total(), 4);

        let g = Digraph::from_edges(3, [(0, 1)]).unwrap();
        let census = cat.census(&g).unwrap();
        assert_eq!(census.count(MotifClassId(2)), 1);
        assert_eq!(census.count(MotifClassId(1)), 0);
        assert_eq!(census.total(), 1);

        assert!(cat.census(&Digraph::new(2)).is_err());
    }

    #[test]
    fn extension_rows_match_derivation() {
        let cat = cat3();
        assert_eq!(cat.extensions_of(MotifClassId(1)), &[2]);
        assert_eq!(cat.extensions_of(MotifClassId(3)), &[7, 8]);
        assert_eq!(cat.extensions_of(MotifClassId(5)), &[7, 8, 9, 10]);
        assert_eq!(cat.extensions_of(MotifClassId(16)), &[] as &[u16]);
    }

    #[test]
    fn extension_matrix_is_strictly_upper_triangular() {
        for size in [MotifSize::Three, MotifSize::Four] {
            let cat = build_catalog(size);
            let m = cat.extension_matrix();
            for (i, row) in m.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    if v == 1 {
                        assert!(j > i, "extension {} -> {} not upper triangular", i + 1, j + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn effects_destroy_and_form_adjacent_edge_counts() {
        for size in [MotifSize::Three, MotifSize::Four] {
            let cat = build_catalog(size);
            for r in 0..cat.premotif_count() {
                let e = cat.effect(r);
                let before = cat.class(e.destroyed).edge_count;
                let after = cat.class(e.formed).edge_count;
                assert_eq!(after, before + 1, "pre-motif {r}");
            }
        }
    }

    #[test]
    fn known_effect_rows() {
        let cat = cat3();
        // No arcs at all: empty becomes a single edge.
        assert_eq!(
            cat.effect(0),
            EdgeEffect {
                destroyed: MotifClassId(1),
                formed: MotifClassId(2)
            }
        );
        // Only the target-to-source arc: the candidate closes a mutual dyad.
        assert_eq!(
            cat.effect(16),
            EdgeEffect {
                destroyed: MotifClassId(2),
                formed: MotifClassId(4)
            }
        );
    }

    #[test]
    fn adapt_weights_delta_identities() {
        let cat = cat3();
        for n in [5usize, 6, 50, 100] {
            let nf = n as f64;
            let wv = cat.adapt_weights(&delta_weights(MotifSize::Three, 8).unwrap(), n).unwrap();
            let mut expected = vec![0.0; 16];
            expected[7] = 1.0;
            expected[2] = 1.0 / nf;
            expected[4] = 1.0 / nf;
            expected[5] = 1.0 / nf;
            expected[1] = 3.0 / (nf * nf);
            expected[0] = 3.0 / (nf * nf * nf);
            assert_eq!(wv.w, expected, "n = {n}");

            let wv = cat.adapt_weights(&delta_weights(MotifSize::Three, 1).unwrap(), n).unwrap();
            assert_eq!(wv.w, delta_weights(MotifSize::Three, 1).unwrap());

            let wv = cat.adapt_weights(&delta_weights(MotifSize::Three, 2).unwrap(), n).unwrap();
            let mut expected = vec![0.0; 16];
            expected[1] = 1.0;
            expected[0] = 1.0 / nf;
            assert_eq!(wv.w, expected);
        }
    }

    #[test]
    fn dump_round_trips_through_json() {
        let cat = cat3();
        let dump = cat.dump();
        let json = serde_json::to_string(&dump).unwrap();
        let back: CatalogDump = serde_json::from_str(&json).unwrap();
        assert_eq!(back.class_count, 16);
        assert_eq!(back.premotif_count, 32);
        assert_eq!(back.extensions[0], vec![2]);
    }
}
