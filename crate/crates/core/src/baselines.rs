//! Reference network constructions: random networks with a prescribed
//! in-degree distribution, directed Watts-Strogatz rings, and the two
//! deterministic strategies that maximize empty three-node motifs under a
//! uniform in-degree.

use crate::error::{Error, Result};
use crate::graph::{draw_in_degrees, DegreePlan, Digraph, InDegreeSpec};
use crate::rng::RngStream;
use rand::seq::SliceRandom;
use rand::Rng;

/// The two deterministic empty-motif strategies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrategyKind {
    /// One bidirectionally complete hub of K+1 nodes; everyone else takes
    /// all K inputs from the first K hub nodes.
    Intra,
    /// Nodes 0..K feed everyone else; nodes K..2K feed them back.
    Inter,
}

/// Random network: draw the degree plan, then give each node its inputs
/// uniformly without replacement from the other nodes.
pub fn generate_random_network(
    n: usize,
    spec: &InDegreeSpec,
    rng: &mut RngStream,
) -> Result<Digraph> {
    let plan = draw_in_degrees(spec, n, rng)?;
    let mut g = Digraph::new(n);
    let mut pool: Vec<usize> = Vec::with_capacity(n - 1);
    for (node, &target) in plan.targets().iter().enumerate() {
        pool.clear();
        pool.extend((0..n).filter(|&u| u != node));
        // Partial Fisher-Yates: the first `target` entries become the sources.
        for slot in 0..target {
            let pick = rng.gen_range(slot..pool.len());
            pool.swap(slot, pick);
            g.add_edge(pool[slot], node)?;
        }
    }
    Ok(g)
}

/// Directed Watts-Strogatz network: node v first receives an input from
/// each of its K nearest ring predecessors (v-1 .. v-K mod n, one-sided so
/// the in-degree is exactly K), then every edge's source is rewired with
/// probability q to a uniformly chosen node that is neither the target nor
/// an existing source. Targets never change, so in-degrees stay K.
pub fn generate_ws_directed(n: usize, k: usize, q: f64, rng: &mut RngStream) -> Result<Digraph> {
    if k < 1 || k > n - 1 {
        return Err(Error::InvalidStrategy(format!(
            "ring in-degree {k} out of range 1..={}",
            n - 1
        )));
    }
    if !(0.0..=1.0).contains(&q) {
        return Err(Error::InvalidStrategy(format!(
            "rewiring probability {q} outside [0, 1]"
        )));
    }
    let mut g = Digraph::new(n);
    for v in 0..n {
        for d in 1..=k {
            g.add_edge((v + n - d) % n, v)?;
        }
    }
    for v in 0..n {
        for d in 1..=k {
            let source = (v + n - d) % n;
            if !g.has_edge(source, v) || !rng.gen_bool(q) {
                continue;
            }
            let candidates: Vec<usize> = (0..n)
                .filter(|&u| u != v && !g.has_edge(u, v))
                .collect();
            if let Some(&new_source) = candidates.choose(rng) {
                g.remove_edge(source, v)?;
                g.add_edge(new_source, v)?;
            }
        }
    }
    Ok(g)
}

fn check_strategy(kind: StrategyKind, n: usize, k: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::InvalidStrategy(format!(
            "strategy needs K >= 3, got {k}"
        )));
    }
    let ok = match kind {
        StrategyKind::Intra => k < n,
        StrategyKind::Inter => 2 * k <= n,
    };
    if !ok {
        return Err(Error::InvalidStrategy(format!(
            "{kind:?} strategy infeasible for n = {n}, K = {k}"
        )));
    }
    Ok(())
}

/// Intra-connectivity strategy: nodes 0..=K form a bidirectionally complete
/// cluster; every other node receives an input from each of nodes 0..K.
/// Every node ends up with exactly K inputs.
pub fn intra_connectivity(n: usize, k: usize) -> Result<Digraph> {
    check_strategy(StrategyKind::Intra, n, k)?;
    let mut g = Digraph::new(n);
    for i in 0..=k {
        for j in 0..=k {
            if i != j {
                g.add_edge(i, j)?;
            }
        }
    }
    for v in k + 1..n {
        for u in 0..k {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Inter-connectivity strategy: nodes 0..K project to all other nodes, and
/// nodes K..2K project back to nodes 0..K. Every node ends up with exactly
/// K inputs.
pub fn inter_connectivity(n: usize, k: usize) -> Result<Digraph> {
    check_strategy(StrategyKind::Inter, n, k)?;
    let mut g = Digraph::new(n);
    for u in 0..k {
        for v in k..n {
            g.add_edge(u, v)?;
        }
    }
    for v in k..2 * k {
        for u in 0..k {
            g.add_edge(v, u)?;
        }
    }
    Ok(g)
}

fn choose3(x: usize) -> u64 {
    if x < 3 {
        0
    } else {
        (x as u64) * (x as u64 - 1) * (x as u64 - 2) / 6
    }
}

/// Closed-form count of empty three-node motifs for a strategy network:
/// C(N-K, 3) for intra, C(N-K, 3) + C(K, 3) for inter.
pub fn empty_motif_count(kind: StrategyKind, n: usize, k: usize) -> Result<u64> {
    check_strategy(kind, n, k)?;
    Ok(match kind {
        StrategyKind::Intra => choose3(n - k),
        StrategyKind::Inter => choose3(n - k) + choose3(k),
    })
}

/// All graphs reachable from `g` by replacing the source of exactly one
/// edge with a different eligible source (same target, so in-degrees are
/// preserved). Supports the local-optimality checks of the strategy
/// constructions.
pub fn rewire_neighborhood<'a>(
    g: &'a Digraph,
    plan: &DegreePlan,
) -> impl Iterator<Item = Digraph> + 'a {
    debug_assert_eq!(g.in_degrees(), plan.targets().to_vec());
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let n = g.node_count();
    edges.into_iter().flat_map(move |(source, target)| {
        (0..n)
            .filter(move |&alt| alt != target && alt != source && !g.has_edge(alt, target))
            .map(move |alt| {
                let mut variant = g.clone();
                variant.remove_edge(source, target).expect("edge exists");
                variant.add_edge(alt, target).expect("eligible source");
                variant
            })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_catalog, MotifClassId, MotifSize};

    #[test]
    fn random_network_trivial_specs() {
        let mut rng = RngStream::new(1);
        let g = generate_random_network(8, &InDegreeSpec::Delta { k: 7 }, &mut rng).unwrap();
        assert_eq!(g.edge_count(), 56);

        let g = generate_random_network(8, &InDegreeSpec::Binomial { p: 0.0 }, &mut rng).unwrap();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn random_network_matches_plan_degrees() {
        let mut rng = RngStream::new(5);
        let g =
            generate_random_network(40, &InDegreeSpec::Binomial { p: 0.25 }, &mut rng).unwrap();
        // Same seed redraws the same plan.
        let plan = draw_in_degrees(
            &InDegreeSpec::Binomial { p: 0.25 },
            40,
            &mut RngStream::new(5),
        )
        .unwrap();
        assert_eq!(g.in_degrees(), plan.targets().to_vec());
    }

    #[test]
    fn ws_ring_degree_invariant() {
        let mut rng = RngStream::new(9);
        let ring = generate_ws_directed(20, 4, 0.0, &mut rng).unwrap();
        assert!(ring.in_degrees().iter().all(|&d| d == 4));
        // q = 0: node 0 receives exactly from 16, 17, 18, 19.
        for d in 1..=4 {
            assert!(ring.has_edge(20 - d, 0));
        }

        let rewired = generate_ws_directed(20, 4, 1.0, &mut rng).unwrap();
        assert!(rewired.in_degrees().iter().all(|&d| d == 4));
        assert_ne!(rewired, ring);
    }

    #[test]
    fn strategies_have_uniform_in_degree() {
        let intra = intra_connectivity(30, 4).unwrap();
        assert!(intra.in_degrees().iter().all(|&d| d == 4));
        let inter = inter_connectivity(30, 4).unwrap();
        assert!(inter.in_degrees().iter().all(|&d| d == 4));
    }

    #[test]
    fn strategy_constraints_enforced() {
        assert!(intra_connectivity(10, 2).is_err());
        assert!(intra_connectivity(4, 4).is_err());
        assert!(inter_connectivity(7, 4).is_err());
        assert!(empty_motif_count(StrategyKind::Inter, 7, 4).is_err());
    }

    #[test]
    fn empty_motif_counts_match_census() {
        let cat = build_catalog(MotifSize::Three);
        let empty_class = MotifClassId(1);

        let intra = intra_connectivity(30, 4).unwrap();
        let counted = cat.census(&intra).unwrap().count(empty_class);
        assert_eq!(counted, 2600);
        assert_eq!(empty_motif_count(StrategyKind::Intra, 30, 4).unwrap(), 2600);

        let inter = inter_connectivity(30, 4).unwrap();
        let counted = cat.census(&inter).unwrap().count(empty_class);
        assert_eq!(counted, 2604);
        assert_eq!(empty_motif_count(StrategyKind::Inter, 30, 4).unwrap(), 2604);
    }

    #[test]
    fn closed_forms_for_large_and_boundary_cases() {
        assert_eq!(
            empty_motif_count(StrategyKind::Intra, 1000, 10).unwrap(),
            choose3(990)
        );
        assert_eq!(
            empty_motif_count(StrategyKind::Inter, 1000, 500).unwrap(),
            2 * choose3(500)
        );
    }

    #[test]
    fn rewire_neighborhood_of_complete_graph_is_empty() {
        let mut g = Digraph::new(4);
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        let plan = draw_in_degrees(&InDegreeSpec::Delta { k: 3 }, 4, &mut RngStream::new(0))
            .unwrap();
        assert_eq!(rewire_neighborhood(&g, &plan).count(), 0);
    }

    #[test]
    fn rewires_preserve_in_degrees() {
        let g = intra_connectivity(10, 3).unwrap();
        let plan = draw_in_degrees(&InDegreeSpec::Delta { k: 3 }, 10, &mut RngStream::new(0))
            .unwrap();
        let degrees = g.in_degrees();
        for variant in rewire_neighborhood(&g, &plan) {
            assert_eq!(variant.in_degrees(), degrees);
            assert_eq!(variant.edge_count(), g.edge_count());
        }
    }
}
