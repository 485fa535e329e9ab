//! Generation of directed, unweighted networks that promote chosen 3- or
//! 4-node connectivity motifs, plus the censuses, structure metrics,
//! reference constructions, and weight-search machinery used to evaluate
//! them.

pub mod baselines;
pub mod catalog;
pub mod error;
pub mod generator;
pub mod graph;
pub mod metrics;
pub mod optimizer;
pub mod rng;
pub mod stats;

pub use catalog::{
    build_catalog, delta_weights, CatalogDump, EdgeEffect, MotifCatalog, MotifCensus,
    MotifClass, MotifClassId, MotifSize, WeightVector,
};
pub use error::{Error, Result};
pub use generator::{generate_mbn, generate_mbn_with_stats, MbnOptions, ScoreVector};
pub use graph::{draw_in_degrees, read_edge_list, write_edge_list, DegreePlan, Digraph, InDegreeSpec};
pub use rng::RngStream;
