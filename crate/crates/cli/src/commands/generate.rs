//! `mbn generate`: produce one motif-based network as an edge-list file.

use super::{core_err, motif_size};
use crate::input::{InDegreeSource, WeightSource};
use crate::output::emit;
use crate::CliResult;
use mbn_core::catalog::build_catalog;
use mbn_core::generator::{generate_mbn, MbnOptions};
use mbn_core::graph::write_edge_list;
use mbn_core::rng::RngStream;
use std::path::PathBuf;

#[derive(clap::Args, Debug)]
pub struct Args {
    /// Number of nodes.
    #[arg(long)]
    pub n: usize,
    /// In-degree distribution: binomial:<p>, delta:<K>, or file:<path>.
    #[arg(long)]
    pub indegree: InDegreeSource,
    /// Subgraph size whose motifs are scored (3 or 4).
    #[arg(long, default_value_t = 3)]
    pub motif_size: usize,
    /// Preferred weights: delta:<id>, preset:<name>, file:<path>, or zero.
    #[arg(long)]
    pub weights: WeightSource,
    /// Use the preferred weights verbatim instead of solving for effective
    /// weights.
    #[arg(long)]
    pub no_adapt: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(args: Args) -> CliResult<()> {
    let size = motif_size(args.motif_size)?;
    let cat = build_catalog(size);
    let spec = args.indegree.resolve(args.n)?;
    let wtilde = args.weights.resolve(size)?;
    let options = MbnOptions {
        adapt_weights: !args.no_adapt,
    };
    let mut rng = RngStream::new(args.seed);
    let g = generate_mbn(&cat, args.n, &spec, &wtilde, &options, &mut rng).map_err(core_err)?;
    emit(args.out.as_ref(), &write_edge_list(&g))
}
