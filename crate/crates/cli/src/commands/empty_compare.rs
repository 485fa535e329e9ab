//! `mbn empty-compare`: empty-motif counts of the delta-1 MBN against the
//! two closed-form strategies and random networks, per in-degree K.

use super::{core_err, motif_size};
use crate::input::UsizeGrid;
use crate::output::{emit, Format, ResultTable};
use crate::{CliError, CliResult};
use mbn_core::baselines::{
    generate_random_network, inter_connectivity, intra_connectivity,
};
use mbn_core::catalog::{build_catalog, MotifClassId};
use mbn_core::generator::{generate_mbn, MbnOptions};
use mbn_core::graph::InDegreeSpec;
use mbn_core::rng::RngStream;
use std::path::PathBuf;

#[derive(clap::Args, Debug)]
pub struct Args {
    #[arg(long, default_value_t = 30)]
    pub n: usize,
    /// In-degree values: comma list or start:end.
    #[arg(long, default_value = "3:8")]
    pub k_list: UsizeGrid,
    #[arg(long, default_value_t = 5)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

pub fn run(args: Args, invocation: &str) -> CliResult<()> {
    if args.samples == 0 {
        return Err(CliError::Validation("--samples must be at least 1".into()));
    }
    let cat = build_catalog(motif_size(3)?);
    let empty = MotifClassId(1);
    let wtilde = mbn_core::delta_weights(cat.size(), 1).map_err(core_err)?;
    let root = RngStream::new(args.seed);
    let mut table = ResultTable::new(invocation);

    for (ki, &k) in args.k_list.0.iter().enumerate() {
        let spec = InDegreeSpec::Delta { k };
        spec.validate(args.n).map_err(core_err)?;

        let intra = intra_connectivity(args.n, k).map_err(core_err)?;
        let intra_count = cat.census(&intra).map_err(core_err)?.count(empty) as f64;
        let inter = inter_connectivity(args.n, k).map_err(core_err)?;
        let inter_count = cat.census(&inter).map_err(core_err)?.count(empty) as f64;

        let mut mbn_counts = Vec::with_capacity(args.samples);
        let mut rn_counts = Vec::with_capacity(args.samples);
        for s in 0..args.samples {
            let mut rng = root.derive(ki as u64).derive(s as u64);
            let g = generate_mbn(
                &cat,
                args.n,
                &spec,
                &wtilde,
                &MbnOptions::default(),
                &mut rng,
            )
            .map_err(core_err)?;
            mbn_counts.push(cat.census(&g).map_err(core_err)?.count(empty) as f64);
            let r = generate_random_network(args.n, &spec, &mut rng).map_err(core_err)?;
            rn_counts.push(cat.census(&r).map_err(core_err)?.count(empty) as f64);
        }

        let param = format!("{k}");
        table.push("mbn:delta:1", param.clone(), "motif_1", &mbn_counts);
        table.push("intra", param.clone(), "motif_1", &[intra_count]);
        table.push("inter", param.clone(), "motif_1", &[inter_count]);
        table.push("rn", param, "motif_1", &rn_counts);
    }
    emit(args.out.as_ref(), &table.render(args.format)?)
}
