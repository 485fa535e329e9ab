//! `mbn continuum`: walk the unit-sphere arc from a tuned preset toward a
//! single-motif delta vector, evaluating the preset's measure and the
//! delta class count at each arc point.

use super::{core_err, motif_size};
use crate::commands::global_eval::Preset;
use crate::output::{emit, Format, ResultTable};
use crate::{CliError, CliResult};
use mbn_core::baselines::generate_random_network;
use mbn_core::catalog::{build_catalog, MotifClassId};
use mbn_core::generator::{generate_mbn, MbnOptions};
use mbn_core::graph::{Digraph, InDegreeSpec};
use mbn_core::metrics::{
    hamming_distance_matrix, hierarchical_clustering, modularity, small_worldness,
    ModularityVariant,
};
use mbn_core::optimizer::{angle, arc_interpolate, preset_modularity, preset_smallworld};
use mbn_core::rng::RngStream;
use std::path::PathBuf;

#[derive(clap::Args, Debug)]
pub struct Args {
    #[arg(long, value_enum)]
    pub preset: Preset,
    /// Motif class whose delta vector ends the arc.
    #[arg(long)]
    pub delta: usize,
    /// Arc points strictly between the preset and the delta vector.
    #[arg(long, default_value_t = 8)]
    pub steps: usize,
    #[arg(long, default_value_t = 60)]
    pub n: usize,
    /// Connection probability (modularity preset).
    #[arg(long, default_value_t = 0.2)]
    pub p: f64,
    /// Cluster count (modularity preset).
    #[arg(long, default_value_t = 5)]
    pub nclust: usize,
    /// Exact in-degree (small-worldness preset).
    #[arg(long, default_value_t = 4)]
    pub k: usize,
    #[arg(long, default_value_t = 5)]
    pub samples: usize,
    #[arg(long, default_value_t = 10)]
    pub ref_samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

pub fn run(args: Args, invocation: &str) -> CliResult<()> {
    let cat = build_catalog(motif_size(3)?);
    if args.samples == 0 || args.steps == 0 {
        return Err(CliError::Validation(
            "--samples and --steps must be at least 1".into(),
        ));
    }
    let preset_w = match args.preset {
        Preset::Smallworld => preset_smallworld(),
        Preset::Modularity => preset_modularity(),
    };
    let delta_w = mbn_core::delta_weights(cat.size(), args.delta).map_err(core_err)?;
    let spec = match args.preset {
        Preset::Smallworld => InDegreeSpec::Delta { k: args.k },
        Preset::Modularity => InDegreeSpec::Binomial { p: args.p },
    };
    spec.validate(args.n).map_err(core_err)?;

    let class = MotifClassId(args.delta as u16);
    let measure_name = match args.preset {
        Preset::Smallworld => "S",
        Preset::Modularity => "Q",
    };
    let root = RngStream::new(args.seed);

    let measure_of = |g: &Digraph, rng: &mut RngStream| -> mbn_core::Result<f64> {
        match args.preset {
            Preset::Smallworld => Ok(small_worldness(g, &spec, args.ref_samples, rng)?.s),
            Preset::Modularity => {
                let part = hierarchical_clustering(&hamming_distance_matrix(g), args.nclust)?;
                Ok(modularity(g, &part, ModularityVariant::Full)?.q)
            }
        }
    };

    let mut table = ResultTable::new(invocation);
    // t = 0 is the preset; t = 1 is the pure delta vector.
    for step in 0..=args.steps + 1 {
        let t = step as f64 / (args.steps + 1) as f64;
        let w = arc_interpolate(&preset_w, &delta_w, t).map_err(core_err)?;
        let phi = angle(&preset_w, &w).map_err(core_err)?;
        let mut metric_samples = Vec::with_capacity(args.samples);
        let mut count_samples = Vec::with_capacity(args.samples);
        for s in 0..args.samples {
            let mut rng = root.derive(step as u64).derive(s as u64);
            let g = generate_mbn(&cat, args.n, &spec, &w, &MbnOptions::default(), &mut rng)
                .map_err(core_err)?;
            metric_samples.push(measure_of(&g, &mut rng).map_err(core_err)?);
            count_samples.push(cat.census(&g).map_err(core_err)?.count(class) as f64);
        }
        let param = format!("{phi:.6}");
        table.push("arc", param.clone(), measure_name, &metric_samples);
        table.push("arc", param, format!("motif_{}", args.delta), &count_samples);
    }

    // Random baseline under the same in-degree specification.
    let mut metric_samples = Vec::with_capacity(args.samples);
    let mut count_samples = Vec::with_capacity(args.samples);
    for s in 0..args.samples {
        let mut rng = root.derive(u64::MAX).derive(s as u64);
        let g = generate_random_network(args.n, &spec, &mut rng).map_err(core_err)?;
        metric_samples.push(measure_of(&g, &mut rng).map_err(core_err)?);
        count_samples.push(cat.census(&g).map_err(core_err)?.count(class) as f64);
    }
    table.push("rn", "-", measure_name, &metric_samples);
    table.push("rn", "-", format!("motif_{}", args.delta), &count_samples);

    emit(args.out.as_ref(), &table.render(args.format)?)
}
