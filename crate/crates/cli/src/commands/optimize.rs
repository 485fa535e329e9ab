//! `mbn optimize`: GA search for preferred weights maximizing mean
//! small-worldness or mean modularity of generated networks.

use super::{core_err, motif_size};
use crate::commands::global_eval::Preset;
use crate::input::{parse_usize_grid, UsizeGrid};
use crate::output::{emit, json_artifact};
use crate::{CliError, CliResult};
use mbn_core::catalog::build_catalog;
use mbn_core::optimizer::{
    ga_optimize, objective_modularity, objective_smallworld, GaConfig, ModularityObjective,
    SmallWorldObjective, WeightTemplate, MASK_MODULARITY, MASK_MODULARITY_ALT, MASK_SMALLWORLD,
};
use mbn_core::rng::RngStream;
use serde::Serialize;
use std::path::PathBuf;

#[derive(clap::Args, Debug)]
pub struct Args {
    /// Objective to maximize (also picks the default mask and sizes).
    #[arg(long, value_enum)]
    pub objective: Preset,
    /// Free motif indices: `default`, `alt` (modularity only), or a comma
    /// list / range of class ids.
    #[arg(long, default_value = "default")]
    pub mask: String,
    #[arg(long, default_value_t = 40)]
    pub population: usize,
    #[arg(long, default_value_t = 60)]
    pub generations: usize,
    #[arg(long, default_value_t = 3)]
    pub tournament: usize,
    #[arg(long, default_value_t = 0.8)]
    pub crossover_rate: f64,
    #[arg(long, default_value_t = 0.3)]
    pub mutation_scale: f64,
    #[arg(long)]
    pub mutation_rate: Option<f64>,
    /// Networks generated per in-degree case and evaluation.
    #[arg(long, default_value_t = 20)]
    pub eval_samples: usize,
    /// Network size during evaluation; defaults to 100 (small-worldness)
    /// or 60 (modularity).
    #[arg(long)]
    pub eval_size: Option<usize>,
    #[arg(long, default_value_t = 20)]
    pub ref_samples: usize,
    /// In-degree cases for the small-worldness objective.
    #[arg(long, default_value = "2:6")]
    pub k_list: UsizeGrid,
    /// Cluster-count cases for the modularity objective.
    #[arg(long, default_value = "2:20")]
    pub nclust_list: UsizeGrid,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
struct OptimizeReport {
    objective: String,
    mask: Vec<usize>,
    best_alpha: Vec<f64>,
    best_wtilde: Vec<f64>,
    best_objective: f64,
    trace: Vec<f64>,
}

fn resolve_mask(args: &Args) -> CliResult<Vec<usize>> {
    match (args.mask.as_str(), args.objective) {
        ("default", Preset::Smallworld) => Ok(MASK_SMALLWORLD.to_vec()),
        ("default", Preset::Modularity) => Ok(MASK_MODULARITY.to_vec()),
        ("alt", Preset::Modularity) => Ok(MASK_MODULARITY_ALT.to_vec()),
        ("alt", Preset::Smallworld) => Err(CliError::Validation(
            "the alternative mask exists only for the modularity objective".into(),
        )),
        (custom, _) => parse_usize_grid(custom).map_err(CliError::Validation),
    }
}

pub fn run(args: Args, invocation: &str) -> CliResult<()> {
    let cat = build_catalog(motif_size(3)?);
    let mask = resolve_mask(&args)?;
    let template = WeightTemplate::new(cat.class_count(), &mask).map_err(core_err)?;
    let ga = GaConfig {
        population: args.population,
        generations: args.generations,
        tournament_size: args.tournament,
        crossover_rate: args.crossover_rate,
        mutation_scale: args.mutation_scale,
        mutation_rate: args.mutation_rate,
        ..GaConfig::default()
    };
    if ga.population < 2 || ga.tournament_size < 1 {
        return Err(CliError::Validation(
            "population must be >= 2 and tournament >= 1".into(),
        ));
    }
    let mut rng = RngStream::new(args.seed);

    let result = match args.objective {
        Preset::Smallworld => {
            let cfg = SmallWorldObjective {
                k_values: args.k_list.0.clone(),
                network_size: args.eval_size.unwrap_or(100),
                networks_per_case: args.eval_samples,
                reference_samples: args.ref_samples,
            };
            ga_optimize(
                |w, stream| objective_smallworld(&cat, w, &cfg, stream),
                &template,
                &ga,
                &mut rng,
            )
        }
        Preset::Modularity => {
            let cfg = ModularityObjective {
                n_clust_values: args.nclust_list.0.clone(),
                network_size: args.eval_size.unwrap_or(60),
                networks_per_case: args.eval_samples,
            };
            ga_optimize(
                |w, stream| objective_modularity(&cat, w, &cfg, stream),
                &template,
                &ga,
                &mut rng,
            )
        }
    }
    .map_err(core_err)?;

    let report = OptimizeReport {
        objective: match args.objective {
            Preset::Smallworld => "smallworld".into(),
            Preset::Modularity => "modularity".into(),
        },
        mask,
        best_alpha: result.best_alpha,
        best_wtilde: result.best_wtilde,
        best_objective: result.best_objective,
        trace: result.trace,
    };
    emit(args.out.as_ref(), &json_artifact(invocation, "optimize", &report)?)
}
