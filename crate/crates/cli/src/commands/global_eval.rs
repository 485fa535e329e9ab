//! `mbn global-eval`: small-worldness or modularity of preset MBNs against
//! delta-weighted MBNs, directed Watts-Strogatz networks, and random
//! networks, over an in-degree or cluster-count grid.

use super::{core_err, motif_size, with_jobs};
use crate::input::{F64Grid, UsizeGrid};
use crate::output::{emit, Format, ResultTable};
use crate::{CliError, CliResult};
use mbn_core::baselines::{generate_random_network, generate_ws_directed};
use mbn_core::catalog::{build_catalog, MotifCatalog};
use mbn_core::generator::{generate_mbn, MbnOptions};
use mbn_core::graph::{Digraph, InDegreeSpec};
use mbn_core::metrics::{
    bisection_clustering, hamming_distance_matrix, hierarchical_clustering, modularity,
    small_worldness, GreedyModularitySplit, ModularityVariant,
};
use mbn_core::optimizer::{preset_modularity, preset_smallworld};
use mbn_core::rng::RngStream;
use rayon::prelude::*;
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Preset {
    Smallworld,
    Modularity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Clustering {
    Hierarchical,
    Bisection,
}

#[derive(clap::Args, Debug)]
pub struct Args {
    /// Which tuned preset (and therefore which measure) to evaluate.
    #[arg(long, value_enum)]
    pub preset: Preset,
    #[arg(long, default_value_t = 200)]
    pub n: usize,
    /// In-degree values for the small-worldness sweep.
    #[arg(long, default_value = "2:6")]
    pub k_list: UsizeGrid,
    /// Cluster counts for the modularity sweep (connection probability is
    /// their inverse).
    #[arg(long, default_value = "2,4,6,10")]
    pub nclust_list: UsizeGrid,
    /// Rewiring probabilities for the Watts-Strogatz comparators.
    #[arg(long, default_value = "0.05")]
    pub q_list: F64Grid,
    /// Delta-weighted MBN comparators.
    #[arg(long)]
    pub delta_conditions: Option<UsizeGrid>,
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    #[arg(long, default_value_t = 20)]
    pub ref_samples: usize,
    #[arg(long, value_enum, default_value_t = Clustering::Hierarchical)]
    pub clustering: Clustering,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone)]
enum Condition {
    PresetMbn,
    DeltaMbn(usize),
    Ws(f64),
    Rn,
}

impl Condition {
    fn label(&self, preset: Preset) -> String {
        match self {
            Condition::PresetMbn => match preset {
                Preset::Smallworld => "mbn:preset:smallworld".into(),
                Preset::Modularity => "mbn:preset:modularity".into(),
            },
            Condition::DeltaMbn(id) => format!("mbn:delta:{id}"),
            Condition::Ws(q) => format!("ws:q={q}"),
            Condition::Rn => "rn".into(),
        }
    }
}

struct Cell<'a> {
    cat: &'a MotifCatalog,
    args: &'a Args,
    preset_weights: &'a [f64],
}

impl Cell<'_> {
    fn build_graph(
        &self,
        condition: &Condition,
        spec: &InDegreeSpec,
        ws_k: usize,
        rng: &mut RngStream,
    ) -> mbn_core::Result<Digraph> {
        match condition {
            Condition::PresetMbn => generate_mbn(
                self.cat,
                self.args.n,
                spec,
                self.preset_weights,
                &MbnOptions::default(),
                rng,
            ),
            Condition::DeltaMbn(id) => {
                let w = mbn_core::delta_weights(self.cat.size(), *id)?;
                generate_mbn(self.cat, self.args.n, spec, &w, &MbnOptions::default(), rng)
            }
            Condition::Ws(q) => generate_ws_directed(self.args.n, ws_k, *q, rng),
            Condition::Rn => generate_random_network(self.args.n, spec, rng),
        }
    }

    fn measure(
        &self,
        g: &Digraph,
        spec: &InDegreeSpec,
        n_clust: usize,
        rng: &mut RngStream,
    ) -> mbn_core::Result<f64> {
        match self.args.preset {
            Preset::Smallworld => {
                Ok(small_worldness(g, spec, self.args.ref_samples, rng)?.s)
            }
            Preset::Modularity => {
                let partition = match self.args.clustering {
                    Clustering::Hierarchical => {
                        hierarchical_clustering(&hamming_distance_matrix(g), n_clust)?
                    }
                    Clustering::Bisection => {
                        let mut heuristic = GreedyModularitySplit::default();
                        bisection_clustering(g, n_clust, &mut heuristic, rng)?
                    }
                };
                Ok(modularity(g, &partition, ModularityVariant::Full)?.q)
            }
        }
    }
}

pub fn run(args: Args, invocation: &str) -> CliResult<()> {
    let cat = build_catalog(motif_size(3)?);
    if args.samples == 0 {
        return Err(CliError::Validation("--samples must be at least 1".into()));
    }
    let preset_weights = match args.preset {
        Preset::Smallworld => preset_smallworld(),
        Preset::Modularity => preset_modularity(),
    };
    let deltas = args.delta_conditions.clone().map(|g| g.0).unwrap_or_else(|| match args.preset {
        Preset::Smallworld => vec![4],
        Preset::Modularity => vec![2, 4],
    });
    let mut conditions = vec![Condition::PresetMbn];
    conditions.extend(deltas.iter().map(|&d| Condition::DeltaMbn(d)));
    conditions.extend(args.q_list.0.iter().map(|&q| Condition::Ws(q)));
    conditions.push(Condition::Rn);

    // Parameter grid: (label, in-degree spec, WS ring degree, cluster count).
    let params: Vec<(String, InDegreeSpec, usize, usize)> = match args.preset {
        Preset::Smallworld => args
            .k_list
            .0
            .iter()
            .map(|&k| (format!("{k}"), InDegreeSpec::Delta { k }, k, 1))
            .collect(),
        Preset::Modularity => args
            .nclust_list
            .0
            .iter()
            .map(|&c| {
                let p = 1.0 / c as f64;
                let ws_k = (((args.n - 1) as f64) * p).round().max(1.0) as usize;
                (format!("{c}"), InDegreeSpec::Binomial { p }, ws_k, c)
            })
            .collect(),
    };
    for (_, spec, ws_k, n_clust) in &params {
        spec.validate(args.n).map_err(core_err)?;
        if *ws_k > args.n - 1 || *n_clust > args.n {
            return Err(CliError::Validation("parameter grid infeasible for n".into()));
        }
    }

    let cell = Cell {
        cat: &cat,
        args: &args,
        preset_weights: &preset_weights,
    };
    let root = RngStream::new(args.seed);
    let jobs: Vec<(usize, usize, usize)> = (0..conditions.len())
        .flat_map(|ci| {
            (0..params.len())
                .flat_map(move |pi| (0..args.samples).map(move |si| (ci, pi, si)))
        })
        .collect();
    let values: Vec<mbn_core::Result<f64>> = with_jobs(args.jobs, || {
        jobs.par_iter()
            .map(|&(ci, pi, si)| {
                let mut rng = root.derive(ci as u64).derive(pi as u64).derive(si as u64);
                let (_, spec, ws_k, n_clust) = &params[pi];
                let g = cell.build_graph(&conditions[ci], spec, *ws_k, &mut rng)?;
                cell.measure(&g, spec, *n_clust, &mut rng)
            })
            .collect()
    })?;

    let measure_name = match args.preset {
        Preset::Smallworld => "S",
        Preset::Modularity => "Q",
    };
    let mut by_cell = vec![vec![Vec::new(); params.len()]; conditions.len()];
    for (&(ci, pi, _), value) in jobs.iter().zip(values) {
        by_cell[ci][pi].push(value.map_err(core_err)?);
    }
    let mut table = ResultTable::new(invocation);
    for (ci, condition) in conditions.iter().enumerate() {
        for (pi, (label, _, _, _)) in params.iter().enumerate() {
            table.push(
                condition.label(args.preset),
                label.clone(),
                measure_name,
                &by_cell[ci][pi],
            );
        }
    }
    emit(args.out.as_ref(), &table.render(args.format)?)
}
