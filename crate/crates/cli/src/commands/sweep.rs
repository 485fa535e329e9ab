//! `mbn sweep`: motif counts per condition across a connection-probability
//! grid, plus the integrated summary (twice the trapezoid integral over the
//! grid, per sample index).

use super::{core_err, motif_size, with_jobs};
use crate::input::{F64Grid, UsizeGrid, WeightSource};
use crate::output::{emit, Format, ResultTable};
use crate::{CliError, CliResult};
use mbn_core::baselines::generate_random_network;
use mbn_core::catalog::{build_catalog, MotifCatalog, MotifSize};
use mbn_core::generator::{generate_mbn, MbnOptions};
use mbn_core::graph::InDegreeSpec;
use mbn_core::rng::RngStream;
use rayon::prelude::*;
use std::path::PathBuf;
use std::str::FromStr;

#[derive(Debug, Clone)]
pub enum Condition {
    Rn,
    Mbn(WeightSource),
}

impl FromStr for Condition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "rn" {
            Ok(Condition::Rn)
        } else {
            WeightSource::from_str(s).map(Condition::Mbn)
        }
    }
}

impl Condition {
    pub fn label(&self) -> String {
        match self {
            Condition::Rn => "rn".into(),
            Condition::Mbn(w) => format!("mbn:{}", w.label()),
        }
    }
}

#[derive(clap::Args, Debug)]
pub struct Args {
    #[arg(long, default_value_t = 100)]
    pub n: usize,
    #[arg(long, default_value_t = 3)]
    pub motif_size: usize,
    /// Connection probabilities: comma list or start:end:step.
    #[arg(long, default_value = "0.05:0.5:0.05")]
    pub p_grid: F64Grid,
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    /// Comma-separated conditions: rn, delta:<id>, preset:<name>,
    /// file:<path>, zero.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "delta:7,delta:8,delta:9,delta:10,rn"
    )]
    pub conditions: Vec<Condition>,
    /// Motif classes to report; defaults to all 16 for size 3 and to the
    /// delta-promoted classes for size 4.
    #[arg(long)]
    pub classes: Option<UsizeGrid>,
    #[arg(long)]
    pub no_adapt: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

fn report_classes(args: &Args, size: MotifSize) -> CliResult<Vec<usize>> {
    if let Some(UsizeGrid(classes)) = &args.classes {
        if let Some(&bad) = classes.iter().find(|&&c| c < 1 || c > size.class_count()) {
            return Err(CliError::Validation(format!(
                "class {bad} out of range 1..={}",
                size.class_count()
            )));
        }
        return Ok(classes.clone());
    }
    match size {
        MotifSize::Three => Ok((1..=16).collect()),
        MotifSize::Four => {
            let mut promoted: Vec<usize> = args
                .conditions
                .iter()
                .filter_map(|c| match c {
                    Condition::Mbn(WeightSource::Delta(id)) => Some(*id),
                    _ => None,
                })
                .collect();
            promoted.sort_unstable();
            promoted.dedup();
            if promoted.is_empty() {
                return Err(CliError::Validation(
                    "size-4 sweeps need --classes or delta conditions".into(),
                ));
            }
            Ok(promoted)
        }
    }
}

/// Census counts per (condition, p, sample); cells run in parallel with
/// streams derived from (seed, condition, p index, sample).
fn run_cells(
    cat: &MotifCatalog,
    args: &Args,
    weights: &[Option<Vec<f64>>],
) -> CliResult<Vec<Vec<Vec<Vec<u64>>>>> {
    let root = RngStream::new(args.seed);
    let options = MbnOptions {
        adapt_weights: !args.no_adapt,
    };
    let cells: Vec<(usize, usize, usize)> = (0..args.conditions.len())
        .flat_map(|ci| {
            (0..args.p_grid.0.len()).flat_map(move |pi| {
                (0..args.samples).map(move |si| (ci, pi, si))
            })
        })
        .collect();
    let results: Vec<mbn_core::Result<Vec<u64>>> = with_jobs(args.jobs, || {
        cells
            .par_iter()
            .map(|&(ci, pi, si)| {
                let mut rng = root
                    .derive(ci as u64)
                    .derive(pi as u64)
                    .derive(si as u64);
                let spec = InDegreeSpec::Binomial {
                    p: args.p_grid.0[pi],
                };
                let g = match &weights[ci] {
                    None => generate_random_network(args.n, &spec, &mut rng)?,
                    Some(w) => generate_mbn(cat, args.n, &spec, w, &options, &mut rng)?,
                };
                Ok(cat.census(&g)?.counts)
            })
            .collect()
    })?;

    let mut out =
        vec![vec![vec![Vec::new(); args.samples]; args.p_grid.0.len()]; args.conditions.len()];
    for (&(ci, pi, si), counts) in cells.iter().zip(results) {
        out[ci][pi][si] = counts.map_err(core_err)?;
    }
    Ok(out)
}

fn trapezoid(ps: &[f64], ys: &[f64]) -> f64 {
    ps.windows(2)
        .zip(ys.windows(2))
        .map(|(p, y)| (y[0] + y[1]) / 2.0 * (p[1] - p[0]))
        .sum()
}

pub fn run(args: Args, invocation: &str) -> CliResult<()> {
    let size = motif_size(args.motif_size)?;
    if args.samples == 0 {
        return Err(CliError::Validation("--samples must be at least 1".into()));
    }
    if args.p_grid.0.iter().any(|&p| p <= 0.0 || p > 1.0) {
        return Err(CliError::Validation(
            "p grid values must lie in (0, 1]".into(),
        ));
    }
    let cat = build_catalog(size);
    let classes = report_classes(&args, size)?;
    let weights: Vec<Option<Vec<f64>>> = args
        .conditions
        .iter()
        .map(|c| match c {
            Condition::Rn => Ok(None),
            Condition::Mbn(source) => source.resolve(size).map(Some),
        })
        .collect::<CliResult<_>>()?;

    let counts = run_cells(&cat, &args, &weights)?;

    let mut table = ResultTable::new(invocation);
    for (ci, condition) in args.conditions.iter().enumerate() {
        for (pi, &p) in args.p_grid.0.iter().enumerate() {
            for &class in &classes {
                let samples: Vec<f64> = (0..args.samples)
                    .map(|si| counts[ci][pi][si][class - 1] as f64)
                    .collect();
                table.push(
                    condition.label(),
                    format!("{p}"),
                    format!("motif_{class}"),
                    &samples,
                );
            }
        }
        if args.p_grid.0.len() >= 2 {
            for &class in &classes {
                let integrated: Vec<f64> = (0..args.samples)
                    .map(|si| {
                        let ys: Vec<f64> = (0..args.p_grid.0.len())
                            .map(|pi| counts[ci][pi][si][class - 1] as f64)
                            .collect();
                        2.0 * trapezoid(&args.p_grid.0, &ys)
                    })
                    .collect();
                table.push(
                    condition.label(),
                    "integrated",
                    format!("motif_{class}"),
                    &integrated,
                );
            }
        }
    }
    emit(args.out.as_ref(), &table.render(args.format)?)
}
