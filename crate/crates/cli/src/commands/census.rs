//! `mbn census`: motif-class counts of one graph.

use super::{core_err, motif_size};
use crate::output::{emit, Format, ResultTable};
use crate::{CliError, CliResult};
use mbn_core::catalog::build_catalog;
use mbn_core::graph::read_edge_list;
use std::path::PathBuf;

#[derive(clap::Args, Debug)]
pub struct Args {
    /// Edge-list file to count.
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, default_value_t = 3)]
    pub motif_size: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

pub fn run(args: Args, invocation: &str) -> CliResult<()> {
    let size = motif_size(args.motif_size)?;
    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| CliError::Runtime(format!("reading {}: {e}", args.input.display())))?;
    let g = read_edge_list(&text).map_err(core_err)?;
    let cat = build_catalog(size);
    let census = cat.census(&g).map_err(core_err)?;
    let mut table = ResultTable::new(invocation);
    for (idx, &count) in census.counts.iter().enumerate() {
        table.push("census", "-", format!("motif_{}", idx + 1), &[count as f64]);
    }
    emit(args.out.as_ref(), &table.render(args.format)?)
}
