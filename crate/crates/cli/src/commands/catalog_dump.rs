//! `mbn catalog-dump`: classes, canonical codes, and derived transition
//! tables as JSON, for documentation and cross-implementation checks.

use super::motif_size;
use crate::output::{emit, json_artifact};
use crate::CliResult;
use mbn_core::catalog::build_catalog;
use std::path::PathBuf;

#[derive(clap::Args, Debug)]
pub struct Args {
    #[arg(long, default_value_t = 3)]
    pub motif_size: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(args: Args, invocation: &str) -> CliResult<()> {
    let size = motif_size(args.motif_size)?;
    let dump = build_catalog(size).dump();
    emit(args.out.as_ref(), &json_artifact(invocation, "catalog", &dump)?)
}
