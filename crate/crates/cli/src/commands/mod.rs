pub mod catalog_dump;
pub mod census;
pub mod continuum;
pub mod empty_compare;
pub mod generate;
pub mod global_eval;
pub mod metrics;
pub mod optimize;
pub mod sweep;

use crate::{CliError, CliResult};
use mbn_core::catalog::MotifSize;

/// Core errors are validation failures unless they are I/O or
/// data-dependent metric degeneracies.
pub fn core_err(e: mbn_core::Error) -> CliError {
    match e {
        mbn_core::Error::Io(_)
        | mbn_core::Error::DegenerateTerm(_)
        | mbn_core::Error::UndefinedModularity => CliError::Runtime(e.to_string()),
        other => CliError::Validation(other.to_string()),
    }
}

pub fn motif_size(nodes: usize) -> CliResult<MotifSize> {
    MotifSize::from_nodes(nodes).map_err(core_err)
}

/// Runs `work` on a rayon pool with the requested thread count, or the
/// default pool when unset.
pub fn with_jobs<T: Send>(jobs: Option<usize>, work: impl FnOnce() -> T + Send) -> CliResult<T> {
    match jobs {
        None => Ok(work()),
        Some(j) => {
            if j == 0 {
                return Err(CliError::Validation("--jobs must be at least 1".into()));
            }
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(CliError::runtime)?;
            Ok(pool.install(work))
        }
    }
}
