//! Multi-threaded forest construction.
//!
//! Trees are independent, so roots are shared out over a dedicated pool and
//! the results collected in root order. The outcome does not depend on the
//! number of workers.

use std::sync::Arc;

use conesemi_core::forest::{build_forest, build_tree};
use conesemi_core::irreducible::ei_set;
use conesemi_core::{Cone, Forest, TermOrder, Vector};
use rayon::prelude::*;

use crate::CliError;

pub fn forest(cone: &Arc<Cone>, k: &Vector, order: &TermOrder, jobs: usize) -> Result<Forest, CliError> {
    if jobs <= 1 {
        return Ok(build_forest(cone, k, order)?);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Input(format!("cannot start {jobs} workers: {e}")))?;
    let roots = ei_set(cone, k)?;
    let trees =
        pool.install(|| roots.into_par_iter().map(|t| build_tree(t, k, order)).collect::<Result<Vec<_>, _>>())?;
    Ok(Forest::from_trees(cone.clone(), *k, *order, trees)?)
}
