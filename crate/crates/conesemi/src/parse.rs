//! Command-line spellings of vectors, cones and orders.

use std::str::FromStr;
use std::sync::Arc;

use conesemi_core::{Cone, TermOrder, Vector};

use crate::CliError;

/// `"11,5"` or `"(11,5)"`.
pub fn vector(s: &str) -> Result<Vector, CliError> {
    let body = s.trim().trim_start_matches('(').trim_end_matches(')');
    let coords = body
        .split(',')
        .map(|c| c.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::Input(format!("bad vector {s:?}")))?;
    Ok(Vector::new(&coords)?)
}

/// Generators separated by `;` (`"1,0;1,1"`), or `N1`..`N3` for the
/// orthant.
pub fn cone(s: &str) -> Result<Arc<Cone>, CliError> {
    let t = s.trim();
    if let Some(d) = t.strip_prefix(['N', 'n']) {
        let d: usize = d.parse().map_err(|_| CliError::Input(format!("bad cone {s:?}")))?;
        return Ok(Arc::new(Cone::orthant(d)?));
    }
    let gens = t.split(';').map(vector).collect::<Result<Vec<_>, _>>()?;
    let dim = gens.first().map(Vector::dim).ok_or_else(|| CliError::Input("empty cone".into()))?;
    Ok(Arc::new(Cone::new(dim, &gens)?))
}

pub fn order(s: &str) -> Result<TermOrder, CliError> {
    TermOrder::from_str(s).map_err(|e| CliError::Input(format!("bad order {s:?}: {e}")))
}
