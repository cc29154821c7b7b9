use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::partition::path_violation;

/// Groups each run of `d` consecutive parts of a path-partition of `g` into one
/// part, giving a path-partition of `g^d`.
pub fn power_path_partition(g: &Graph, parts: &[VertexSet], d: usize) -> Result<Vec<VertexSet>> {
    if d == 0 {
        return Err(Error::InvalidArgument("power must be at least 1".into()));
    }
    if let Some((u, v)) = path_violation(g, &VertexSet::new(), parts)? {
        return Err(Error::InvalidPartition(format!(
            "edge {{{u},{v}}} joins non-consecutive parts"
        )));
    }
    Ok(group_runs(parts, d))
}

pub(crate) fn group_runs(parts: &[VertexSet], d: usize) -> Vec<VertexSet> {
    parts
        .chunks(d)
        .map(|run| run.iter().flat_map(VertexSet::iter).collect())
        .collect()
}
