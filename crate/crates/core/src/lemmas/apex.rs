use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::partition::{check_fan_partition, FanPartition};
use crate::rational::int;

/// Lifts a fan-partition of `g - apices` (in the relabelling of `Graph::without`)
/// to `g` by adding the apices to the central part.
pub fn absorb_apices(g: &Graph, apices: &VertexSet, fp: &FanPartition) -> Result<FanPartition> {
    if let Some(v) = apices.iter().find(|&v| v >= g.n()) {
        return Err(Error::InvalidArgument(format!("apex {v} out of range")));
    }
    let rest = g.without(apices);
    let report = fp.report();
    check_fan_partition(&rest.graph, fp, &int(report.central_size), &int(report.path_width))?;
    let central = apices.union(&rest.lift(&fp.central));
    let path_parts = fp.path_parts.iter().map(|p| rest.lift(p)).collect();
    FanPartition::new(g.n(), central, path_parts)
}
