use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::partition::{check_fan_partition, FanPartition};
use crate::rational::{floor_usize, int, Rational};

/// `max(1, floor(4n/w))`: the fan size every width-`w` fan-partition of an
/// `n`-vertex graph contracts into.
pub fn universal_fan_size(n: usize, w: &Rational) -> usize {
    floor_usize(&(int(4 * n) / w)).max(1)
}

/// Contracts fan-adjacent parts while both have at most `w/2` vertices.
///
/// Each left-to-right sweep merges disjoint pairs of consecutive small path
/// parts; when no such pair remains, a small central part absorbs the leftmost small path part (the
/// centre is adjacent to every part of a fan). Both steps repeat until neither
/// applies. Merging preserves the path property and keeps the width at most `w`.
pub fn contract_to_universal_fan(g: &Graph, fp: &FanPartition, w: &Rational) -> Result<FanPartition> {
    if *w <= int(0) {
        return Err(Error::InvalidArgument(format!("width bound {w} must be positive")));
    }
    check_fan_partition(g, fp, w, w)?;
    let small = |p: &VertexSet| int(2 * p.len()) <= *w;
    let mut central = fp.central.clone();
    let mut parts: Vec<VertexSet> = fp.path_parts.iter().filter(|p| !p.is_empty()).cloned().collect();
    loop {
        let mut merged: Vec<VertexSet> = Vec::with_capacity(parts.len());
        let mut changed = false;
        let mut i = 0;
        while i < parts.len() {
            if i + 1 < parts.len() && small(&parts[i]) && small(&parts[i + 1]) {
                merged.push(parts[i].union(&parts[i + 1]));
                changed = true;
                i += 2;
            } else {
                merged.push(parts[i].clone());
                i += 1;
            }
        }
        parts = merged;
        if !changed && small(&central) {
            if let Some(i) = parts.iter().position(small) {
                central = central.union(&parts.remove(i));
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let out = FanPartition::new(fp.graph_n, central, parts)?;
    debug_assert!(check_fan_partition(g, &out, w, w).is_ok());
    Ok(out)
}
