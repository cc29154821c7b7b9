use std::collections::BTreeMap;

use crate::embedding::ProductEmbedding;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Extends a certificate of `g - Z` (labelled as by `Graph::without`) to `g`,
/// where `Z` is the set of first coordinates of `pendant_edges` and each
/// `z ∈ Z` is a degree-one vertex whose only edge is `(z, anchor)`.
///
/// Each `z` gets a new host node adjacent to the anchor's host node `h` and
/// sits at the anchor's path position; the host decomposition gains a bag
/// `{h, z}` hung off a bag containing `h`.
pub fn extend_pendants(g: &Graph, pe: &ProductEmbedding, pendant_edges: &[(usize, usize)]) -> Result<ProductEmbedding> {
    let mut anchor_of = BTreeMap::new();
    for &(z, anchor) in pendant_edges {
        if z >= g.n() || anchor >= g.n() {
            return Err(Error::InvalidArgument(format!(
                "pendant edge ({z}, {anchor}) out of range"
            )));
        }
        if anchor_of.insert(z, anchor).is_some() {
            return Err(Error::InvalidArgument(format!(
                "vertex {z} has more than one pendant edge"
            )));
        }
    }
    let z_set: VertexSet = anchor_of.keys().copied().collect();
    for (&z, &anchor) in &anchor_of {
        if g.degree(z) != 1 || !g.has_edge(z, anchor) {
            return Err(Error::InvalidArgument(format!(
                "vertex {z} is not a pendant attached to {anchor}"
            )));
        }
        if z_set.contains(anchor) {
            return Err(Error::InvalidArgument(format!(
                "pendant {z} is anchored at another pendant {anchor}"
            )));
        }
    }
    let base = g.without(&z_set);
    pe.validate(&base.graph, None)?;

    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in base.to_original.iter().enumerate() {
        local[v] = i;
    }
    let mut host_edges: Vec<(usize, usize)> = pe.host_h.edges().collect();
    let mut host_td = pe.host_td.clone();
    let mut coords = vec![(0, 0); g.n()];
    for (i, &v) in base.to_original.iter().enumerate() {
        coords[v] = pe.coords[i];
    }
    let host_bag = |h: usize| (0..pe.host_td.len()).find(|&t| pe.host_td.bag(t).contains(h));
    let mut next = pe.host_h.n();
    for (&z, &anchor) in &anchor_of {
        let (h, p) = pe.coords[local[anchor]];
        let node = next;
        next += 1;
        host_edges.push((h, node));
        let t = host_bag(h).ok_or_else(|| Error::InvalidCertificate(format!("host node {h} is in no bag")))?;
        host_td.push_leaf(t, VertexSet::from([h, node]));
        coords[z] = (node, p);
    }
    let out = ProductEmbedding {
        host_h: Graph::from_edges(next, &host_edges)?,
        host_td,
        path_len: pe.path_len,
        coords,
    };
    debug_assert!(out.validate(g, Some(pe.b().max(1))).is_ok());
    Ok(out)
}
