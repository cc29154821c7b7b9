//! Row-treewidth certificates: embeddings of a graph into `H ⊠ P`.

use crate::decomp::{validate, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `coords[v] = (node of H, position on P)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductEmbedding {
    pub host_h: Graph,
    pub host_td: TreeDecomposition,
    pub path_len: usize,
    pub coords: Vec<(usize, usize)>,
}

impl ProductEmbedding {
    /// `g` inside `g ⊠ P_1` with the given decomposition.
    pub fn trivial(g: &Graph, td: &TreeDecomposition) -> Self {
        ProductEmbedding {
            host_h: g.clone(),
            host_td: td.clone(),
            path_len: 1,
            coords: g.vertices().map(|v| (v, 0)).collect(),
        }
    }

    /// Width of the host decomposition.
    pub fn b(&self) -> usize {
        self.host_td.width()
    }

    /// Largest number of vertices sharing a host node.
    pub fn max_fibre(&self) -> usize {
        let mut count = vec![0usize; self.host_h.n()];
        for &(h, _) in &self.coords {
            if h < count.len() {
                count[h] += 1;
            }
        }
        count.into_iter().max().unwrap_or(0)
    }

    /// Checks that the coordinates are injective and in range, that every edge of
    /// `g` lands on a strong-product edge, and that the host decomposition is valid
    /// (with width at most `b` when given).
    pub fn validate(&self, g: &Graph, b: Option<usize>) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidCertificate(msg));
        if self.coords.len() != g.n() {
            return bad(format!("{} coordinates for {} vertices", self.coords.len(), g.n()));
        }
        let mut seen = std::collections::HashSet::new();
        for (v, &(h, p)) in self.coords.iter().enumerate() {
            if h >= self.host_h.n() || p >= self.path_len {
                return bad(format!("vertex {v} has out-of-range coordinates ({h}, {p})"));
            }
            if !seen.insert((h, p)) {
                return bad(format!("vertex {v} shares coordinates ({h}, {p}) with another vertex"));
            }
        }
        for (u, v) in g.edges() {
            let ((hu, pu), (hv, pv)) = (self.coords[u], self.coords[v]);
            let h_ok = hu == hv || self.host_h.has_edge(hu, hv);
            if !h_ok || pu.abs_diff(pv) > 1 {
                return bad(format!(
                    "edge {{{u},{v}}} maps to non-adjacent ({hu}, {pu}) and ({hv}, {pv})"
                ));
            }
        }
        if let Err(violation) = validate(&self.host_h, &self.host_td) {
            return bad(format!("host decomposition: {violation}"));
        }
        if let Some(b) = b {
            if self.host_td.width() > b {
                return bad(format!("host decomposition has width {} > {b}", self.host_td.width()));
            }
        }
        Ok(())
    }
}
