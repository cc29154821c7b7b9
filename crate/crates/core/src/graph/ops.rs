use std::collections::VecDeque;

use super::{make_complete, Graph, VertexSet};
use crate::error::{Error, Result};

/// BFS distances from `source`; unreachable vertices get `usize::MAX`.
pub fn distances_from(g: &Graph, source: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// `G^d`: same vertices, `uv` an edge iff `1 <= dist(u, v) <= d`.
pub fn graph_power(g: &Graph, d: usize) -> Result<Graph> {
    if d == 0 {
        return Err(Error::InvalidArgument("graph power exponent must be at least 1".into()));
    }
    let n = g.n();
    let mut edges = Vec::new();
    let mut dist = vec![usize::MAX; n];
    let mut touched = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist[s] = 0;
        touched.push(s);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if dist[u] == d {
                continue;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    touched.push(w);
                    queue.push_back(w);
                    if s < w {
                        edges.push((s, w));
                    }
                }
            }
        }
        for v in touched.drain(..) {
            dist[v] = usize::MAX;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Assigns each vertex its part index, checking the parts partition `0..n`.
pub(crate) fn part_index(n: usize, parts: &[VertexSet]) -> Result<Vec<usize>> {
    let mut owner = vec![usize::MAX; n];
    for (i, part) in parts.iter().enumerate() {
        for v in part {
            if v >= n {
                return Err(Error::InvalidPartition(format!("vertex {v} out of range for n = {n}")));
            }
            if owner[v] != usize::MAX {
                return Err(Error::InvalidPartition(format!(
                    "vertex {v} lies in parts {} and {i}",
                    owner[v]
                )));
            }
            owner[v] = i;
        }
    }
    if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(Error::InvalidPartition(format!("vertex {v} is in no part")));
    }
    Ok(owner)
}

/// `G / P` with one vertex per part, in the given part order.
pub fn quotient(g: &Graph, parts: &[VertexSet]) -> Result<Graph> {
    let owner = part_index(g.n(), parts)?;
    let edges = g.edges().map(|(u, v)| (owner[u], owner[v])).filter(|(a, b)| a != b);
    Graph::from_edges_dedup(parts.len(), edges)
}

/// `G ⊠ H` on pairs `(a, b)` indexed `a * |H| + b`.
pub fn strong_product(g: &Graph, h: &Graph) -> Graph {
    let (gn, hn) = (g.n(), h.n());
    let close = |graph: &Graph, x: usize, y: usize| x == y || graph.has_edge(x, y);
    let mut edges = Vec::new();
    for a in 0..gn {
        for b in 0..hn {
            let u = a * hn + b;
            // neighbours in each coordinate, including staying put
            let ga = std::iter::once(a).chain(g.neighbors(a).iter().copied());
            for a2 in ga {
                let hb = std::iter::once(b).chain(h.neighbors(b).iter().copied());
                for b2 in hb {
                    let v = a2 * hn + b2;
                    if u < v {
                        debug_assert!(close(g, a, a2) && close(h, b, b2));
                        edges.push((u, v));
                    }
                }
            }
        }
    }
    Graph::from_edges(gn * hn, &edges).expect("strong product edges are simple")
}

/// `b`-blowup `H ⊠ K_b`.
pub fn blowup(h: &Graph, b: usize) -> Result<Graph> {
    if b == 0 {
        return Err(Error::InvalidArgument("blowup factor must be at least 1".into()));
    }
    Ok(strong_product(h, &make_complete(b)?))
}
