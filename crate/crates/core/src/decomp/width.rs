use std::collections::BTreeSet;

use super::TreeDecomposition;
use crate::error::{guard, Result};
use crate::graph::{Graph, VertexSet};

pub const PATHWIDTH_LIMIT: usize = 12;
pub const TREEWIDTH_LIMIT: usize = 12;

fn neighbor_masks(g: &Graph) -> Vec<u32> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

/// Pathwidth as the vertex separation number, by dynamic programming over
/// vertex subsets: `best(S) = max(|∂S|, min_v best(S - v))`, where `∂S` are the
/// vertices of `S` with a neighbour outside `S`.
pub fn exact_pathwidth(g: &Graph) -> Result<usize> {
    let n = g.n();
    guard("vertices", n, PATHWIDTH_LIMIT)?;
    if n == 0 {
        return Ok(0);
    }
    let nb = neighbor_masks(g);
    let full = (1u32 << n) - 1;
    let mut best = vec![u8::MAX; 1 << n];
    best[0] = 0;
    for s in 1..=full {
        let boundary = (0..n).filter(|&v| s >> v & 1 == 1 && nb[v] & !s != 0).count() as u8;
        let mut m = u8::MAX;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros();
            m = m.min(best[(s & !(1 << v)) as usize]);
            bits &= bits - 1;
        }
        best[s as usize] = m.max(boundary);
    }
    Ok(best[full as usize] as usize)
}

/// Exact treewidth by the subset recurrence over elimination prefixes:
/// `TW(S) = min_{v∈S} max(TW(S - v), |Q(S - v, v)|)`, with `Q(S, v)` the vertices
/// outside `S ∪ {v}` reachable from `v` through `S`.
pub fn exact_treewidth(g: &Graph) -> Result<usize> {
    let n = g.n();
    guard("vertices", n, TREEWIDTH_LIMIT)?;
    if n == 0 {
        return Ok(0);
    }
    let nb = neighbor_masks(g);
    let full = (1u32 << n) - 1;
    let q = |s: u32, v: usize| -> u32 {
        // flood through s starting at v
        let mut reach = 1u32 << v;
        let mut frontier = 1u32 << v;
        let mut outside = 0u32;
        while frontier != 0 {
            let u = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let nbr = nb[u];
            outside |= nbr & !s & !(1 << v);
            let inner = nbr & s & !reach;
            reach |= inner;
            frontier |= inner;
        }
        outside.count_ones()
    };
    let mut tw = vec![u8::MAX; 1 << n];
    tw[0] = 0;
    for s in 1..=full {
        let mut m = u8::MAX;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s & !(1 << v);
            let cand = tw[rest as usize].max(q(rest, v) as u8);
            m = m.min(cand);
        }
        tw[s as usize] = m;
    }
    Ok(tw[full as usize] as usize)
}

/// Decomposition from a min-fill elimination ordering (lowest index breaks ties).
/// The last eliminated vertex's bag is node 0, the root.
pub fn heuristic_treedecomp(g: &Graph) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition::trivial(0);
    }
    let mut adj: Vec<BTreeSet<usize>> = g.vertices().map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let fill_of = |adj: &[BTreeSet<usize>], v: usize| -> usize {
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        let mut missing = 0;
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if !adj[a].contains(&b) {
                    missing += 1;
                }
            }
        }
        missing
    };
    let mut fill: Vec<usize> = (0..n).map(|v| fill_of(&adj, v)).collect();
    let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (fill[v], v)).collect();
    let mut eliminated = vec![false; n];
    let mut position = vec![0; n];
    let mut bags_by_pos: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);

    for pos in 0..n {
        let (_, v) = queue.pop_first().expect("vertex left to eliminate");
        eliminated[v] = true;
        position[v] = pos;
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        for &a in &nb {
            adj[a].remove(&v);
        }
        bags_by_pos.push((v, nb.clone()));
        adj[v].clear();
        let mut touched: BTreeSet<usize> = nb.iter().copied().collect();
        for &a in &nb {
            touched.extend(adj[a].iter().copied());
        }
        for u in touched {
            if eliminated[u] {
                continue;
            }
            let f = fill_of(&adj, u);
            if f != fill[u] {
                queue.remove(&(fill[u], u));
                fill[u] = f;
                queue.insert((f, u));
            }
        }
    }

    // node index = n - 1 - elimination position
    let node = |pos: usize| n - 1 - pos;
    let mut parent = vec![None; n];
    let mut bags = vec![VertexSet::new(); n];
    for (pos, (v, nb)) in bags_by_pos.into_iter().enumerate() {
        let t = node(pos);
        parent[t] = match nb.iter().map(|&u| position[u]).min() {
            Some(p) => Some(node(p)),
            None if t != 0 => Some(0),
            None => None,
        };
        let mut bag = nb;
        bag.push(v);
        bags[t] = bag.into_iter().collect();
    }
    TreeDecomposition::new(parent, bags).expect("elimination tree is a tree")
}
