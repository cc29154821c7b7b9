//! Exhaustive small-graph oracles: fan layouts, subgraph containment and minors.

use super::{Graph, VertexSet};
use crate::error::{guard, Result};

pub const SUBGRAPH_PATTERN_LIMIT: usize = 8;
pub const SUBGRAPH_HOST_LIMIT: usize = 12;
pub const MINOR_HOST_LIMIT: usize = 10;

/// Witness that a graph is a subgraph of a fan: `centre` maps to the fan
/// centre and `order[i]` to the `i`-th path vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanLayout {
    pub centre: usize,
    pub order: Vec<usize>,
}

impl FanLayout {
    /// Image of each vertex in `make_fan(n)`.
    pub fn embedding(&self, n: usize) -> Vec<usize> {
        let mut map = vec![0; n];
        for (i, &v) in self.order.iter().enumerate() {
            map[v] = i + 1;
        }
        map[self.centre] = 0;
        map
    }
}

/// True iff the vertices marked `alive` induce a disjoint union of paths.
pub fn is_linear_forest(g: &Graph, alive: &[bool]) -> bool {
    linear_forest_order(g, alive).is_some()
}

/// Lays the components of a linear forest end to end: components by lowest
/// vertex, each walked from its lower-indexed endpoint.
fn linear_forest_order(g: &Graph, alive: &[bool]) -> Option<Vec<usize>> {
    let deg = |v: usize| g.neighbors(v).iter().filter(|&&w| alive[w]).count();
    if g.vertices().any(|v| alive[v] && deg(v) > 2) {
        return None;
    }
    let mut order = Vec::new();
    for comp in g.components_within(alive) {
        let edges: usize = comp.iter().map(deg).sum::<usize>() / 2;
        if edges + 1 != comp.len() {
            return None;
        }
        let start = comp.iter().find(|&v| deg(v) <= 1)?;
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            order.push(cur);
            match g.neighbors(cur).iter().copied().find(|&w| alive[w] && w != prev) {
                Some(w) => {
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
    }
    Some(order)
}

/// Finds a centre `c` (lowest index first) such that `g - c` is a linear forest.
pub fn is_subgraph_of_fan(g: &Graph) -> Option<FanLayout> {
    let mut alive = vec![true; g.n()];
    for c in g.vertices() {
        alive[c] = false;
        if let Some(order) = linear_forest_order(g, &alive) {
            return Some(FanLayout { centre: c, order });
        }
        alive[c] = true;
    }
    None
}

/// True iff every edge joins consecutive indices, i.e. the identity order
/// embeds `g` into a path.
pub fn is_subgraph_of_path(g: &Graph) -> bool {
    g.edges().all(|(u, v)| v == u + 1)
}

/// Injective adjacency-preserving map from `pattern` into `host`, if one exists.
pub fn contains_subgraph(pattern: &Graph, host: &Graph) -> Result<Option<Vec<usize>>> {
    guard("pattern vertices", pattern.n(), SUBGRAPH_PATTERN_LIMIT)?;
    guard("host vertices", host.n(), SUBGRAPH_HOST_LIMIT)?;
    if pattern.n() > host.n() || pattern.m() > host.m() {
        return Ok(None);
    }
    let order = constraint_order(pattern);
    let mut map = vec![usize::MAX; pattern.n()];
    let mut used = vec![false; host.n()];
    if extend_embedding(pattern, host, &order, 0, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

/// Pattern vertices ordered so each one (after a component's first) has an earlier neighbour.
fn constraint_order(g: &Graph) -> Vec<usize> {
    let mut placed = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    while order.len() < g.n() {
        let start = g
            .vertices()
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        placed[start] = true;
        order.push(start);
        let mut i = order.len() - 1;
        while i < order.len() {
            let u = order[i];
            let mut next: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| !placed[w]).collect();
            next.sort_by_key(|&w| (std::cmp::Reverse(g.degree(w)), w));
            for w in next {
                placed[w] = true;
                order.push(w);
            }
            i += 1;
        }
    }
    order
}

fn extend_embedding(
    pattern: &Graph,
    host: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    let anchor = pattern.neighbors(v).iter().copied().find(|&u| map[u] != usize::MAX);
    let candidates: Vec<usize> = match anchor {
        Some(u) => host.neighbors(map[u]).to_vec(),
        None => host.vertices().collect(),
    };
    for c in candidates {
        if used[c] || host.degree(c) < pattern.degree(v) {
            continue;
        }
        let fits = pattern
            .neighbors(v)
            .iter()
            .all(|&u| map[u] == usize::MAX || host.has_edge(map[u], c));
        if !fits {
            continue;
        }
        map[v] = c;
        used[c] = true;
        if extend_embedding(pattern, host, order, depth + 1, map, used) {
            return true;
        }
        map[v] = usize::MAX;
        used[c] = false;
    }
    false
}

/// Decides whether `h` is a minor of `g` by searching over branch-set assignments.
pub fn has_minor(g: &Graph, h: &Graph) -> Result<bool> {
    guard("minor vertices", h.n(), SUBGRAPH_PATTERN_LIMIT)?;
    guard("host vertices", g.n(), MINOR_HOST_LIMIT)?;
    if h.n() > g.n() || h.m() > g.m() {
        return Ok(false);
    }
    if h.n() == 0 {
        return Ok(true);
    }
    let mut assign = vec![usize::MAX; g.n()];
    let mut sizes = vec![0usize; h.n()];
    Ok(assign_branch_sets(g, h, 0, &mut assign, &mut sizes))
}

fn assign_branch_sets(g: &Graph, h: &Graph, v: usize, assign: &mut [usize], sizes: &mut [usize]) -> bool {
    let empty = sizes.iter().filter(|&&s| s == 0).count();
    if g.n() - v < empty {
        return false;
    }
    if v == g.n() {
        return branch_sets_model(g, h, assign);
    }
    // Branch sets are interchangeable up to h's automorphisms; we only break the
    // symmetry of opening a fresh set: a new set must be the lowest-numbered empty one
    // when h is complete.
    let complete = h.m() == h.n() * (h.n() - 1) / 2;
    let first_empty = sizes.iter().position(|&s| s == 0);
    for b in 0..h.n() {
        if complete && sizes[b] == 0 && Some(b) != first_empty {
            continue;
        }
        assign[v] = b;
        sizes[b] += 1;
        if assign_branch_sets(g, h, v + 1, assign, sizes) {
            return true;
        }
        sizes[b] -= 1;
    }
    assign[v] = usize::MAX;
    assign_branch_sets(g, h, v + 1, assign, sizes)
}

fn branch_sets_model(g: &Graph, h: &Graph, assign: &[usize]) -> bool {
    for b in 0..h.n() {
        let members: VertexSet = g.vertices().filter(|&v| assign[v] == b).collect();
        if members.is_empty() {
            return false;
        }
        let alive: Vec<bool> = g.vertices().map(|v| assign[v] == b).collect();
        if g.components_within(&alive).len() != 1 {
            return false;
        }
    }
    h.edges().all(|(x, y)| {
        g.edges()
            .any(|(u, v)| (assign[u] == x && assign[v] == y) || (assign[u] == y && assign[v] == x))
    })
}
