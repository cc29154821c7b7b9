//! Partitions, path-partitions and `(k, w)`-fan-partitions, with their checkers.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{guard, BoundKind, Error, Result};
use crate::graph::{blowup, make_fan, ops_part_index, Graph, VertexSet};
use crate::rational::{int, Rational};

/// Ordered collection of disjoint vertex sets covering `0..graph_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    parts: Vec<VertexSet>,
    graph_n: usize,
}

impl Partition {
    pub fn new(graph_n: usize, parts: Vec<VertexSet>) -> Result<Self> {
        ops_part_index(graph_n, &parts)?;
        Ok(Partition { parts, graph_n })
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn graph_n(&self) -> usize {
        self.graph_n
    }
}

/// Maximum part size.
pub fn width(p: &Partition) -> usize {
    parts_width(&p.parts)
}

pub(crate) fn parts_width(parts: &[VertexSet]) -> usize {
    parts.iter().map(VertexSet::len).max().unwrap_or(0)
}

/// A central part plus an ordered sequence of path parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanPartition {
    pub central: VertexSet,
    pub path_parts: Vec<VertexSet>,
    pub graph_n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WidthReport {
    pub central_size: usize,
    pub path_width: usize,
    pub overall_width: usize,
}

impl FanPartition {
    /// Checks that the central and path parts partition `0..graph_n`.
    pub fn new(graph_n: usize, central: VertexSet, path_parts: Vec<VertexSet>) -> Result<Self> {
        let fp = FanPartition {
            central,
            path_parts,
            graph_n,
        };
        fp.check_structure()?;
        Ok(fp)
    }

    pub fn check_structure(&self) -> Result<()> {
        let mut all = Vec::with_capacity(self.path_parts.len() + 1);
        all.push(self.central.clone());
        all.extend(self.path_parts.iter().cloned());
        ops_part_index(self.graph_n, &all).map(|_| ())
    }

    pub fn report(&self) -> WidthReport {
        let central_size = self.central.len();
        let path_width = parts_width(&self.path_parts);
        WidthReport {
            central_size,
            path_width,
            overall_width: central_size.max(path_width),
        }
    }

    /// Central part first, then the path parts.
    pub fn to_partition(&self) -> Partition {
        let mut parts = vec![self.central.clone()];
        parts.extend(self.path_parts.iter().cloned());
        Partition {
            parts,
            graph_n: self.graph_n,
        }
    }

    /// Sorts within parts and drops empty path parts, leaving the order otherwise intact.
    pub fn canonical(&self) -> FanPartition {
        FanPartition {
            central: self.central.clone(),
            path_parts: self.path_parts.iter().filter(|p| !p.is_empty()).cloned().collect(),
            graph_n: self.graph_n,
        }
    }
}

/// First edge of `g` (ignoring vertices in `excluded`) that joins two
/// non-consecutive parts. `parts` must partition the non-excluded vertices.
pub fn path_violation(g: &Graph, excluded: &VertexSet, parts: &[VertexSet]) -> Result<Option<(usize, usize)>> {
    let n = g.n();
    let mut owner = vec![usize::MAX; n];
    for v in excluded {
        if v >= n {
            return Err(Error::InvalidPartition(format!("vertex {v} out of range for n = {n}")));
        }
        owner[v] = usize::MAX - 1;
    }
    for (i, part) in parts.iter().enumerate() {
        for v in part {
            if v >= n {
                return Err(Error::InvalidPartition(format!("vertex {v} out of range for n = {n}")));
            }
            if owner[v] != usize::MAX {
                return Err(Error::InvalidPartition(format!("vertex {v} is assigned twice")));
            }
            owner[v] = i;
        }
    }
    if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(Error::InvalidPartition(format!("vertex {v} is in no part")));
    }
    let skip = usize::MAX - 1;
    Ok(g.edges().find(|&(u, v)| {
        let (a, b) = (owner[u], owner[v]);
        a != skip && b != skip && a.abs_diff(b) > 1
    }))
}

/// True iff every edge joins vertices in the same or consecutive parts.
pub fn check_path_partition(g: &Graph, parts: &[VertexSet]) -> Result<bool> {
    Ok(path_violation(g, &VertexSet::new(), parts)?.is_none())
}

/// Verifies a `(k, w)`-fan-partition and returns its measured widths.
pub fn check_fan_partition(g: &Graph, fp: &FanPartition, k: &Rational, w: &Rational) -> Result<WidthReport> {
    if fp.graph_n != g.n() {
        return Err(Error::InvalidPartition(format!(
            "partition is over {} vertices but the graph has {}",
            fp.graph_n,
            g.n()
        )));
    }
    fp.check_structure()?;
    if let Some((u, v)) = path_violation(g, &fp.central, &fp.path_parts)? {
        return Err(Error::InvalidPartition(format!(
            "edge {{{u},{v}}} joins non-consecutive path parts"
        )));
    }
    let report = fp.report();
    if int(report.central_size) > *k {
        return Err(Error::bound(BoundKind::CentralSize, int(report.central_size), *k));
    }
    if int(report.path_width) > *w {
        return Err(Error::bound(BoundKind::PathWidth, int(report.path_width), *w));
    }
    Ok(report)
}

/// A map of a graph into a blowup of a fan.
#[derive(Debug, Clone)]
pub struct BlowupEmbedding {
    pub fan_size: usize,
    pub width: usize,
    /// Vertex `(fan vertex i, copy j)` of the blowup is `i * width + j`.
    pub map: Vec<usize>,
}

impl BlowupEmbedding {
    pub fn host(&self) -> Result<Graph> {
        blowup(&make_fan(self.fan_size)?, self.width.max(1))
    }

    /// First edge of `g` not mapped onto an edge of the host, if any.
    pub fn broken_edge(&self, g: &Graph, host: &Graph) -> Option<(usize, usize)> {
        let injective = {
            let mut seen = self.map.clone();
            seen.sort_unstable();
            seen.windows(2).all(|w| w[0] != w[1])
        };
        if !injective {
            return g.edges().next().or(Some((0, 0)));
        }
        g.edges().find(|&(u, v)| !host.has_edge(self.map[u], self.map[v]))
    }
}

/// Central part to the fan centre, path part `i` to fan vertex `i + 1`;
/// copies within a part are assigned in increasing vertex order.
pub fn fan_partition_to_embedding(g: &Graph, fp: &FanPartition) -> Result<BlowupEmbedding> {
    let overall = fp.report().overall_width;
    check_fan_partition(g, fp, &int(overall), &int(overall))?;
    let width = overall;
    let mut map = vec![0; g.n()];
    for (copy, v) in fp.central.iter().enumerate() {
        map[v] = copy;
    }
    for (i, part) in fp.path_parts.iter().enumerate() {
        for (copy, v) in part.iter().enumerate() {
            map[v] = (i + 1) * width + copy;
        }
    }
    Ok(BlowupEmbedding {
        fan_size: 1 + fp.path_parts.len(),
        width,
        map,
    })
}

pub const BRUTE_FORCE_LIMIT: usize = 7;

/// Exhaustive search over central parts and ordered path-partitions of tiny graphs.
///
/// For each vertex subset `U` it finds, by dynamic programming over
/// `(placed, last part)` states, a minimum-width ordered path-partition of `G[U]`;
/// this ranges over every ordered partition of `U`.
pub struct ExhaustiveFanSearch<'g> {
    g: &'g Graph,
    nbr: Vec<u32>,
    memo: HashMap<u32, (usize, Vec<u32>)>,
}

impl<'g> ExhaustiveFanSearch<'g> {
    pub fn new(g: &'g Graph) -> Result<Self> {
        guard("vertices", g.n(), BRUTE_FORCE_LIMIT)?;
        let nbr = g
            .vertices()
            .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
            .collect();
        Ok(ExhaustiveFanSearch {
            g,
            nbr,
            memo: HashMap::new(),
        })
    }

    fn full(&self) -> u32 {
        ((1u64 << self.g.n()) - 1) as u32
    }

    /// Minimum width of an ordered path-partition of `G[alive]`, with a witness.
    pub fn best_path_partition(&mut self, alive: u32) -> (usize, Vec<u32>) {
        if let Some(hit) = self.memo.get(&alive) {
            return hit.clone();
        }
        let result = self.solve(alive);
        self.memo.insert(alive, result.clone());
        result
    }

    fn solve(&self, alive: u32) -> (usize, Vec<u32>) {
        // best[(placed, last)] = (width of the remainder, next part)
        let mut table: HashMap<(u32, u32), (usize, u32)> = HashMap::new();
        fn rec(
            nbr: &[u32],
            alive: u32,
            placed: u32,
            last: u32,
            table: &mut HashMap<(u32, u32), (usize, u32)>,
        ) -> usize {
            if placed == alive {
                return 0;
            }
            if let Some(&(w, _)) = table.get(&(placed, last)) {
                return w;
            }
            let forbidden_touch = placed & !last;
            let free = alive & !placed;
            let mut best = (usize::MAX, 0u32);
            // enumerate nonempty subsets of `free`
            let mut next = free;
            while next != 0 {
                let touches = (0..32)
                    .filter(|&v| next >> v & 1 == 1)
                    .any(|v| nbr[v] & forbidden_touch != 0);
                if !touches {
                    let size = next.count_ones() as usize;
                    if size < best.0 {
                        let rest = rec(nbr, alive, placed | next, next, table);
                        let w = size.max(rest);
                        if w < best.0 || (w == best.0 && next < best.1) {
                            best = (w, next);
                        }
                    }
                }
                next = (next - 1) & free;
            }
            table.insert((placed, last), best);
            best.0
        }
        let w = rec(&self.nbr, alive, 0, 0, &mut table);
        let mut parts = Vec::new();
        let (mut placed, mut last) = (0u32, 0u32);
        while placed != alive {
            let (_, next) = table[&(placed, last)];
            parts.push(next);
            placed |= next;
            last = next;
        }
        (w, parts)
    }

    /// Minimum overall width of a fan-partition, with an optimal witness.
    pub fn min_fan_width(&mut self) -> (usize, FanPartition) {
        self.optimise(|central, path_width| central.max(path_width) as u64 * 2, |_| 0)
    }

    /// Minimises `cost(|central|, path width)`; ties go to the smaller central
    /// part, then `tiebreak(central mask)`, then the smaller mask.
    pub fn optimise(
        &mut self,
        cost: impl Fn(usize, usize) -> u64,
        tiebreak: impl Fn(u32) -> u64,
    ) -> (usize, FanPartition) {
        let full = self.full();
        let mut best: Option<(u64, usize, u64, u32, usize, Vec<u32>)> = None;
        for central in 0..=full {
            let (pw, parts) = self.best_path_partition(full & !central);
            let c = central.count_ones() as usize;
            let key = (cost(c, pw), c, tiebreak(central), central);
            let better = match &best {
                None => true,
                Some((bc, bcs, bt, bm, _, _)) => key < (*bc, *bcs, *bt, *bm),
            };
            if better {
                best = Some((key.0, key.1, key.2, key.3, pw, parts));
            }
        }
        let (_, c, _, central, pw, parts) = best.expect("at least the empty central part");
        let to_set = |mask: u32| -> VertexSet { (0..self.g.n()).filter(|&v| mask >> v & 1 == 1).collect() };
        let fp = FanPartition {
            central: to_set(central),
            path_parts: parts.into_iter().map(to_set).collect(),
            graph_n: self.g.n(),
        };
        (c.max(pw), fp)
    }
}

/// Minimum overall width over all fan-partitions (exhaustive, `n <= 7`).
pub fn brute_force_min_fan_width(g: &Graph) -> Result<usize> {
    Ok(ExhaustiveFanSearch::new(g)?.min_fan_width().0)
}
