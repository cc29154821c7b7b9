use rayon::prelude::*;

use crate::bounds::{canonical_d, OracleBounds};
use crate::decomp::{split_to_stars, validate, TreeDecomposition, WeightedTree};
use crate::error::{BoundKind, Error, Result, ResultExt};
use crate::graph::{Graph, VertexSet};
use crate::lemmas::{lift_star_decomposition, tree_deletion_set};
use crate::oracle::{require_d, OracleKind};
use crate::partition::{check_fan_partition, FanPartition, WidthReport};
use crate::rational::{ceil_usize, int, Rational};

const STEP: &str = "minor_free_pipeline";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineConfig {
    /// Adhesion bound of the decomposition.
    pub k: usize,
    /// Apex bound per node.
    pub a: usize,
    pub oracle: OracleKind,
}

impl PipelineConfig {
    /// The smallest `k >= 1` and `a` that `td` satisfies.
    pub fn for_decomposition(td: &TreeDecomposition, oracle: OracleKind) -> Self {
        PipelineConfig {
            k: td.adhesion().max(1),
            a: td.max_apex(),
            oracle,
        }
    }
}

#[derive(Debug, Clone)]
pub struct PipelineOutput {
    pub fan_partition: FanPartition,
    pub report: WidthReport,
    pub bound_k: Rational,
    pub bound_w: Rational,
    pub declared: OracleBounds,
    /// Tree nodes the decomposition was cut at, including the root.
    pub cut_nodes: VertexSet,
    /// Vertices removed with the adhesion sets of the cut nodes.
    pub cut_vertices: usize,
}

/// Width the oracle must accept on the auxiliary graphs: every centre bag minus
/// its apices becomes one bag, and pendants add bags of size two.
pub fn decomposition_oracle_width(td: &TreeDecomposition) -> usize {
    (0..td.len())
        .map(|t| td.bag(t).difference(td.apex(t)).len().saturating_sub(1))
        .max()
        .unwrap_or(0)
        .max(1)
}

/// Fan-partition of `g` with central part at most `(f(kn) + (2a + k) n)/d` and
/// path width at most `2 d g(kn)`, where `(f, g)` are the oracle's declared bounds.
pub fn minor_free_pipeline(
    g: &Graph,
    td: &TreeDecomposition,
    config: &PipelineConfig,
    d: &Rational,
) -> Result<PipelineOutput> {
    let out = run(g, td, config, d)?;
    check_fan_partition(g, &out.fan_partition, &out.bound_k, &out.bound_w).within(STEP)?;
    Ok(out)
}

fn run(g: &Graph, td: &TreeDecomposition, config: &PipelineConfig, d: &Rational) -> Result<PipelineOutput> {
    require_d(d)?;
    if config.k == 0 {
        return Err(Error::InvalidArgument("adhesion bound k must be at least 1".into()));
    }
    validate(g, td)?;
    if td.adhesion() > config.k {
        return Err(Error::bound(BoundKind::Adhesion, int(td.adhesion()), int(config.k)).within(STEP));
    }
    if td.max_apex() > config.a {
        return Err(Error::bound(BoundKind::ApexSize, int(td.max_apex()), int(config.a)).within(STEP));
    }
    let n = g.n();
    let oracle = config.oracle.build(decomposition_oracle_width(td));
    let declared = oracle.declared().clone();
    let bound_k = declared.pipeline_k(n, config.k, config.a, d);
    let bound_w = declared.pipeline_w(n, config.k, d);
    let finish = |fan_partition: FanPartition, cut_nodes: VertexSet, cut_vertices: usize| PipelineOutput {
        report: fan_partition.report(),
        fan_partition,
        bound_k,
        bound_w,
        declared: declared.clone(),
        cut_nodes,
        cut_vertices,
    };

    if n == 0 {
        return Ok(finish(
            FanPartition::new(0, VertexSet::new(), vec![])?,
            VertexSet::new(),
            0,
        ));
    }
    if *d > int(n) {
        let fp = FanPartition::new(n, VertexSet::new(), vec![VertexSet::range(n)])?;
        return Ok(finish(fp, VertexSet::new(), 0));
    }

    let weights = (0..td.len())
        .map(|t| int(td.bag(t).difference(&td.adhesion_set(t)).len()))
        .collect();
    let wt = WeightedTree::new(td.tree().clone(), weights)?;
    let q = ceil_usize(&(int(n) / d)) - 1;
    let mut cut = tree_deletion_set(&wt, q, Some(int(n)))?;
    cut.insert(td.root());
    let split = split_to_stars(g, td, &cut)?;
    let chunk_total: usize = split.chunks.iter().map(|c| c.sub.graph.n()).sum();
    assert_eq!(
        chunk_total + split.removed.len(),
        n,
        "chunks and removed vertices must partition V(G)"
    );

    let mut central = split.removed.clone();
    let mut parts = Vec::new();
    for chunk in &split.chunks {
        if chunk.sub.graph.n() == 0 {
            continue;
        }
        let step = format!("chunk at node {}", chunk.z);
        let lifted = lift_star_decomposition(&chunk.sub.graph, &chunk.star, &chunk.apex, None, oracle.as_ref(), d, d)
            .within(&step)
            .within(STEP)?;
        central = central.union(&chunk.sub.lift(&lifted.removed));
        parts.extend(lifted.parts.iter().map(|p| chunk.sub.lift(p)));
    }
    let fp = FanPartition::new(n, central, parts)?;
    Ok(finish(fp, cut, split.removed.len()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub d: Rational,
    pub n: usize,
    pub central_size: usize,
    pub bound_k: Rational,
    pub path_width: usize,
    pub bound_w: Rational,
    pub pass: bool,
    /// The row for `d = sqrt(n)/log2(n + 1)`.
    pub canonical: bool,
}

/// `1, 2, 4, ...` below `n`, then `n` itself.
pub fn doubling_schedule(n: usize) -> Vec<Rational> {
    let mut out = Vec::new();
    let mut d = 1;
    while d < n {
        out.push(int(d));
        d *= 2;
    }
    out.push(int(n.max(1)));
    out
}

/// Runs the pipeline for every `d` (in parallel) and for the canonical `d`,
/// checking each output against its bounds.
pub fn sweep_flexibility(
    g: &Graph,
    td: &TreeDecomposition,
    config: &PipelineConfig,
    d_values: &[Rational],
) -> Result<Vec<SweepRow>> {
    let canonical = canonical_d(g.n());
    let mut ds: Vec<(Rational, bool)> = d_values.iter().map(|d| (*d, *d == canonical)).collect();
    if !d_values.contains(&canonical) {
        ds.push((canonical, true));
    }
    ds.par_iter()
        .map(|(d, is_canonical)| {
            let out = run(g, td, config, d)?;
            let pass = check_fan_partition(g, &out.fan_partition, &out.bound_k, &out.bound_w).is_ok();
            Ok(SweepRow {
                d: *d,
                n: g.n(),
                central_size: out.report.central_size,
                bound_k: out.bound_k,
                path_width: out.report.path_width,
                bound_w: out.bound_w,
                pass,
                canonical: *is_canonical,
            })
        })
        .collect()
}
