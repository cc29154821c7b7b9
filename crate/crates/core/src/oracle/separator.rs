use super::{certify, require_d, FlexOracle, FlexOracleResult};
use crate::bounds::OracleBounds;
use crate::decomp::{validate, TreeDecomposition};
use crate::error::{BoundKind, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::partition::FanPartition;
use crate::rational::{floor_usize, int, Rational};

pub(crate) struct Separation {
    pub central: VertexSet,
    /// Components left once every piece has at most `limit` vertices, in discovery order.
    pub pieces: Vec<VertexSet>,
}

/// Recursively removes balanced separator bags until every component has at
/// most `limit >= 1` vertices.
///
/// For a component `C`, the separator is `B_t ∩ C` for the lowest-index node
/// `t` whose removal leaves components of at most `2|C|/3` vertices. Each level
/// at least shrinks components by a third, so the number of separators used on
/// a component of `s > limit` vertices is at most `3s/limit - 1`.
pub(crate) fn separate(g: &Graph, td: &TreeDecomposition, limit: usize) -> Separation {
    let limit = limit.max(1);
    let mut out = Separation {
        central: VertexSet::new(),
        pieces: Vec::new(),
    };
    let mut central = Vec::new();
    for comp in g.components() {
        split(g, td, limit, comp, &mut central, &mut out.pieces);
    }
    out.central = central.into_iter().collect();
    out
}

fn split(
    g: &Graph,
    td: &TreeDecomposition,
    limit: usize,
    comp: VertexSet,
    central: &mut Vec<usize>,
    pieces: &mut Vec<VertexSet>,
) {
    if comp.len() <= limit {
        pieces.push(comp);
        return;
    }
    let size = comp.len();
    let inside = {
        let mut m = vec![false; g.n()];
        for v in &comp {
            m[v] = true;
        }
        m
    };
    let mut fallback: Option<(usize, VertexSet, Vec<VertexSet>)> = None;
    let mut chosen = None;
    for t in 0..td.len() {
        let sep: VertexSet = td.bag(t).iter().filter(|&v| inside[v]).collect();
        if sep.is_empty() {
            continue;
        }
        let mut mask = inside.clone();
        for v in &sep {
            mask[v] = false;
        }
        let rest = g.components_within(&mask);
        let largest = rest.iter().map(VertexSet::len).max().unwrap_or(0);
        if 3 * largest <= 2 * size {
            chosen = Some((sep, rest));
            break;
        }
        if fallback.as_ref().is_none_or(|(l, _, _)| largest < *l) {
            fallback = Some((largest, sep, rest));
        }
    }
    let (sep, rest) = chosen.unwrap_or_else(|| {
        let (_, sep, rest) = fallback.expect("a valid decomposition covers every component");
        (sep, rest)
    });
    central.extend(sep.iter());
    for part in rest {
        split(g, td, limit, part, central, pieces);
    }
}

/// Balanced-separator oracle for graphs given with a tree-decomposition of
/// width at most `width`; declares `f(n) = 3(width + 1) n` and `g(n) = 1`.
#[derive(Debug, Clone)]
pub struct SeparatorOracle {
    width: usize,
    bounds: OracleBounds,
}

impl SeparatorOracle {
    pub fn new(width: usize) -> Self {
        SeparatorOracle {
            width,
            bounds: OracleBounds::linear(int(3 * (width + 1))).expect("positive coefficient"),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }
}

impl FlexOracle for SeparatorOracle {
    fn name(&self) -> &'static str {
        "separator oracle"
    }

    fn declared(&self) -> &OracleBounds {
        &self.bounds
    }

    fn partition(&self, g: &Graph, td: Option<&TreeDecomposition>, d: &Rational) -> Result<FlexOracleResult> {
        require_d(d)?;
        let td = td.ok_or_else(|| Error::InvalidArgument("the separator oracle needs a tree-decomposition".into()))?;
        validate(g, td)?;
        if td.width() > self.width {
            return Err(
                Error::bound(BoundKind::DecompositionWidth, int(td.width()), int(self.width)).within(self.name()),
            );
        }
        let sep = separate(g, td, floor_usize(d));
        let fp = FanPartition::new(g.n(), sep.central, sep.pieces)?;
        certify(self.name(), g, fp, &self.bounds, d)
    }
}

/// Runs the separator oracle with the width of `td` as its declared width.
pub fn separator_oracle(g: &Graph, td: &TreeDecomposition, d: &Rational) -> Result<FlexOracleResult> {
    SeparatorOracle::new(td.width()).partition(g, Some(td), d)
}
