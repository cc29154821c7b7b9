use super::{certify, require_d, separate, FlexOracle, FlexOracleResult};
use crate::bounds::OracleBounds;
use crate::decomp::{validate, TreeDecomposition};
use crate::embedding::ProductEmbedding;
use crate::error::{BoundKind, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::partition::FanPartition;
use crate::rational::{floor_usize, int, Rational};

/// Oracle driven by a row-treewidth certificate `G ⊆ H ⊠ P`.
///
/// Separator bags of the host are removed until every remaining host piece has
/// at most `d` used nodes; the central part is the union of their fibres. A piece
/// with `m` nodes is cut into blocks of `floor(d/m)` consecutive rows. Declares
/// `f(n) = 3(b + 1) l n` and `g(n) = 1`, where `l` bounds the fibre sizes.
#[derive(Debug, Clone)]
pub struct CertifiedOracle {
    b: usize,
    fibre: usize,
    certificate: Option<ProductEmbedding>,
    bounds: OracleBounds,
}

impl CertifiedOracle {
    /// Without a certificate, the oracle certifies `G` in `G ⊠ P_1` using the
    /// supplied decomposition, which must then have width at most `b`.
    pub fn new(b: usize, fibre: usize) -> Self {
        let fibre = fibre.max(1);
        CertifiedOracle {
            b,
            fibre,
            certificate: None,
            bounds: OracleBounds::linear(int(3 * (b + 1) * fibre)).expect("positive coefficient"),
        }
    }

    pub fn with_certificate(pe: ProductEmbedding) -> Self {
        let mut oracle = CertifiedOracle::new(pe.b(), pe.max_fibre());
        oracle.certificate = Some(pe);
        oracle
    }

    fn run(&self, g: &Graph, pe: &ProductEmbedding, d: &Rational) -> Result<FlexOracleResult> {
        require_d(d)?;
        pe.validate(g, None)?;
        if pe.b() > self.b {
            return Err(Error::bound(BoundKind::DecompositionWidth, int(pe.b()), int(self.b)).within(self.name()));
        }
        if pe.max_fibre() > self.fibre {
            return Err(Error::InvalidCertificate(format!(
                "a host node carries {} vertices, more than the declared {}",
                pe.max_fibre(),
                self.fibre
            )));
        }
        let limit = floor_usize(d);
        let mut fibres = vec![Vec::new(); pe.host_h.n()];
        for (v, &(h, _)) in pe.coords.iter().enumerate() {
            fibres[h].push(v);
        }
        let used: VertexSet = (0..pe.host_h.n()).filter(|&h| !fibres[h].is_empty()).collect();
        let host = pe.host_h.induced(&used);
        let host_td = pe.host_td.restrict(&host);
        let sep = separate(&host.graph, &host_td, limit);

        let central: VertexSet = sep
            .central
            .iter()
            .flat_map(|h| fibres[host.to_original[h]].iter().copied())
            .collect();
        let mut parts = Vec::new();
        for piece in &sep.pieces {
            let rows_per_block = (limit / piece.len()).max(1);
            let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); pe.path_len.div_ceil(rows_per_block).max(1)];
            for h in piece {
                for &v in &fibres[host.to_original[h]] {
                    blocks[pe.coords[v].1 / rows_per_block].push(v);
                }
            }
            parts.extend(blocks.into_iter().filter(|b| !b.is_empty()).map(VertexSet::from_iter));
        }
        let fp = FanPartition::new(g.n(), central, parts)?;
        certify(self.name(), g, fp, &self.bounds, d)
    }
}

impl FlexOracle for CertifiedOracle {
    fn name(&self) -> &'static str {
        "certified oracle"
    }

    fn declared(&self) -> &OracleBounds {
        &self.bounds
    }

    fn partition(&self, g: &Graph, td: Option<&TreeDecomposition>, d: &Rational) -> Result<FlexOracleResult> {
        if let Some(pe) = &self.certificate {
            return self.run(g, pe, d);
        }
        let td = td.ok_or_else(|| {
            Error::InvalidArgument("the certified oracle needs a certificate or a tree-decomposition".into())
        })?;
        validate(g, td)?;
        self.run(g, &ProductEmbedding::trivial(g, td), d)
    }
}

pub fn certified_oracle(g: &Graph, pe: &ProductEmbedding, d: &Rational) -> Result<FlexOracleResult> {
    CertifiedOracle::with_certificate(pe.clone()).partition(g, None, d)
}
