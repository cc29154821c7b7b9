//! Flexible fan-partition oracles: given `G` and `d >= 1`, produce an
//! `(f(n)/d, d g(n))`-fan-partition for the oracle's declared `(f, g)`.

mod certified;
mod exact;
mod separator;

use std::fmt;
use std::str::FromStr;

pub use certified::{certified_oracle, CertifiedOracle};
pub use exact::{exact_oracle, ExactOracle, EXACT_ORACLE_LIMIT};
pub(crate) use separator::separate;
pub use separator::{separator_oracle, SeparatorOracle};

use crate::bounds::OracleBounds;
use crate::decomp::TreeDecomposition;
use crate::error::{Error, Result, ResultExt};
use crate::graph::Graph;
use crate::partition::{check_fan_partition, FanPartition, WidthReport};
use crate::rational::{int, Rational};

#[derive(Debug, Clone)]
pub struct FlexOracleResult {
    pub fan_partition: FanPartition,
    pub claimed_k: Rational,
    pub claimed_w: Rational,
    pub report: WidthReport,
}

pub trait FlexOracle: Send + Sync {
    fn name(&self) -> &'static str;

    fn declared(&self) -> &OracleBounds;

    /// `td`, when given, must decompose `g`; oracles that need one reject `None`.
    fn partition(&self, g: &Graph, td: Option<&TreeDecomposition>, d: &Rational) -> Result<FlexOracleResult>;
}

pub(crate) fn require_d(d: &Rational) -> Result<()> {
    if *d < int(1) {
        return Err(Error::InvalidArgument(format!(
            "flexibility parameter d = {d} must be at least 1"
        )));
    }
    Ok(())
}

/// Checks an oracle output against the oracle's own claimed bounds.
pub(crate) fn certify(
    name: &str,
    g: &Graph,
    fan_partition: FanPartition,
    bounds: &OracleBounds,
    d: &Rational,
) -> Result<FlexOracleResult> {
    let n = g.n();
    let claimed_k = bounds.f(n) / d;
    let claimed_w = d * bounds.g(n);
    let report = check_fan_partition(g, &fan_partition, &claimed_k, &claimed_w).within(name)?;
    Ok(FlexOracleResult {
        fan_partition,
        claimed_k,
        claimed_w,
        report,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleKind {
    Exact,
    Separator,
    Certified,
}

impl FromStr for OracleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(OracleKind::Exact),
            "separator" => Ok(OracleKind::Separator),
            "certified" => Ok(OracleKind::Certified),
            other => Err(Error::Parse(format!(
                "unknown oracle {other:?} (expected exact, separator or certified)"
            ))),
        }
    }
}

impl fmt::Display for OracleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OracleKind::Exact => "exact",
            OracleKind::Separator => "separator",
            OracleKind::Certified => "certified",
        })
    }
}

impl OracleKind {
    /// An oracle accepting decompositions of width at most `width`.
    pub fn build(self, width: usize) -> Box<dyn FlexOracle> {
        match self {
            OracleKind::Exact => Box::new(ExactOracle::new()),
            OracleKind::Separator => Box::new(SeparatorOracle::new(width)),
            OracleKind::Certified => Box::new(CertifiedOracle::new(width, 1)),
        }
    }
}
