use super::{certify, require_d, FlexOracle, FlexOracleResult};
use crate::bounds::OracleBounds;
use crate::decomp::TreeDecomposition;
use crate::error::Result;
use crate::graph::Graph;
use crate::partition::{ExhaustiveFanSearch, BRUTE_FORCE_LIMIT};
use crate::rational::{int, Rational};

pub const EXACT_ORACLE_LIMIT: usize = BRUTE_FORCE_LIMIT;

/// Exhaustive oracle for graphs on at most seven vertices.
///
/// Minimises `max(d |C|, w)` over central parts `C` and path-partitions of
/// width `w` of `G - C`; ties prefer fewer central vertices. The optimum is at
/// most `n` (take `C` empty and one part), which gives the declared bounds
/// `f(n) = n` and `g(n) = L(n)^3` because `n <= L(n)^3` for `n <= 7`.
#[derive(Debug, Clone)]
pub struct ExactOracle {
    bounds: OracleBounds,
}

impl ExactOracle {
    pub fn new() -> Self {
        ExactOracle {
            bounds: OracleBounds::new(int(0), int(1), int(1), int(0)).expect("valid coefficients"),
        }
    }
}

impl Default for ExactOracle {
    fn default() -> Self {
        ExactOracle::new()
    }
}

impl FlexOracle for ExactOracle {
    fn name(&self) -> &'static str {
        "exact oracle"
    }

    fn declared(&self) -> &OracleBounds {
        &self.bounds
    }

    fn partition(&self, g: &Graph, _td: Option<&TreeDecomposition>, d: &Rational) -> Result<FlexOracleResult> {
        require_d(d)?;
        let mut search = ExhaustiveFanSearch::new(g)?;
        let (num, den) = (*d.numer() as u64, *d.denom() as u64);
        // max(d c, w) scaled by the denominator of d
        let (_, fp) = search.optimise(|c, w| (num * c as u64).max(den * w as u64), |_| 0);
        certify(self.name(), g, fp, &self.bounds, d)
    }
}

pub fn exact_oracle(g: &Graph, d: &Rational) -> Result<FlexOracleResult> {
    ExactOracle::new().partition(g, None, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, nonisomorphic_graphs, VertexSet};
    use crate::partition::brute_force_min_fan_width;

    #[test]
    fn single_vertex() {
        let r = exact_oracle(&Graph::empty(1), &int(1)).unwrap();
        assert!(r.fan_partition.central.is_empty());
        assert_eq!(r.fan_partition.path_parts, vec![VertexSet::singleton(0)]);
    }

    #[test]
    fn five_cycle_has_width_one() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let r = exact_oracle(&c5, &int(1)).unwrap();
        assert_eq!(r.report.overall_width, 1);
        assert_eq!(r.report.central_size, 1);
    }

    #[test]
    fn complete_graph_matches_brute_force_at_d_one() {
        let k5 = make_complete(5).unwrap();
        assert_eq!(
            exact_oracle(&k5, &int(1)).unwrap().report.overall_width,
            brute_force_min_fan_width(&k5).unwrap()
        );
        for d in [int(2), Rational::new(7, 2), int(10)] {
            let r = exact_oracle(&k5, &d).unwrap();
            assert!(int(r.report.central_size) <= r.claimed_k);
        }
    }

    #[test]
    fn larger_d_never_grows_the_central_part() {
        for g in nonisomorphic_graphs(5) {
            let mut last = usize::MAX;
            for d in 1..=6 {
                let c = exact_oracle(&g, &int(d)).unwrap().report.central_size;
                assert!(c <= last);
                last = c;
            }
        }
    }

    #[test]
    fn rejects_large_graphs_and_small_d() {
        assert!(exact_oracle(&Graph::empty(8), &int(1)).is_err());
        assert!(exact_oracle(&Graph::empty(3), &Rational::new(1, 2)).is_err());
    }
}
