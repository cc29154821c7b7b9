use crate::decomp::{torso, validate, StarDecomposition, TreeDecomposition};
use crate::error::{BoundKind, Error, Result, ResultExt};
use crate::graph::{Graph, InducedSubgraph, VertexSet};
use crate::lemmas::power_path_partition;
use crate::oracle::FlexOracle;
use crate::partition::{parts_width, path_violation};
use crate::rational::{int, Rational};

/// A degree-one vertex `id` of the auxiliary graph standing for the pair `(v, x)`,
/// where `v` lies only in a leaf bag and `x` in that leaf's adhesion set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pendant {
    pub v: usize,
    pub x: usize,
    pub id: usize,
}

#[derive(Debug, Clone)]
pub struct Leaf {
    /// `K_s`: leaf bag ∩ centre bag.
    pub adhesion: VertexSet,
    /// `B'_s`: leaf bag minus centre bag.
    pub residual: VertexSet,
    /// Indices into `pendants`, grouped by residual vertex in increasing order.
    pub pendants: Vec<usize>,
}

/// The torso at the centre bag (vertex `i` is the `i`-th smallest centre vertex)
/// plus one pendant per leaf residual vertex and adhesion vertex. Pendant ids
/// follow the torso's vertices.
#[derive(Debug, Clone)]
pub struct AuxiliaryGraph {
    pub base: InducedSubgraph,
    pub graph: Graph,
    pub pendants: Vec<Pendant>,
    pub leaves: Vec<Leaf>,
}

impl AuxiliaryGraph {
    /// Torso label of a centre vertex.
    pub fn base_index(&self, v: usize) -> Option<usize> {
        self.base.to_original.binary_search(&v).ok()
    }

    /// `M_v` as pendant ids.
    pub fn members(&self, leaf: usize, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.leaves[leaf]
            .pendants
            .iter()
            .map(|&i| self.pendants[i])
            .filter(move |p| p.v == v)
            .map(|p| p.id)
    }
}

pub fn build_auxiliary(g: &Graph, sd: &StarDecomposition) -> Result<AuxiliaryGraph> {
    sd.validate(g)?;
    let base = torso(g, &sd.to_tree_decomposition(), 0)?;
    let mut next = base.graph.n();
    let mut edges: Vec<(usize, usize)> = base.graph.edges().collect();
    let mut pendants = Vec::new();
    let mut leaves = Vec::new();
    for bag in &sd.leaf_bags {
        let adhesion = bag.intersection(&sd.centre_bag);
        let residual = bag.difference(&sd.centre_bag);
        let mut mine = Vec::new();
        for v in &residual {
            for x in &adhesion {
                let local_x = base
                    .to_original
                    .binary_search(&x)
                    .expect("adhesion vertex is in the centre");
                edges.push((local_x, next));
                mine.push(pendants.len());
                pendants.push(Pendant { v, x, id: next });
                next += 1;
            }
        }
        leaves.push(Leaf {
            adhesion,
            residual,
            pendants: mine,
        });
    }
    let graph = Graph::from_edges(next, &edges)?;
    Ok(AuxiliaryGraph {
        base,
        graph,
        pendants,
        leaves,
    })
}

/// Decomposition of the auxiliary graph: the centre decomposition (one bag if
/// none is given) plus a bag `{x, v_x}` for each pendant, hung off the first
/// bag containing `x`.
fn auxiliary_decomposition(aux: &AuxiliaryGraph, centre_td: Option<&TreeDecomposition>) -> TreeDecomposition {
    let mut td = match centre_td {
        Some(td) => {
            let mut plain =
                TreeDecomposition::new(td.tree().parents().to_vec(), td.bags().to_vec()).expect("valid tree");
            for t in 0..plain.len() {
                plain.set_apex(t, VertexSet::new());
            }
            plain
        }
        None => TreeDecomposition::trivial(aux.base.graph.n()),
    };
    let centre_nodes = td.len();
    let mut home = vec![usize::MAX; aux.base.graph.n()];
    for t in (0..centre_nodes).rev() {
        for x in td.bag(t).clone().iter() {
            home[x] = t;
        }
    }
    for p in &aux.pendants {
        let x = aux.base_index(p.x).expect("adhesion vertex is in the centre");
        td.push_leaf(home[x], VertexSet::from([x, p.id]));
    }
    td
}

#[derive(Debug, Clone)]
pub struct LiftOutput {
    /// `X'`, in the labels of `g`.
    pub removed: VertexSet,
    /// Ordered path-partition of `g - X'`.
    pub parts: Vec<VertexSet>,
    /// Size of the oracle's central part together with the apices.
    pub oracle_central: usize,
    pub oracle_width: usize,
    pub auxiliary_n: usize,
}

/// Builds the auxiliary graph, runs the oracle on it minus `apex`, squares the
/// resulting path-partition and pulls it back to `g`.
///
/// `centre_td`, if given, decomposes the centre torso in its own labels. Leaf
/// residuals must have at most `w` vertices.
pub fn lift_star_decomposition(
    g: &Graph,
    sd: &StarDecomposition,
    apex: &VertexSet,
    centre_td: Option<&TreeDecomposition>,
    oracle: &dyn FlexOracle,
    d: &Rational,
    w: &Rational,
) -> Result<LiftOutput> {
    const STEP: &str = "lift_star_decomposition";
    let aux = build_auxiliary(g, sd)?;
    for leaf in &aux.leaves {
        if int(leaf.residual.len()) > *w {
            return Err(Error::bound(BoundKind::LeafResidual, int(leaf.residual.len()), *w).within(STEP));
        }
    }
    if !apex.is_subset(&sd.centre_bag) {
        return Err(Error::InvalidArgument(
            "apex vertices must lie in the centre bag".into(),
        ));
    }
    if let Some(td) = centre_td {
        validate(&aux.base.graph, td)?;
    }
    let base_n = aux.base.graph.n();
    let apex_local = aux.base.localize(apex);

    let td = auxiliary_decomposition(&aux, centre_td);
    let reduced = aux.graph.without(&apex_local);
    let reduced_td = td.restrict(&reduced);
    let result = oracle.partition(&reduced.graph, Some(&reduced_td), d).within(STEP)?;
    let oracle_width = result.report.path_width;

    let x_aux = apex_local.union(&reduced.lift(&result.fan_partition.central));
    let rest = aux.graph.without(&x_aux);
    let parts: Vec<VertexSet> = result
        .fan_partition
        .path_parts
        .iter()
        .map(|p| rest.localize(&reduced.lift(p)))
        .collect();
    let squared = power_path_partition(&rest.graph, &parts, 2).within(STEP)?;
    let squared: Vec<VertexSet> = squared.iter().map(|p| rest.lift(p)).collect();

    let mut part_of = vec![usize::MAX; aux.graph.n()];
    for (i, p) in squared.iter().enumerate() {
        for v in p {
            part_of[v] = i;
        }
    }
    let in_x = aux.graph.mask(&x_aux);

    let mut removed: VertexSet = x_aux
        .iter()
        .filter(|&i| i < base_n)
        .map(|i| aux.base.to_original[i])
        .collect();
    for p in &aux.pendants {
        if in_x[p.id] {
            removed.insert(p.v);
        }
    }

    let mut pulled: Vec<VertexSet> = squared
        .iter()
        .map(|p| {
            p.iter()
                .filter(|&i| i < base_n)
                .map(|i| aux.base.to_original[i])
                .collect()
        })
        .collect();
    let mut trailing = Vec::new();
    for leaf in &aux.leaves {
        let open: Option<usize> = leaf
            .adhesion
            .iter()
            .find(|&x| !in_x[aux.base_index(x).expect("centre vertex")]);
        match open {
            None => {
                let part = leaf.residual.difference(&removed);
                if !part.is_empty() {
                    trailing.push(part);
                }
            }
            Some(x_s) => {
                for v in leaf.residual.iter().filter(|&v| !removed.contains(v)) {
                    let a_v = leaf
                        .pendants
                        .iter()
                        .map(|&i| aux.pendants[i])
                        .find(|p| p.v == v && p.x == x_s)
                        .expect("pendant for (v, x_s)")
                        .id;
                    debug_assert!(!in_x[a_v]);
                    pulled[part_of[a_v]].insert(v);
                }
            }
        }
    }
    let mut out_parts: Vec<VertexSet> = pulled.into_iter().filter(|p| !p.is_empty()).collect();
    out_parts.extend(trailing);

    assert!(removed.len() <= x_aux.len(), "pull-back enlarged the central part");
    let violation = path_violation(g, &removed, &out_parts).expect("pull-back is a partition of g - X'");
    assert!(
        violation.is_none(),
        "pull-back breaks the path property at {violation:?}"
    );
    let limit = int(2 * oracle_width).max(*w);
    assert!(int(parts_width(&out_parts)) <= limit, "pull-back is wider than {limit}");

    Ok(LiftOutput {
        removed,
        parts: out_parts,
        oracle_central: x_aux.len(),
        oracle_width,
        auxiliary_n: aux.graph.n(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_complete;
    use crate::oracle::{ExactOracle, SeparatorOracle};

    fn star(centre: &[usize], leaves: &[&[usize]]) -> StarDecomposition {
        StarDecomposition {
            centre_bag: centre.iter().copied().collect(),
            leaf_bags: leaves.iter().map(|b| b.iter().copied().collect()).collect(),
        }
    }

    #[test]
    fn no_leaves_means_no_pendants() {
        let g = make_complete(3).unwrap();
        let aux = build_auxiliary(&g, &star(&[0, 1, 2], &[])).unwrap();
        assert!(aux.pendants.is_empty());
        assert_eq!(aux.graph, g);
    }

    #[test]
    fn one_residual_vertex_gets_a_pendant_per_adhesion_vertex() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 3), (1, 3), (2, 3)]).unwrap();
        let aux = build_auxiliary(&g, &star(&[0, 1, 2], &[&[0, 1, 2, 3]])).unwrap();
        // torso completes {0, 1, 2}
        assert_eq!(aux.base.graph, make_complete(3).unwrap());
        let xs: Vec<usize> = aux.pendants.iter().map(|p| p.x).collect();
        assert_eq!(xs, vec![0, 1, 2]);
        assert!(aux
            .pendants
            .iter()
            .all(|p| p.v == 3 && p.id >= 3 && aux.graph.degree(p.id) == 1));
        assert_eq!(aux.members(0, 3).collect::<Vec<_>>(), vec![3, 4, 5]);
    }

    #[test]
    fn leaf_without_adhesion_has_no_pendants() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let aux = build_auxiliary(&g, &star(&[0, 1], &[&[2]])).unwrap();
        assert!(aux.pendants.is_empty());
        let out = lift_star_decomposition(
            &g,
            &star(&[0, 1], &[&[2]]),
            &VertexSet::new(),
            None,
            &ExactOracle::new(),
            &int(1),
            &int(1),
        )
        .unwrap();
        assert_eq!(out.parts.last(), Some(&VertexSet::from([2])));
    }

    #[test]
    fn centre_only_reduces_to_the_oracle() {
        let g = make_complete(4).unwrap();
        let sd = star(&[0, 1, 2, 3], &[]);
        let out =
            lift_star_decomposition(&g, &sd, &VertexSet::new(), None, &ExactOracle::new(), &int(1), &int(1)).unwrap();
        assert_eq!(out.removed.len(), out.oracle_central);
        assert!(path_violation(&g, &out.removed, &out.parts).unwrap().is_none());
    }

    #[test]
    fn triangle_with_a_leaf() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        let sd = star(&[0, 1, 2], &[&[2, 3]]);
        for d in [int(1), int(2), Rational::new(5, 2)] {
            let out =
                lift_star_decomposition(&g, &sd, &VertexSet::new(), None, &ExactOracle::new(), &d, &int(1)).unwrap();
            assert!(out.removed.len() <= out.oracle_central);
            assert!(path_violation(&g, &out.removed, &out.parts).unwrap().is_none());
        }
    }

    #[test]
    fn complete_graph_with_one_leaf() {
        let g = make_complete(4).unwrap();
        assert!(star(&[0, 1, 2], &[&[2, 3]]).validate(&g).is_err());
        let sd = star(&[0, 1, 2], &[&[0, 1, 2, 3]]);
        for d in [int(1), int(2), Rational::new(5, 2)] {
            let out =
                lift_star_decomposition(&g, &sd, &VertexSet::new(), None, &ExactOracle::new(), &d, &int(1)).unwrap();
            assert!(out.removed.len() <= out.oracle_central);
            assert!(path_violation(&g, &out.removed, &out.parts).unwrap().is_none());
        }
    }

    #[test]
    fn leaf_behind_the_central_part_becomes_isolated() {
        // centre {0, 1} is an apex set, so the leaf's adhesion {0} lies in X
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (2, 3)]).unwrap();
        let sd = star(&[0, 1], &[&[0, 2, 3]]);
        let out = lift_star_decomposition(
            &g,
            &sd,
            &VertexSet::from([0]),
            None,
            &SeparatorOracle::new(1),
            &int(1),
            &int(2),
        )
        .unwrap();
        assert!(out.removed.contains(0));
        assert!(out.parts.contains(&VertexSet::from([2, 3])));
        assert!(path_violation(&g, &out.removed, &out.parts).unwrap().is_none());
    }

    #[test]
    fn residual_bound_is_enforced() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let sd = star(&[0], &[&[0, 1, 2, 3]]);
        let err = lift_star_decomposition(&g, &sd, &VertexSet::new(), None, &ExactOracle::new(), &int(1), &int(2))
            .unwrap_err();
        assert!(matches!(
            err,
            Error::BoundExceeded {
                kind: BoundKind::LeafResidual,
                ..
            }
        ));
    }
}
