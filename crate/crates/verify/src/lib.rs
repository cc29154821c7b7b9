//! Seeded fixture generators shared by the acceptance suite.

use fanpart::decomp::{RootedTree, StarDecomposition, TreeDecomposition, WeightedTree};
use fanpart::embedding::ProductEmbedding;
use fanpart::graph::{make_ktree, Graph, VertexSet};
use fanpart::rational::Rational;
use rand::seq::SliceRandom;
use rand::Rng;

/// A random `k`-tree on `n - a` vertices plus `a` apex vertices `n - a..n`,
/// each joined to a random third of the others. Apices go into every bag and
/// are annotated as apex sets.
pub fn apex_ktree(n: usize, k: usize, a: usize, seed: u64) -> (Graph, TreeDecomposition) {
    let base = make_ktree(n - a, k, seed).expect("valid k-tree parameters");
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0xa9e5);
    let mut edges: Vec<(usize, usize)> = base.graph.edges().collect();
    let apices: VertexSet = (n - a..n).collect();
    for x in apices.iter() {
        for v in 0..x {
            if rng.gen_bool(1.0 / 3.0) {
                edges.push((v, x));
            }
        }
    }
    let td = &base.decomposition;
    let bags: Vec<VertexSet> = td.bags().iter().map(|b| b.union(&apices)).collect();
    let apex = vec![apices.clone(); bags.len()];
    let td = TreeDecomposition::with_apex(td.tree().parents().to_vec(), bags, apex).expect("same tree");
    (Graph::from_edges(n, &edges).expect("simple edges"), td)
}

use rand::SeedableRng;

/// A graph with a known path-partition: `parts` consecutive parts of sizes in
/// `1..=w`, and edges only inside or between consecutive parts.
pub fn path_partitioned_graph(rng: &mut impl Rng, n_max: usize, w: usize) -> (Graph, Vec<VertexSet>) {
    let n = rng.gen_range(1..=n_max);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut parts = Vec::new();
    let mut i = 0;
    while i < n {
        let size = rng.gen_range(1..=w).min(n - i);
        parts.push(order[i..i + size].iter().copied().collect::<VertexSet>());
        i += size;
    }
    let density = rng.gen_range(0.1..0.9);
    let mut edges = Vec::new();
    for (j, part) in parts.iter().enumerate() {
        let near: Vec<usize> = part
            .iter()
            .chain(parts.get(j + 1).into_iter().flat_map(|p| p.iter()))
            .collect();
        for u in part.iter() {
            for &v in &near {
                if u < v && rng.gen_bool(density) {
                    edges.push((u, v));
                }
            }
        }
    }
    (Graph::from_edges(n, &edges).expect("simple edges"), parts)
}

/// Random recursive tree with weights `p/q`, `p < 4q`, `q <= 6`.
pub fn weighted_tree(rng: &mut impl Rng, n_max: usize) -> WeightedTree {
    let n = rng.gen_range(1..=n_max);
    let parent = (0..n)
        .map(|t| if t == 0 { None } else { Some(rng.gen_range(0..t)) })
        .collect();
    let weight = (0..n)
        .map(|_| {
            let q = rng.gen_range(1..=6);
            Rational::new(rng.gen_range(0..4 * q), q)
        })
        .collect();
    WeightedTree::new(RootedTree::new(parent).expect("recursive tree"), weight).expect("non-negative weights")
}

/// A graph `G`, a certificate of `G - Z` in `H ⊠ P` with `H` a small `b`-tree, and
/// the pendant edges of `Z`. Base vertices come first, so `G - Z` keeps its labels.
pub struct PendantInstance {
    pub g: Graph,
    pub base: ProductEmbedding,
    pub pendant_edges: Vec<(usize, usize)>,
    pub b: usize,
}

pub fn pendant_instance(rng: &mut impl Rng) -> PendantInstance {
    let b = rng.gen_range(1..=2);
    let host_n = rng.gen_range(b + 1..=6);
    let host = make_ktree(host_n, b, rng.gen()).expect("valid k-tree");
    let path_len = rng.gen_range(1..=4);
    let mut cells: Vec<(usize, usize)> = (0..host_n).flat_map(|h| (0..path_len).map(move |p| (h, p))).collect();
    cells.shuffle(rng);
    let base_n = rng.gen_range(1..=cells.len().min(10));
    let coords: Vec<(usize, usize)> = cells[..base_n].to_vec();
    let mut edges = Vec::new();
    for u in 0..base_n {
        for v in u + 1..base_n {
            let ((hu, pu), (hv, pv)) = (coords[u], coords[v]);
            let adjacent = (hu == hv || host.graph.has_edge(hu, hv)) && pu.abs_diff(pv) <= 1;
            if adjacent && rng.gen_bool(0.6) {
                edges.push((u, v));
            }
        }
    }
    let pendants = rng.gen_range(0..=20);
    let mut pendant_edges = Vec::new();
    for i in 0..pendants {
        let z = base_n + i;
        let anchor = rng.gen_range(0..base_n);
        edges.push((anchor, z));
        pendant_edges.push((z, anchor));
    }
    PendantInstance {
        g: Graph::from_edges(base_n + pendants, &edges).expect("simple edges"),
        base: ProductEmbedding {
            host_h: host.graph,
            host_td: host.decomposition,
            path_len,
            coords,
        },
        pendant_edges,
        b,
    }
}

/// A star-decomposition whose centre is a `k`-tree (so its torso is the
/// `k`-tree itself) and whose leaves attach up to `w` new vertices to a subset
/// of at most three vertices of some `k`-tree bag.
pub struct StarInstance {
    pub g: Graph,
    pub sd: StarDecomposition,
    pub centre_td: TreeDecomposition,
    pub centre_width: usize,
}

pub fn star_instance(rng: &mut impl Rng, w: usize) -> StarInstance {
    let k = rng.gen_range(1..=3);
    let centre_n = rng.gen_range(k + 1..=30);
    let centre = make_ktree(centre_n, k, rng.gen()).expect("valid k-tree");
    let mut edges: Vec<(usize, usize)> = centre.graph.edges().collect();
    let mut next = centre_n;
    let mut leaf_bags = Vec::new();
    for _ in 0..rng.gen_range(0..=12) {
        let bag = centre.decomposition.bag(rng.gen_range(0..centre.decomposition.len()));
        let mut members: Vec<usize> = bag.iter().collect();
        members.shuffle(rng);
        let adhesion: Vec<usize> = members[..rng.gen_range(0..=members.len().min(3))].to_vec();
        let residual: Vec<usize> = (next..next + rng.gen_range(1..=w)).collect();
        next += residual.len();
        let local: Vec<usize> = adhesion.iter().chain(&residual).copied().collect();
        for (i, &u) in local.iter().enumerate() {
            for &v in &local[i + 1..] {
                let both_centre = u < centre_n && v < centre_n;
                if !both_centre && rng.gen_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        leaf_bags.push(local.into_iter().collect());
    }
    StarInstance {
        g: Graph::from_edges(next, &edges).expect("simple edges"),
        sd: StarDecomposition {
            centre_bag: VertexSet::range(centre_n),
            leaf_bags,
        },
        centre_width: k,
        centre_td: centre.decomposition,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fanpart::decomp::validate;
    use fanpart::partition::check_path_partition;

    #[test]
    fn fixtures_are_valid() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for seed in 0..5 {
            let (g, td) = apex_ktree(30, 2, 1, seed);
            assert_eq!(validate(&g, &td), Ok(()));
            assert_eq!(td.adhesion(), 3);
            let (g, parts) = path_partitioned_graph(&mut rng, 30, 3);
            assert!(check_path_partition(&g, &parts).unwrap());
            let inst = pendant_instance(&mut rng);
            let z: VertexSet = inst.pendant_edges.iter().map(|&(z, _)| z).collect();
            inst.base.validate(&inst.g.without(&z).graph, Some(inst.b)).unwrap();
            let star = star_instance(&mut rng, 5);
            assert_eq!(star.sd.validate(&star.g), Ok(()));
            assert!(star.sd.adhesion() <= 3);
        }
    }
}
