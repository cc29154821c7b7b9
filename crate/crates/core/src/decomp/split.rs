use super::{validate, StarDecomposition, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, InducedSubgraph, VertexSet};

/// One piece of a split decomposition: the subgraph owned by cut node `z`
/// with the adhesion vertices removed, plus its star-decomposition, both in
/// local labels.
#[derive(Debug, Clone)]
pub struct Chunk {
    pub z: usize,
    pub sub: InducedSubgraph,
    pub star: StarDecomposition,
    /// Apex annotation of `z` restricted to the centre bag.
    pub apex: VertexSet,
}

#[derive(Debug, Clone)]
pub struct Split {
    /// Union of `K_z` over the cut nodes other than the root.
    pub removed: VertexSet,
    /// Ordered by cut node index.
    pub chunks: Vec<Chunk>,
}

/// Cuts the tree above every node of `cut` except the root and turns each
/// resulting subtree into a star-decomposition of the vertices it owns.
///
/// A vertex is owned by the subtree containing the highest bag it appears in.
pub fn split_to_stars(g: &Graph, td: &TreeDecomposition, cut: &VertexSet) -> Result<Split> {
    validate(g, td)?;
    let tree = td.tree();
    let root = tree.root();
    if !cut.contains(root) {
        return Err(Error::InvalidArgument(format!("cut set must contain the root {root}")));
    }
    if let Some(t) = cut.iter().find(|&t| t >= td.len()) {
        return Err(Error::InvalidArgument(format!("cut node {t} is not a tree node")));
    }

    let adhesion: Vec<VertexSet> = (0..td.len()).map(|t| td.adhesion_set(t)).collect();
    let removed: VertexSet = cut
        .iter()
        .filter(|&z| z != root)
        .flat_map(|z| adhesion[z].iter())
        .collect();

    // owner[t] = the cut node heading t's component of the forest
    let mut owner = vec![usize::MAX; td.len()];
    for t in tree.preorder() {
        owner[t] = if cut.contains(t) {
            t
        } else {
            owner[tree.parent(t).expect("non-root")]
        };
    }

    // Each vertex lies in B_t \ K_t for exactly one node t, its highest bag.
    let mut vertex_owner = vec![usize::MAX; g.n()];
    for t in 0..td.len() {
        for v in td.bag(t).difference(&adhesion[t]).iter() {
            vertex_owner[v] = owner[t];
        }
    }

    let mut chunks = Vec::new();
    for z in cut.iter() {
        let members: VertexSet = g
            .vertices()
            .filter(|&v| vertex_owner[v] == z && !removed.contains(v))
            .collect();
        let sub = g.induced(&members);
        let keep = |set: &VertexSet| sub.localize(&set.difference(&adhesion[z]).difference(&removed));
        let centre_bag = keep(td.bag(z));
        let mut leaf_bags = Vec::new();
        for &c in tree.children(z) {
            if owner[c] != z {
                continue;
            }
            let mut union = VertexSet::new();
            let mut stack = vec![c];
            while let Some(t) = stack.pop() {
                union = union.union(td.bag(t));
                stack.extend(tree.children(t).iter().copied().filter(|&s| owner[s] == z));
            }
            leaf_bags.push(keep(&union));
        }
        let apex = sub.localize(&td.apex(z).intersection(td.bag(z)));
        let apex = apex.intersection(&centre_bag);
        let star = StarDecomposition { centre_bag, leaf_bags };
        debug_assert!(
            star.validate(&sub.graph).is_ok(),
            "chunk star at node {z} does not validate"
        );
        chunks.push(Chunk { z, sub, star, apex });
    }
    Ok(Split { removed, chunks })
}
