use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, VertexSet};
use crate::decomp::TreeDecomposition;
use crate::error::{Error, Result};

fn positive(name: &str, value: usize) -> Result<()> {
    if value == 0 {
        Err(Error::InvalidArgument(format!("{name} must be at least 1")))
    } else {
        Ok(())
    }
}

/// Fan on `m` vertices: centre 0 joined to every vertex of the path `1 - 2 - ... - (m-1)`.
pub fn make_fan(m: usize) -> Result<Graph> {
    positive("fan size", m)?;
    let mut edges: Vec<(usize, usize)> = (1..m).map(|v| (0, v)).collect();
    edges.extend((1..m.saturating_sub(1)).map(|v| (v, v + 1)));
    Graph::from_edges(m, &edges)
}

pub fn make_path(m: usize) -> Result<Graph> {
    positive("path size", m)?;
    let edges: Vec<_> = (1..m).map(|v| (v - 1, v)).collect();
    Graph::from_edges(m, &edges)
}

/// Star with centre 0 and `m - 1` leaves.
pub fn make_star(m: usize) -> Result<Graph> {
    positive("star size", m)?;
    let edges: Vec<_> = (1..m).map(|v| (0, v)).collect();
    Graph::from_edges(m, &edges)
}

/// `rows x cols` grid, vertex `(i, j)` at index `i * cols + j`.
pub fn make_grid(rows: usize, cols: usize) -> Result<Graph> {
    positive("rows", rows)?;
    positive("cols", cols)?;
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            let v = i * cols + j;
            if j + 1 < cols {
                edges.push((v, v + 1));
            }
            if i + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    Graph::from_edges(rows * cols, &edges)
}

pub fn make_complete(m: usize) -> Result<Graph> {
    positive("clique size", m)?;
    let edges: Vec<_> = (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))).collect();
    Graph::from_edges(m, &edges)
}

/// Path-decomposition of [`make_grid`] sweeping along the longer side,
/// width `min(rows, cols)`.
pub fn grid_path_decomposition(rows: usize, cols: usize) -> Result<TreeDecomposition> {
    positive("rows", rows)?;
    positive("cols", cols)?;
    let n = rows * cols;
    // Order vertices so that consecutive "lines" have length `short`.
    let (short, order): (usize, Vec<usize>) = if cols <= rows {
        (cols, (0..n).collect())
    } else {
        (
            rows,
            (0..cols).flat_map(|j| (0..rows).map(move |i| i * cols + j)).collect(),
        )
    };
    if n <= short + 1 {
        return TreeDecomposition::new(vec![None], vec![VertexSet::range(n)]);
    }
    let windows = n - short;
    let bags: Vec<VertexSet> = (0..windows)
        .map(|s| order[s..=s + short].iter().copied().collect())
        .collect();
    let parent = (0..windows).map(|i| i.checked_sub(1)).collect();
    TreeDecomposition::new(parent, bags)
}

/// A random k-tree together with the decomposition its construction induces.
#[derive(Debug, Clone)]
pub struct KTree {
    pub graph: Graph,
    pub decomposition: TreeDecomposition,
}

/// Random `k`-tree on `m` vertices: start from the clique `{0..k}` and add each
/// further vertex adjacent to a k-clique picked from a random existing bag.
pub fn make_ktree(m: usize, k: usize, seed: u64) -> Result<KTree> {
    positive("k-tree size", m)?;
    if k >= m {
        return Err(Error::InvalidArgument(format!("k-tree needs k < m (k = {k}, m = {m})")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = (0..=k).flat_map(|u| (u + 1..=k).map(move |v| (u, v))).collect();
    let mut bags: Vec<Vec<usize>> = vec![(0..=k).collect()];
    let mut parent: Vec<Option<usize>> = vec![None];
    for v in k + 1..m {
        let host = rng.gen_range(0..bags.len());
        let mut clique = bags[host].clone();
        if !clique.is_empty() {
            let drop = rng.gen_range(0..clique.len());
            clique.remove(drop);
        }
        edges.extend(clique.iter().map(|&u| (u, v)));
        clique.push(v);
        bags.push(clique);
        parent.push(Some(host));
    }
    let graph = Graph::from_edges(m, &edges)?;
    let bags = bags.into_iter().map(|b| b.into_iter().collect()).collect();
    let decomposition = TreeDecomposition::new(parent, bags)?;
    Ok(KTree { graph, decomposition })
}
