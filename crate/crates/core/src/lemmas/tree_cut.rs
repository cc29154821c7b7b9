use crate::decomp::WeightedTree;
use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::rational::{int, Rational};

/// Greedy deletion set: visiting nodes deepest first, a node whose residual
/// subtree weight (its own weight plus the residuals of children not yet
/// deleted) exceeds `budget/(q + 1)` is deleted.
///
/// Every deletion accounts for more than `budget/(q + 1)` of disjoint weight, so
/// at most `q` nodes are deleted, and each component of `T - Z` weighs the
/// residual of its top node.
pub fn tree_deletion_set(wt: &WeightedTree, q: usize, budget: Option<Rational>) -> Result<VertexSet> {
    let total = wt.total();
    let budget = budget.unwrap_or(total);
    if total > budget {
        return Err(Error::InvalidArgument(format!(
            "total weight {total} exceeds the budget {budget}"
        )));
    }
    let limit = budget / int(q + 1);
    let tree = &wt.tree;
    let mut residual = wt.weight.clone();
    let mut cut = Vec::new();
    for t in tree.preorder().into_iter().rev() {
        let r = wt.weight[t] + tree.children(t).iter().map(|&c| residual[c]).sum::<Rational>();
        if r > limit {
            cut.push(t);
            residual[t] = int(0);
        } else {
            residual[t] = r;
        }
    }
    let z: VertexSet = cut.into_iter().collect();
    assert!(z.len() <= q, "greedy deletion used {} > {q} nodes", z.len());
    debug_assert!(tree_components(wt, &z).iter().all(|(_, w)| *w <= limit));
    Ok(z)
}

/// Components of `T - Z` with their weights, listed by lowest node.
pub fn tree_components(wt: &WeightedTree, z: &VertexSet) -> Vec<(VertexSet, Rational)> {
    let tree = &wt.tree;
    let n = tree.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] || z.contains(s) {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut comp = Vec::new();
        while let Some(t) = stack.pop() {
            comp.push(t);
            for u in tree.neighbors(t) {
                if !seen[u] && !z.contains(u) {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        let weight = comp.iter().map(|&t| wt.weight[t]).sum();
        out.push((comp.into_iter().collect(), weight));
    }
    out
}
