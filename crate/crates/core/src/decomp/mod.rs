//! Tree-, path- and star-decompositions.

mod split;
mod width;

pub use split::{split_to_stars, Chunk};
pub use width::{exact_pathwidth, exact_treewidth, heuristic_treedecomp, PATHWIDTH_LIMIT, TREEWIDTH_LIMIT};

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, InducedSubgraph, VertexSet};
use crate::rational::Rational;

/// A tree given by parent pointers with exactly one root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    parent: Vec<Option<usize>>,
    root: usize,
    children: Vec<Vec<usize>>,
}

impl RootedTree {
    pub fn new(parent: Vec<Option<usize>>) -> Result<Self> {
        let n = parent.len();
        let bad = |msg: String| Err(Error::InvalidDecomposition(msg));
        if n == 0 {
            return bad("tree has no nodes".into());
        }
        let roots: Vec<usize> = (0..n).filter(|&t| parent[t].is_none()).collect();
        if roots.len() != 1 {
            return bad(format!("tree must have exactly one root, found {}", roots.len()));
        }
        let mut children = vec![Vec::new(); n];
        for (t, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if p >= n || p == t {
                    return bad(format!("node {t} has invalid parent {p}"));
                }
                children[p].push(t);
            }
        }
        let tree = RootedTree {
            parent,
            root: roots[0],
            children,
        };
        if tree.preorder().len() != n {
            return bad("parent pointers contain a cycle".into());
        }
        Ok(tree)
    }

    /// Path on `n` nodes rooted at node 0.
    pub fn path(n: usize) -> Result<Self> {
        RootedTree::new((0..n).map(|i| i.checked_sub(1)).collect())
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, t: usize) -> Option<usize> {
        self.parent[t]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn children(&self, t: usize) -> &[usize] {
        &self.children[t]
    }

    /// Tree edges as `(parent, child)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parent.iter().enumerate().filter_map(|(t, p)| p.map(|p| (p, t)))
    }

    /// Root first; children in increasing index order.
    pub fn preorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut stack = vec![self.root];
        while let Some(t) = stack.pop() {
            if out.len() > self.len() {
                break;
            }
            out.push(t);
            stack.extend(self.children[t].iter().rev());
        }
        out
    }

    pub fn depths(&self) -> Vec<usize> {
        let mut depth = vec![0; self.len()];
        for t in self.preorder() {
            if let Some(p) = self.parent[t] {
                depth[t] = depth[p] + 1;
            }
        }
        depth
    }

    pub fn neighbors(&self, t: usize) -> impl Iterator<Item = usize> + '_ {
        self.parent[t].into_iter().chain(self.children[t].iter().copied())
    }
}

/// Rooted tree-decomposition with optional per-node apex annotations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    tree: RootedTree,
    bags: Vec<VertexSet>,
    apex: Vec<VertexSet>,
}

impl TreeDecomposition {
    pub fn new(parent: Vec<Option<usize>>, bags: Vec<VertexSet>) -> Result<Self> {
        let n = bags.len();
        TreeDecomposition::with_apex(parent, bags, vec![VertexSet::new(); n])
    }

    pub fn with_apex(parent: Vec<Option<usize>>, bags: Vec<VertexSet>, apex: Vec<VertexSet>) -> Result<Self> {
        if parent.len() != bags.len() || apex.len() != bags.len() {
            return Err(Error::InvalidDecomposition(format!(
                "{} parents, {} bags and {} apex sets",
                parent.len(),
                bags.len(),
                apex.len()
            )));
        }
        Ok(TreeDecomposition {
            tree: RootedTree::new(parent)?,
            bags,
            apex,
        })
    }

    /// The one-bag decomposition.
    pub fn trivial(n: usize) -> Self {
        TreeDecomposition::new(vec![None], vec![VertexSet::range(n)]).expect("single node tree")
    }

    pub fn tree(&self) -> &RootedTree {
        &self.tree
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    pub fn root(&self) -> usize {
        self.tree.root
    }

    pub fn bag(&self, t: usize) -> &VertexSet {
        &self.bags[t]
    }

    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }

    pub fn apex(&self, t: usize) -> &VertexSet {
        &self.apex[t]
    }

    pub fn apexes(&self) -> &[VertexSet] {
        &self.apex
    }

    pub fn set_apex(&mut self, t: usize, apex: VertexSet) {
        self.apex[t] = apex;
    }

    /// Largest bag size minus one (zero when every bag is empty).
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(VertexSet::len)
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    pub fn adhesion(&self) -> usize {
        self.tree
            .edges()
            .map(|(p, t)| self.bags[p].intersection(&self.bags[t]).len())
            .max()
            .unwrap_or(0)
    }

    /// `K_t = B_t ∩ B_parent(t)`, empty at the root.
    pub fn adhesion_set(&self, t: usize) -> VertexSet {
        match self.tree.parent(t) {
            Some(p) => self.bags[t].intersection(&self.bags[p]),
            None => VertexSet::new(),
        }
    }

    pub fn max_apex(&self) -> usize {
        self.apex.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// Adds a new leaf hanging off `parent`; returns its index.
    pub fn push_leaf(&mut self, parent: usize, bag: VertexSet) -> usize {
        let t = self.bags.len();
        self.tree.parent.push(Some(parent));
        self.tree.children.push(Vec::new());
        self.tree.children[parent].push(t);
        self.bags.push(bag);
        self.apex.push(VertexSet::new());
        t
    }

    /// For each vertex of `0..n`, the nodes whose bags contain it.
    pub fn occurrences(&self, n: usize) -> Vec<Vec<usize>> {
        let mut occ = vec![Vec::new(); n];
        for (t, bag) in self.bags.iter().enumerate() {
            for v in bag {
                if v < n {
                    occ[v].push(t);
                }
            }
        }
        occ
    }

    /// Restriction to the vertices kept by `sub`, in its local labels.
    pub fn restrict(&self, sub: &InducedSubgraph) -> TreeDecomposition {
        let bags = self.bags.iter().map(|b| sub.localize(b)).collect();
        let apex = self.apex.iter().map(|b| sub.localize(b)).collect();
        TreeDecomposition {
            tree: self.tree.clone(),
            bags,
            apex,
        }
    }
}

/// Why a decomposition fails to decompose a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    VertexOutOfRange { node: usize, vertex: usize },
    VertexMissing(usize),
    TraceDisconnected(usize),
    EdgeUncovered(usize, usize),
    ApexOutsideBag { node: usize, vertex: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexOutOfRange { node, vertex } => write!(f, "bag {node} holds out-of-range vertex {vertex}"),
            Violation::VertexMissing(v) => write!(f, "vertex {v} is in no bag"),
            Violation::TraceDisconnected(v) => write!(f, "bags containing vertex {v} do not form a subtree"),
            Violation::EdgeUncovered(u, v) => write!(f, "edge {{{u},{v}}} is in no bag"),
            Violation::ApexOutsideBag { node, vertex } => {
                write!(f, "apex vertex {vertex} of node {node} is not in its bag")
            }
        }
    }
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Self {
        Error::InvalidDecomposition(v.to_string())
    }
}

/// Checks both decomposition conditions and apex containment, reporting the first failure.
pub fn validate(g: &Graph, td: &TreeDecomposition) -> std::result::Result<(), Violation> {
    let n = g.n();
    for (t, bag) in td.bags.iter().enumerate() {
        if let Some(v) = bag.iter().find(|&v| v >= n) {
            return Err(Violation::VertexOutOfRange { node: t, vertex: v });
        }
    }
    let occ = td.occurrences(n);
    for (v, nodes) in occ.iter().enumerate() {
        if nodes.is_empty() {
            return Err(Violation::VertexMissing(v));
        }
        // a set of k tree nodes is connected iff it spans k - 1 tree edges
        let inner_edges = nodes
            .iter()
            .filter(|&&t| td.tree.parent(t).is_some_and(|p| td.bags[p].contains(v)))
            .count();
        if inner_edges + 1 != nodes.len() {
            return Err(Violation::TraceDisconnected(v));
        }
    }
    for (u, v) in g.edges() {
        let (short, other) = if occ[u].len() <= occ[v].len() { (u, v) } else { (v, u) };
        if !occ[short].iter().any(|&t| td.bags[t].contains(other)) {
            return Err(Violation::EdgeUncovered(u, v));
        }
    }
    for (t, apex) in td.apex.iter().enumerate() {
        if let Some(v) = apex.iter().find(|&v| !td.bags[t].contains(v)) {
            return Err(Violation::ApexOutsideBag { node: t, vertex: v });
        }
    }
    Ok(())
}

/// Torso at node `t`: `G[B_t]` plus a clique on `B_t ∩ B_t'` for every tree neighbour `t'`,
/// relabelled by the sorted order of `B_t`.
pub fn torso(g: &Graph, td: &TreeDecomposition, t: usize) -> Result<InducedSubgraph> {
    if t >= td.len() {
        return Err(Error::InvalidArgument(format!(
            "no node {t} in a decomposition of {} nodes",
            td.len()
        )));
    }
    let bag = td.bag(t);
    let base = g.induced(bag);
    let mut extra = Vec::new();
    for s in td.tree.neighbors(t) {
        let shared = base.localize(&bag.intersection(td.bag(s)));
        let shared = shared.as_slice();
        for (i, &a) in shared.iter().enumerate() {
            for &b in &shared[i + 1..] {
                extra.push((a, b));
            }
        }
    }
    Ok(InducedSubgraph {
        graph: base.graph.with_edges(extra)?,
        to_original: base.to_original,
    })
}

/// Decomposition over a star: one centre bag and any number of leaf bags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarDecomposition {
    pub centre_bag: VertexSet,
    pub leaf_bags: Vec<VertexSet>,
}

impl StarDecomposition {
    /// Centre at node 0, leaf `i` at node `i + 1`.
    pub fn to_tree_decomposition(&self) -> TreeDecomposition {
        let mut parent = vec![None];
        parent.extend((0..self.leaf_bags.len()).map(|_| Some(0)));
        let mut bags = vec![self.centre_bag.clone()];
        bags.extend(self.leaf_bags.iter().cloned());
        TreeDecomposition::new(parent, bags).expect("star shape")
    }

    pub fn adhesion(&self) -> usize {
        self.leaf_bags
            .iter()
            .map(|b| b.intersection(&self.centre_bag).len())
            .max()
            .unwrap_or(0)
    }

    pub fn validate(&self, g: &Graph) -> std::result::Result<(), Violation> {
        validate(g, &self.to_tree_decomposition())
    }
}

/// Tree with non-negative rational node weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedTree {
    pub tree: RootedTree,
    pub weight: Vec<Rational>,
}

impl WeightedTree {
    pub fn new(tree: RootedTree, weight: Vec<Rational>) -> Result<Self> {
        if weight.len() != tree.len() {
            return Err(Error::InvalidArgument(format!(
                "{} weights for {} nodes",
                weight.len(),
                tree.len()
            )));
        }
        if let Some(t) = weight.iter().position(|w| *w < Rational::from_integer(0)) {
            return Err(Error::InvalidArgument(format!("node {t} has negative weight")));
        }
        Ok(WeightedTree { tree, weight })
    }

    pub fn total(&self) -> Rational {
        self.weight.iter().sum()
    }
}
