//! Isomorphism-class enumeration for exhaustive checks on tiny graphs.

use std::collections::BTreeSet;

use super::Graph;

fn pair_index(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Smallest edge bitmask over all relabellings; equal iff isomorphic. Only for n <= 8.
pub fn canonical_form(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 8, "canonical_form is exhaustive and limited to 8 vertices");
    let pairs = pair_index(n);
    let slot = |u: usize, v: usize| {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        pairs.iter().position(|&p| p == (a, b)).expect("pair")
    };
    permutations(n)
        .iter()
        .map(|perm| g.edges().fold(0u64, |m, (u, v)| m | 1 << slot(perm[u], perm[v])))
        .min()
        .unwrap_or(0)
}

/// One representative per isomorphism class of graphs on `n <= 6` vertices.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 6, "exhaustive enumeration is limited to 6 vertices");
    let pairs = pair_index(n);
    let perms = permutations(n);
    // For each permutation, where each pair slot goes.
    let slot_of = |u: usize, v: usize| {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        pairs.iter().position(|&p| p == (a, b)).expect("pair")
    };
    let moves: Vec<Vec<usize>> = perms
        .iter()
        .map(|perm| pairs.iter().map(|&(u, v)| slot_of(perm[u], perm[v])).collect())
        .collect();
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let canon = moves
            .iter()
            .map(|mv| {
                let mut out = 0u64;
                let mut bits = mask;
                while bits != 0 {
                    let i = bits.trailing_zeros() as usize;
                    out |= 1 << mv[i];
                    bits &= bits - 1;
                }
                out
            })
            .min()
            .unwrap_or(0);
        if seen.insert(canon) {
            let edges: Vec<(usize, usize)> = (0..pairs.len())
                .filter(|&i| canon >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            reps.push(Graph::from_edges(n, &edges).expect("pairs are simple edges"));
        }
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_known_sequence() {
        // OEIS A000088
        let counts: Vec<usize> = (0..=5).map(|n| nonisomorphic_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34]);
    }

    #[test]
    fn canonical_form_identifies_relabellings() {
        let a = Graph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(4, &[(3, 2), (3, 0)]).unwrap();
        let c = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_ne!(canonical_form(&a), canonical_form(&c));
    }
}
