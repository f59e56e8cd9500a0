use std::collections::VecDeque;

use crate::egraph::{ColorView, Edge};
use crate::error::BuildError;

/// A maximum matching of one color class, with the number of internal
/// (degree >= 2) vertices of that class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeMatching {
    /// Sorted lexicographically.
    pub edges: Vec<Edge>,
    pub internal_count: usize,
}

impl TreeMatching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Lower bound on the matching number of a tree with `internal` internal nodes.
pub fn matching_lower_bound(internal: usize) -> usize {
    (internal + 2) / 2
}

/// Maximum matching of a forest by leaf stripping: visit vertices deepest
/// first and match each unmatched vertex to its unmatched parent.
pub(crate) fn forest_max_matching(view: &ColorView<'_>) -> Vec<Edge> {
    let n = view.n();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for y in view.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
    }
    let mut matched = vec![false; n];
    let mut edges = Vec::new();
    for &x in order.iter().rev() {
        let p = parent[x];
        if p != usize::MAX && !matched[x] && !matched[p] {
            matched[x] = true;
            matched[p] = true;
            edges.push(Edge::new(x, p, view.color()));
        }
    }
    edges.sort_unstable();
    edges
}

/// Maximum matching of a spanning tree color class.
pub fn tree_max_matching(view: &ColorView<'_>) -> Result<TreeMatching, BuildError> {
    if !view.is_spanning_tree() || view.edge_count() == 0 {
        return Err(BuildError::Precondition(format!(
            "color {} is not a spanning tree with at least one edge",
            view.color() + 1
        )));
    }
    let edges = forest_max_matching(view);
    let internal_count = view.internal_nodes();
    debug_assert!(edges.len() >= matching_lower_bound(internal_count));
    Ok(TreeMatching { edges, internal_count })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::egraph::ColoredGraph;

    fn tree(n: usize, edges: &[(usize, usize)]) -> ColoredGraph {
        ColoredGraph::from_edges(n, 1, edges.iter().map(|&(u, v)| Edge::new(u, v, 0))).unwrap()
    }

    /// Largest set of pairwise disjoint edges, by trying every subset.
    fn brute_matching(edges: &[Edge]) -> usize {
        let mut best = 0;
        for mask in 0u32..(1 << edges.len()) {
            let chosen: Vec<&Edge> = (0..edges.len()).filter(|&i| mask >> i & 1 == 1).map(|i| &edges[i]).collect();
            let disjoint = chosen
                .iter()
                .enumerate()
                .all(|(i, a)| chosen[i + 1..].iter().all(|b| !a.shares_vertex(b)));
            if disjoint {
                best = best.max(chosen.len());
            }
        }
        best
    }

    #[test]
    fn star() {
        let g = tree(4, &[(0, 1), (0, 2), (0, 3)]);
        let m = tree_max_matching(&g.view(0)).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m.internal_count, 1);
        assert_eq!(matching_lower_bound(1), 1);
    }

    #[test]
    fn path_on_four() {
        let g = tree(4, &[(0, 1), (1, 2), (2, 3)]);
        let m = tree_max_matching(&g.view(0)).unwrap();
        assert_eq!(m.edges, vec![Edge::new(0, 1, 0), Edge::new(2, 3, 0)]);
        assert_eq!(matching_lower_bound(m.internal_count), 2);
    }

    #[test]
    fn single_edge() {
        let g = tree(2, &[(0, 1)]);
        let m = tree_max_matching(&g.view(0)).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m.internal_count, 0);
    }

    #[test]
    fn rejects_non_trees() {
        let g = tree(4, &[(0, 1), (2, 3)]);
        assert!(tree_max_matching(&g.view(0)).is_err());
        assert!(tree_max_matching(&ColoredGraph::new(1, 1).view(0)).is_err());
    }

    #[test]
    fn agrees_with_brute_force_on_small_trees() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(2..=11);
            let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
            let g = tree(n, &edges);
            let m = tree_max_matching(&g.view(0)).unwrap();
            let all: Vec<Edge> = g.edges().collect();
            assert_eq!(m.len(), brute_matching(&all));
            assert!(m.edges.iter().all(|e| g.has_edge(e.u, e.v)));
        }
    }
}
