//! Exhaustive backtracking search for edge-disjoint tree realizations.
//!
//! Trees are grown one color at a time, most constrained color first. Inside
//! a color the search always extends the least-index vertex that still needs
//! edges, taking its partners in increasing order, so each tree is generated
//! at most once. Edges of earlier colors are forbidden.

use crate::degseq::{Degree, DegreeMatrix};
use crate::egraph::{Color, ColoredGraph, Vertex};
use crate::sweep::{run_sweep, SweepMode, SweepOptions};
use crate::error::MatrixError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    Realized(ColoredGraph),
    /// The whole search space was exhausted.
    Unrealizable,
    BudgetExceeded,
}

/// Default node budget.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

enum Stop {
    Found,
    Exhausted,
    OutOfBudget,
}

/// Union-find with undo; no path compression.
struct Components {
    parent: Vec<usize>,
    size: Vec<usize>,
    /// Remaining degree summed over each component, valid at roots.
    pending: Vec<Degree>,
}

impl Components {
    fn new(pending: &[Degree]) -> Self {
        let n = pending.len();
        Components {
            parent: (0..n).collect(),
            size: vec![1; n],
            pending: pending.to_vec(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Joins the roots `a` and `b` after one edge between them is placed;
    /// returns the absorbed root for undo.
    fn union(&mut self, a: usize, b: usize) -> usize {
        let (big, small) = if self.size[a] >= self.size[b] { (a, b) } else { (b, a) };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        self.pending[big] = self.pending[big] + self.pending[small] - 2;
        small
    }

    fn undo(&mut self, small: usize) {
        let big = self.parent[small];
        self.parent[small] = small;
        self.size[big] -= self.size[small];
        self.pending[big] = self.pending[big] + 2 - self.pending[small];
    }
}

struct Search<'a> {
    m: &'a DegreeMatrix,
    order: Vec<Color>,
    g: ColoredGraph,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn color(&mut self, idx: usize) -> Stop {
        let Some(&c) = self.order.get(idx) else {
            return Stop::Found;
        };
        let n = self.m.n();
        let remaining: Vec<Degree> = self.m.row(c).to_vec();
        if !self.free_graph_connected() {
            return Stop::Exhausted;
        }
        if (0..n).any(|v| remaining[v] as usize + self.used_degree(v) > n - 1) {
            return Stop::Exhausted;
        }
        let mut comps = Components::new(&remaining);
        let mut remaining = remaining;
        self.edge(idx, c, &mut remaining, &mut comps, n - 1, None)
    }

    fn used_degree(&self, v: Vertex) -> usize {
        (0..self.g.k()).map(|c| self.g.degree(v, c) as usize).sum()
    }

    /// Whether the edges not yet used still connect every vertex.
    fn free_graph_connected(&self) -> bool {
        let n = self.g.n();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for y in 0..n {
                if !seen[y] && y != x && !self.g.has_edge(x, y) {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == n
    }

    fn edge(
        &mut self,
        idx: usize,
        c: Color,
        remaining: &mut [Degree],
        comps: &mut Components,
        edges_left: usize,
        last: Option<(Vertex, Vertex)>,
    ) -> Stop {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Stop::OutOfBudget;
        }
        if edges_left == 0 {
            return self.color(idx + 1);
        }
        let n = remaining.len();
        let Some(u) = (0..n).find(|&v| remaining[v] > 0) else {
            return Stop::Exhausted;
        };
        let start = match last {
            Some((lu, lx)) if lu == u => lx + 1,
            _ => 0,
        };
        let cu = comps.find(u);
        let candidates: Vec<Vertex> = (start..n)
            .filter(|&x| x != u && remaining[x] > 0 && !self.g.has_edge(u, x) && comps.find(x) != cu)
            .collect();
        if candidates.len() < remaining[u] as usize {
            return Stop::Exhausted;
        }
        for x in candidates {
            let cx = comps.find(x);
            // a component that can take no more edges must already span
            if comps.pending[cu] + comps.pending[cx] == 2 && edges_left > 1 {
                continue;
            }
            self.g.add_edge(u, x, c).expect("candidate edge is free");
            remaining[u] -= 1;
            remaining[x] -= 1;
            let absorbed = comps.union(cu, cx);
            let out = self.edge(idx, c, remaining, comps, edges_left - 1, Some((u, x)));
            comps.undo(absorbed);
            remaining[u] += 1;
            remaining[x] += 1;
            match out {
                Stop::Exhausted => {
                    self.g.remove_edge(u, x, c).expect("edge was placed");
                }
                done => return done,
            }
        }
        Stop::Exhausted
    }
}

/// Searches for `k` edge-disjoint spanning trees with the row degrees of
/// `m`. Common leaves are allowed. `budget` caps the number of search nodes.
pub fn exhaustive_realize(m: &DegreeMatrix, budget: u64) -> Result<OracleOutcome, MatrixError> {
    exhaustive_realize_counted(m, budget).map(|(o, _)| o)
}

/// As [`exhaustive_realize`], also returning the number of nodes visited.
pub fn exhaustive_realize_counted(m: &DegreeMatrix, budget: u64) -> Result<(OracleOutcome, u64), MatrixError> {
    m.validate_trees()?;
    let (k, n) = (m.k(), m.n());
    if (0..n).any(|v| m.column_sum(v) > n as u64 - 1) {
        return Ok((OracleOutcome::Unrealizable, 0));
    }
    let mut order: Vec<Color> = (0..k).collect();
    order.sort_by_key(|&c| (std::cmp::Reverse(m.row(c).iter().max().copied()), c));
    let mut search = Search {
        m,
        order,
        g: ColoredGraph::new(n, k),
        nodes: 0,
        budget,
    };
    let outcome = match search.color(0) {
        Stop::Found => OracleOutcome::Realized(search.g),
        Stop::Exhausted => OracleOutcome::Unrealizable,
        Stop::OutOfBudget => OracleOutcome::BudgetExceeded,
    };
    Ok((outcome, search.nodes))
}

/// Per-`n` tallies of a sweep.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SweepRow {
    pub n: usize,
    pub classes: u64,
    pub realized: u64,
    pub none: u64,
    pub exceeded: u64,
}

impl SweepRow {
    pub fn all_realized(&self) -> bool {
        self.realized == self.classes
    }
}

impl std::fmt::Display for SweepRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}\t{}\t{}\t{}\t{}", self.n, self.classes, self.realized, self.none, self.exceeded)
    }
}

/// Runs the oracle on every class of `enumerate_tuples(k, n)` for
/// `2k <= n <= n_max`, in parallel. Every returned realization is verified.
pub fn oracle_sweep(k: usize, n_max: usize, budget: u64) -> Vec<SweepRow> {
    let opts = SweepOptions::new(k, n_max, SweepMode::Oracle { budget });
    run_sweep(&opts).expect("no checkpoint, default pool").rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::egraph::{verify_realization, Edge};
    use crate::fixtures;
    use std::collections::BTreeSet;

    fn realized(m: &DegreeMatrix) -> ColoredGraph {
        match exhaustive_realize(m, DEFAULT_BUDGET).unwrap() {
            OracleOutcome::Realized(g) => {
                assert!(verify_realization(&g, m).unwrap().ok());
                g
            }
            other => panic!("expected a realization, got {other:?}"),
        }
    }

    #[test]
    fn every_fixture() {
        for case in fixtures::all() {
            realized(&case.matrix);
        }
    }

    #[test]
    fn single_tree() {
        let m = DegreeMatrix::from_rows(vec![vec![3, 1, 1, 2, 1]]).unwrap();
        realized(&m);
    }

    #[test]
    fn overfull_column_is_unrealizable() {
        // both stars centered at vertex 0
        let m = DegreeMatrix::from_rows(vec![vec![3, 1, 1, 1], vec![3, 1, 1, 1]]).unwrap();
        assert_eq!(exhaustive_realize(&m, 1000).unwrap(), OracleOutcome::Unrealizable);
    }

    #[test]
    fn tiny_budget_is_reported() {
        let m = &fixtures::case(14).matrix;
        assert_eq!(exhaustive_realize(m, 3).unwrap(), OracleOutcome::BudgetExceeded);
    }

    /// Every `2 x n` degree matrix realizable by two edge-disjoint spanning
    /// trees, found by coloring each edge of `K_n` with none, 1 or 2.
    fn naive_realizable(n: usize) -> BTreeSet<Vec<Degree>> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut out = BTreeSet::new();
        let total = 3usize.pow(pairs.len() as u32);
        for code in 0..total {
            let mut x = code;
            let mut edges = Vec::new();
            for &(u, v) in &pairs {
                if x % 3 > 0 {
                    edges.push(Edge::new(u, v, x % 3 - 1));
                }
                x /= 3;
            }
            if edges.len() != 2 * (n - 1) {
                continue;
            }
            let g = ColoredGraph::from_edges(n, 2, edges).unwrap();
            if g.view(0).is_spanning_tree() && g.view(1).is_spanning_tree() {
                out.insert(g.degree_matrix().entries().to_vec());
            }
        }
        out
    }

    fn tree_rows(n: usize) -> Vec<Vec<Degree>> {
        let mut rows = Vec::new();
        let mut cur = vec![1 as Degree; n];
        loop {
            if crate::degseq::is_tree_degree_sequence(&cur) {
                rows.push(cur.clone());
            }
            let mut i = 0;
            loop {
                if i == n {
                    return rows;
                }
                if (cur[i] as usize) < n - 1 {
                    cur[i] += 1;
                    break;
                }
                cur[i] = 1;
                i += 1;
            }
        }
    }

    #[test]
    fn agrees_with_naive_enumeration_for_two_trees() {
        for n in 2..=5 {
            let truth = naive_realizable(n);
            let rows = tree_rows(n);
            for a in &rows {
                for b in &rows {
                    let m = DegreeMatrix::from_rows(vec![a.clone(), b.clone()]).unwrap();
                    let got = match exhaustive_realize(&m, DEFAULT_BUDGET).unwrap() {
                        OracleOutcome::Realized(g) => {
                            assert!(verify_realization(&g, &m).unwrap().ok());
                            true
                        }
                        OracleOutcome::Unrealizable => false,
                        OracleOutcome::BudgetExceeded => panic!("budget at n = {n}"),
                    };
                    assert_eq!(got, truth.contains(m.entries()), "{m}");
                }
            }
        }
    }

    /// Three sequences with common leaves whose pairwise and total column
    /// sums are all graphical, yet no three edge-disjoint trees realize them.
    /// Found by searching every such triple on 7 vertices.
    fn common_leaf_counterexample() -> DegreeMatrix {
        DegreeMatrix::from_rows(vec![
            vec![1, 1, 1, 1, 1, 3, 4],
            vec![1, 1, 1, 2, 4, 2, 1],
            vec![1, 3, 3, 2, 1, 1, 1],
        ])
        .unwrap()
    }

    #[test]
    fn counterexample_sums_are_graphical() {
        use crate::degseq::erdos_gallai_graphical;
        let m = common_leaf_counterexample();
        for rows in [&[0, 1][..], &[0, 2], &[1, 2], &[0, 1, 2]] {
            let sums: Vec<Degree> = (0..7).map(|v| rows.iter().map(|&r| m.get(r, v)).sum()).collect();
            assert!(erdos_gallai_graphical(&sums), "{rows:?}");
        }
        assert!(crate::degseq::find_common_leaves(&m).is_some());
    }

    #[test]
    fn counterexample_is_unrealizable() {
        let m = common_leaf_counterexample();
        assert_eq!(exhaustive_realize(&m, DEFAULT_BUDGET).unwrap(), OracleOutcome::Unrealizable);
        // independent check: all labeled trees per row from Prüfer codes,
        // then every triple for pairwise disjointness
        let n: usize = 7;
        let mut per_row: Vec<Vec<BTreeSet<(usize, usize)>>> = vec![Vec::new(); 3];
        for code in 0..n.pow(n as u32 - 2) {
            let digits: Vec<usize> = (0..n - 2).map(|j| code / n.pow(j as u32) % n).collect();
            let edges: BTreeSet<(usize, usize)> = crate::gen::decode_prufer(&digits, n)
                .into_iter()
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect();
            let mut deg = vec![0 as Degree; n];
            for &(a, b) in &edges {
                deg[a] += 1;
                deg[b] += 1;
            }
            for (r, trees) in per_row.iter_mut().enumerate() {
                if deg == m.row(r) {
                    trees.push(edges.clone());
                }
            }
        }
        assert!(per_row.iter().all(|t| !t.is_empty()));
        let disjoint = |a: &BTreeSet<_>, b: &BTreeSet<_>| a.is_disjoint(b);
        let any = per_row[0].iter().any(|a| {
            per_row[1]
                .iter()
                .filter(|b| disjoint(a, b))
                .any(|b| per_row[2].iter().any(|c| disjoint(a, c) && disjoint(b, c)))
        });
        assert!(!any);
    }

    #[test]
    fn sweep_two_trees() {
        for row in oracle_sweep(2, 6, DEFAULT_BUDGET) {
            assert!(row.all_realized(), "{row}");
        }
    }
}
