//! Edge-colored simple graphs: the realization of a degree matrix.
//!
//! Every vertex pair holds at most one edge regardless of color, so the
//! edge-disjointness of the color classes is structural. Colors and vertices
//! are 0-based; [`io`] converts to the 1-based printed forms.

pub mod io;

use std::collections::VecDeque;
use std::fmt;

use crate::degseq::{Degree, DegreeMatrix};
use crate::error::GraphError;

pub type Vertex = usize;
pub type Color = usize;

/// Largest supported color count (colors are stored in one byte).
pub const MAX_COLORS: usize = u8::MAX as usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
    pub color: Color,
}

impl Edge {
    /// Normalizes the endpoint order so that `u < v`.
    pub fn new(a: Vertex, b: Vertex, color: Color) -> Self {
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        Self { u, v, color }
    }

    pub fn touches(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }

    pub fn shares_vertex(&self, other: &Edge) -> bool {
        self.touches(other.u) || self.touches(other.v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    n: usize,
    k: usize,
    /// `n * n` cells, 0 for no edge, `color + 1` otherwise.
    cells: Vec<u8>,
    /// `n * k` counters, degree of vertex `v` in color `c` at `v * k + c`.
    degrees: Vec<u32>,
    edge_count: usize,
}

impl ColoredGraph {
    pub fn new(n: usize, k: usize) -> Self {
        assert!(k <= MAX_COLORS, "at most {MAX_COLORS} colors are supported");
        Self {
            n,
            k,
            cells: vec![0; n * n],
            degrees: vec![0; n * k],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting repeated pairs.
    pub fn from_edges(n: usize, k: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, GraphError> {
        let mut g = Self::new(n, k);
        for e in edges {
            g.add_edge(e.u, e.v, e.color)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    fn check_pair(&self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: x + 1, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u + 1));
        }
        Ok(())
    }

    fn check_color(&self, c: Color) -> Result<(), GraphError> {
        if c >= self.k {
            return Err(GraphError::ColorOutOfRange { color: c + 1, k: self.k });
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex, c: Color) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        self.check_color(c)?;
        if self.cells[u * self.n + v] != 0 {
            let e = Edge::new(u, v, c);
            return Err(GraphError::DuplicateEdge(e.u + 1, e.v + 1));
        }
        let tag = (c + 1) as u8;
        self.cells[u * self.n + v] = tag;
        self.cells[v * self.n + u] = tag;
        self.degrees[u * self.k + c] += 1;
        self.degrees[v * self.k + c] += 1;
        self.edge_count += 1;
        Ok(())
    }

    /// Removes the edge `(u, v)`, which must currently carry color `c`.
    pub fn remove_edge(&mut self, u: Vertex, v: Vertex, c: Color) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        self.check_color(c)?;
        if self.color_of(u, v) != Some(c) {
            let e = Edge::new(u, v, c);
            return Err(GraphError::MissingEdge(e.u + 1, e.v + 1));
        }
        self.cells[u * self.n + v] = 0;
        self.cells[v * self.n + u] = 0;
        self.degrees[u * self.k + c] -= 1;
        self.degrees[v * self.k + c] -= 1;
        self.edge_count -= 1;
        Ok(())
    }

    #[inline]
    pub fn color_of(&self, u: Vertex, v: Vertex) -> Option<Color> {
        match self.cells[u * self.n + v] {
            0 => None,
            t => Some(t as usize - 1),
        }
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.cells[u * self.n + v] != 0
    }

    #[inline]
    pub fn degree(&self, v: Vertex, c: Color) -> u32 {
        self.degrees[v * self.k + c]
    }

    /// All edges in lexicographic `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n).filter_map(move |v| self.color_of(u, v).map(|color| Edge { u, v, color }))
        })
    }

    pub fn neighbors(&self, v: Vertex, c: Color) -> impl Iterator<Item = Vertex> + '_ {
        let row = &self.cells[v * self.n..(v + 1) * self.n];
        let tag = (c + 1) as u8;
        row.iter().enumerate().filter(move |(_, &t)| t == tag).map(|(x, _)| x)
    }

    pub fn view(&self, c: Color) -> ColorView<'_> {
        debug_assert!(c < self.k);
        ColorView { graph: self, color: c }
    }

    /// Copy holding only the edges of color `c`, on the same vertex set.
    pub fn color_subgraph(&self, c: Color) -> Result<ColoredGraph, GraphError> {
        self.check_color(c)?;
        let mut g = ColoredGraph::new(self.n, self.k);
        for e in self.view(c).edges() {
            g.add_edge(e.u, e.v, c)?;
        }
        Ok(g)
    }

    /// Degrees per color, as a `k x n` matrix.
    pub fn degree_matrix(&self) -> DegreeMatrix {
        let mut entries = Vec::with_capacity(self.k * self.n);
        for c in 0..self.k {
            entries.extend((0..self.n).map(|v| self.degree(v, c) as Degree));
        }
        DegreeMatrix::from_entries(self.k, self.n, entries)
    }

    /// Copy with vertex `x` renamed to `vertex_map[x]` and color `c` to
    /// `color_map[c]`. Both maps must be permutations.
    pub fn relabeled(&self, vertex_map: &[Vertex], color_map: &[Color]) -> ColoredGraph {
        let mut g = ColoredGraph::new(self.n, self.k);
        for e in self.edges() {
            g.add_edge(vertex_map[e.u], vertex_map[e.v], color_map[e.color])
                .expect("relabeling by permutations keeps the graph simple");
        }
        g
    }

    /// True when some vertex is a leaf in two color classes.
    pub fn has_common_leaves(&self) -> bool {
        (0..self.n).any(|v| (0..self.k).filter(|&c| self.degree(v, c) == 1).count() > 1)
    }
}

/// The edges of one color on the full vertex set.
#[derive(Debug, Clone, Copy)]
pub struct ColorView<'a> {
    graph: &'a ColoredGraph,
    color: Color,
}

impl<'a> ColorView<'a> {
    pub fn color(&self) -> Color {
        self.color
    }

    pub fn n(&self) -> usize {
        self.graph.n
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + 'a {
        let c = self.color;
        let g = self.graph;
        g.edges().filter(move |e| e.color == c)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.graph.n).map(|v| self.graph.degree(v, self.color) as usize).sum::<usize>() / 2
    }

    pub fn degree(&self, v: Vertex) -> u32 {
        self.graph.degree(v, self.color)
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + 'a {
        self.graph.neighbors(v, self.color)
    }

    /// Vertices of degree at least 2.
    pub fn internal_nodes(&self) -> usize {
        (0..self.graph.n).filter(|&v| self.degree(v) >= 2).count()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.graph.n;
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(x) = queue.pop_front() {
            for y in self.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    queue.push_back(y);
                }
            }
        }
        reached == n
    }

    pub fn is_acyclic(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.graph.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in self.edges() {
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }

    /// `n - 1` edges and connected.
    pub fn is_spanning_tree(&self) -> bool {
        let n = self.graph.n;
        let answer = n >= 1 && self.edge_count() + 1 == n && self.is_connected();
        debug_assert_eq!(answer, n >= 1 && self.is_acyclic() && self.is_connected());
        answer
    }
}

/// A set of vertex-disjoint edges with pairwise distinct colors.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RainbowMatching {
    picks: Vec<Edge>,
}

impl RainbowMatching {
    /// Checks vertex-disjointness and color-distinctness.
    pub fn new(picks: Vec<Edge>) -> Option<Self> {
        for (i, a) in picks.iter().enumerate() {
            for b in &picks[i + 1..] {
                if a.shares_vertex(b) || a.color == b.color {
                    return None;
                }
            }
        }
        Some(Self { picks })
    }

    pub fn picks(&self) -> &[Edge] {
        &self.picks
    }

    pub fn len(&self) -> usize {
        self.picks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.picks.is_empty()
    }

    pub fn touches(&self, x: Vertex) -> bool {
        self.picks.iter().any(|e| e.touches(x))
    }

    /// True when every pick is an edge of `g` with the recorded color.
    pub fn lies_in(&self, g: &ColoredGraph) -> bool {
        self.picks.iter().all(|e| e.u < g.n() && e.v < g.n() && g.color_of(e.u, e.v) == Some(e.color))
    }
}

/// One reason a graph fails to realize a degree matrix. Indices are 0-based;
/// `Display` prints them 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Finding {
    WrongDegree {
        vertex: Vertex,
        color: Color,
        expected: Degree,
        actual: u32,
    },
    NotSpanningTree {
        color: Color,
    },
    DuplicateEdge {
        u: Vertex,
        v: Vertex,
    },
    InvalidEdge {
        u: Vertex,
        v: Vertex,
        color: Color,
    },
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Finding::WrongDegree {
                vertex,
                color,
                expected,
                actual,
            } => write!(
                f,
                "wrong degree: vertex {} color {} has {actual}, expected {expected}",
                vertex + 1,
                color + 1
            ),
            Finding::NotSpanningTree { color } => write!(f, "not spanning tree: color {}", color + 1),
            Finding::DuplicateEdge { u, v } => write!(f, "duplicate edge: ({}, {})", u + 1, v + 1),
            Finding::InvalidEdge { u, v, color } => {
                write!(f, "invalid edge: ({}, {}) color {}", u + 1, v + 1, color + 1)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub failures: Vec<Finding>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that `g` realizes `m`: each color class is a spanning tree and
/// every per-color degree matches. Collects every violation.
pub fn verify_realization(g: &ColoredGraph, m: &DegreeMatrix) -> Result<VerifyReport, GraphError> {
    verify_with(g, m, Vec::new())
}

fn verify_with(g: &ColoredGraph, m: &DegreeMatrix, mut failures: Vec<Finding>) -> Result<VerifyReport, GraphError> {
    if g.n() != m.n() || g.k() != m.k() {
        return Err(GraphError::DimensionMismatch {
            graph_k: g.k(),
            graph_n: g.n(),
            matrix_k: m.k(),
            matrix_n: m.n(),
        });
    }
    for c in 0..g.k() {
        if !g.view(c).is_spanning_tree() {
            failures.push(Finding::NotSpanningTree { color: c });
        }
    }
    for c in 0..g.k() {
        for v in 0..g.n() {
            let (expected, actual) = (m.get(c, v), g.degree(v, c));
            if expected != actual {
                failures.push(Finding::WrongDegree {
                    vertex: v,
                    color: c,
                    expected,
                    actual,
                });
            }
        }
    }
    Ok(VerifyReport { failures })
}

/// Like [`verify_realization`], but starts from raw edge records so that
/// repeated pairs, self-loops and out-of-range entries become findings
/// instead of construction errors. Offending records are skipped.
pub fn verify_edges(n: usize, k: usize, edges: &[Edge], m: &DegreeMatrix) -> Result<VerifyReport, GraphError> {
    let mut g = ColoredGraph::new(n, k);
    let mut failures = Vec::new();
    for e in edges {
        match g.add_edge(e.u, e.v, e.color) {
            Ok(()) => {}
            Err(GraphError::DuplicateEdge(..)) => failures.push(Finding::DuplicateEdge { u: e.u, v: e.v }),
            Err(_) => failures.push(Finding::InvalidEdge {
                u: e.u,
                v: e.v,
                color: e.color,
            }),
        }
    }
    verify_with(&g, m, failures)
}
