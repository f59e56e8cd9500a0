//! Adjacency color matrix and edge-list formats.
//!
//! Adjacency form: `n` lines of `n` integers, entry `c` in `1..=k` marking an
//! edge of color `c` and `0` marking no edge.
//! Edge-list form: header `n k`, then one `u v c` line per edge, 1-based.

use super::{ColoredGraph, Edge};
use crate::error::ParseError;
use crate::text::integer_lines;

/// Reads an adjacency color matrix. When `k` is `None` the color count is
/// the largest entry (at least 1).
pub fn parse_adjacency_color_matrix(input: &str, k: Option<usize>) -> Result<ColoredGraph, ParseError> {
    let lines = integer_lines(input)?;
    let n = lines.len();
    if n == 0 {
        return Err(ParseError::at(1, 1, "empty adjacency matrix"));
    }
    for line in &lines {
        if line.tokens.len() != n {
            let column = line.tokens.get(n).map_or(line.end_column(), |t| t.column);
            return Err(ParseError::at(
                line.number,
                column,
                format!("row has {} entries, expected {n}", line.tokens.len()),
            ));
        }
    }
    let max_entry = lines
        .iter()
        .flat_map(|l| l.tokens.iter().map(|t| t.value))
        .max()
        .unwrap_or(0) as usize;
    let k = k.unwrap_or(max_entry.max(1));
    if k > super::MAX_COLORS {
        return Err(ParseError::at(1, 1, format!("at most {} colors are supported", super::MAX_COLORS)));
    }
    let mut g = ColoredGraph::new(n, k);
    for (u, line) in lines.iter().enumerate() {
        for (v, t) in line.tokens.iter().enumerate() {
            let c = t.value as usize;
            if u == v {
                if c != 0 {
                    return Err(ParseError::at(t.line, t.column, "diagonal entries must be 0"));
                }
                continue;
            }
            if c > k {
                return Err(ParseError::at(t.line, t.column, format!("color {c} exceeds k = {k}")));
            }
            let mirror = lines[v].tokens[u];
            if mirror.value != t.value {
                return Err(ParseError::at(
                    mirror.line,
                    mirror.column,
                    format!(
                        "matrix is not symmetric: entry ({}, {}) is {} but ({}, {}) is {}",
                        u + 1,
                        v + 1,
                        t.value,
                        v + 1,
                        u + 1,
                        mirror.value
                    ),
                ));
            }
            if u < v && c > 0 {
                g.add_edge(u, v, c - 1).expect("pairs are visited once");
            }
        }
    }
    Ok(g)
}

pub fn emit_adjacency_color_matrix(g: &ColoredGraph) -> String {
    let mut out = String::with_capacity(g.n() * g.n() * 2);
    for u in 0..g.n() {
        for v in 0..g.n() {
            if v > 0 {
                out.push(' ');
            }
            let c = g.color_of(u, v).map_or(0, |c| c + 1);
            out.push_str(&c.to_string());
        }
        out.push('\n');
    }
    out
}

/// Raw edge records as read from an edge-list file, 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    pub n: usize,
    pub k: usize,
    pub edges: Vec<Edge>,
}

impl EdgeList {
    pub fn into_graph(self) -> Result<ColoredGraph, crate::error::GraphError> {
        ColoredGraph::from_edges(self.n, self.k, self.edges)
    }
}

/// Reads the edge-list format. Range checks happen here; repeated pairs are
/// left for [`EdgeList::into_graph`] or [`super::verify_edges`].
pub fn parse_edge_list(input: &str) -> Result<EdgeList, ParseError> {
    let lines = integer_lines(input)?;
    let Some(header) = lines.first() else {
        return Err(ParseError::at(1, 1, "missing `n k` header"));
    };
    if header.tokens.len() != 2 {
        return Err(ParseError::at(header.number, header.end_column(), "header must hold exactly `n k`"));
    }
    let n = header.tokens[0].value as usize;
    let k = header.tokens[1].value as usize;
    if k == 0 || k > super::MAX_COLORS {
        return Err(ParseError::at(header.number, header.tokens[1].column, "k out of range"));
    }
    let mut edges = Vec::with_capacity(lines.len() - 1);
    for line in &lines[1..] {
        if line.tokens.len() != 3 {
            return Err(ParseError::at(line.number, line.end_column(), "edge lines hold `u v c`"));
        }
        let [u, v, c] = [line.tokens[0], line.tokens[1], line.tokens[2]];
        for t in [u, v] {
            if t.value == 0 || t.value as usize > n {
                return Err(ParseError::at(t.line, t.column, format!("vertex must lie in 1..={n}")));
            }
        }
        if c.value == 0 || c.value as usize > k {
            return Err(ParseError::at(c.line, c.column, format!("color must lie in 1..={k}")));
        }
        if u.value == v.value {
            return Err(ParseError::at(v.line, v.column, "self-loop"));
        }
        edges.push(Edge::new(u.value as usize - 1, v.value as usize - 1, c.value as usize - 1));
    }
    Ok(EdgeList { n, k, edges })
}

pub fn emit_edge_list(g: &ColoredGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.k());
    for e in g.edges() {
        out.push_str(&format!("{} {} {}\n", e.u + 1, e.v + 1, e.color + 1));
    }
    out
}

/// Text layouts a realization can be written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Adjacency,
    EdgeList,
}

impl GraphFormat {
    /// Adjacency matrices are square: as many lines as entries per line.
    /// Anything else is taken for an edge list.
    pub fn detect(input: &str) -> GraphFormat {
        let rows: Vec<usize> = input
            .lines()
            .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
            .map(|l| l.split_whitespace().count())
            .collect();
        if !rows.is_empty() && rows.iter().all(|&c| c == rows.len()) {
            GraphFormat::Adjacency
        } else {
            GraphFormat::EdgeList
        }
    }
}

pub fn emit(g: &ColoredGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Adjacency => emit_adjacency_color_matrix(g),
        GraphFormat::EdgeList => emit_edge_list(g),
    }
}
