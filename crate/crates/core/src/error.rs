use std::fmt;

use thiserror::Error;

/// Where in the input a parse failure happened.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Position {
    /// 1-based line and column of a text input.
    Text { line: usize, column: usize },
    /// 0-based row and entry index inside a structured (JSON) document.
    Entry { row: usize, entry: Option<usize> },
    /// Line and column reported by the JSON reader.
    Json { line: usize, column: usize },
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Position::Text { line, column } => write!(f, "line {line}, column {column}"),
            Position::Entry { row, entry: None } => write!(f, "rows[{row}]"),
            Position::Entry {
                row,
                entry: Some(e),
            } => write!(f, "rows[{row}][{e}]"),
            Position::Json { line, column } => write!(f, "json line {line}, column {column}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{position}: {message}")]
pub struct ParseError {
    pub position: Position,
    pub message: String,
}

impl ParseError {
    pub(crate) fn at(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self {
            position: Position::Text { line, column },
            message: message.into(),
        }
    }

    pub(crate) fn with_position(position: Position, message: impl Into<String>) -> Self {
        Self {
            position,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("degree matrix needs at least one row and one column")]
    Empty,
    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("row {0} is not a tree degree sequence")]
    NotTreeRow(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("color {color} outside 1..={k}")]
    ColorOutOfRange { color: usize, k: usize },
    #[error("vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) already present")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) not present with the requested color")]
    MissingEdge(usize, usize),
    #[error("graph is {graph_k}x{graph_n} (colors x vertices) but matrix is {matrix_k}x{matrix_n}")]
    DimensionMismatch {
        graph_k: usize,
        graph_n: usize,
        matrix_k: usize,
        matrix_n: usize,
    },
}

/// Failures of the constructive builders and the search routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("invalid degree matrix: {0}")]
    Matrix(#[from] MatrixError),
    #[error("vertex {vertex} is a leaf in rows {first} and {second}")]
    CommonLeaves {
        vertex: usize,
        first: usize,
        second: usize,
    },
    #[error("every row is a path degree sequence")]
    AllPaths,
    #[error("builder needs k = {expected}, matrix has k = {found}")]
    WrongK { expected: usize, found: usize },
    #[error("{found} never-leaves, need at least {needed}")]
    TooFewNeverLeaves { found: usize, needed: usize },
    #[error("reduction (v={v}, w={w}, i={i}) does not satisfy its invariants")]
    InvalidReduction { v: usize, w: usize, i: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no rainbow matching found: {0}")]
    NotFound(String),
    #[error("matrix does not match any bundled base case")]
    NoFixture,
    #[error("exhaustive search exceeded its budget of {0} nodes")]
    OracleTimeout(u64),
    #[error("exhaustive search proved the matrix unrealizable")]
    Unrealizable,
    #[error(transparent)]
    Graph(#[from] GraphError),
}
