//! Edge-disjoint spanning tree realizations of degree sequence tuples.

pub mod construct;
pub mod degseq;
pub mod egraph;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod gen;
pub mod oracle;
pub mod strategy;
pub mod sweep;
mod text;

pub use degseq::{Degree, DegreeMatrix};
pub use egraph::{ColoredGraph, Edge};
pub use error::{BuildError, GraphError, MatrixError, ParseError};
