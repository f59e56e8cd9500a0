//! The fourteen `k = 4`, `n <= 10` base cases and their realizations.
//!
//! `fixtures/appendix.txt` holds, per case, a `# case N` header, the degree
//! matrix in text form, a blank line and the adjacency color matrix.

use std::sync::OnceLock;

use crate::degseq::{io as degio, DegreeMatrix};
use crate::egraph::{io as graphio, ColoredGraph};

pub const APPENDIX: &str = include_str!("../fixtures/appendix.txt");

#[derive(Debug, Clone)]
pub struct BaseCase {
    /// 1-based case number.
    pub number: usize,
    pub matrix: DegreeMatrix,
    pub graph: ColoredGraph,
    /// Raw adjacency text as bundled.
    pub adjacency: String,
}

/// Splits the bundle into `(number, matrix text, adjacency text)`.
pub fn split_bundle(bundle: &str) -> Vec<(usize, String, String)> {
    let mut out = Vec::new();
    for chunk in bundle.split("# case ").skip(1) {
        let (head, body) = chunk.split_once('\n').expect("case header line");
        let number: usize = head.trim().parse().expect("case number");
        let mut parts = body.trim().splitn(2, "\n\n");
        let matrix = parts.next().expect("matrix block").trim().to_string() + "\n";
        let adjacency = parts.next().expect("adjacency block").trim().to_string() + "\n";
        out.push((number, matrix, adjacency));
    }
    out
}

pub fn all() -> &'static [BaseCase] {
    static CASES: OnceLock<Vec<BaseCase>> = OnceLock::new();
    CASES.get_or_init(|| {
        split_bundle(APPENDIX)
            .into_iter()
            .map(|(number, matrix, adjacency)| {
                let matrix = degio::parse_text(&matrix).expect("bundled matrix parses");
                let graph = graphio::parse_adjacency_color_matrix(&adjacency, Some(matrix.k()))
                    .expect("bundled adjacency parses");
                BaseCase {
                    number,
                    matrix,
                    graph,
                    adjacency,
                }
            })
            .collect()
    })
}

/// Case by its 1-based number. Panics outside `1..=14`.
pub fn case(number: usize) -> &'static BaseCase {
    &all()[number - 1]
}
