//! Degree sequences, degree matrices and the sequence-level feasibility checks.
//!
//! Vertices and rows are 0-based here. The text and JSON readers in [`io`]
//! and every `Display` impl work with the 1-based labels used in printed
//! tables.

pub mod io;

use std::fmt;

use crate::error::MatrixError;

/// Degree of one vertex in one tree.
pub type Degree = u32;

/// Per-vertex degrees of a single tree, one row of a [`DegreeMatrix`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence(Vec<Degree>);

impl DegreeSequence {
    pub fn new(degrees: Vec<Degree>) -> Self {
        Self(degrees)
    }

    pub fn as_slice(&self) -> &[Degree] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_tree(&self) -> bool {
        is_tree_degree_sequence(&self.0)
    }

    pub fn is_path(&self) -> bool {
        is_path_degree_sequence(&self.0)
    }
}

impl From<Vec<Degree>> for DegreeSequence {
    fn from(v: Vec<Degree>) -> Self {
        Self(v)
    }
}

/// Positive degrees summing to `2n - 2`.
pub fn is_tree_degree_sequence(degrees: &[Degree]) -> bool {
    let n = degrees.len() as u64;
    n >= 2
        && degrees.iter().all(|&d| d >= 1)
        && degrees.iter().map(|&d| d as u64).sum::<u64>() == 2 * n - 2
}

/// Exactly two 1s and every other degree 2.
pub fn is_path_degree_sequence(degrees: &[Degree]) -> bool {
    let ones = degrees.iter().filter(|&&d| d == 1).count();
    ones == 2 && degrees.iter().all(|&d| d == 1 || d == 2)
}

/// Graphicality by the Erdős–Gallai inequalities. The input order is
/// irrelevant; odd degree sums are rejected up front.
pub fn erdos_gallai_graphical(degrees: &[Degree]) -> bool {
    let mut sorted: Vec<u64> = degrees.iter().map(|&d| d as u64).collect();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted.iter().sum::<u64>() % 2 == 1 {
        return false;
    }
    (1..=sorted.len()).all(|s| eg_inequality(&sorted, s))
}

/// The Erdős–Gallai inequality at index `s` (1-based) of a non-increasing
/// sequence: `sum_{i<=s} f_i <= s(s-1) + sum_{j>s} min(s, f_j)`.
pub(crate) fn eg_inequality(sorted_desc: &[u64], s: usize) -> bool {
    debug_assert!(sorted_desc.windows(2).all(|w| w[0] >= w[1]));
    let s64 = s as u64;
    let lhs: u64 = sorted_desc[..s].iter().sum();
    let rhs = s64 * (s64 - 1) + sorted_desc[s..].iter().map(|&f| f.min(s64)).sum::<u64>();
    lhs <= rhs
}

/// A `k x n` matrix whose entry `(i, v)` is the degree of vertex `v` in tree `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeMatrix {
    k: usize,
    n: usize,
    entries: Vec<Degree>,
}

impl DegreeMatrix {
    pub fn from_rows(rows: Vec<Vec<Degree>>) -> Result<Self, MatrixError> {
        let k = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if k == 0 || n == 0 {
            return Err(MatrixError::Empty);
        }
        let mut entries = Vec::with_capacity(k * n);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != n {
                return Err(MatrixError::Ragged {
                    row,
                    found: r.len(),
                    expected: n,
                });
            }
            entries.extend(r);
        }
        Ok(Self { k, n, entries })
    }

    /// Builds a matrix from row-major entries. Panics if the length is not `k * n`.
    pub fn from_entries(k: usize, n: usize, entries: Vec<Degree>) -> Self {
        assert_eq!(entries.len(), k * n, "entry count must be k * n");
        assert!(k > 0 && n > 0);
        Self { k, n, entries }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, row: usize, vertex: usize) -> Degree {
        self.entries[row * self.n + vertex]
    }

    #[inline]
    pub(crate) fn set(&mut self, row: usize, vertex: usize, d: Degree) {
        self.entries[row * self.n + vertex] = d;
    }

    pub fn row(&self, row: usize) -> &[Degree] {
        &self.entries[row * self.n..(row + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Degree]> + '_ {
        self.entries.chunks(self.n)
    }

    pub fn column(&self, vertex: usize) -> impl Iterator<Item = Degree> + '_ {
        (0..self.k).map(move |i| self.get(i, vertex))
    }

    pub fn entries(&self) -> &[Degree] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<Degree>> {
        self.rows().map(<[Degree]>::to_vec).collect()
    }

    /// Column sum `f_v`.
    pub fn column_sum(&self, vertex: usize) -> u64 {
        self.column(vertex).map(|d| d as u64).sum()
    }

    /// Checks that every row is a tree degree sequence.
    pub fn validate_trees(&self) -> Result<(), MatrixError> {
        match self.rows().position(|r| !is_tree_degree_sequence(r)) {
            Some(i) => Err(MatrixError::NotTreeRow(i)),
            None => Ok(()),
        }
    }

    pub fn is_tree_matrix(&self) -> bool {
        self.validate_trees().is_ok()
    }

    pub fn all_paths(&self) -> bool {
        self.rows().all(is_path_degree_sequence)
    }

    /// Number of rows in which `vertex` is a leaf.
    pub fn leaf_count(&self, vertex: usize) -> usize {
        self.column(vertex).filter(|&d| d == 1).count()
    }

    /// Copy with rows and columns permuted: entry `(r, c)` of the result is
    /// entry `(row_order[r], col_order[c])` of `self`.
    pub fn permuted(&self, row_order: &[usize], col_order: &[usize]) -> Self {
        debug_assert_eq!(row_order.len(), self.k);
        debug_assert_eq!(col_order.len(), self.n);
        let mut entries = Vec::with_capacity(self.entries.len());
        for &r in row_order {
            entries.extend(col_order.iter().map(|&c| self.get(r, c)));
        }
        Self {
            k: self.k,
            n: self.n,
            entries,
        }
    }
}

impl fmt::Display for DegreeMatrix {
    /// The plain text format: header `k n`, then one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.k, self.n)?;
        for row in self.rows() {
            let mut first = true;
            for d in row {
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{d}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A column holding a leaf in two different rows. All indices 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CommonLeaf {
    pub vertex: usize,
    pub first: usize,
    pub second: usize,
}

/// First column (smallest index) that is a leaf in two rows, with the two
/// smallest such rows.
pub fn find_common_leaves(m: &DegreeMatrix) -> Option<CommonLeaf> {
    (0..m.n()).find_map(|v| {
        let mut leaf_rows = (0..m.k()).filter(|&i| m.get(i, v) == 1);
        let first = leaf_rows.next()?;
        let second = leaf_rows.next()?;
        Some(CommonLeaf {
            vertex: v,
            first,
            second,
        })
    })
}

/// Columns that are not a leaf in any row.
pub fn count_never_leaves(m: &DegreeMatrix) -> usize {
    (0..m.n()).filter(|&v| m.leaf_count(v) == 0).count()
}

/// Column sums sorted non-increasing, with the vertex each came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumSequence {
    pub sums: Vec<u64>,
    /// `order[j]` is the original vertex of `sums[j]`.
    pub order: Vec<usize>,
}

impl SumSequence {
    pub fn total(&self) -> u64 {
        self.sums.iter().sum()
    }

    /// Sums as plain degrees, for graphicality checks.
    pub fn degrees(&self) -> Vec<Degree> {
        self.sums.iter().map(|&s| s as Degree).collect()
    }
}

/// Column sums of `m` in non-increasing order. Ties keep vertex order.
pub fn sum_sequence(m: &DegreeMatrix) -> SumSequence {
    let mut order: Vec<usize> = (0..m.n()).collect();
    let raw: Vec<u64> = order.iter().map(|&v| m.column_sum(v)).collect();
    order.sort_by(|&a, &b| raw[b].cmp(&raw[a]).then(a.cmp(&b)));
    SumSequence {
        sums: order.iter().map(|&v| raw[v]).collect(),
        order,
    }
}

/// Evaluates the Erdős–Gallai inequality at index `s` (1-based) for the
/// sorted column sums of `m`.
///
/// Panics unless `1 <= s <= n`.
pub fn eg_tail_bound_holds(m: &DegreeMatrix, s: usize) -> bool {
    assert!((1..=m.n()).contains(&s), "s must lie in 1..=n");
    eg_inequality(&sum_sequence(m).sums, s)
}
