//! Realizations of the small `k = 4` instances, read off the bundled table.

use std::sync::OnceLock;

use crate::degseq::{find_common_leaves, DegreeMatrix};
use crate::egraph::ColoredGraph;
use crate::enumerate::{canonicalize, Canonical};
use crate::error::BuildError;
use crate::fixtures::{self, BaseCase};

fn table() -> &'static [(Canonical, &'static BaseCase)] {
    static TABLE: OnceLock<Vec<(Canonical, &'static BaseCase)>> = OnceLock::new();
    TABLE.get_or_init(|| fixtures::all().iter().map(|c| (canonicalize(&c.matrix), c)).collect())
}

/// Number of the bundled case isomorphic to `m`, if any.
pub fn base_case_number(m: &DegreeMatrix) -> Option<usize> {
    let canon = canonicalize(m);
    table().iter().find(|(c, _)| c.matrix == canon.matrix).map(|(_, case)| case.number)
}

/// Looks `m` up among the bundled cases and carries that realization over to
/// `m`'s row and column labels.
pub fn base_case_lookup(m: &DegreeMatrix) -> Result<ColoredGraph, BuildError> {
    m.validate_trees()?;
    if m.k() != 4 {
        return Err(BuildError::WrongK { expected: 4, found: m.k() });
    }
    if let Some(c) = find_common_leaves(m) {
        return Err(BuildError::CommonLeaves {
            vertex: c.vertex,
            first: c.first,
            second: c.second,
        });
    }
    let canon = canonicalize(m);
    let (fixture, case) = table()
        .iter()
        .find(|(c, _)| c.matrix == canon.matrix)
        .ok_or(BuildError::NoFixture)?;
    // both canonical forms agree, so fixture column col_order[c] plays the
    // role of m's column canon.col_order[c], and likewise for rows
    let mut vertex_map = vec![0; m.n()];
    for (f, t) in fixture.col_order.iter().zip(&canon.col_order) {
        vertex_map[*f] = *t;
    }
    let mut color_map = vec![0; m.k()];
    for (f, t) in fixture.row_order.iter().zip(&canon.row_order) {
        color_map[*f] = *t;
    }
    Ok(case.graph.relabeled(&vertex_map, &color_map))
}
