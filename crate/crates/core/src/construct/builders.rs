//! Inductive builders: peel vertices until a base case is reached, realize
//! the base, then splice the peeled vertices back in reverse order.

use super::base::{base_case_lookup, base_case_number};
use super::paths::build_paths_for;
use super::rainbow::{find_rainbow_matching_k4, greedy_rainbow_matching, order_by_internal_nodes};
use super::reduction::{apply_reduction, extend_realization, find_reduction, Reduction};
use crate::degseq::{count_never_leaves, find_common_leaves, DegreeMatrix};
use crate::egraph::{ColoredGraph, RainbowMatching};
use crate::error::BuildError;
use crate::oracle::{exhaustive_realize, OracleOutcome};

/// How the innermost instance was realized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseKind {
    Paths,
    /// Bundled case, by 1-based number.
    Fixture(usize),
    Oracle,
}

impl std::fmt::Display for BaseKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BaseKind::Paths => f.write_str("paths"),
            BaseKind::Fixture(c) => write!(f, "base case {c}"),
            BaseKind::Oracle => f.write_str("oracle"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Realization {
    pub graph: ColoredGraph,
    /// Number of vertices peeled before the base case.
    pub peel_depth: usize,
    pub base: BaseKind,
}

/// Smallest `n` for which the `k = 5` induction may reduce.
pub const QUINTET_MIN_BASE: usize = 18;

fn check_common_leaves(m: &DegreeMatrix) -> Result<(), BuildError> {
    m.validate_trees()?;
    match find_common_leaves(m) {
        Some(c) => Err(BuildError::CommonLeaves {
            vertex: c.vertex,
            first: c.first,
            second: c.second,
        }),
        None => Ok(()),
    }
}

/// Shared peel loop. `is_base` decides where to stop, `base` realizes the
/// stopping instance and `rainbow` supplies the splice matching per step.
fn peel<B, R>(m: &DegreeMatrix, is_base: impl Fn(&DegreeMatrix) -> bool, base: B, rainbow: R) -> Result<Realization, BuildError>
where
    B: FnOnce(&DegreeMatrix) -> Result<(ColoredGraph, BaseKind), BuildError>,
    R: Fn(&ColoredGraph, &Reduction) -> Result<RainbowMatching, BuildError>,
{
    let mut stack: Vec<(Reduction, DegreeMatrix)> = Vec::new();
    let mut cur = m.clone();
    while !is_base(&cur) {
        let r = find_reduction(&cur)?;
        let next = apply_reduction(&cur, &r)?;
        stack.push((r, cur));
        cur = next;
    }
    let peel_depth = stack.len();
    let (mut graph, kind) = base(&cur)?;
    debug_assert!(crate::egraph::verify_realization(&graph, &cur)?.ok(), "base realization fails\n{cur}");
    while let Some((r, bigger)) = stack.pop() {
        let rm = rainbow(&graph, &r)?;
        graph = extend_realization(&graph, &r, &rm)?;
        debug_assert!(
            crate::egraph::verify_realization(&graph, &bigger)?.ok(),
            "splice of {r:?} fails\n{bigger}"
        );
    }
    Ok(Realization {
        graph,
        peel_depth,
        base: kind,
    })
}

fn paths_base(m: &DegreeMatrix) -> Result<(ColoredGraph, BaseKind), BuildError> {
    Ok((build_paths_for(m)?, BaseKind::Paths))
}

fn greedy_step(g: &ColoredGraph, r: &Reduction) -> Result<RainbowMatching, BuildError> {
    greedy_rainbow_matching(g, &order_by_internal_nodes(g, r.i), r.reduced_w())
}

pub fn realize_quartet(m: &DegreeMatrix) -> Result<ColoredGraph, BuildError> {
    realize_quartet_traced(m).map(|r| r.graph)
}

/// Four trees without common leaves: paths, bundled base cases up to ten
/// vertices, exhaustive rainbow matchings above.
pub fn realize_quartet_traced(m: &DegreeMatrix) -> Result<Realization, BuildError> {
    if m.k() != 4 {
        return Err(BuildError::WrongK { expected: 4, found: m.k() });
    }
    check_common_leaves(m)?;
    peel(
        m,
        |cur| cur.all_paths() || cur.n() <= 10,
        |cur| {
            if cur.all_paths() {
                paths_base(cur)
            } else {
                let number = base_case_number(cur).ok_or(BuildError::NoFixture)?;
                Ok((base_case_lookup(cur)?, BaseKind::Fixture(number)))
            }
        },
        |g, r| find_rainbow_matching_k4(g, r.i, r.reduced_w()),
    )
}

/// Never-leaves needed by [`realize_never_leaves`] for `k` trees.
pub fn never_leaves_needed(k: usize) -> usize {
    (2 * k).saturating_sub(4)
}

pub fn realize_never_leaves(m: &DegreeMatrix) -> Result<ColoredGraph, BuildError> {
    realize_never_leaves_traced(m).map(|r| r.graph)
}

/// Any `k`, provided at least `2k - 4` columns are never a leaf. Reduces all
/// the way to paths and splices with greedy rainbow matchings.
pub fn realize_never_leaves_traced(m: &DegreeMatrix) -> Result<Realization, BuildError> {
    check_common_leaves(m)?;
    let needed = never_leaves_needed(m.k());
    let found = count_never_leaves(m);
    if found < needed {
        return Err(BuildError::TooFewNeverLeaves { found, needed });
    }
    peel(
        m,
        |cur| {
            // peeling never turns a column into a leaf
            assert!(count_never_leaves(cur) >= found, "never-leaf count dropped\n{cur}");
            cur.all_paths()
        },
        paths_base,
        greedy_step,
    )
}

pub fn realize_quintet(m: &DegreeMatrix, base_limit: usize, budget: u64) -> Result<ColoredGraph, BuildError> {
    realize_quintet_traced(m, base_limit, budget).map(|r| r.graph)
}

/// Five trees without common leaves. Instances on at most `base_limit`
/// vertices go to the exhaustive search; larger ones are peeled down to it.
pub fn realize_quintet_traced(m: &DegreeMatrix, base_limit: usize, budget: u64) -> Result<Realization, BuildError> {
    if m.k() != 5 {
        return Err(BuildError::WrongK { expected: 5, found: m.k() });
    }
    if base_limit < QUINTET_MIN_BASE {
        return Err(BuildError::Precondition(format!(
            "base limit {base_limit} is below {QUINTET_MIN_BASE}, where greedy rainbow matchings stop being guaranteed"
        )));
    }
    check_common_leaves(m)?;
    peel(
        m,
        |cur| cur.all_paths() || cur.n() <= base_limit,
        |cur| {
            if cur.all_paths() {
                return paths_base(cur);
            }
            match exhaustive_realize(cur, budget)? {
                OracleOutcome::Realized(g) => Ok((g, BaseKind::Oracle)),
                OracleOutcome::Unrealizable => Err(BuildError::Unrealizable),
                OracleOutcome::BudgetExceeded => Err(BuildError::OracleTimeout(budget)),
            }
        },
        greedy_step,
    )
}
