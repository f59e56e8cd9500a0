//! Named realization strategies, selectable at runtime.

use crate::construct::{
    build_paths_for, never_leaves_needed, realize_never_leaves_traced, realize_quartet_traced,
    realize_quintet_traced, BaseKind, Realization, QUINTET_MIN_BASE,
};
use crate::degseq::{count_never_leaves, find_common_leaves, DegreeMatrix};
use crate::error::BuildError;
use crate::oracle::{exhaustive_realize, OracleOutcome, DEFAULT_BUDGET};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StrategyConfig {
    /// Node budget for exhaustive search.
    pub oracle_budget: u64,
    /// Largest `n` handed to the oracle by the `k = 5` builder.
    pub base_limit: usize,
}

impl Default for StrategyConfig {
    fn default() -> Self {
        StrategyConfig {
            oracle_budget: DEFAULT_BUDGET,
            base_limit: QUINTET_MIN_BASE,
        }
    }
}

/// A realization together with the strategy that produced it.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub strategy: &'static str,
    pub realization: Realization,
}

pub trait Realizer: Send + Sync {
    fn name(&self) -> &'static str;

    /// One-line description for `--help` style listings.
    fn describe(&self) -> &'static str;

    /// `Ok` when `m` meets the strategy's hypotheses.
    fn check(&self, m: &DegreeMatrix, cfg: &StrategyConfig) -> Result<(), BuildError>;

    fn realize(&self, m: &DegreeMatrix, cfg: &StrategyConfig) -> Result<Realization, BuildError>;
}

fn no_common_leaves(m: &DegreeMatrix) -> Result<(), BuildError> {
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

struct Paths;

impl Realizer for Paths {
    fn name(&self) -> &'static str {
        "paths"
    }
    fn describe(&self) -> &'static str {
        "every row a path: zig-zag Hamiltonian paths"
    }
    fn check(&self, m: &DegreeMatrix, _: &StrategyConfig) -> Result<(), BuildError> {
        no_common_leaves(m)?;
        if m.all_paths() {
            Ok(())
        } else {
            Err(BuildError::Precondition("some row is not a path degree sequence".into()))
        }
    }
    fn realize(&self, m: &DegreeMatrix, cfg: &StrategyConfig) -> Result<Realization, BuildError> {
        self.check(m, cfg)?;
        Ok(Realization {
            graph: build_paths_for(m)?,
            peel_depth: 0,
            base: BaseKind::Paths,
        })
    }
}

struct Quartet;

impl Realizer for Quartet {
    fn name(&self) -> &'static str {
        "quartet"
    }
    fn describe(&self) -> &'static str {
        "k = 4, no common leaves: peel to ten vertices, bundled base cases"
    }
    fn check(&self, m: &DegreeMatrix, _: &StrategyConfig) -> Result<(), BuildError> {
        if m.k() != 4 {
            return Err(BuildError::WrongK { expected: 4, found: m.k() });
        }
        no_common_leaves(m)
    }
    fn realize(&self, m: &DegreeMatrix, _: &StrategyConfig) -> Result<Realization, BuildError> {
        realize_quartet_traced(m)
    }
}

struct NeverLeaves;

impl Realizer for NeverLeaves {
    fn name(&self) -> &'static str {
        "never-leaves"
    }
    fn describe(&self) -> &'static str {
        "any k with at least 2k - 4 never-leaves: peel to paths, greedy splices"
    }
    fn check(&self, m: &DegreeMatrix, _: &StrategyConfig) -> Result<(), BuildError> {
        no_common_leaves(m)?;
        let needed = never_leaves_needed(m.k());
        let found = count_never_leaves(m);
        if found < needed {
            return Err(BuildError::TooFewNeverLeaves { found, needed });
        }
        Ok(())
    }
    fn realize(&self, m: &DegreeMatrix, _: &StrategyConfig) -> Result<Realization, BuildError> {
        realize_never_leaves_traced(m)
    }
}

struct Quintet;

impl Realizer for Quintet {
    fn name(&self) -> &'static str {
        "quintet"
    }
    fn describe(&self) -> &'static str {
        "k = 5, no common leaves: peel to the base limit, exhaustive search below"
    }
    fn check(&self, m: &DegreeMatrix, cfg: &StrategyConfig) -> Result<(), BuildError> {
        if m.k() != 5 {
            return Err(BuildError::WrongK { expected: 5, found: m.k() });
        }
        if cfg.base_limit < QUINTET_MIN_BASE {
            return Err(BuildError::Precondition(format!("base limit must be at least {QUINTET_MIN_BASE}")));
        }
        no_common_leaves(m)
    }
    fn realize(&self, m: &DegreeMatrix, cfg: &StrategyConfig) -> Result<Realization, BuildError> {
        realize_quintet_traced(m, cfg.base_limit, cfg.oracle_budget)
    }
}

struct Oracle;

impl Realizer for Oracle {
    fn name(&self) -> &'static str {
        "oracle"
    }
    fn describe(&self) -> &'static str {
        "exhaustive backtracking search, no hypotheses"
    }
    fn check(&self, m: &DegreeMatrix, _: &StrategyConfig) -> Result<(), BuildError> {
        Ok(m.validate_trees()?)
    }
    fn realize(&self, m: &DegreeMatrix, cfg: &StrategyConfig) -> Result<Realization, BuildError> {
        match exhaustive_realize(m, cfg.oracle_budget)? {
            OracleOutcome::Realized(graph) => Ok(Realization {
                graph,
                peel_depth: 0,
                base: BaseKind::Oracle,
            }),
            OracleOutcome::Unrealizable => Err(BuildError::Unrealizable),
            OracleOutcome::BudgetExceeded => Err(BuildError::OracleTimeout(cfg.oracle_budget)),
        }
    }
}

/// Strategies by name. `auto` is not registered; it resolves to the first
/// registered strategy whose hypotheses hold.
pub struct Registry {
    strategies: Vec<Box<dyn Realizer>>,
}

pub const AUTO: &str = "auto";

impl Default for Registry {
    fn default() -> Self {
        let mut r = Registry { strategies: Vec::new() };
        r.register(Box::new(Paths));
        r.register(Box::new(Quartet));
        r.register(Box::new(NeverLeaves));
        r.register(Box::new(Quintet));
        r.register(Box::new(Oracle));
        r
    }
}

impl Registry {
    /// Appends a strategy; later registrations rank lower under `auto`.
    /// Panics on a duplicate name.
    pub fn register(&mut self, s: Box<dyn Realizer>) {
        assert!(self.get(s.name()).is_none() && s.name() != AUTO, "duplicate strategy {}", s.name());
        self.strategies.push(s);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Realizer> {
        self.strategies.iter().find(|s| s.name() == name).map(|s| s.as_ref())
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.strategies.iter().map(|s| s.name())
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Realizer> + '_ {
        self.strategies.iter().map(|s| s.as_ref())
    }

    /// First strategy whose hypotheses hold for `m`.
    pub fn select(&self, m: &DegreeMatrix, cfg: &StrategyConfig) -> Option<&dyn Realizer> {
        self.iter().find(|s| s.check(m, cfg).is_ok())
    }

    /// Realizes `m` with the named strategy (or `auto`). Unknown names are
    /// a `Precondition` error.
    pub fn realize(&self, name: &str, m: &DegreeMatrix, cfg: &StrategyConfig) -> Result<Outcome, BuildError> {
        m.validate_trees()?;
        let strategy = if name == AUTO {
            self.select(m, cfg).ok_or_else(|| BuildError::Precondition("no strategy applies".into()))?
        } else {
            let s = self
                .get(name)
                .ok_or_else(|| BuildError::Precondition(format!("unknown strategy {name}")))?;
            s.check(m, cfg)?;
            s
        };
        let realization = strategy.realize(m, cfg)?;
        Ok(Outcome {
            strategy: strategy.name(),
            realization,
        })
    }
}

/// Coarse failure classes, used for exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureClass {
    /// Bad input, a failed verification, or an internal sentinel.
    Invalid,
    /// The input is well formed but outside the strategy's hypotheses.
    Hypothesis,
    /// Exhaustive search ran out of nodes.
    Budget,
}

impl BuildError {
    pub fn class(&self) -> FailureClass {
        match self {
            BuildError::CommonLeaves { .. }
            | BuildError::AllPaths
            | BuildError::WrongK { .. }
            | BuildError::TooFewNeverLeaves { .. }
            | BuildError::Precondition(_) => FailureClass::Hypothesis,
            BuildError::OracleTimeout(_) => FailureClass::Budget,
            _ => FailureClass::Invalid,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::egraph::verify_realization;
    use crate::fixtures;

    #[test]
    fn names_in_auto_order() {
        let r = Registry::default();
        assert_eq!(r.names().collect::<Vec<_>>(), ["paths", "quartet", "never-leaves", "quintet", "oracle"]);
    }

    #[test]
    fn auto_picks_first_applicable() {
        let r = Registry::default();
        let cfg = StrategyConfig::default();
        assert_eq!(r.realize(AUTO, &fixtures::case(1).matrix, &cfg).unwrap().strategy, "paths");
        let out = r.realize(AUTO, &fixtures::case(7).matrix, &cfg).unwrap();
        assert_eq!(out.strategy, "quartet");
        assert_eq!(out.realization.base, BaseKind::Fixture(7));
        assert!(verify_realization(&out.realization.graph, &fixtures::case(7).matrix).unwrap().ok());
    }

    #[test]
    fn common_leaves_fall_through_to_oracle() {
        let m = DegreeMatrix::from_rows(vec![vec![1, 2, 2, 1, 2], vec![1, 1, 2, 2, 2]]).unwrap();
        let out = Registry::default().realize(AUTO, &m, &StrategyConfig::default()).unwrap();
        assert_eq!(out.strategy, "oracle");
    }

    #[test]
    fn named_strategy_checks_hypotheses() {
        let r = Registry::default();
        let err = r.realize("quintet", &fixtures::case(3).matrix, &StrategyConfig::default()).unwrap_err();
        assert_eq!(err.class(), FailureClass::Hypothesis);
        assert!(r.realize("nope", &fixtures::case(3).matrix, &StrategyConfig::default()).is_err());
    }

    #[test]
    fn classes() {
        assert_eq!(BuildError::OracleTimeout(5).class(), FailureClass::Budget);
        assert_eq!(BuildError::TooFewNeverLeaves { found: 2, needed: 8 }.class(), FailureClass::Hypothesis);
        assert_eq!(BuildError::Unrealizable.class(), FailureClass::Invalid);
    }
}
