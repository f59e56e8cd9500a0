//! Constructive realization of degree matrices without common leaves.

mod base;
mod builders;
mod matching;
mod paths;
mod rainbow;
mod reduction;

pub use base::{base_case_lookup, base_case_number};
pub use builders::{
    never_leaves_needed, realize_never_leaves, realize_never_leaves_traced, realize_quartet, realize_quartet_traced,
    realize_quintet, realize_quintet_traced, BaseKind, Realization, QUINTET_MIN_BASE,
};
pub use matching::{matching_lower_bound, tree_max_matching, TreeMatching};
pub use paths::{build_paths, build_paths_for};
pub use rainbow::{
    find_rainbow_matching, find_rainbow_matching_k4, greedy_rainbow_matching, meets_greedy_schedule,
    order_by_internal_nodes,
};
pub use reduction::{apply_reduction, extend_realization, find_reduction, Reduction};
