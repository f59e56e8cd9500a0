//! Rainbow matchings used to splice a peeled vertex back into a realization.

use super::matching::{forest_max_matching, tree_max_matching};
use crate::egraph::{Color, ColoredGraph, Edge, RainbowMatching, Vertex};
use crate::error::BuildError;

/// Backtracking search for one edge per listed color, pairwise disjoint and
/// avoiding `avoid`. Colors are tried in the given order, edges in
/// lexicographic order, so the first hit is deterministic.
pub fn find_rainbow_matching(g: &ColoredGraph, colors: &[Color], avoid: Option<Vertex>) -> Option<RainbowMatching> {
    let per_color: Vec<Vec<Edge>> = colors
        .iter()
        .map(|&c| {
            g.view(c)
                .edges()
                .filter(|e| avoid.is_none_or(|w| !e.touches(w)))
                .collect()
        })
        .collect();
    let mut used = vec![false; g.n()];
    let mut picks = Vec::with_capacity(colors.len());
    fn rec(per_color: &[Vec<Edge>], used: &mut [bool], picks: &mut Vec<Edge>) -> bool {
        let Some(edges) = per_color.get(picks.len()) else {
            return true;
        };
        for e in edges {
            if used[e.u] || used[e.v] {
                continue;
            }
            used[e.u] = true;
            used[e.v] = true;
            picks.push(*e);
            if rec(per_color, used, picks) {
                return true;
            }
            picks.pop();
            used[e.u] = false;
            used[e.v] = false;
        }
        false
    }
    rec(&per_color, &mut used, &mut picks).then(|| RainbowMatching::new(picks).expect("disjoint by construction"))
}

/// Size-3 rainbow matching over the three colors other than `excluded` in a
/// four-tree realization without common leaves, avoiding vertex `avoid`.
/// Such a matching always exists once `n >= 10`; it is found by exhaustive
/// search.
pub fn find_rainbow_matching_k4(g: &ColoredGraph, excluded: Color, avoid: Vertex) -> Result<RainbowMatching, BuildError> {
    if g.k() != 4 {
        return Err(BuildError::WrongK { expected: 4, found: g.k() });
    }
    if g.n() < 10 {
        return Err(BuildError::Precondition(format!("need at least 10 vertices, graph has {}", g.n())));
    }
    if excluded >= 4 || avoid >= g.n() {
        return Err(BuildError::Precondition("excluded color or avoided vertex out of range".into()));
    }
    if let Some(c) = (0..4).find(|&c| !g.view(c).is_spanning_tree()) {
        return Err(BuildError::Precondition(format!("color {} is not a spanning tree", c + 1)));
    }
    if g.has_common_leaves() {
        return Err(BuildError::Precondition("color classes share a leaf".into()));
    }
    let colors: Vec<Color> = (0..4).filter(|&c| c != excluded).collect();
    find_rainbow_matching(g, &colors, Some(avoid)).ok_or_else(|| {
        BuildError::NotFound(format!(
            "no size-3 rainbow matching avoiding vertex {} without color {}",
            avoid + 1,
            excluded + 1
        ))
    })
}

/// The `k - 1` colors other than `excluded`, ascending by internal node
/// count, ties by color index.
pub fn order_by_internal_nodes(g: &ColoredGraph, excluded: Color) -> Vec<Color> {
    let mut colors: Vec<Color> = (0..g.k()).filter(|&c| c != excluded).collect();
    colors.sort_by_key(|&c| (g.view(c).internal_nodes(), c));
    colors
}

/// True when the `j`-th listed color (1-based) has a matching of size at
/// least `2j`, the schedule under which the greedy pick cannot get stuck.
pub fn meets_greedy_schedule(g: &ColoredGraph, colors: &[Color]) -> bool {
    colors
        .iter()
        .enumerate()
        .all(|(j, &c)| forest_max_matching(&g.view(c)).len() >= 2 * (j + 1))
}

/// Picks one edge per listed color in order, each from a maximum matching
/// of that color's tree, skipping edges blocked by earlier picks or by
/// `avoid`. The lexicographically first free edge is taken.
pub fn greedy_rainbow_matching(g: &ColoredGraph, colors: &[Color], avoid: Vertex) -> Result<RainbowMatching, BuildError> {
    let mut used = vec![false; g.n()];
    if avoid < g.n() {
        used[avoid] = true;
    }
    let mut picks = Vec::with_capacity(colors.len());
    for (j, &c) in colors.iter().enumerate() {
        let matching = tree_max_matching(&g.view(c))?;
        let pick = matching
            .edges
            .iter()
            .find(|e| !used[e.u] && !used[e.v])
            .ok_or_else(|| {
                BuildError::NotFound(format!(
                    "greedy step {}: all {} matching edges of color {} are blocked",
                    j + 1,
                    matching.len(),
                    c + 1
                ))
            })?;
        used[pick.u] = true;
        used[pick.v] = true;
        picks.push(*pick);
    }
    Ok(RainbowMatching::new(picks).expect("disjoint by construction"))
}
