//! Edge-disjoint Hamiltonian paths on `n >= 2k` vertices.

use crate::degseq::DegreeMatrix;
use crate::egraph::{ColoredGraph, Vertex};
use crate::error::BuildError;

/// Vertex order of path `i` (1-based), as 0-based labels.
///
/// Even `n` zig-zags `i, i-1, i+1, i-2, ...`; odd `n` zig-zags
/// `i, i+1, i-1, i+2, ...`. Either way the ends are `i` and `ceil(n/2) + i`
/// and path `i` only uses edges whose endpoint labels sum to one of two
/// residues that no other path uses.
fn zigzag(i: usize, n: usize) -> Vec<Vertex> {
    let wrap = |x: i64| (x - 1).rem_euclid(n as i64) as Vertex;
    let i = i as i64;
    (0..n as i64)
        .map(|j| {
            let t = j / 2;
            match (n % 2 == 0, j % 2 == 0) {
                (true, true) => wrap(i + t),
                (true, false) => wrap(i - 1 - t),
                (false, true) => wrap(i - t),
                (false, false) => wrap(i + 1 + t),
            }
        })
        .collect()
}

/// `k` edge-disjoint Hamiltonian paths; color `r` has its ends at vertices
/// `r` and `ceil(n/2) + r`.
pub fn build_paths(k: usize, n: usize) -> Result<ColoredGraph, BuildError> {
    if n < 2 * k || k == 0 {
        return Err(BuildError::Precondition(format!("need k >= 1 and n >= 2k, got k = {k}, n = {n}")));
    }
    let mut g = ColoredGraph::new(n, k);
    for c in 0..k {
        for pair in zigzag(c + 1, n).windows(2) {
            g.add_edge(pair[0], pair[1], c)?;
        }
    }
    Ok(g)
}

/// Realizes an all-paths matrix without common leaves by relabeling
/// [`build_paths`] so each row's two leaves land where the matrix puts them.
pub fn build_paths_for(m: &DegreeMatrix) -> Result<ColoredGraph, BuildError> {
    m.validate_trees()?;
    if !m.all_paths() {
        return Err(BuildError::Precondition("not every row is a path degree sequence".into()));
    }
    let (k, n) = (m.k(), m.n());
    let half = n.div_ceil(2);
    let mut map = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    for r in 0..k {
        let mut leaves = (0..n).filter(|&v| m.get(r, v) == 1);
        let (a, b) = (leaves.next().unwrap(), leaves.next().unwrap());
        for (canon, target) in [(r, a), (half + r, b)] {
            if taken[target] {
                let other = (0..r).find(|&s| m.get(s, target) == 1).unwrap_or(r);
                return Err(BuildError::CommonLeaves { vertex: target, first: other, second: r });
            }
            taken[target] = true;
            map[canon] = target;
        }
    }
    let mut free = (0..n).filter(|&v| !taken[v]);
    for slot in map.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = free.next().expect("as many free targets as free slots");
    }
    let colors: Vec<usize> = (0..k).collect();
    Ok(build_paths(k, n)?.relabeled(&map, &colors))
}
