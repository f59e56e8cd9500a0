//! Random instances for tests and the `gen` subcommand.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::degseq::{Degree, DegreeMatrix};
use crate::egraph::{Color, ColoredGraph, Vertex};

/// A random `k x n` tree degree matrix without common leaves and with at
/// least `min_never_leaves` columns that are never a leaf.
///
/// Each row gets a leaf set of size at least 2, the sets pairwise disjoint;
/// the row's surplus degree (leaves - 2) is spread over its other vertices.
/// Returns `None` when `2k + min_never_leaves > n`.
pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, k: usize, n: usize, min_never_leaves: usize) -> Option<DegreeMatrix> {
    if k == 0 || 2 * k + min_never_leaves > n {
        return None;
    }
    let mut spare = n - min_never_leaves - 2 * k;
    if k == 1 && n > 2 {
        // a lone star still needs its center
        spare = spare.min(n - 3);
    }
    let extra = rng.gen_range(0..=spare);
    let mut sizes = vec![2usize; k];
    for _ in 0..extra {
        sizes[rng.gen_range(0..k)] += 1;
    }
    let mut vertices: Vec<Vertex> = (0..n).collect();
    vertices.shuffle(rng);
    let mut entries = vec![2 as Degree; k * n];
    let mut next = 0;
    for (row, &size) in sizes.iter().enumerate() {
        let cells = &mut entries[row * n..(row + 1) * n];
        for &v in &vertices[next..next + size] {
            cells[v] = 1;
        }
        next += size;
        let inner: Vec<Vertex> = (0..n).filter(|&v| cells[v] != 1).collect();
        for _ in 0..size - 2 {
            let v = *inner.choose(rng).expect("a row with surplus has inner vertices");
            cells[v] += 1;
        }
    }
    let m = DegreeMatrix::from_entries(k, n, entries);
    debug_assert!(m.is_tree_matrix());
    Some(m)
}

/// Uniform random labeled tree on `n` vertices, via a random Prüfer code.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<(Vertex, Vertex)> {
    if n < 2 {
        return Vec::new();
    }
    let code: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    decode_prufer(&code, n)
}

/// Edges of the tree with Prüfer code `code` on `code.len() + 2` vertices.
pub fn decode_prufer(code: &[Vertex], n: usize) -> Vec<(Vertex, Vertex)> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;
    let mut degree = vec![1usize; n];
    for &x in code {
        degree[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<Vertex>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in code {
        let Reverse(leaf) = leaves.pop().expect("a Prüfer code always leaves a leaf");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    edges
}

/// A random permutation of `0..n`.
pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// `g` under a random relabeling of its vertices and colors.
pub fn scramble<R: Rng + ?Sized>(rng: &mut R, g: &ColoredGraph) -> ColoredGraph {
    let vertices = random_permutation(rng, g.n());
    let colors: Vec<Color> = random_permutation(rng, g.k());
    g.relabeled(&vertices, &colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degseq::{count_never_leaves, find_common_leaves};
    use crate::egraph::Edge;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn matrices_meet_their_contract() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..2000 {
            let k = rng.gen_range(1..=6);
            let n = rng.gen_range(2 * k..=30);
            let min = rng.gen_range(0..=n - 2 * k);
            let m = random_matrix(&mut rng, k, n, min).unwrap();
            assert!(m.is_tree_matrix());
            assert!(find_common_leaves(&m).is_none());
            assert!(count_never_leaves(&m) >= min);
        }
    }

    #[test]
    fn impossible_requests() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(random_matrix(&mut rng, 4, 7, 0).is_none());
        assert!(random_matrix(&mut rng, 4, 10, 3).is_none());
    }

    #[test]
    fn same_seed_same_output() {
        let a = random_matrix(&mut ChaCha8Rng::seed_from_u64(9), 5, 20, 6);
        let b = random_matrix(&mut ChaCha8Rng::seed_from_u64(9), 5, 20, 6);
        assert_eq!(a, b);
    }

    #[test]
    fn prufer_trees_span() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for n in 2..40 {
            let edges = random_tree(&mut rng, n);
            let g = ColoredGraph::from_edges(n, 1, edges.iter().map(|&(u, v)| Edge::new(u, v, 0))).unwrap();
            assert!(g.view(0).is_spanning_tree());
        }
    }

    #[test]
    fn prufer_path() {
        assert_eq!(decode_prufer(&[1, 2], 4), vec![(0, 1), (1, 2), (2, 3)]);
    }
}
