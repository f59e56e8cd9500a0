//! Canonical forms of degree matrices under simultaneous row and column
//! permutation, and orderly generation of the tree degree `k`-tuples
//! without common leaves.
//!
//! The canonical representative is the row-major lexicographically least
//! matrix over all row and column permutations. For a fixed row order the
//! best column order is the lexicographic sort of the column vectors, so only
//! row orders are searched, with branch and bound on matrix prefixes.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use crate::degseq::{Degree, DegreeMatrix};

/// A canonical matrix with the permutations that produce it from the input:
/// `matrix == input.permuted(&row_order, &col_order)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonical {
    pub matrix: DegreeMatrix,
    pub row_order: Vec<usize>,
    pub col_order: Vec<usize>,
}

/// Row-major entries of the first `rows.len()` rows once columns are sorted
/// by their prefix vectors.
fn sorted_prefix(m: &DegreeMatrix, rows: &[usize], buf: &mut Vec<Degree>) {
    let r = rows.len();
    let mut cols: Vec<Vec<Degree>> = (0..m.n()).map(|v| rows.iter().map(|&i| m.get(i, v)).collect()).collect();
    cols.sort_unstable();
    buf.clear();
    for i in 0..r {
        buf.extend(cols.iter().map(|c| c[i]));
    }
}

struct Search<'a> {
    m: &'a DegreeMatrix,
    best: Option<Vec<Degree>>,
    best_rows: Vec<usize>,
    /// Stop as soon as any row order beats the incumbent.
    identity_probe: bool,
    beaten: bool,
}

impl Search<'_> {
    fn run(&mut self, chosen: &mut Vec<usize>, used: &mut [bool]) {
        let (k, n) = (self.m.k(), self.m.n());
        let mut buf = Vec::with_capacity(k * n);
        let mut tried: Vec<&[Degree]> = Vec::new();
        for x in 0..k {
            if used[x] {
                continue;
            }
            // identical rows lead to identical subtrees
            let row = self.m.row(x);
            if tried.contains(&row) {
                continue;
            }
            tried.push(row);
            chosen.push(x);
            sorted_prefix(self.m, chosen, &mut buf);
            let depth = chosen.len();
            let ord = match &self.best {
                None => Ordering::Less,
                Some(b) => buf[..].cmp(&b[..depth * n]),
            };
            match ord {
                Ordering::Greater => {}
                Ordering::Less if self.identity_probe => self.beaten = true,
                _ if depth == k => {
                    if ord == Ordering::Less {
                        self.best = Some(buf.clone());
                        self.best_rows = chosen.clone();
                    }
                }
                _ => {
                    if ord == Ordering::Less {
                        // every completion of this prefix beats the incumbent
                        self.best = None;
                    }
                    used[x] = true;
                    self.run(chosen, used);
                    used[x] = false;
                }
            }
            chosen.pop();
            if self.beaten {
                return;
            }
        }
    }
}

/// Canonical form together with the row and column orders reaching it.
pub fn canonicalize(m: &DegreeMatrix) -> Canonical {
    let mut search = Search {
        m,
        best: None,
        best_rows: Vec::new(),
        identity_probe: false,
        beaten: false,
    };
    search.run(&mut Vec::with_capacity(m.k()), &mut vec![false; m.k()]);
    let row_order = search.best_rows;
    let mut col_order: Vec<usize> = (0..m.n()).collect();
    col_order.sort_by(|&a, &b| {
        row_order
            .iter()
            .map(|&i| m.get(i, a))
            .cmp(row_order.iter().map(|&i| m.get(i, b)))
            .then(a.cmp(&b))
    });
    let matrix = m.permuted(&row_order, &col_order);
    debug_assert_eq!(Some(matrix.entries()), search.best.as_deref());
    Canonical {
        matrix,
        row_order,
        col_order,
    }
}

pub fn canonical_form(m: &DegreeMatrix) -> DegreeMatrix {
    canonicalize(m).matrix
}

/// True when `m` already is its own canonical form.
pub fn is_canonical(m: &DegreeMatrix) -> bool {
    let identity: Vec<usize> = (0..m.k()).collect();
    let mut own = Vec::new();
    sorted_prefix(m, &identity, &mut own);
    if own != m.entries() {
        return false;
    }
    let mut search = Search {
        m,
        best: Some(own),
        best_rows: identity,
        identity_probe: true,
        beaten: false,
    };
    search.run(&mut Vec::with_capacity(m.k()), &mut vec![false; m.k()]);
    !search.beaten
}

/// Column vectors allowed in a matrix without common leaves: entries at
/// least 1, at most one entry equal to 1, and column sum at most `n - 1`
/// (a vertex of degree `d` in a tree forces `d` leaves elsewhere, and leaves
/// are not shared). Returned in lexicographic order.
pub fn column_types(k: usize, n: usize) -> Vec<Vec<Degree>> {
    fn rec(k: usize, budget: i64, ones: usize, cur: &mut Vec<Degree>, out: &mut Vec<Vec<Degree>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let left_after = (k - cur.len() - 1) as i64;
        // the other entries need at least 2 each, except one that may be 1
        let floor_after = 2 * left_after - if ones == 0 && left_after > 0 { 1 } else { 0 };
        let mut d: Degree = if ones == 0 { 1 } else { 2 };
        while (d as i64) + floor_after.max(0) <= budget {
            cur.push(d);
            rec(k, budget - d as i64, ones + usize::from(d == 1), cur, out);
            cur.pop();
            d += 1;
        }
    }
    let mut out = Vec::new();
    rec(k, n as i64 - 1, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

struct Generator<'a> {
    k: usize,
    n: usize,
    types: &'a [Vec<Degree>],
    /// `excess[t][i]` is `types[t][i] - 1`.
    excess: Vec<Vec<u32>>,
}

impl Generator<'_> {
    /// Necessary conditions for completing `cols_left` more columns, each of
    /// type at least `floor` (so with row-0 entry at least `types[floor][0]`).
    fn feasible(&self, remaining: &[u32], leaves: &[u32], cols_left: usize, floor: usize) -> bool {
        let total: u64 = remaining.iter().map(|&r| r as u64).sum();
        if total < (cols_left * (self.k - 1)) as u64 {
            return false;
        }
        let first = self.excess[floor][0] as usize;
        if (remaining[0] as usize) < cols_left * first {
            return false;
        }
        // row i needs at least cols_left - R_i more leaves, one per column
        let zeros = |i: usize| cols_left.saturating_sub(remaining[i] as usize);
        let zeros_needed: usize = (0..self.k).map(zeros).sum();
        if zeros_needed > cols_left {
            return false;
        }
        // once row 0 has all its leaves, no other row may end with more
        first == 0 || (1..self.k).all(|i| leaves[i] as usize + zeros(i) <= leaves[0] as usize)
    }

    /// Memo key for a search state, when it fits in 128 bits.
    fn key(&self, start: usize, cols_left: usize, remaining: &[u32], leaves: &[u32]) -> Option<u128> {
        let small = remaining.iter().chain(leaves).all(|&r| r < 256);
        if 24 + 16 * self.k > 128 || start >= 1 << 16 || !small {
            return None;
        }
        let mut key = (start as u128) << 8 | cols_left as u128;
        for (&r, &l) in remaining.iter().zip(leaves) {
            key = key << 16 | (r as u128) << 8 | l as u128;
        }
        Some(key)
    }

    /// Extends `chosen` by types `>= start`. Returns whether any completion
    /// exists, canonical or not; states without one are remembered in `dead`.
    fn dfs(
        &self,
        start: usize,
        chosen: &mut Vec<usize>,
        remaining: &mut [u32],
        leaves: &mut [u32],
        dead: &mut HashSet<u128>,
        emit: &mut dyn FnMut(DegreeMatrix),
    ) -> bool {
        let cols_left = self.n - chosen.len();
        if cols_left == 0 {
            if remaining.iter().any(|&r| r != 0) {
                return false;
            }
            let mut entries = Vec::with_capacity(self.k * self.n);
            for i in 0..self.k {
                entries.extend(chosen.iter().map(|&t| self.types[t][i]));
            }
            let m = DegreeMatrix::from_entries(self.k, self.n, entries);
            if is_canonical(&m) {
                emit(m);
            }
            return true;
        }
        let key = self.key(start, cols_left, remaining, leaves);
        if key.is_some_and(|k| dead.contains(&k)) {
            return false;
        }
        let mut any = false;
        for t in start..self.types.len() {
            let ex = &self.excess[t];
            if ex.iter().zip(remaining.iter()).any(|(&e, &r)| e > r) {
                continue;
            }
            self.apply(t, remaining, leaves, false);
            if self.feasible(remaining, leaves, cols_left - 1, t) {
                chosen.push(t);
                any |= self.dfs(t, chosen, remaining, leaves, dead, emit);
                chosen.pop();
            }
            self.apply(t, remaining, leaves, true);
        }
        if !any {
            if let Some(k) = key {
                dead.insert(k);
            }
        }
        any
    }

    fn apply(&self, t: usize, remaining: &mut [u32], leaves: &mut [u32], undo: bool) {
        for ((r, l), &e) in remaining.iter_mut().zip(leaves.iter_mut()).zip(&self.excess[t]) {
            if undo {
                *r += e;
                *l -= u32::from(e == 0);
            } else {
                *r -= e;
                *l += u32::from(e == 0);
            }
        }
    }

    fn partition(&self, first: usize, emit: &mut dyn FnMut(DegreeMatrix)) {
        let mut remaining = vec![(self.n - 2) as u32; self.k];
        let mut leaves = vec![0; self.k];
        if self.excess[first].iter().any(|&e| e > (self.n - 2) as u32) {
            return;
        }
        self.apply(first, &mut remaining, &mut leaves, false);
        if !self.feasible(&remaining, &leaves, self.n - 1, first) {
            return;
        }
        let mut chosen = vec![first];
        self.dfs(first, &mut chosen, &mut remaining, &mut leaves, &mut HashSet::new(), emit);
    }
}

fn with_generator<R>(k: usize, n: usize, f: impl FnOnce(&Generator<'_>) -> R) -> R {
    let types = column_types(k, n);
    let excess = types.iter().map(|t| t.iter().map(|&d| d - 1).collect()).collect();
    f(&Generator {
        k,
        n,
        types: &types,
        excess,
    })
}

/// Every canonical class of `k` tree degree sequences on `n` vertices
/// without common leaves, each once, in increasing canonical order.
///
/// Returns nothing when `n < 2k` or `k == 0`; such tuples do not exist.
pub fn enumerate_tuples(k: usize, n: usize) -> Vec<DegreeMatrix> {
    if k == 0 || n < 2 * k.max(1) {
        return Vec::new();
    }
    let mut all: Vec<DegreeMatrix> = with_generator(k, n, |g| {
        (0..g.types.len())
            .into_par_iter()
            .flat_map_iter(|first| {
                let mut found = Vec::new();
                g.partition(first, &mut |m| found.push(m));
                found
            })
            .collect()
    });
    all.sort_unstable();
    all
}

/// Number of classes for one `(k, n)` without materializing them.
pub fn count_classes(k: usize, n: usize) -> u64 {
    if k == 0 || n < 2 * k {
        return 0;
    }
    with_generator(k, n, |g| {
        (0..g.types.len())
            .into_par_iter()
            .map(|first| {
                let mut count = 0u64;
                g.partition(first, &mut |_| count += 1);
                count
            })
            .sum()
    })
}

/// Per-`n` class counts for `2k <= n <= n_max`.
pub fn count_tuples(k: usize, n_max: usize) -> BTreeMap<usize, u64> {
    (2 * k..=n_max).map(|n| (n, count_classes(k, n))).collect()
}
