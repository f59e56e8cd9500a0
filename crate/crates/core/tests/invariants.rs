//! Property tests over degree sequences, matrices, canonical forms and
//! file formats.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use treepack::degseq::{
    count_never_leaves, eg_tail_bound_holds, erdos_gallai_graphical, find_common_leaves, io as degio, sum_sequence,
    Degree, DegreeMatrix,
};
use treepack::egraph::io as graphio;
use treepack::enumerate::{canonical_form, canonicalize, is_canonical};
use treepack::fixtures;
use treepack::gen::random_matrix;

/// Havel–Hakimi: repeatedly satisfy the largest degree from the next largest.
fn havel_hakimi(seq: &[Degree]) -> bool {
    let mut d: Vec<i64> = seq.iter().map(|&x| x as i64).collect();
    loop {
        d.sort_unstable_by(|a, b| b.cmp(a));
        if d.is_empty() || d[0] == 0 {
            return true;
        }
        let top = d.remove(0) as usize;
        if top > d.len() {
            return false;
        }
        for x in d.iter_mut().take(top) {
            *x -= 1;
            if *x < 0 {
                return false;
            }
        }
    }
}

/// A tree degree sequence on `n` vertices from a random excess split.
fn tree_row() -> impl Strategy<Value = Vec<Degree>> {
    (2usize..=12).prop_flat_map(|n| {
        prop::collection::vec(0usize..n, n - 2).prop_map(move |slots| {
            let mut row = vec![1 as Degree; n];
            for s in slots {
                row[s] += 1;
            }
            row
        })
    })
}

/// Tree degree matrices of a shared width, common leaves allowed.
fn tree_matrix() -> impl Strategy<Value = DegreeMatrix> {
    (1usize..=5, 2usize..=12).prop_flat_map(|(k, n)| {
        prop::collection::vec(prop::collection::vec(0usize..n, n - 2), k).prop_map(move |rows| {
            let rows = rows
                .into_iter()
                .map(|slots| {
                    let mut row = vec![1 as Degree; n];
                    for s in slots {
                        row[s] += 1;
                    }
                    row
                })
                .collect();
            DegreeMatrix::from_rows(rows).unwrap()
        })
    })
}

/// Matrices without common leaves, from the seeded generator.
fn clean_matrix() -> impl Strategy<Value = DegreeMatrix> {
    (1usize..=6, any::<u64>()).prop_flat_map(|(k, seed)| {
        (2 * k..=30).prop_map(move |n| random_matrix(&mut ChaCha8Rng::seed_from_u64(seed), k, n, 0).unwrap())
    })
}

fn permutation(len: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..len).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn eg_matches_havel_hakimi(seq in prop::collection::vec(0 as Degree..10, 0..=8)) {
        prop_assert_eq!(erdos_gallai_graphical(&seq), havel_hakimi(&seq));
    }

    #[test]
    fn tree_rows_are_graphical(row in tree_row()) {
        prop_assert!(erdos_gallai_graphical(&row));
    }

    #[test]
    fn tail_bound_from_2k(m in tree_matrix()) {
        for s in (2 * m.k()).max(1)..=m.n() {
            prop_assert!(eg_tail_bound_holds(&m, s), "s = {}\n{}", s, m);
        }
    }

    #[test]
    fn column_sums_without_common_leaves(m in clean_matrix()) {
        prop_assert!(find_common_leaves(&m).is_none());
        for v in 0..m.n() {
            let f = m.column_sum(v);
            prop_assert!(f >= 2 * m.k() as u64 - 1);
            prop_assert!(f < m.n() as u64);
        }
        prop_assert!(erdos_gallai_graphical(&sum_sequence(&m).degrees()));
    }

    #[test]
    fn text_and_json_round_trip(m in tree_matrix()) {
        prop_assert_eq!(degio::parse(&m.to_string()).unwrap(), m.clone());
        prop_assert_eq!(degio::parse(&degio::to_json(&m)).unwrap(), m);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn canonical_form_is_idempotent(m in tree_matrix()) {
        let c = canonical_form(&m);
        prop_assert!(is_canonical(&c));
        prop_assert_eq!(canonical_form(&c), c);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn canonical_form_ignores_relabeling(
        (m, rows, cols) in tree_matrix().prop_flat_map(|m| {
            let (k, n) = (m.k(), m.n());
            (Just(m), permutation(k), permutation(n))
        })
    ) {
        let p = m.permuted(&rows, &cols);
        prop_assert_eq!(canonical_form(&p), canonical_form(&m));
        let c = canonicalize(&p);
        prop_assert_eq!(p.permuted(&c.row_order, &c.col_order), c.matrix);
        prop_assert_eq!(count_never_leaves(&p), count_never_leaves(&m));
    }
}

#[test]
fn eg_matches_havel_hakimi_exhaustively() {
    fn rec(n: usize, max: Degree, cur: &mut Vec<Degree>) {
        assert_eq!(erdos_gallai_graphical(cur), havel_hakimi(cur), "{cur:?}");
        if cur.len() == n {
            return;
        }
        for d in 0..=max {
            cur.push(d);
            rec(n, d, cur);
            cur.pop();
        }
    }
    rec(8, 8, &mut Vec::new());
}

#[test]
fn fixture_adjacency_round_trip() {
    for case in fixtures::all() {
        let text = graphio::emit_adjacency_color_matrix(&case.graph);
        assert_eq!(text.trim(), case.adjacency.trim(), "case {}", case.number);
        let back = graphio::parse_adjacency_color_matrix(&text, Some(4)).unwrap();
        assert_eq!(back, case.graph);
        let list = graphio::emit_edge_list(&case.graph);
        assert_eq!(graphio::parse_edge_list(&list).unwrap().into_graph().unwrap(), case.graph);
    }
}
