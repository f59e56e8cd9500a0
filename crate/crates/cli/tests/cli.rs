use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;
use treepack::degseq::DegreeMatrix;
use treepack::egraph::io as graphio;
use treepack::fixtures;

fn treepack(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_treepack")).args(args).output().expect("spawn treepack")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn write(dir: &TempDir, name: &str, content: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, content).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn case_matrix(dir: &TempDir, number: usize) -> PathBuf {
    write(dir, &format!("case{number}.txt"), &fixtures::case(number).matrix.to_string())
}

fn case_graph(dir: &TempDir, number: usize) -> PathBuf {
    write(dir, &format!("case{number}.adj"), &fixtures::case(number).adjacency)
}

/// First generated matrix for the given shape, via the `gen` subcommand.
fn generated(dir: &TempDir, k: usize, n: usize, never: usize, seed: u64) -> PathBuf {
    let p = dir.path().join(format!("gen-{k}-{n}-{never}-{seed}.txt"));
    let o = treepack(&[
        "gen", "--k", &k.to_string(), "--n", &n.to_string(), "--min-never-leaves", &never.to_string(),
        "--seed", &seed.to_string(), "-o", s(&p),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    p
}

#[test]
fn check_case_1() {
    let dir = TempDir::new().unwrap();
    let o = treepack(&["check", s(&case_matrix(&dir, 1))]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("valid, no common leaves, 0 never-leaves, sum graphical, k=4 eligible"), "{out}");
}

#[test]
fn check_reports_common_leaf() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "shared.txt", "2 4\n1 2 2 1\n1 1 2 2\n");
    let o = treepack(&["check", s(&p)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("common leaf: vertex 1 is a leaf in rows 1, 2"), "{}", stdout(&o));
}

#[test]
fn check_never_leaves_line() {
    let dir = TempDir::new().unwrap();
    let p = generated(&dir, 5, 16, 6, 3);
    let o = treepack(&["check", s(&p)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("never-leaves builder eligible (6 ≥ 2k−4 = 6)"), "{}", stdout(&o));
}

#[test]
fn check_reports_parse_position() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "bad.txt", "2 4\n1 2 2 1\n2 x 1 2\n");
    let o = treepack(&["check", s(&p)]);
    assert_eq!(code(&o), 1);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 3, column 3"), "{err}");
}

#[test]
fn realize_case_7_uses_the_table() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("g.adj");
    let o = treepack(&["realize", s(&case_matrix(&dir, 7)), "-o", s(&out)]);
    assert_eq!(code(&o), 0);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("strategy: quartet, peel depth: 0, base: base case 7"), "{err}");
    let v = treepack(&["verify", s(&case_matrix(&dir, 7)), s(&out)]);
    assert_eq!(code(&v), 0);
}

#[test]
fn realize_thirty_vertex_quartet() {
    let dir = TempDir::new().unwrap();
    let m = generated(&dir, 4, 30, 0, 1);
    let out = dir.path().join("g.txt");
    let o = treepack(&["realize", s(&m), "--format", "edge-list", "-o", s(&out)]);
    assert_eq!(code(&o), 0);
    let err = String::from_utf8_lossy(&o.stderr);
    let depth: usize = err.split("peel depth: ").nth(1).unwrap().split(',').next().unwrap().parse().unwrap();
    assert!((1..=20).contains(&depth), "{err}");
    assert_eq!(code(&treepack(&["verify", s(&m), s(&out)])), 0);
}

#[test]
fn never_leaves_hypothesis_failure() {
    let dir = TempDir::new().unwrap();
    let m = generated(&dir, 6, 14, 2, 0);
    let check = stdout(&treepack(&["check", s(&m)]));
    assert!(check.contains("2 never-leaves"), "{check}");
    let o = treepack(&["realize", s(&m), "--strategy", "never-leaves"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains('8'));
}

#[test]
fn unknown_strategy_is_usage() {
    let dir = TempDir::new().unwrap();
    let o = treepack(&["realize", s(&case_matrix(&dir, 1)), "--strategy", "magic"]);
    assert_eq!(code(&o), 64);
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(code(&treepack(&["frobnicate"])), 64);
    assert_eq!(code(&treepack(&["enumerate", "--k", "4"])), 64);
    assert_eq!(code(&treepack(&["enumerate", "--k", "4", "--n", "9..3"])), 64);
    assert_eq!(code(&treepack(&["--help"])), 0);
}

#[test]
fn verify_fixture_pairs() {
    let dir = TempDir::new().unwrap();
    let m11 = case_matrix(&dir, 11);
    assert_eq!(code(&treepack(&["verify", s(&m11), s(&case_graph(&dir, 11))])), 0);

    let o = treepack(&["verify", s(&m11), s(&case_graph(&dir, 12))]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.lines().count() >= 1 && out.contains("degree"), "{out}");
}

#[test]
fn verify_missing_edge() {
    let dir = TempDir::new().unwrap();
    let case = fixtures::case(11);
    let list = graphio::emit_edge_list(&case.graph);
    let mut lines: Vec<&str> = list.lines().collect();
    lines.pop();
    let g = write(&dir, "short.txt", &(lines.join("\n") + "\n"));
    let o = treepack(&["verify", s(&case_matrix(&dir, 11)), s(&g)]);
    assert_eq!(code(&o), 1);
    assert!(!stdout(&o).is_empty());
}

#[test]
fn enumerate_counts() {
    let o = treepack(&["enumerate", "--k", "4", "--n", "8..=10", "--count"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "8 1\n9 2\n10 11\n");
}

#[test]
fn enumerated_classes_read_back() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("classes.txt");
    assert_eq!(code(&treepack(&["enumerate", "--k", "4", "--n", "10", "-o", s(&out)])), 0);
    let text = std::fs::read_to_string(&out).unwrap();
    let blocks: Vec<&str> = text.split("\n\n").filter(|b| !b.trim().is_empty()).collect();
    assert_eq!(blocks.len(), 11);
    for (i, b) in blocks.iter().enumerate() {
        let p = write(&dir, &format!("c{i}.txt"), b);
        assert_eq!(code(&treepack(&["check", s(&p)])), 0);
        let g = dir.path().join(format!("c{i}.adj"));
        assert_eq!(code(&treepack(&["realize", s(&p), "-o", s(&g)])), 0);
        assert_eq!(code(&treepack(&["verify", s(&p), s(&g)])), 0);
    }
}

#[test]
fn sweep_five_trees_to_12() {
    let o = treepack(&["sweep", "--k", "5", "--n-max", "12", "--acceptance"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    assert!(out.starts_with("n\tclasses\trealized\tnone\texceeded\n"), "{out}");
    let total: Vec<&str> = out.lines().last().unwrap().split('\t').collect();
    assert_eq!(total[0], "total");
    assert_eq!(total[1], total[2]);
}

#[test]
fn sweep_builder_with_checkpoint() {
    let dir = TempDir::new().unwrap();
    let ck = dir.path().join("ck.txt");
    let o = treepack(&["sweep", "--k", "4", "--n-max", "11", "--builder", "--checkpoint", s(&ck), "--acceptance"]);
    assert_eq!(code(&o), 0);
    assert!(ck.exists());
    let again = treepack(&["sweep", "--k", "4", "--n-max", "11", "--builder", "--checkpoint", s(&ck)]);
    assert_eq!(code(&again), 0);
    assert!(stdout(&again).lines().last().unwrap().starts_with("total\t0\t"));
}

#[test]
fn sweep_budget_exhaustion_exits_3() {
    let o = treepack(&["sweep", "--k", "4", "--n-max", "10", "--budget", "1", "--acceptance"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn gen_output_reads_back() {
    let dir = TempDir::new().unwrap();
    let json = dir.path().join("m.json");
    assert_eq!(code(&treepack(&["gen", "--k", "3", "--n", "12", "--json", "-o", s(&json)])), 0);
    assert_eq!(code(&treepack(&["check", s(&json)])), 0);
    let text = dir.path().join("m.txt");
    assert_eq!(code(&treepack(&["gen", "--k", "3", "--n", "12", "-o", s(&text)])), 0);
    let a = treepack::degseq::io::parse(&std::fs::read_to_string(&json).unwrap()).unwrap();
    let b: DegreeMatrix = treepack::degseq::io::parse(&std::fs::read_to_string(&text).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn outputs_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let m = generated(&dir, 5, 25, 6, 24);
    let runs: Vec<Vec<u8>> = (0..2).map(|_| treepack(&["realize", s(&m), "--format", "edge-list"]).stdout).collect();
    assert!(!runs[0].is_empty());
    assert_eq!(runs[0], runs[1]);
    for args in [
        vec!["gen", "--k", "4", "--n", "20", "--seed", "9", "--count", "5"],
        vec!["enumerate", "--k", "3", "--n", "6..=9"],
        vec!["sweep", "--k", "4", "--n-max", "10", "--builder"],
    ] {
        assert_eq!(treepack(&args).stdout, treepack(&args).stdout, "{args:?}");
    }
}
