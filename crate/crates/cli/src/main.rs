use std::fs;
use std::io::{self, Read, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use treepack::construct::{never_leaves_needed, QUINTET_MIN_BASE};
use treepack::degseq::{self, count_never_leaves, erdos_gallai_graphical, sum_sequence, DegreeMatrix};
use treepack::egraph::io::{self as graphio, GraphFormat};
use treepack::egraph::{verify_edges, verify_realization};
use treepack::enumerate::{count_classes, enumerate_tuples};
use treepack::gen::random_matrix;
use treepack::oracle::DEFAULT_BUDGET;
use treepack::strategy::{FailureClass, Registry, StrategyConfig, AUTO};
use treepack::sweep::{run_sweep, SweepMode, SweepOptions};

mod exit {
    pub const INVALID: u8 = 1;
    pub const HYPOTHESIS: u8 = 2;
    pub const BUDGET: u8 = 3;
    pub const USAGE: u8 = 64;
}

#[derive(Parser)]
#[command(name = "treepack", version, about = "Edge-disjoint spanning tree realizations of degree matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report validity, common leaves, never-leaves and builder eligibility.
    Check {
        /// Degree matrix file (text or JSON), `-` for stdin.
        matrix: PathBuf,
    },
    /// Build a realization and write it out.
    Realize {
        matrix: PathBuf,
        /// Strategy name, or `auto` for the first applicable one.
        #[arg(long, default_value = AUTO)]
        strategy: String,
        #[arg(long, value_enum, default_value_t = Format::Adjacency)]
        format: Format,
        /// Output file; stdout when omitted.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Node budget for exhaustive search.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Largest n solved by exhaustive search in the k = 5 builder.
        #[arg(long, default_value_t = QUINTET_MIN_BASE)]
        base_limit: usize,
    },
    /// Check a realization against a degree matrix.
    Verify {
        matrix: PathBuf,
        /// Adjacency color matrix or edge list; the format is detected.
        graph: PathBuf,
    },
    /// Emit canonical classes, or their counts.
    Enumerate {
        #[arg(long)]
        k: usize,
        /// A single n or an inclusive range `a..b`.
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        /// Print `n count` lines instead of the classes.
        #[arg(long)]
        count: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Realize and verify every class up to `n-max`.
    Sweep {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Worker threads; 0 means one per core.
        #[arg(long, env = "TREEPACK_JOBS", default_value_t = 0)]
        jobs: usize,
        /// Use a builder strategy instead of the exhaustive search.
        #[arg(long, num_args = 0..=1, default_missing_value = AUTO)]
        builder: Option<String>,
        #[arg(long, default_value_t = QUINTET_MIN_BASE)]
        base_limit: usize,
        /// Resume from, and record progress in, this file.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Fail unless every class is realized.
        #[arg(long)]
        acceptance: bool,
    },
    /// Random valid matrices without common leaves.
    Gen {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        min_never_leaves: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long)]
        json: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Adjacency,
    EdgeList,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = |_| format!("expected N or A..B, got {s:?}");
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b): (usize, usize) = (a.trim().parse().map_err(bad)?, b.trim().parse().map_err(bad)?);
            if a > b {
                return Err(format!("empty range {s:?}"));
            }
            Ok(a..=b)
        }
        None => {
            let n = s.trim().parse().map_err(bad)?;
            Ok(n..=n)
        }
    }
}

/// A failure carrying its exit status.
struct Failure {
    code: u8,
    message: String,
}

type Outcome = Result<(), Failure>;

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        fail(exit::INVALID, format!("{e:#}"))
    }
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_matrix(path: &Path) -> anyhow::Result<DegreeMatrix> {
    let text = read_input(path)?;
    degseq::io::parse(&text).with_context(|| format!("{}", path.display()))
}

fn write_output(path: Option<&Path>, content: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, content).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(content.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn check(path: &Path) -> Outcome {
    let m = read_matrix(path)?;
    if let Err(e) = m.validate_trees() {
        return Err(fail(exit::INVALID, format!("invalid: {e}")));
    }
    let (k, n) = (m.k(), m.n());
    let witnesses: Vec<String> = (0..n)
        .filter_map(|v| {
            let rows: Vec<String> = (0..k).filter(|&i| m.get(i, v) == 1).map(|i| (i + 1).to_string()).collect();
            (rows.len() > 1).then(|| format!("vertex {} is a leaf in rows {}", v + 1, rows.join(", ")))
        })
        .collect();
    let never = count_never_leaves(&m);
    let graphical = erdos_gallai_graphical(&sum_sequence(&m).degrees());
    let needed = never_leaves_needed(k);
    let clean = witnesses.is_empty();
    let mut eligible = Vec::new();
    if clean && k == 4 {
        eligible.push("k=4 eligible");
    }
    if clean && never >= needed {
        eligible.push("never-leaves eligible");
    }
    if clean && k == 5 {
        eligible.push("k=5 eligible");
    }
    let mut summary = vec![
        "valid".to_string(),
        if clean { "no common leaves".into() } else { format!("{} common leaves", witnesses.len()) },
        format!("{never} never-leaves"),
        if graphical { "sum graphical".into() } else { "sum not graphical".into() },
    ];
    summary.extend(eligible.iter().map(|s| s.to_string()));
    println!("{}", summary.join(", "));
    println!("size: k={k} n={n}");
    for w in &witnesses {
        println!("common leaf: {w}");
    }
    if clean {
        println!("k=4 builder {}", if k == 4 { "eligible" } else { "not eligible (k != 4)" });
        if never >= needed {
            println!("never-leaves builder eligible ({never} ≥ 2k−4 = {needed})");
        } else {
            println!("never-leaves builder not eligible ({never} < 2k−4 = {needed})");
        }
        println!("k=5 builder {}", if k == 5 { "eligible" } else { "not eligible (k != 5)" });
        Ok(())
    } else {
        Err(fail(exit::INVALID, "matrix has common leaves"))
    }
}

fn realize(
    path: &Path,
    strategy: &str,
    format: Format,
    output: Option<&Path>,
    cfg: StrategyConfig,
) -> Outcome {
    let m = read_matrix(path)?;
    let registry = Registry::default();
    if strategy != AUTO && registry.get(strategy).is_none() {
        let names: Vec<&str> = registry.names().collect();
        return Err(fail(exit::USAGE, format!("unknown strategy {strategy:?}; known: auto, {}", names.join(", "))));
    }
    let out = registry.realize(strategy, &m, &cfg).map_err(|e| {
        let code = match e.class() {
            FailureClass::Invalid => exit::INVALID,
            FailureClass::Hypothesis => exit::HYPOTHESIS,
            FailureClass::Budget => exit::BUDGET,
        };
        fail(code, e.to_string())
    })?;
    let report = verify_realization(&out.realization.graph, &m).map_err(anyhow::Error::from)?;
    if !report.ok() {
        return Err(fail(exit::INVALID, format!("internal error: {} produced an invalid realization", out.strategy)));
    }
    let format = match format {
        Format::Adjacency => GraphFormat::Adjacency,
        Format::EdgeList => GraphFormat::EdgeList,
    };
    write_output(output, &graphio::emit(&out.realization.graph, format))?;
    eprintln!(
        "strategy: {}, peel depth: {}, base: {}",
        out.strategy, out.realization.peel_depth, out.realization.base
    );
    Ok(())
}

fn verify(matrix: &Path, graph: &Path) -> Outcome {
    let m = read_matrix(matrix)?;
    let text = read_input(graph)?;
    let ctx = || format!("{}", graph.display());
    let report = match GraphFormat::detect(&text) {
        GraphFormat::Adjacency => {
            let g = graphio::parse_adjacency_color_matrix(&text, Some(m.k())).with_context(ctx)?;
            verify_realization(&g, &m).map_err(anyhow::Error::from)?
        }
        GraphFormat::EdgeList => {
            let list = graphio::parse_edge_list(&text).with_context(ctx)?;
            verify_edges(list.n, list.k, &list.edges, &m).map_err(anyhow::Error::from)?
        }
    };
    if report.ok() {
        println!("ok");
        Ok(())
    } else {
        for f in &report.failures {
            println!("{f}");
        }
        Err(fail(exit::INVALID, format!("{} problems found", report.failures.len())))
    }
}

fn enumerate(k: usize, ns: RangeInclusive<usize>, count: bool, output: Option<&Path>) -> Outcome {
    if k == 0 {
        return Err(fail(exit::USAGE, "k must be at least 1"));
    }
    let mut out = String::new();
    for n in ns {
        if count {
            out.push_str(&format!("{n} {}\n", count_classes(k, n)));
        } else {
            for m in enumerate_tuples(k, n) {
                if !out.is_empty() {
                    out.push('\n');
                }
                out.push_str(&m.to_string());
            }
        }
    }
    write_output(output, &out)?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn sweep(
    k: usize,
    n_max: usize,
    budget: u64,
    jobs: usize,
    builder: Option<String>,
    base_limit: usize,
    checkpoint: Option<PathBuf>,
    acceptance: bool,
) -> Outcome {
    if k == 0 {
        return Err(fail(exit::USAGE, "k must be at least 1"));
    }
    let mode = match builder {
        None => SweepMode::Oracle { budget },
        Some(strategy) => {
            if strategy != AUTO && Registry::default().get(&strategy).is_none() {
                return Err(fail(exit::USAGE, format!("unknown strategy {strategy:?}")));
            }
            SweepMode::Builder {
                strategy,
                config: StrategyConfig {
                    oracle_budget: budget,
                    base_limit,
                },
            }
        }
    };
    let mut opts = SweepOptions::new(k, n_max, mode);
    opts.jobs = jobs;
    opts.checkpoint = checkpoint;
    let report = run_sweep(&opts).map_err(anyhow::Error::from)?;
    if let Some(m) = &report.resumed_after {
        eprintln!("resumed after class\n{m}");
    }
    print!("{}", report.to_tsv());
    let rows = &report.rows;
    let total: u64 = report.total_classes();
    let realized: u64 = rows.iter().map(|r| r.realized).sum();
    let exceeded: u64 = rows.iter().map(|r| r.exceeded).sum();
    println!("total\t{total}\t{realized}\t{}\t{exceeded}", total - realized - exceeded);
    if acceptance && realized != total {
        let code = if exceeded > 0 { exit::BUDGET } else { exit::INVALID };
        return Err(fail(code, format!("{} of {total} classes not realized", total - realized)));
    }
    Ok(())
}

fn gen(k: usize, n: usize, seed: u64, min_never: usize, count: usize, json: bool, output: Option<&Path>) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = String::new();
    for i in 0..count {
        let Some(m) = random_matrix(&mut rng, k, n, min_never) else {
            return Err(fail(exit::USAGE, format!("no matrix with k={k}, n={n} has {min_never} never-leaves")));
        };
        if json {
            out.push_str(&degseq::io::to_json(&m));
            out.push('\n');
        } else {
            if i > 0 {
                out.push('\n');
            }
            out.push_str(&m.to_string());
        }
    }
    write_output(output, &out)?;
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Check { matrix } => check(&matrix),
        Command::Realize {
            matrix,
            strategy,
            format,
            output,
            budget,
            base_limit,
        } => realize(
            &matrix,
            &strategy,
            format,
            output.as_deref(),
            StrategyConfig {
                oracle_budget: budget,
                base_limit,
            },
        ),
        Command::Verify { matrix, graph } => verify(&matrix, &graph),
        Command::Enumerate { k, n, count, output } => enumerate(k, n, count, output.as_deref()),
        Command::Sweep {
            k,
            n_max,
            budget,
            jobs,
            builder,
            base_limit,
            checkpoint,
            acceptance,
        } => sweep(k, n_max, budget, jobs, builder, base_limit, checkpoint, acceptance),
        Command::Gen {
            k,
            n,
            seed,
            min_never_leaves,
            count,
            json,
            output,
        } => gen(k, n, seed, min_never_leaves, count, json, output.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(exit::USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
