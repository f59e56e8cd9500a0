//! Realize-and-verify sweeps over enumerated classes, with checkpointing.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use thiserror::Error;

use crate::degseq::{io as degio, DegreeMatrix};
use crate::egraph::verify_realization;
use crate::enumerate::enumerate_tuples;
use crate::error::{BuildError, ParseError};
pub use crate::oracle::SweepRow;
use crate::oracle::{exhaustive_realize, OracleOutcome};
use crate::strategy::{Registry, StrategyConfig};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SweepMode {
    Oracle { budget: u64 },
    /// A registered strategy name, or `auto`.
    Builder { strategy: String, config: StrategyConfig },
}

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub k: usize,
    pub n_max: usize,
    pub mode: SweepMode,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    pub checkpoint: Option<PathBuf>,
    /// Classes processed between checkpoint writes.
    pub chunk: usize,
}

impl SweepOptions {
    pub fn new(k: usize, n_max: usize, mode: SweepMode) -> Self {
        SweepOptions {
            k,
            n_max,
            mode,
            jobs: 0,
            checkpoint: None,
            chunk: 4096,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
    /// Classes up to and including this one were skipped.
    pub resumed_after: Option<DegreeMatrix>,
}

impl SweepReport {
    pub fn all_realized(&self) -> bool {
        self.rows.iter().all(SweepRow::all_realized)
    }

    pub fn total_classes(&self) -> u64 {
        self.rows.iter().map(|r| r.classes).sum()
    }

    /// Tab-separated table with a header line.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("n\tclasses\trealized\tnone\texceeded\n");
        for row in &self.rows {
            out.push_str(&format!("{row}\n"));
        }
        out
    }
}

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("checkpoint {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("checkpoint {path}: {source}")]
    Checkpoint { path: PathBuf, source: ParseError },
    #[error("checkpoint is for k = {found}, sweep has k = {expected}")]
    CheckpointShape { found: usize, expected: usize },
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

#[derive(Clone, Copy)]
enum Verdict {
    Realized,
    None,
    Exceeded,
}

fn judge(m: &DegreeMatrix, mode: &SweepMode, registry: &Registry) -> Verdict {
    let graph = match mode {
        SweepMode::Oracle { budget } => match exhaustive_realize(m, *budget) {
            Ok(OracleOutcome::Realized(g)) => g,
            Ok(OracleOutcome::BudgetExceeded) => return Verdict::Exceeded,
            _ => return Verdict::None,
        },
        SweepMode::Builder { strategy, config } => match registry.realize(strategy, m, config) {
            Ok(out) => out.realization.graph,
            Err(BuildError::OracleTimeout(_)) => return Verdict::Exceeded,
            Err(_) => return Verdict::None,
        },
    };
    match verify_realization(&graph, m) {
        Ok(r) if r.ok() => Verdict::Realized,
        _ => Verdict::None,
    }
}

pub fn read_checkpoint(path: &Path) -> Result<Option<DegreeMatrix>, SweepError> {
    match fs::read_to_string(path) {
        Ok(text) => degio::parse_text(&text).map(Some).map_err(|source| SweepError::Checkpoint {
            path: path.to_owned(),
            source,
        }),
        Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(None),
        Err(source) => Err(SweepError::Io {
            path: path.to_owned(),
            source,
        }),
    }
}

/// Writes through a temporary file and a rename, so a crash leaves either
/// the old or the new checkpoint.
pub fn write_checkpoint(path: &Path, m: &DegreeMatrix) -> Result<(), SweepError> {
    let io_err = |source| SweepError::Io {
        path: path.to_owned(),
        source,
    };
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, m.to_string()).map_err(io_err)?;
    fs::rename(&tmp, path).map_err(io_err)
}

/// Realizes and verifies every class for `2k <= n <= n_max`, in enumeration
/// order. A realization only counts once it passes the verifier; builder
/// errors other than budget exhaustion count as `none`.
pub fn run_sweep(opts: &SweepOptions) -> Result<SweepReport, SweepError> {
    let resume = match &opts.checkpoint {
        Some(path) => read_checkpoint(path)?,
        None => None,
    };
    if let Some(m) = &resume {
        if m.k() != opts.k {
            return Err(SweepError::CheckpointShape {
                found: m.k(),
                expected: opts.k,
            });
        }
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.jobs).build()?;
    let registry = Registry::default();
    let mut report = SweepReport {
        rows: Vec::new(),
        resumed_after: resume.clone(),
    };
    for n in 2 * opts.k..=opts.n_max {
        if resume.as_ref().is_some_and(|m| m.n() > n) {
            continue;
        }
        let classes: Vec<DegreeMatrix> = pool
            .install(|| enumerate_tuples(opts.k, n))
            .into_iter()
            .filter(|m| resume.as_ref().is_none_or(|r| m > r))
            .collect();
        let mut row = SweepRow {
            n,
            classes: classes.len() as u64,
            ..SweepRow::default()
        };
        for chunk in classes.chunks(opts.chunk.max(1)) {
            let verdicts: Vec<Verdict> =
                pool.install(|| chunk.par_iter().map(|m| judge(m, &opts.mode, &registry)).collect());
            for v in verdicts {
                match v {
                    Verdict::Realized => row.realized += 1,
                    Verdict::None => row.none += 1,
                    Verdict::Exceeded => row.exceeded += 1,
                }
            }
            if let (Some(path), Some(last)) = (&opts.checkpoint, chunk.last()) {
                write_checkpoint(path, last)?;
            }
        }
        report.rows.push(row);
    }
    Ok(report)
}
