//! Census driver: generates every triangulation of each order, solves it,
//! and aggregates counts by `γ_c`.
//!
//! Work runs on a dedicated rayon pool of the requested size. Generation
//! parallelizes over parent triangulations and solving over whole graphs;
//! results are collected in canonical-code order, so every output is
//! independent of the number of workers.

mod extremal;
mod io;
mod table1;
mod verify;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use extremal::{find_extremal, ExtremalRecord, Predicate};
pub use io::{read_json, read_rows_csv, write_json, write_rows_csv, ResultsFile, CSV_HEADER};
pub use table1::{compare_table1, oracle_row, Cell, CellDiff, OracleRow, Table1Diff, TABLE1};
pub use verify::{verify_corpus, Property, PropertyReport, PropertyViolation, VerifyOptions};

use crate::embedding::CanonicalCode;
use crate::error::Error;
use crate::generator::{self, Level};
use crate::solvers::{classify, exact_gamma, DominationCertificate};

/// Smallest order in the census (the single 4-vertex triangulation is left
/// out, as it has no row of its own).
pub const CENSUS_MIN_ORDER: usize = 5;
/// Largest order accepted without the long-running flag.
pub const DEFAULT_MAX_ORDER: usize = 13;
/// Largest order accepted at all.
pub const LONG_MAX_ORDER: usize = generator::MAX_ORDER;

/// Triangulation counts of one order, partitioned by `γ_c`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusRow {
    pub n: usize,
    pub total: u64,
    pub counts_by_gamma_c: BTreeMap<usize, u64>,
    /// Seconds spent generating and solving this order.
    pub wall_time: f64,
    /// Set when the run stopped before every graph of this order was solved;
    /// `total` then counts only the solved graphs.
    #[serde(default)]
    pub partial: bool,
}

impl CensusRow {
    pub fn count(&self, gamma_c: usize) -> u64 {
        self.counts_by_gamma_c.get(&gamma_c).copied().unwrap_or(0)
    }

    pub fn is_consistent(&self) -> bool {
        self.counts_by_gamma_c.values().sum::<u64>() == self.total
    }

    fn from_records(n: usize, records: &[GraphRecord], wall_time: f64, partial: bool) -> Self {
        let mut counts = BTreeMap::new();
        for r in records {
            *counts.entry(r.gamma_c.value).or_insert(0) += 1;
        }
        CensusRow {
            n,
            total: records.len() as u64,
            counts_by_gamma_c: counts,
            wall_time,
            partial,
        }
    }
}

/// One solved triangulation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub code: CanonicalCode,
    pub n: usize,
    pub max_degree: usize,
    pub gamma_c: DominationCertificate,
    /// Present only when the census was asked to compute `γ` too.
    pub gamma: Option<DominationCertificate>,
}

impl GraphRecord {
    pub fn solve(code: &CanonicalCode, with_gamma: bool) -> Self {
        let t = code.decode().expect("census codes decode");
        let g = t.underlying_graph();
        GraphRecord {
            code: code.clone(),
            n: t.order(),
            max_degree: g.degree_stats().max_degree,
            gamma_c: classify(&t),
            gamma: with_gamma.then(|| exact_gamma(&g).expect("triangulations are connected")),
        }
    }
}

/// Every solved triangulation of a census, ordered by `(n, code)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corpus {
    pub records: Vec<GraphRecord>,
}

impl Corpus {
    pub fn orders(&self) -> impl Iterator<Item = usize> + '_ {
        let mut last = None;
        self.records.iter().filter_map(move |r| {
            if last == Some(r.n) {
                return None;
            }
            last = Some(r.n);
            Some(r.n)
        })
    }

    pub fn of_order(&self, n: usize) -> &[GraphRecord] {
        let lo = self.records.partition_point(|r| r.n < n);
        let hi = self.records.partition_point(|r| r.n <= n);
        &self.records[lo..hi]
    }

    pub fn has_gamma(&self) -> bool {
        self.records.iter().all(|r| r.gamma.is_some())
    }
}

#[derive(Debug, Clone)]
pub struct CensusConfig {
    pub n_min: usize,
    pub n_max: usize,
    /// Rayon worker threads; `0` lets rayon choose.
    pub workers: usize,
    /// Admit orders above [`DEFAULT_MAX_ORDER`].
    pub long: bool,
    /// Also compute `γ` for every graph.
    pub with_gamma: bool,
    /// Abort, keeping what was solved, once this much time has passed.
    pub time_limit: Option<Duration>,
}

impl CensusConfig {
    pub fn new(n_min: usize, n_max: usize, workers: usize) -> Self {
        CensusConfig {
            n_min,
            n_max,
            workers,
            long: false,
            with_gamma: false,
            time_limit: None,
        }
    }

    fn validate(&self) -> Result<(), Error> {
        let cap = if self.long { LONG_MAX_ORDER } else { DEFAULT_MAX_ORDER };
        if self.n_min < CENSUS_MIN_ORDER || self.n_min > self.n_max {
            return Err(Error::OrderOutOfRange(self.n_min));
        }
        if self.n_max > cap {
            return Err(Error::OrderOutOfRange(self.n_max));
        }
        Ok(())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CensusError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("census stopped early: {reason}")]
    ResourceLimit {
        reason: String,
        /// Rows finished so far; the last one is marked partial when the
        /// limit struck mid-order.
        partial: Vec<CensusRow>,
    },
}

#[derive(Debug, Clone)]
pub struct Census {
    pub rows: Vec<CensusRow>,
    pub corpus: Corpus,
}

pub fn pool(workers: usize) -> Result<rayon::ThreadPool, Error> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidGraph(format!("cannot start worker pool: {e}")))
}

/// Solves every graph of a level, skipping those reached after `deadline`.
fn solve_level(level: &Level, with_gamma: bool, deadline: Option<Instant>) -> (Vec<GraphRecord>, bool) {
    let solved: Vec<Option<GraphRecord>> = level
        .codes
        .par_iter()
        .map(|c| {
            if deadline.is_some_and(|d| Instant::now() >= d) {
                None
            } else {
                Some(GraphRecord::solve(c, with_gamma))
            }
        })
        .collect();
    let complete = solved.iter().all(Option::is_some);
    (solved.into_iter().flatten().collect(), complete)
}

/// Generates and solves orders `n_min..=n_max`.
pub fn run(config: &CensusConfig) -> Result<Census, CensusError> {
    config.validate()?;
    let start = Instant::now();
    let deadline = config.time_limit.map(|d| start + d);
    pool(config.workers)?.install(|| {
        let mut rows = Vec::new();
        let mut corpus = Corpus::default();
        let mut level = Level::base();
        let mut level_start = Instant::now();
        loop {
            if level.order >= config.n_min {
                let (records, complete) = solve_level(&level, config.with_gamma, deadline);
                let elapsed = level_start.elapsed().as_secs_f64();
                rows.push(CensusRow::from_records(level.order, &records, elapsed, !complete));
                corpus.records.extend(records);
                if !complete {
                    return Err(CensusError::ResourceLimit {
                        reason: format!("time limit reached while solving order {}", level.order),
                        partial: rows,
                    });
                }
            }
            if level.order == config.n_max {
                return Ok(Census { rows, corpus });
            }
            if deadline.is_some_and(|d| Instant::now() >= d) {
                return Err(CensusError::ResourceLimit {
                    reason: format!("time limit reached before order {}", level.order + 1),
                    partial: rows,
                });
            }
            level_start = Instant::now();
            level = level.expand();
        }
    })
}

/// Counts by `γ_c` for orders `n_min..=n_max` (at most 13) on `workers`
/// threads.
pub fn run_census(n_min: usize, n_max: usize, workers: usize) -> Result<Vec<CensusRow>, CensusError> {
    Ok(run(&CensusConfig::new(n_min, n_max, workers))?.rows)
}
