//! Batch runs over an instance directory and pairwise comparison of reports.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::oracle::exact_oracle;
use crate::error::{Error, Result};
use crate::graph::{format_weight, load_instance};
use crate::instgen::{read_manifest, MANIFEST};
use crate::orchestrator::{solve, Algorithm, FimpParams};

/// One row of a bench CSV.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub instance: String,
    pub algo: String,
    pub seed: u64,
    pub objective: String,
    pub optimum: Option<String>,
    pub gap: Option<f64>,
    pub iterations: usize,
    pub wall_time_ms: f64,
    pub match_time_ms: f64,
    pub hga_time_ms: f64,
}

#[derive(Clone, Debug)]
pub struct BenchOptions {
    pub algo: Algorithm,
    pub params: FimpParams,
    pub jobs: usize,
    /// Fill `optimum` and `gap` where the exact oracle's guard allows.
    pub with_oracle: bool,
}

/// Instance files of a directory: the manifest's order if one exists,
/// otherwise every `*.txt` file sorted by name.
pub fn instance_files(dir: &Path) -> Result<Vec<PathBuf>> {
    if dir.join(MANIFEST).exists() {
        return Ok(read_manifest(dir)?.into_iter().map(|r| dir.join(r.file)).collect());
    }
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "txt"))
        .collect();
    files.sort();
    Ok(files)
}

pub fn run_one(path: &Path, opts: &BenchOptions) -> Result<RunReport> {
    let inst = load_instance(path)?;
    let scale = inst.graph.scale();
    let out = solve(&inst, &opts.params, opts.algo)?;
    let objective = out.solution.objective;
    let optimum = if opts.with_oracle {
        match exact_oracle(&inst.graph, inst.m, inst.ubar) {
            Ok((opt, _)) => Some(opt),
            Err(Error::TooLarge(_)) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let gap = optimum.map(|opt| if opt == 0 { 0.0 } else { (objective - opt) as f64 / opt as f64 });
    Ok(RunReport {
        instance: path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default(),
        algo: opts.algo.name().to_string(),
        seed: opts.params.rng_seed,
        objective: format_weight(objective, scale),
        optimum: optimum.map(|o| format_weight(o, scale)),
        gap,
        iterations: out.stats.iterations,
        wall_time_ms: out.stats.wall_time_ms,
        match_time_ms: out.stats.match_time_ms,
        hga_time_ms: out.stats.hga_time_ms,
    })
}

/// Solves every instance of `dir`; rows come back sorted by instance name
/// whatever the job count.
pub fn bench(dir: &Path, opts: &BenchOptions) -> Result<Vec<RunReport>> {
    let files = instance_files(dir)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidParams(format!("thread pool: {e}")))?;
    let mut rows = pool.install(|| files.par_iter().map(|f| run_one(f, opts)).collect::<Result<Vec<_>>>())?;
    rows.sort_by(|a, b| a.instance.cmp(&b.instance));
    Ok(rows)
}

pub fn write_reports(rows: &[RunReport], path: &Path) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_reports(path: &Path) -> Result<Vec<RunReport>> {
    let mut r = csv::Reader::from_path(path)?;
    Ok(r.deserialize().collect::<std::result::Result<Vec<RunReport>, _>>()?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Win,
    Tie,
    Loss,
}

/// Per-instance comparison of run A against run B.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub instance: String,
    pub objective_a: String,
    pub objective_b: String,
    /// From A's point of view; lower objective wins.
    pub outcome: Outcome,
    pub time_a_ms: f64,
    pub time_b_ms: f64,
    /// `time_a / time_b`, 1.0 when both are zero.
    pub time_ratio: f64,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ComparisonSummary {
    pub wins: usize,
    pub ties: usize,
    pub losses: usize,
    /// Instances present in only one of the two reports.
    pub unmatched: usize,
    pub total_time_a_ms: f64,
    pub total_time_b_ms: f64,
}

impl fmt::Display for ComparisonSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.wins + self.ties + self.losses;
        let pct = |k: usize| if n == 0 { 0.0 } else { 100.0 * k as f64 / n as f64 };
        write!(
            f,
            "instances {n}: win {} ({:.1}%), tie {} ({:.1}%), loss {} ({:.1}%); unmatched {}; total time ratio {:.3}",
            self.wins,
            pct(self.wins),
            self.ties,
            pct(self.ties),
            self.losses,
            pct(self.losses),
            self.unmatched,
            time_ratio(self.total_time_a_ms, self.total_time_b_ms)
        )
    }
}

pub fn time_ratio(a: f64, b: f64) -> f64 {
    if a == 0.0 && b == 0.0 {
        1.0
    } else if b == 0.0 {
        f64::INFINITY
    } else {
        a / b
    }
}

fn objective_num(s: &str) -> Result<f64> {
    s.parse().map_err(|_| Error::Parse { line: 0, msg: format!("bad objective `{s}` in report") })
}

/// Joins two report sets on instance name.
pub fn compare(a: &[RunReport], b: &[RunReport]) -> Result<(Vec<ComparisonRow>, ComparisonSummary)> {
    let bmap: BTreeMap<&str, &RunReport> = b.iter().map(|r| (r.instance.as_str(), r)).collect();
    let mut rows = Vec::new();
    let mut sum = ComparisonSummary::default();
    for ra in a {
        let Some(rb) = bmap.get(ra.instance.as_str()) else {
            sum.unmatched += 1;
            continue;
        };
        let (oa, ob) = (objective_num(&ra.objective)?, objective_num(&rb.objective)?);
        let outcome = if oa < ob {
            Outcome::Win
        } else if oa > ob {
            Outcome::Loss
        } else {
            Outcome::Tie
        };
        match outcome {
            Outcome::Win => sum.wins += 1,
            Outcome::Tie => sum.ties += 1,
            Outcome::Loss => sum.losses += 1,
        }
        sum.total_time_a_ms += ra.wall_time_ms;
        sum.total_time_b_ms += rb.wall_time_ms;
        rows.push(ComparisonRow {
            instance: ra.instance.clone(),
            objective_a: ra.objective.clone(),
            objective_b: rb.objective.clone(),
            outcome,
            time_a_ms: ra.wall_time_ms,
            time_b_ms: rb.wall_time_ms,
            time_ratio: time_ratio(ra.wall_time_ms, rb.wall_time_ms),
        });
    }
    let names: std::collections::BTreeSet<&str> = a.iter().map(|r| r.instance.as_str()).collect();
    sum.unmatched += b.iter().filter(|r| !names.contains(r.instance.as_str())).count();
    rows.sort_by(|x, y| x.instance.cmp(&y.instance));
    Ok((rows, sum))
}

pub fn write_comparison(rows: &[ComparisonRow], path: &Path) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}
