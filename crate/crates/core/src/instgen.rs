//! Seeded instance generator and benchmark groups.
//!
//! Every instance plants a uniformly random perfect matching on U before any
//! other edge is drawn, so generated instances are always feasible. Weights
//! follow one of two models:
//!
//! * `Independent`: `w(u,v)` uniform on `[1, w_max]`.
//! * `Consistent`: rank-one plus noise, `w(u,v) = round(a_u · b_v · (1 + ε))`
//!   clamped to `[1, w_max]`, with `a_u, b_v ~ U[1, √w_max]` and
//!   `ε ~ U[-0.1, 0.1]`. A vertex that is expensive against one partner is
//!   expensive against all of them.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Instance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightModel {
    Consistent,
    Independent,
}

impl fmt::Display for WeightModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Consistent => "consistent",
            Self::Independent => "independent",
        })
    }
}

impl FromStr for WeightModel {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "consistent" => Ok(Self::Consistent),
            "independent" => Ok(Self::Independent),
            other => Err(format!("unknown weight model `{other}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub n1: usize,
    pub n2: usize,
    pub m: usize,
    pub ubar: usize,
    /// Probability that a non-planted pair becomes an edge.
    pub density: f64,
    pub weight_model: WeightModel,
    pub w_max: i64,
    pub seed: u64,
}

impl InstanceSpec {
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::SpecInvalid(msg));
        if self.n1 == 0 || self.n2 < self.n1 {
            return fail(format!("need 1 <= n1 <= n2, got n1={} n2={}", self.n1, self.n2));
        }
        if self.m == 0 || self.m.saturating_mul(self.ubar) < self.n1 {
            return fail(format!("m*ubar = {}*{} < n1 = {}", self.m, self.ubar, self.n1));
        }
        if !(self.density > 0.0 && self.density <= 1.0) {
            return fail(format!("density {} outside (0, 1]", self.density));
        }
        if self.w_max < 1 {
            return fail(format!("w_max {} < 1", self.w_max));
        }
        Ok(())
    }
}

/// Draws one instance; identical specs give identical instances.
#[allow(clippy::needless_range_loop)]
pub fn generate(spec: &InstanceSpec) -> Result<Instance> {
    spec.validate()?;
    let (n1, n2) = (spec.n1, spec.n2);
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);

    let mut perm: Vec<usize> = (0..n2).collect();
    perm.shuffle(&mut rng);

    let root = (spec.w_max as f64).sqrt().max(1.0);
    let (a, b): (Vec<f64>, Vec<f64>) = match spec.weight_model {
        WeightModel::Consistent => (
            (0..n1).map(|_| rng.gen_range(1.0..=root)).collect(),
            (0..n2).map(|_| rng.gen_range(1.0..=root)).collect(),
        ),
        WeightModel::Independent => (Vec::new(), Vec::new()),
    };

    let mut g = BipartiteGraph::empty(n1, n2)?;
    for u in 0..n1 {
        for v in 0..n2 {
            let planted = perm[u] == v;
            if !planted && spec.density < 1.0 && !rng.gen_bool(spec.density) {
                continue;
            }
            let w = match spec.weight_model {
                WeightModel::Independent => rng.gen_range(1..=spec.w_max),
                WeightModel::Consistent => {
                    let eps: f64 = rng.gen_range(-0.1..=0.1);
                    let raw = (a[u] * b[v] * (1.0 + eps)).round() as i64;
                    raw.clamp(1, spec.w_max)
                }
            };
            g.set_edge(u, v, w);
        }
    }
    Instance::new(g, spec.m, spec.ubar)
        .map_err(|e| Error::SpecInvalid(format!("generated instance rejected: {e}")))
}

/// One of the four consistency × density groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BenchmarkGroup {
    pub model: WeightModel,
    pub dense: bool,
}

impl BenchmarkGroup {
    pub const ALL: [BenchmarkGroup; 4] = [
        BenchmarkGroup { model: WeightModel::Consistent, dense: true },
        BenchmarkGroup { model: WeightModel::Consistent, dense: false },
        BenchmarkGroup { model: WeightModel::Independent, dense: true },
        BenchmarkGroup { model: WeightModel::Independent, dense: false },
    ];

    pub fn density(self) -> f64 {
        if self.dense {
            1.0
        } else {
            0.1
        }
    }

    pub fn name(self) -> String {
        format!("{}-{}", self.model, if self.dense { "dense" } else { "sparse" })
    }

    fn index(self) -> u64 {
        Self::ALL.iter().position(|&g| g == self).expect("listed") as u64
    }
}

impl fmt::Display for BenchmarkGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for BenchmarkGroup {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| format!("unknown group `{s}` (expected one of consistent-dense, consistent-sparse, independent-dense, independent-sparse)"))
    }
}

pub const SWEEP_N1: [usize; 4] = [50, 100, 200, 500];
pub const SWEEP_M: [usize; 3] = [5, 10, 20];
pub const SWEEP_SEEDS: u64 = 5;
pub const BENCH_W_MAX: i64 = 100;

/// `ceil(1.2 · n1 / m)`
pub fn default_capacity(n1: usize, m: usize) -> usize {
    (12 * n1).div_ceil(10 * m)
}

/// Specification of the `rep`-th instance of a sweep cell.
pub fn cell_spec(group: BenchmarkGroup, n1: usize, m: usize, rep: u64) -> InstanceSpec {
    InstanceSpec {
        n1,
        n2: n1,
        m,
        ubar: default_capacity(n1, m),
        density: group.density(),
        weight_model: group.model,
        w_max: BENCH_W_MAX,
        seed: group.index() * 1_000_000 + (n1 as u64) * 1_000 + (m as u64) * 10 + rep,
    }
}

/// Every spec of one group's sweep, in file order.
pub fn benchmark_specs(group: BenchmarkGroup) -> Vec<InstanceSpec> {
    let mut out = Vec::new();
    for n1 in SWEEP_N1 {
        for m in SWEEP_M {
            for rep in 0..SWEEP_SEEDS {
                out.push(cell_spec(group, n1, m, rep));
            }
        }
    }
    out
}

/// Row of `manifest.csv`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ManifestRow {
    pub file: String,
    pub n1: usize,
    pub n2: usize,
    pub m: usize,
    pub ubar: usize,
    pub density: f64,
    pub model: WeightModel,
    pub w_max: i64,
    pub seed: u64,
}

pub const MANIFEST: &str = "manifest.csv";

/// Writes one group's instances and its manifest into `out_dir`.
pub fn generate_benchmark(group: BenchmarkGroup, out_dir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(out_dir)?;
    let mut files = Vec::new();
    let mut manifest = csv::Writer::from_path(out_dir.join(MANIFEST))?;
    for spec in benchmark_specs(group) {
        let name = format!("{}_n{}_m{}_s{}.txt", group.name(), spec.n1, spec.m, spec.seed % 10);
        let inst = generate(&spec)?;
        let path = out_dir.join(&name);
        inst.write(&path)?;
        manifest.serialize(ManifestRow {
            file: name,
            n1: spec.n1,
            n2: spec.n2,
            m: spec.m,
            ubar: spec.ubar,
            density: spec.density,
            model: spec.weight_model,
            w_max: spec.w_max,
            seed: spec.seed,
        })?;
        files.push(path);
    }
    manifest.flush()?;
    Ok(files)
}

pub fn read_manifest(dir: &Path) -> Result<Vec<ManifestRow>> {
    let mut rdr = csv::Reader::from_path(dir.join(MANIFEST))?;
    let rows = rdr.deserialize().collect::<std::result::Result<Vec<ManifestRow>, _>>()?;
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(model: WeightModel, density: f64, seed: u64) -> InstanceSpec {
        InstanceSpec { n1: 30, n2: 35, m: 4, ubar: 9, density, weight_model: model, w_max: 100, seed }
    }

    #[test]
    fn full_density_is_complete() {
        for model in [WeightModel::Consistent, WeightModel::Independent] {
            let inst = generate(&spec(model, 1.0, 1)).unwrap();
            assert_eq!(inst.graph.edge_count(), 30 * 35);
        }
    }

    #[test]
    fn weights_stay_in_range() {
        for model in [WeightModel::Consistent, WeightModel::Independent] {
            let inst = generate(&spec(model, 0.5, 2)).unwrap();
            let g = &inst.graph;
            for u in 0..g.n1() {
                for v in 0..g.n2() {
                    if let Some(w) = g.weight(u, v) {
                        assert!((1..=100).contains(&w));
                    }
                }
            }
        }
    }

    #[test]
    fn same_seed_same_text() {
        let a = generate(&spec(WeightModel::Consistent, 0.2, 3)).unwrap().to_text();
        let b = generate(&spec(WeightModel::Consistent, 0.2, 3)).unwrap().to_text();
        let c = generate(&spec(WeightModel::Consistent, 0.2, 4)).unwrap().to_text();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn invalid_specs() {
        let base = spec(WeightModel::Independent, 0.5, 0);
        let bad = [
            InstanceSpec { n2: 10, ..base.clone() },
            InstanceSpec { ubar: 2, ..base.clone() },
            InstanceSpec { density: 0.0, ..base.clone() },
            InstanceSpec { density: 1.5, ..base.clone() },
            InstanceSpec { w_max: 0, ..base.clone() },
        ];
        for s in bad {
            assert!(matches!(generate(&s), Err(Error::SpecInvalid(_))));
        }
    }

    #[test]
    fn sparse_instances_stay_feasible() {
        for seed in 0..20 {
            let s = InstanceSpec { density: 0.01, ..spec(WeightModel::Independent, 0.01, seed) };
            assert!(generate(&s).is_ok());
        }
    }

    #[test]
    fn capacity_rounding() {
        assert_eq!(default_capacity(50, 5), 12);
        assert_eq!(default_capacity(100, 20), 6);
        assert_eq!(default_capacity(200, 10), 24);
        assert_eq!(default_capacity(500, 20), 30);
        assert_eq!(default_capacity(50, 20), 3);
    }

    #[test]
    fn group_names_round_trip() {
        for g in BenchmarkGroup::ALL {
            assert_eq!(g.name().parse::<BenchmarkGroup>().unwrap(), g);
        }
        assert_eq!(benchmark_specs(BenchmarkGroup::ALL[0]).len(), 60);
    }
}
