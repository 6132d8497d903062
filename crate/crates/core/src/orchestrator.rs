//! Iterative match → partition → modify loop.
//!
//! Each iteration matches (full solve once, incremental repairs afterwards),
//! partitions the matched weights with the hybrid GA, records the incumbent,
//! and then perturbs the graph: expired bans are lifted, all bans may be
//! released when the current objective drifts too far above the incumbent,
//! and otherwise the heaviest matched edge of the heaviest partition is
//! banned for `tenure` iterations.
//!
//! The baseline variant shares the loop but re-solves the matching from
//! scratch every iteration, partitions with LPT plus relocation descent, and
//! never releases bans early.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Instance, PartitionAssignment, Solution, Weight};
use crate::hga::{self, HgaParams, Individual};
use crate::matcher::MatchState;
use crate::numpart::{greedy_lpt, WeightedItem};

#[derive(Clone, Debug, PartialEq)]
pub struct FimpParams {
    pub max_iterations: usize,
    /// Wall-clock budget; `None` runs until `max_iterations`.
    pub time_limit_ms: Option<u64>,
    /// Iterations a banned edge stays banned.
    pub tenure: usize,
    /// Relative gap `(current - incumbent) / incumbent` that arms recovery.
    pub recovery_threshold: f64,
    /// Probability of releasing every ban once recovery is armed.
    pub recovery_prob: f64,
    pub hga: HgaParams,
    pub rng_seed: u64,
}

impl Default for FimpParams {
    fn default() -> Self {
        Self {
            max_iterations: 500,
            time_limit_ms: None,
            tenure: 20,
            recovery_threshold: 0.05,
            recovery_prob: 0.5,
            hga: HgaParams::default(),
            rng_seed: 0,
        }
    }
}

impl FimpParams {
    pub fn validate(&self) -> Result<()> {
        if self.tenure < 1 {
            return Err(Error::InvalidParams("tenure must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.recovery_prob) {
            return Err(Error::InvalidParams("recovery_prob must lie in [0, 1]".into()));
        }
        if self.recovery_threshold.is_nan() || self.recovery_threshold < 0.0 {
            return Err(Error::InvalidParams("recovery_threshold must be >= 0".into()));
        }
        self.hga.validate()
    }
}

/// Which solver variant the loop runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    FimpHga,
    Baseline,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Self::FimpHga => "fimp-hga",
            Self::Baseline => "baseline",
        }
    }
}

impl std::str::FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "fimp-hga" => Ok(Self::FimpHga),
            "baseline" | "baseline-ls" => Ok(Self::Baseline),
            other => Err(format!("unknown algorithm `{other}`")),
        }
    }
}

/// How the match stage reacts to graph modifications.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatchMode {
    /// Repair the previous optimum in place.
    Incremental,
    /// Solve from scratch after every modification.
    FullResolve,
}

/// Banned edges with their remaining tenure, plus edges whose ban was vetoed
/// because it destroyed every perfect matching.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BanList {
    entries: BTreeMap<(usize, usize), usize>,
    unbannable: BTreeMap<(usize, usize), usize>,
}

impl BanList {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn tenure(&self, e: (usize, usize)) -> Option<usize> {
        self.entries.get(&e).copied()
    }

    pub fn is_unbannable(&self, e: (usize, usize)) -> bool {
        self.unbannable.contains_key(&e)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.entries.keys().copied()
    }

    /// Decrements every tenure; returns the bans that expired.
    fn tick(&mut self) -> Vec<(usize, usize)> {
        let mut expired = Vec::new();
        for (e, t) in self.entries.iter_mut() {
            *t -= 1;
            if *t == 0 {
                expired.push(*e);
            }
        }
        for e in &expired {
            self.entries.remove(e);
        }
        self.unbannable.retain(|_, t| {
            *t -= 1;
            *t > 0
        });
        expired
    }

    fn clear(&mut self) -> Vec<(usize, usize)> {
        std::mem::take(&mut self.entries).into_keys().collect()
    }

    /// Every listed edge is banned in `g` and every banned edge is listed.
    pub fn consistent_with(&self, g: &BipartiteGraph) -> bool {
        let banned = g.banned_edges();
        banned.len() == self.entries.len() && banned.iter().all(|e| self.entries.contains_key(e))
    }
}

/// What one graph modification did.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Modification {
    pub expired: Vec<(usize, usize)>,
    pub recovered: Vec<(usize, usize)>,
    pub banned: Option<(usize, usize)>,
    pub vetoed: Vec<(usize, usize)>,
    pub full_solves: usize,
}

fn relative_gap(current: Weight, incumbent: Weight) -> f64 {
    if current <= incumbent {
        0.0
    } else if incumbent == 0 {
        f64::INFINITY
    } else {
        (current - incumbent) as f64 / incumbent as f64
    }
}

/// Matched edges of the heaviest partition (lowest index on ties), heaviest
/// first, lowest `u` on ties.
pub fn ban_candidates(g: &BipartiteGraph, mate: &[usize], partition: &PartitionAssignment) -> Vec<(usize, usize)> {
    let mut sums = vec![0; partition.m];
    for (u, &k) in partition.part_of.iter().enumerate() {
        sums[k] += g.weight(u, mate[u]).expect("matched edge present");
    }
    let heavy = (0..partition.m)
        .max_by(|&a, &b| sums[a].cmp(&sums[b]).then(b.cmp(&a)))
        .expect("m >= 1");
    let mut cands: Vec<(Weight, usize)> = (0..mate.len())
        .filter(|&u| partition.part_of[u] == heavy)
        .map(|u| (g.weight(u, mate[u]).expect("matched edge present"), u))
        .collect();
    cands.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    cands.into_iter().map(|(_, u)| (u, mate[u])).collect()
}

fn resolve(g: &BipartiteGraph) -> MatchState {
    MatchState::solve_full(g).expect("current ban set admits a perfect matching")
}

/// Graph modification step: expire bans, maybe release everything, else ban
/// one edge of the heaviest partition. Infeasible bans are vetoed internally.
#[allow(clippy::too_many_arguments)]
pub fn modify_graph<R: Rng>(
    g: &mut BipartiteGraph,
    st: &mut MatchState,
    partition: &PartitionAssignment,
    current: Weight,
    incumbent: Weight,
    bans: &mut BanList,
    params: &FimpParams,
    mode: MatchMode,
    recovery: bool,
    rng: &mut R,
) -> Modification {
    let mut out = Modification { expired: bans.tick(), ..Modification::default() };

    for &(u, v) in &out.expired {
        g.unban(u, v);
    }
    if mode == MatchMode::Incremental && !out.expired.is_empty() && st.batch_resolve(g, &out.expired) {
        out.full_solves += 1;
    }

    let armed = recovery
        && params.recovery_threshold.is_finite()
        && relative_gap(current, incumbent) >= params.recovery_threshold;
    if armed && !bans.is_empty() && rng.gen_bool(params.recovery_prob) {
        out.recovered = bans.clear();
        for &(u, v) in &out.recovered {
            g.unban(u, v);
        }
        match mode {
            MatchMode::Incremental => {
                if st.batch_resolve(g, &out.recovered) {
                    out.full_solves += 1;
                }
            }
            MatchMode::FullResolve => {
                *st = resolve(g);
                out.full_solves += 1;
            }
        }
        return out;
    }

    let mut solved = false;
    for (u, v) in ban_candidates(g, st.mate_u(), partition) {
        if bans.is_unbannable((u, v)) || !g.ban(u, v) {
            continue;
        }
        let ok = match mode {
            MatchMode::Incremental => st.repair_after_ban(g, u, v).is_ok(),
            MatchMode::FullResolve => {
                out.full_solves += 1;
                match MatchState::solve_full(g) {
                    Ok(s) => {
                        *st = s;
                        solved = true;
                        true
                    }
                    Err(_) => false,
                }
            }
        };
        if ok {
            bans.entries.insert((u, v), params.tenure);
            out.banned = Some((u, v));
            break;
        }
        g.unban(u, v);
        bans.unbannable.insert((u, v), params.tenure);
        out.vetoed.push((u, v));
    }
    if mode == MatchMode::FullResolve && !solved {
        *st = resolve(g);
        out.full_solves += 1;
    }
    out
}

/// One row of the per-iteration trace.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IterationRecord {
    pub iteration: usize,
    pub objective: Weight,
    pub incumbent: Weight,
    pub bans_active: usize,
    pub match_time_ms: f64,
    pub hga_time_ms: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct RunStats {
    pub iterations: usize,
    pub wall_time_ms: f64,
    pub match_time_ms: f64,
    pub hga_time_ms: f64,
    pub full_solves: usize,
    pub trace: Vec<IterationRecord>,
}

#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub solution: Solution,
    pub stats: RunStats,
}

fn ms_since(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

/// Runs the iterative solver. The returned solution is the best one seen;
/// its matching is valid for the original (unbanned) graph.
pub fn solve(inst: &Instance, params: &FimpParams, algo: Algorithm) -> Result<SolveOutcome> {
    solve_observed(inst, params, algo, |_, _, _| {})
}

/// [`solve`] with an observer invoked at the end of every iteration with the
/// current graph, matching state and ban list.
pub fn solve_observed<F>(
    inst: &Instance,
    params: &FimpParams,
    algo: Algorithm,
    mut observe: F,
) -> Result<SolveOutcome>
where
    F: FnMut(&BipartiteGraph, &MatchState, &BanList),
{
    params.validate()?;
    let (m, ubar) = (inst.m, inst.ubar);
    let started = Instant::now();
    let mut g = inst.graph.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(params.rng_seed);
    let mut stats = RunStats::default();

    let t = Instant::now();
    let mut st = MatchState::solve_full(&g)
        .map_err(|e| Error::InfeasibleInstance(format!("initial matching failed: {e}")))?;
    let mut match_ms = ms_since(t);
    stats.full_solves = 1;

    let (mode, recovery) = match algo {
        Algorithm::FimpHga => (MatchMode::Incremental, true),
        Algorithm::Baseline => (MatchMode::FullResolve, false),
    };

    let mut bans = BanList::default();
    let mut incumbent: Option<Solution> = None;
    let mut previous: Option<(Vec<usize>, PartitionAssignment)> = None;

    for it in 0..params.max_iterations {
        if it > 0 {
            if let Some(limit) = params.time_limit_ms {
                if started.elapsed().as_millis() >= u128::from(limit) {
                    break;
                }
            }
        }
        let weights = st.matched_weights(&g);
        let items = WeightedItem::from_weights(&weights);

        let t = Instant::now();
        let assignment = match algo {
            Algorithm::FimpHga => {
                let hp = HgaParams { rng_seed: rng.gen(), ..params.hga.clone() };
                let warm = previous.as_ref().and_then(|(mate, p)| {
                    let changed = mate.iter().zip(st.mate_u()).filter(|(a, b)| a != b).count();
                    (changed <= 2).then_some(p)
                });
                hga::evolve_observed(&items, m, ubar, &hp, warm, |_, _| {})?.best.assignment
            }
            Algorithm::Baseline => {
                let start = Individual::new(greedy_lpt(&items, m, ubar)?, &items);
                hga::relocate_descent(&start, &items, ubar).assignment
            }
        };
        let hga_ms = ms_since(t);

        let sol = Solution::new(&g, st.mate_u().to_vec(), assignment);
        if incumbent.as_ref().is_none_or(|b| sol.objective < b.objective) {
            incumbent = Some(sol.clone());
        }
        let best = incumbent.as_ref().expect("set above").objective;

        stats.trace.push(IterationRecord {
            iteration: it,
            objective: sol.objective,
            incumbent: best,
            bans_active: bans.len(),
            match_time_ms: match_ms,
            hga_time_ms: hga_ms,
        });
        stats.match_time_ms += match_ms;
        stats.hga_time_ms += hga_ms;
        stats.iterations = it + 1;

        if m == 1 || it + 1 == params.max_iterations {
            observe(&g, &st, &bans);
            break;
        }

        let t = Instant::now();
        let change = modify_graph(
            &mut g,
            &mut st,
            &sol.partition,
            sol.objective,
            best,
            &mut bans,
            params,
            mode,
            recovery,
            &mut rng,
        );
        match_ms = ms_since(t);
        stats.full_solves += change.full_solves;
        previous = Some((sol.mate, sol.partition));
        observe(&g, &st, &bans);
    }

    stats.wall_time_ms = ms_since(started);
    Ok(SolveOutcome { solution: incumbent.expect("at least one iteration"), stats })
}
