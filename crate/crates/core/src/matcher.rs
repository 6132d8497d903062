//! Exact minimum-weight matching saturating U, with incremental repair.
//!
//! The rectangular `n1 × n2` problem is solved as a square `n2 × n2`
//! assignment by padding U with `n2 − n1` dummy rows whose edges to every
//! V-vertex cost zero. In square form every feasible dual pair `(alpha, beta)`
//! that makes a perfect matching tight certifies optimality, so one
//! shortest-augmenting-path phase is enough to re-optimize after a single row
//! loses its partner, whichever free column the phase ends at.
//!
//! All paths (the full solve and both repairs) share [`MatchState::augment`],
//! a Dijkstra search over reduced costs `w(u,v) − alpha[u] − beta[v]` in
//! `O(n2²)` time. Absent and banned edges are skipped.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Weight, ABSENT};

const FREE: usize = usize::MAX;
const INF: i64 = i64::MAX / 4;

fn invariant_scans_enabled() -> bool {
    static FLAG: OnceLock<bool> = OnceLock::new();
    *FLAG.get_or_init(|| {
        std::env::var("PMMWM_CHECK_INVARIANTS").is_ok_and(|v| !v.is_empty() && v != "0")
    })
}

/// Perfect matching on U together with dual potentials.
#[derive(Clone, Debug)]
pub struct MatchState {
    n1: usize,
    n2: usize,
    // Rows n1..n2 are dummies.
    mate_u: Vec<usize>,
    mate_v: Vec<usize>,
    alpha: Vec<i64>,
    beta: Vec<i64>,
    total_weight: Weight,
    phases: u64,
    dist: Vec<i64>,
    pred: Vec<usize>,
    done: Vec<bool>,
    visited: Vec<usize>,
}

impl MatchState {
    fn blank(n1: usize, n2: usize) -> Self {
        Self {
            n1,
            n2,
            mate_u: vec![FREE; n2],
            mate_v: vec![FREE; n2],
            alpha: vec![0; n2],
            beta: vec![0; n2],
            total_weight: 0,
            phases: 0,
            dist: vec![INF; n2],
            pred: vec![0; n2],
            done: vec![false; n2],
            visited: Vec::with_capacity(n2),
        }
    }

    /// Optimal state from scratch: `n2` augmentation phases, `O(n1²·n2)` for
    /// square inputs.
    pub fn solve_full(g: &BipartiteGraph) -> Result<Self> {
        let mut st = Self::blank(g.n1(), g.n2());
        // alpha = row minimum, beta = 0
        for u in 0..st.n1 {
            st.alpha[u] = (0..st.n2)
                .filter_map(|v| g.available(u, v))
                .min()
                .ok_or(Error::NoPerfectMatching { u })?;
        }
        for root in 0..st.n2 {
            st.augment(g, root)?;
        }
        st.refresh_total(g);
        st.scan_if_enabled(g);
        Ok(st)
    }

    /// Re-optimizes after `(u, v)` has been banned in `g`.
    ///
    /// An unmatched edge leaves the state optimal. A matched edge frees `u`,
    /// which is rematched by exactly one augmentation phase. On
    /// `NoPerfectMatching` the state is left as it was before the ban, so the
    /// caller only has to unban the edge.
    pub fn repair_after_ban(&mut self, g: &BipartiteGraph, u: usize, v: usize) -> Result<()> {
        debug_assert!(g.available(u, v).is_none());
        if self.mate_u[u] != v {
            return Ok(());
        }
        self.mate_u[u] = FREE;
        self.mate_v[v] = FREE;
        if let Err(e) = self.augment(g, u) {
            self.mate_u[u] = v;
            self.mate_v[v] = u;
            return Err(e);
        }
        self.refresh_total(g);
        self.scan_if_enabled(g);
        Ok(())
    }

    /// Re-optimizes after `(u, v)` has been restored in `g`.
    pub fn repair_after_unban(&mut self, g: &BipartiteGraph, u: usize, v: usize) {
        debug_assert!(g.available(u, v).is_some());
        if self.alpha[u] + self.beta[v] <= g.available(u, v).unwrap_or(Weight::MAX) {
            return;
        }
        self.restore_rows(g, &[u]);
    }

    /// Re-optimizes after every edge in `released` has been restored.
    ///
    /// Small batches (at most `n1/4` edges) are repaired row by row; larger
    /// ones trigger a full solve. Returns true when the full solve was used.
    pub fn batch_resolve(&mut self, g: &BipartiteGraph, released: &[(usize, usize)]) -> bool {
        if released.is_empty() {
            return false;
        }
        if released.len() <= self.n1 / 4 {
            let rows: Vec<usize> = released.iter().map(|&(u, _)| u).collect();
            self.restore_rows(g, &rows);
            false
        } else {
            let phases = self.phases;
            *self = Self::solve_full(g).expect("restoring edges keeps a perfect matching");
            self.phases += phases;
            true
        }
    }

    /// Lowers `alpha[u]` for each listed row until its edges are dual
    /// feasible again, unmatches rows whose matched edge lost tightness, and
    /// rematches them one phase each.
    fn restore_rows(&mut self, g: &BipartiteGraph, rows: &[usize]) {
        let mut freed = Vec::new();
        for &u in rows {
            if self.mate_u[u] == FREE {
                continue;
            }
            let floor = (0..self.n2)
                .filter_map(|v| g.available(u, v).map(|w| w - self.beta[v]))
                .min()
                .expect("row keeps at least its matched edge");
            if self.alpha[u] <= floor {
                continue;
            }
            self.alpha[u] = floor;
            let v = self.mate_u[u];
            let w = g.available(u, v).expect("matched edge stays available");
            if w - self.alpha[u] - self.beta[v] != 0 {
                self.mate_u[u] = FREE;
                self.mate_v[v] = FREE;
                freed.push(u);
            }
        }
        for u in freed {
            self.augment(g, u).expect("the previous partner is still reachable");
        }
        self.refresh_total(g);
        self.scan_if_enabled(g);
    }

    /// One shortest-augmenting-path phase from the free row `root`.
    /// Leaves the state untouched on failure.
    fn augment(&mut self, g: &BipartiteGraph, root: usize) -> Result<()> {
        let n = self.n2;
        self.dist.fill(INF);
        self.done.fill(false);
        self.visited.clear();

        self.relax(g, root, 0);
        let end = loop {
            let mut best = INF;
            let mut j = FREE;
            for v in 0..n {
                if !self.done[v] && self.dist[v] < best {
                    best = self.dist[v];
                    j = v;
                }
            }
            if j == FREE {
                return Err(Error::NoPerfectMatching { u: root.min(self.n1.saturating_sub(1)) });
            }
            self.done[j] = true;
            let i = self.mate_v[j];
            if i == FREE {
                break j;
            }
            self.visited.push(j);
            self.relax(g, i, best);
        };

        let len = self.dist[end];
        self.alpha[root] += len;
        for &v in &self.visited {
            let d = len - self.dist[v];
            self.alpha[self.mate_v[v]] += d;
            self.beta[v] -= d;
        }

        let mut v = end;
        loop {
            let i = self.pred[v];
            let prev = self.mate_u[i];
            self.mate_v[v] = i;
            self.mate_u[i] = v;
            if i == root {
                break;
            }
            v = prev;
        }
        self.phases += 1;
        Ok(())
    }

    /// Relaxes every unfinished column from row `i`, reached at distance `base`.
    #[inline]
    fn relax(&mut self, g: &BipartiteGraph, i: usize, base: i64) {
        let a = base - self.alpha[i];
        if i < self.n1 {
            let (ws, bs) = g.row(i);
            for v in 0..self.n2 {
                let w = ws[v];
                if self.done[v] || w == ABSENT || bs[v] {
                    continue;
                }
                let nd = a + w - self.beta[v];
                if nd < self.dist[v] {
                    self.dist[v] = nd;
                    self.pred[v] = i;
                }
            }
        } else {
            for v in 0..self.n2 {
                if self.done[v] {
                    continue;
                }
                let nd = a - self.beta[v];
                if nd < self.dist[v] {
                    self.dist[v] = nd;
                    self.pred[v] = i;
                }
            }
        }
    }

    fn refresh_total(&mut self, g: &BipartiteGraph) {
        self.total_weight = (0..self.n1)
            .map(|u| g.weight(u, self.mate_u[u]).expect("matched edge present"))
            .sum();
    }

    fn scan_if_enabled(&self, g: &BipartiteGraph) {
        if invariant_scans_enabled() {
            if let Err(e) = self.check_invariants(g) {
                panic!("matcher invariant violated: {e}");
            }
        }
    }

    /// Full scan of matching consistency, dual feasibility, complementary
    /// slackness and the duality identity.
    pub fn check_invariants(&self, g: &BipartiteGraph) -> std::result::Result<(), String> {
        let (n1, n2) = (self.n1, self.n2);
        for i in 0..n2 {
            let v = self.mate_u[i];
            if v == FREE || self.mate_v[v] != i {
                return Err(format!("row {i} has inconsistent mate"));
            }
        }
        for u in 0..n2 {
            for v in 0..n2 {
                let w = if u < n1 {
                    match g.available(u, v) {
                        Some(w) => w,
                        None => {
                            if self.mate_u[u] == v {
                                return Err(format!("matched edge ({u},{v}) is unavailable"));
                            }
                            continue;
                        }
                    }
                } else {
                    0
                };
                let slack = w - self.alpha[u] - self.beta[v];
                if slack < 0 {
                    return Err(format!("dual infeasible at ({u},{v}): slack {slack}"));
                }
                if self.mate_u[u] == v && slack != 0 {
                    return Err(format!("matched edge ({u},{v}) not tight: slack {slack}"));
                }
            }
        }
        let total: Weight = (0..n1).map(|u| g.weight(u, self.mate_u[u]).unwrap_or(0)).sum();
        if total != self.total_weight {
            return Err(format!("cached total {} != recomputed {}", self.total_weight, total));
        }
        let dual: i64 = (0..n1).map(|u| self.alpha[u] + self.beta[self.mate_u[u]]).sum();
        if dual != total {
            return Err(format!("duality gap: {dual} != {total}"));
        }
        Ok(())
    }

    /// `mate[u]` for every real U-vertex.
    pub fn mate_u(&self) -> &[usize] {
        &self.mate_u[..self.n1]
    }

    /// U-partner of `v`, if `v` is matched to a real U-vertex.
    pub fn mate_v(&self, v: usize) -> Option<usize> {
        let u = self.mate_v[v];
        (u < self.n1).then_some(u)
    }

    pub fn alpha(&self) -> &[i64] {
        &self.alpha[..self.n1]
    }

    pub fn beta(&self) -> &[i64] {
        &self.beta
    }

    pub fn total_weight(&self) -> Weight {
        self.total_weight
    }

    /// Number of augmentation phases run on this state so far.
    pub fn phases(&self) -> u64 {
        self.phases
    }

    /// Matched edge weight of every U-vertex.
    pub fn matched_weights(&self, g: &BipartiteGraph) -> Vec<Weight> {
        (0..self.n1)
            .map(|u| g.weight(u, self.mate_u[u]).expect("matched edge present"))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Minimum over all injective maps U -> V using available edges.
    fn brute_min(g: &BipartiteGraph) -> Option<Weight> {
        fn rec(g: &BipartiteGraph, u: usize, used: &mut [bool], acc: Weight, best: &mut Option<Weight>) {
            if u == g.n1() {
                *best = Some(best.map_or(acc, |b| b.min(acc)));
                return;
            }
            for v in 0..g.n2() {
                if let (false, Some(w)) = (used[v], g.available(u, v)) {
                    used[v] = true;
                    rec(g, u + 1, used, acc + w, best);
                    used[v] = false;
                }
            }
        }
        let mut best = None;
        rec(g, 0, &mut vec![false; g.n2()], 0, &mut best);
        best
    }

    fn random_graph(rng: &mut ChaCha8Rng, n1: usize, n2: usize, wmax: i64) -> BipartiteGraph {
        let rows: Vec<Vec<Weight>> =
            (0..n1).map(|_| (0..n2).map(|_| rng.gen_range(0..=wmax)).collect()).collect();
        BipartiteGraph::complete(&rows).unwrap()
    }

    #[test]
    fn diagonal_optimum() {
        let g = BipartiteGraph::complete(&[vec![1, 2], vec![2, 1]]).unwrap();
        let st = MatchState::solve_full(&g).unwrap();
        assert_eq!(st.total_weight(), 2);
        assert_eq!(st.mate_u(), &[0, 1]);
        st.check_invariants(&g).unwrap();
    }

    #[test]
    fn tied_permutations() {
        // 1+4 = 2+3 = 5
        let g = BipartiteGraph::complete(&[vec![1, 2], vec![3, 4]]).unwrap();
        let st = MatchState::solve_full(&g).unwrap();
        assert_eq!(st.total_weight(), 5);
        st.check_invariants(&g).unwrap();
    }

    #[test]
    fn six_by_six_matches_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..20 {
            let g = random_graph(&mut rng, 6, 6, 50);
            let st = MatchState::solve_full(&g).unwrap();
            assert_eq!(Some(st.total_weight()), brute_min(&g));
            st.check_invariants(&g).unwrap();
        }
    }

    #[test]
    fn rectangular_matches_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (n1, n2) in [(1, 4), (3, 5), (4, 7), (5, 6)] {
            for _ in 0..10 {
                let g = random_graph(&mut rng, n1, n2, 30);
                let st = MatchState::solve_full(&g).unwrap();
                assert_eq!(Some(st.total_weight()), brute_min(&g));
                st.check_invariants(&g).unwrap();
            }
        }
    }

    #[test]
    fn empty_row_is_infeasible() {
        let g = BipartiteGraph::from_dense(2, 2, &[Some(1), Some(1), None, None]).unwrap();
        assert!(matches!(MatchState::solve_full(&g), Err(Error::NoPerfectMatching { .. })));
        let h = BipartiteGraph::from_dense(2, 2, &[Some(1), None, Some(1), None]).unwrap();
        assert!(matches!(MatchState::solve_full(&h), Err(Error::NoPerfectMatching { .. })));
    }

    #[test]
    fn ban_unmatched_edge_is_noop() {
        let mut g = BipartiteGraph::complete(&[vec![1, 2], vec![2, 1]]).unwrap();
        let mut st = MatchState::solve_full(&g).unwrap();
        let before = st.clone();
        g.ban(0, 1);
        st.repair_after_ban(&g, 0, 1).unwrap();
        assert_eq!(st.total_weight(), 2);
        assert_eq!(st.mate_u(), before.mate_u());
        assert_eq!(st.alpha(), before.alpha());
        assert_eq!(st.beta(), before.beta());
        assert_eq!(st.phases(), before.phases());
    }

    #[test]
    fn ban_matched_edge_forces_antidiagonal() {
        let mut g = BipartiteGraph::complete(&[vec![1, 2], vec![2, 1]]).unwrap();
        let mut st = MatchState::solve_full(&g).unwrap();
        let phases = st.phases();
        g.ban(0, 0);
        st.repair_after_ban(&g, 0, 0).unwrap();
        assert_eq!(st.total_weight(), 4);
        assert_eq!(st.mate_u(), &[1, 0]);
        assert_eq!(st.phases() - phases, 1);
        st.check_invariants(&g).unwrap();
    }

    #[test]
    fn infeasible_ban_leaves_state_intact() {
        let mut g = BipartiteGraph::from_dense(2, 2, &[Some(1), Some(5), None, Some(1)]).unwrap();
        let mut st = MatchState::solve_full(&g).unwrap();
        assert_eq!(st.mate_u(), &[0, 1]);
        g.ban(1, 1);
        assert!(matches!(st.repair_after_ban(&g, 1, 1), Err(Error::NoPerfectMatching { .. })));
        g.unban(1, 1);
        st.check_invariants(&g).unwrap();
        assert_eq!(st.total_weight(), 2);
    }

    #[test]
    fn unban_feasible_edge_is_noop() {
        let mut g = BipartiteGraph::complete(&[vec![1, 2], vec![2, 1]]).unwrap();
        g.ban(0, 1);
        let mut st = MatchState::solve_full(&g).unwrap();
        let before = st.clone();
        g.unban(0, 1);
        st.repair_after_unban(&g, 0, 1);
        assert_eq!(st.mate_u(), before.mate_u());
        assert_eq!(st.alpha(), before.alpha());
        assert_eq!(st.total_weight(), 2);
    }

    #[test]
    fn unban_restores_diagonal() {
        let mut g = BipartiteGraph::complete(&[vec![1, 2], vec![2, 1]]).unwrap();
        g.ban(0, 0);
        let mut st = MatchState::solve_full(&g).unwrap();
        assert_eq!(st.total_weight(), 4);
        g.unban(0, 0);
        st.repair_after_unban(&g, 0, 0);
        assert_eq!(st.total_weight(), 2);
        st.check_invariants(&g).unwrap();
    }

    #[test]
    fn random_bans_track_full_solve() {
        let mut rng = ChaCha8Rng::seed_from_u64(50);
        for _ in 0..10 {
            let mut g = random_graph(&mut rng, 8, 8, 40);
            let mut st = MatchState::solve_full(&g).unwrap();
            for _ in 0..50 {
                let u = rng.gen_range(0..8);
                // prefer matched edges so the repair path is exercised
                let v = if rng.gen_bool(0.7) { st.mate_u()[u] } else { rng.gen_range(0..8) };
                if !g.ban(u, v) {
                    continue;
                }
                let phases = st.phases();
                match st.repair_after_ban(&g, u, v) {
                    Ok(()) => {}
                    Err(Error::NoPerfectMatching { .. }) => {
                        g.unban(u, v);
                    }
                    Err(e) => panic!("{e}"),
                }
                assert!(st.phases() - phases <= 1);
                st.check_invariants(&g).unwrap();
                assert_eq!(st.total_weight(), MatchState::solve_full(&g).unwrap().total_weight());
            }
        }
    }

    #[test]
    fn ban_unban_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        for _ in 0..20 {
            let mut g = random_graph(&mut rng, 8, 8, 40);
            let mut st = MatchState::solve_full(&g).unwrap();
            let original = st.total_weight();
            let u = rng.gen_range(0..8);
            let v = st.mate_u()[u];
            g.ban(u, v);
            st.repair_after_ban(&g, u, v).unwrap();
            g.unban(u, v);
            st.repair_after_unban(&g, u, v);
            st.check_invariants(&g).unwrap();
            assert_eq!(st.total_weight(), original);
        }
    }

    #[test]
    fn batch_paths_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(52);
        let g0 = random_graph(&mut rng, 8, 8, 40);
        let original = MatchState::solve_full(&g0).unwrap().total_weight();

        // Ban three matched edges one after another.
        let mut g = g0.clone();
        let mut st = MatchState::solve_full(&g).unwrap();
        let mut banned = Vec::new();
        while banned.len() < 3 {
            let u = rng.gen_range(0..8);
            let v = st.mate_u()[u];
            g.ban(u, v);
            if st.repair_after_ban(&g, u, v).is_ok() {
                banned.push((u, v));
            } else {
                g.unban(u, v);
            }
        }

        let before = st.clone();
        assert!(!st.batch_resolve(&g, &[]));
        assert_eq!(st.mate_u(), before.mate_u());

        // 2 <= 8/4: row-by-row path
        for &(u, v) in &banned[..2] {
            g.unban(u, v);
        }
        assert!(!st.batch_resolve(&g, &banned[..2]));
        st.check_invariants(&g).unwrap();
        assert_eq!(st.total_weight(), MatchState::solve_full(&g).unwrap().total_weight());

        // a larger release goes through the full solve
        let mut h = g0.clone();
        let mut sh = MatchState::solve_full(&h).unwrap();
        let mut all = Vec::new();
        for u in 0..8 {
            let v = sh.mate_u()[u];
            h.ban(u, v);
            if sh.repair_after_ban(&h, u, v).is_ok() {
                all.push((u, v));
            } else {
                h.unban(u, v);
            }
        }
        assert!(all.len() > 2);
        for &(u, v) in &all {
            h.unban(u, v);
        }
        assert!(sh.batch_resolve(&h, &all));
        assert_eq!(sh.total_weight(), original);
        sh.check_invariants(&h).unwrap();
    }
}
