//! Exhaustive optimum for tiny instances.
//!
//! Matchings are enumerated row by row over available edges. For each
//! matching the best capacity-feasible partition of its weight multiset is
//! found by branch and bound and memoized on the sorted multiset, so
//! matchings that differ only by a permutation of weights share one search.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, PartitionAssignment, Solution, Weight};
use crate::numpart::check_capacity;

pub const ORACLE_MAX_N1: usize = 8;
/// Bound on `m^n1`.
pub const ORACLE_PARTITION_LIMIT: u128 = 10_000_000;
/// Bound on the product of row degrees, an upper bound on the matching count.
pub const ORACLE_MATCHING_LIMIT: u128 = 1_000_000_000;

fn guard(g: &BipartiteGraph, m: usize) -> Result<()> {
    let n1 = g.n1();
    if n1 > ORACLE_MAX_N1 {
        return Err(Error::TooLarge(format!("n1 = {n1} > {ORACLE_MAX_N1}")));
    }
    let space = (m as u128).checked_pow(n1 as u32).unwrap_or(u128::MAX);
    if space > ORACLE_PARTITION_LIMIT {
        return Err(Error::TooLarge(format!("{m}^{n1} partitions exceed {ORACLE_PARTITION_LIMIT}")));
    }
    let mut product: u128 = 1;
    for u in 0..n1 {
        let deg = (0..g.n2()).filter(|&v| g.available(u, v).is_some()).count() as u128;
        product = product.saturating_mul(deg.max(1));
    }
    if product > ORACLE_MATCHING_LIMIT {
        return Err(Error::TooLarge(format!(
            "up to {product} matchings exceed {ORACLE_MATCHING_LIMIT}"
        )));
    }
    Ok(())
}

/// Min-max partition of `ws` (any order) into `m` sets of at most `ubar`.
/// Returns the optimum and an assignment aligned with `ws`.
pub(crate) fn best_partition(ws: &[Weight], m: usize, ubar: usize) -> (Weight, Vec<usize>) {
    let mut order: Vec<usize> = (0..ws.len()).collect();
    order.sort_by(|&a, &b| ws[b].cmp(&ws[a]));

    struct Bnb<'a> {
        ws: &'a [Weight],
        order: &'a [usize],
        ubar: usize,
        sums: Vec<Weight>,
        sizes: Vec<usize>,
        cur: Vec<usize>,
        best: Weight,
        best_assign: Vec<usize>,
    }
    impl Bnb<'_> {
        fn run(&mut self, depth: usize, cur_max: Weight) {
            if cur_max >= self.best {
                return;
            }
            if depth == self.order.len() {
                self.best = cur_max;
                self.best_assign.clone_from(&self.cur);
                return;
            }
            let i = self.order[depth];
            let w = self.ws[i];
            for k in 0..self.sums.len() {
                if self.sizes[k] == self.ubar {
                    continue;
                }
                // Bins in identical states lead to symmetric subtrees.
                if (0..k).any(|j| self.sums[j] == self.sums[k] && self.sizes[j] == self.sizes[k]) {
                    continue;
                }
                self.sums[k] += w;
                self.sizes[k] += 1;
                self.cur[i] = k;
                let next = cur_max.max(self.sums[k]);
                self.run(depth + 1, next);
                self.sums[k] -= w;
                self.sizes[k] -= 1;
            }
        }
    }

    let mut b = Bnb {
        ws,
        order: &order,
        ubar,
        sums: vec![0; m],
        sizes: vec![0; m],
        cur: vec![0; ws.len()],
        best: Weight::MAX,
        best_assign: vec![0; ws.len()],
    };
    b.run(0, 0);
    (b.best, b.best_assign)
}

/// Global optimum of the min-max objective over every matching saturating U
/// and every capacity-feasible partition.
pub fn exact_oracle(g: &BipartiteGraph, m: usize, ubar: usize) -> Result<(Weight, Solution)> {
    let n1 = g.n1();
    check_capacity(n1, m, ubar)?;
    guard(g, m)?;

    struct Walk<'a> {
        g: &'a BipartiteGraph,
        m: usize,
        ubar: usize,
        used: Vec<bool>,
        mate: Vec<usize>,
        ws: Vec<Weight>,
        memo: HashMap<Vec<Weight>, Weight>,
        best: Weight,
        best_mate: Option<Vec<usize>>,
    }
    impl Walk<'_> {
        fn run(&mut self, u: usize) {
            if u == self.g.n1() {
                let mut key = self.ws.clone();
                key.sort_unstable();
                let (m, ubar) = (self.m, self.ubar);
                let val = *self.memo.entry(key).or_insert_with_key(|k| best_partition(k, m, ubar).0);
                if val < self.best {
                    self.best = val;
                    self.best_mate = Some(self.mate.clone());
                }
                return;
            }
            for v in 0..self.g.n2() {
                if self.used[v] {
                    continue;
                }
                let Some(w) = self.g.available(u, v) else { continue };
                self.used[v] = true;
                self.mate[u] = v;
                self.ws[u] = w;
                self.run(u + 1);
                self.used[v] = false;
            }
        }
    }

    let mut walk = Walk {
        g,
        m,
        ubar,
        used: vec![false; g.n2()],
        mate: vec![0; n1],
        ws: vec![0; n1],
        memo: HashMap::new(),
        best: Weight::MAX,
        best_mate: None,
    };
    walk.run(0);
    let mate = walk
        .best_mate
        .ok_or_else(|| Error::InfeasibleInstance("no matching saturates U".into()))?;
    let ws: Vec<Weight> = mate.iter().enumerate().map(|(u, &v)| g.available(u, v).expect("walked")).collect();
    let (opt, part_of) = best_partition(&ws, m, ubar);
    debug_assert_eq!(opt, walk.best);
    let sol = Solution::new(g, mate, PartitionAssignment::new(m, ubar, part_of));
    Ok((opt, sol))
}
