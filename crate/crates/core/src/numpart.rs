//! Constructive min-max partitioning of a fixed weight vector into `m`
//! capacity-bounded sets: greedy LPT, multi-way Karmarkar-Karp differencing,
//! and an exhaustive oracle for tiny inputs.
//!
//! `PartitionAssignment::part_of` is indexed by position in the item slice.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::{PartitionAssignment, Weight};

/// One U-vertex and its matched edge weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightedItem {
    pub u: usize,
    pub w: Weight,
}

impl WeightedItem {
    pub fn from_weights(weights: &[Weight]) -> Vec<Self> {
        weights.iter().enumerate().map(|(u, &w)| Self { u, w }).collect()
    }
}

pub(crate) fn check_capacity(n: usize, m: usize, ubar: usize) -> Result<()> {
    if m == 0 || m.saturating_mul(ubar) < n {
        return Err(Error::CapacityInfeasible { m, ubar, n });
    }
    Ok(())
}

/// Positions sorted by weight descending, equal weights by U-index.
pub(crate) fn heaviest_first(items: &[WeightedItem]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..items.len()).collect();
    order.sort_by(|&a, &b| items[b].w.cmp(&items[a].w).then(items[a].u.cmp(&items[b].u)));
    order
}

/// Lightest partition with spare capacity, lowest index on ties.
pub(crate) fn lightest_open(sums: &[Weight], sizes: &[usize], ubar: usize) -> Option<usize> {
    (0..sums.len()).filter(|&k| sizes[k] < ubar).min_by_key(|&k| (sums[k], k))
}

/// Assigns items in the given order, each to the lightest partition with room.
pub(crate) fn greedy_in_order(
    items: &[WeightedItem],
    order: &[usize],
    m: usize,
    ubar: usize,
) -> PartitionAssignment {
    let mut sums = vec![0; m];
    let mut sizes = vec![0; m];
    let mut part_of = vec![0; items.len()];
    for &i in order {
        let k = lightest_open(&sums, &sizes, ubar).expect("capacity checked");
        part_of[i] = k;
        sums[k] += items[i].w;
        sizes[k] += 1;
    }
    PartitionAssignment::new(m, ubar, part_of)
}

/// Longest-processing-time-first: heaviest item to the currently lightest
/// partition that still has room.
pub fn greedy_lpt(items: &[WeightedItem], m: usize, ubar: usize) -> Result<PartitionAssignment> {
    check_capacity(items.len(), m, ubar)?;
    Ok(greedy_in_order(items, &heaviest_first(items), m, ubar))
}

/// Differencing tuple: `m` disjoint subsets with their sums, sorted by sum
/// descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KkTuple {
    pub subsets: Vec<Vec<usize>>,
    pub sums: Vec<Weight>,
}

impl KkTuple {
    fn single(pos: usize, w: Weight, m: usize) -> Self {
        let mut subsets = vec![Vec::new(); m];
        subsets[0].push(pos);
        let mut sums = vec![0; m];
        sums[0] = w;
        Self { subsets, sums }
    }

    pub fn spread(&self) -> Weight {
        self.sums[0] - self.sums[self.sums.len() - 1]
    }

    /// Pairs the largest sums of one tuple with the smallest of the other.
    fn merge(self, other: Self) -> Self {
        let m = self.sums.len();
        let mut parts: Vec<(Weight, Vec<usize>)> = self
            .sums
            .into_iter()
            .zip(self.subsets)
            .zip(other.sums.into_iter().zip(other.subsets).rev())
            .map(|((sa, mut a), (sb, b))| {
                a.extend(b);
                (sa + sb, a)
            })
            .collect();
        debug_assert_eq!(parts.len(), m);
        parts.sort_by_key(|x| Reverse(x.0));
        let (sums, subsets) = parts.into_iter().unzip();
        Self { subsets, sums }
    }
}

struct HeapEntry {
    spread: Weight,
    seq: usize,
    tuple: KkTuple,
}

impl PartialEq for HeapEntry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for HeapEntry {}
impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for HeapEntry {
    // Max-heap on spread; older tuples (smaller seq) first on ties.
    fn cmp(&self, other: &Self) -> Ordering {
        self.spread.cmp(&other.spread).then(Reverse(self.seq).cmp(&Reverse(other.seq)))
    }
}

/// Runs the differencing phase only, without the capacity repair.
pub fn kk_differencing(items: &[WeightedItem], m: usize) -> KkTuple {
    assert!(m >= 1);
    let mut heap = BinaryHeap::with_capacity(items.len());
    let mut seq = 0;
    for i in heaviest_first(items) {
        let tuple = KkTuple::single(i, items[i].w, m);
        heap.push(HeapEntry { spread: tuple.spread(), seq, tuple });
        seq += 1;
    }
    if heap.is_empty() {
        return KkTuple { subsets: vec![Vec::new(); m], sums: vec![0; m] };
    }
    while heap.len() > 1 {
        let a = heap.pop().expect("len > 1").tuple;
        let b = heap.pop().expect("len > 1").tuple;
        let tuple = a.merge(b);
        heap.push(HeapEntry { spread: tuple.spread(), seq, tuple });
        seq += 1;
    }
    heap.pop().expect("one tuple left").tuple
}

/// Multi-way Karmarkar-Karp followed by a capacity repair: while a partition
/// exceeds `ubar`, its smallest item moves to the lightest partition with room.
pub fn kk_multiway(items: &[WeightedItem], m: usize, ubar: usize) -> Result<PartitionAssignment> {
    check_capacity(items.len(), m, ubar)?;
    let tuple = kk_differencing(items, m);
    let mut part_of = vec![0; items.len()];
    for (k, subset) in tuple.subsets.iter().enumerate() {
        for &i in subset {
            part_of[i] = k;
        }
    }
    let mut members = tuple.subsets;
    let mut sums = tuple.sums;
    while let Some(k) = (0..m).find(|&k| members[k].len() > ubar) {
        let (slot, &i) = members[k]
            .iter()
            .enumerate()
            .min_by_key(|&(_, &i)| (items[i].w, items[i].u))
            .expect("overloaded partition is non-empty");
        let sizes: Vec<usize> = members.iter().map(Vec::len).collect();
        let target = lightest_open(&sums, &sizes, ubar).expect("capacity checked");
        members[k].swap_remove(slot);
        members[target].push(i);
        sums[k] -= items[i].w;
        sums[target] += items[i].w;
        part_of[i] = target;
    }
    Ok(PartitionAssignment::new(m, ubar, part_of))
}

/// Largest partition sum of an assignment.
pub fn max_sum(items: &[WeightedItem], p: &PartitionAssignment) -> Weight {
    let w: Vec<Weight> = items.iter().map(|it| it.w).collect();
    p.sums(&w).into_iter().max().unwrap_or(0)
}

/// Guard for exhaustive enumeration: `m^n ≤ 10^7`.
pub const BRUTE_LIMIT: u128 = 10_000_000;

/// Exhaustive optimum over every labeled capacity-feasible assignment.
pub fn min_max_brute(
    items: &[WeightedItem],
    m: usize,
    ubar: usize,
) -> Result<(Weight, PartitionAssignment)> {
    let n = items.len();
    let space = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if space > BRUTE_LIMIT {
        return Err(Error::TooLarge(format!("{m}^{n} assignments exceed {BRUTE_LIMIT}")));
    }
    check_capacity(n, m, ubar)?;

    struct Search<'a> {
        items: &'a [WeightedItem],
        ubar: usize,
        sums: Vec<Weight>,
        sizes: Vec<usize>,
        cur: Vec<usize>,
        best: Weight,
        best_assign: Vec<usize>,
    }
    impl Search<'_> {
        fn run(&mut self, i: usize, cur_max: Weight) {
            if i == self.items.len() {
                if cur_max < self.best {
                    self.best = cur_max;
                    self.best_assign.clone_from(&self.cur);
                }
                return;
            }
            for k in 0..self.sums.len() {
                if self.sizes[k] == self.ubar {
                    continue;
                }
                let w = self.items[i].w;
                self.sums[k] += w;
                self.sizes[k] += 1;
                self.cur[i] = k;
                self.run(i + 1, cur_max.max(self.sums[k]));
                self.sums[k] -= w;
                self.sizes[k] -= 1;
            }
        }
    }

    let mut s = Search {
        items,
        ubar,
        sums: vec![0; m],
        sizes: vec![0; m],
        cur: vec![0; n],
        best: Weight::MAX,
        best_assign: vec![0; n],
    };
    s.run(0, 0);
    Ok((s.best, PartitionAssignment::new(m, ubar, s.best_assign)))
}
