//! Problem instance representation, feasibility checks and objective evaluation.
//!
//! Weights are stored as scaled 64-bit integers. The instance format accepts
//! decimal weights with at most six fractional digits; every weight in a file
//! is multiplied by `10^k`, where `k` is the largest number of fractional
//! digits that appears in that file, so all arithmetic downstream is exact.

use std::fmt;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};

/// Scaled integer edge weight.
pub type Weight = i64;

/// Marks an absent edge in the dense weight table.
pub const ABSENT: Weight = -1;

const MAX_FRACTION_DIGITS: usize = 6;

/// Dense weighted bipartite graph `G(U, V, E)` with per-edge ban flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    n1: usize,
    n2: usize,
    weights: Vec<Weight>,
    banned: Vec<bool>,
    scale: i64,
}

impl BipartiteGraph {
    /// Builds a graph from a dense row-major table; `None` marks an absent edge.
    pub fn from_dense(n1: usize, n2: usize, table: &[Option<Weight>]) -> Result<Self> {
        Self::check_dims(n1, n2)?;
        if table.len() != n1 * n2 {
            return Err(Error::InfeasibleInstance(format!(
                "weight table has {} entries, expected {}",
                table.len(),
                n1 * n2
            )));
        }
        let mut weights = Vec::with_capacity(table.len());
        for &w in table {
            match w {
                Some(w) if w < 0 => {
                    return Err(Error::InfeasibleInstance(format!("negative weight {w}")))
                }
                Some(w) => weights.push(w),
                None => weights.push(ABSENT),
            }
        }
        Ok(Self { n1, n2, weights, banned: vec![false; n1 * n2], scale: 1 })
    }

    /// Complete graph from a row-major matrix of weights.
    pub fn complete(rows: &[Vec<Weight>]) -> Result<Self> {
        let n1 = rows.len();
        let n2 = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n2) {
            return Err(Error::InfeasibleInstance("ragged weight matrix".into()));
        }
        let table: Vec<_> = rows.iter().flatten().map(|&w| Some(w)).collect();
        Self::from_dense(n1, n2, &table)
    }

    /// Empty graph (every edge absent), to be filled with [`Self::set_edge`].
    pub fn empty(n1: usize, n2: usize) -> Result<Self> {
        Self::check_dims(n1, n2)?;
        Ok(Self {
            n1,
            n2,
            weights: vec![ABSENT; n1 * n2],
            banned: vec![false; n1 * n2],
            scale: 1,
        })
    }

    fn check_dims(n1: usize, n2: usize) -> Result<()> {
        if n1 == 0 {
            return Err(Error::InfeasibleInstance("n1 must be at least 1".into()));
        }
        if n2 < n1 {
            return Err(Error::InfeasibleInstance(format!("n2={n2} < n1={n1} is not supported")));
        }
        Ok(())
    }

    pub fn set_edge(&mut self, u: usize, v: usize, w: Weight) {
        assert!(w >= 0, "edge weights are non-negative");
        let i = self.idx(u, v);
        self.weights[i] = w;
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    /// Factor by which on-disk weights were multiplied (a power of ten).
    pub fn scale(&self) -> i64 {
        self.scale
    }

    #[inline]
    fn idx(&self, u: usize, v: usize) -> usize {
        debug_assert!(u < self.n1 && v < self.n2);
        u * self.n2 + v
    }

    /// Weight of a present edge, banned or not.
    #[inline]
    pub fn weight(&self, u: usize, v: usize) -> Option<Weight> {
        let w = self.weights[self.idx(u, v)];
        (w != ABSENT).then_some(w)
    }

    /// Weight of an edge that is present and not banned.
    #[inline]
    pub fn available(&self, u: usize, v: usize) -> Option<Weight> {
        let i = self.idx(u, v);
        let w = self.weights[i];
        (w != ABSENT && !self.banned[i]).then_some(w)
    }

    /// Row `u` of the raw weight table (ABSENT sentinels included).
    #[inline]
    pub(crate) fn row(&self, u: usize) -> (&[Weight], &[bool]) {
        let s = u * self.n2;
        (&self.weights[s..s + self.n2], &self.banned[s..s + self.n2])
    }

    pub fn is_banned(&self, u: usize, v: usize) -> bool {
        self.banned[self.idx(u, v)]
    }

    /// Marks a present edge as banned. Returns false if it was absent or
    /// already banned.
    pub fn ban(&mut self, u: usize, v: usize) -> bool {
        let i = self.idx(u, v);
        if self.weights[i] == ABSENT || self.banned[i] {
            return false;
        }
        self.banned[i] = true;
        true
    }

    pub fn unban(&mut self, u: usize, v: usize) -> bool {
        let i = self.idx(u, v);
        std::mem::replace(&mut self.banned[i], false)
    }

    pub fn banned_edges(&self) -> Vec<(usize, usize)> {
        (0..self.n1)
            .flat_map(|u| (0..self.n2).map(move |v| (u, v)))
            .filter(|&(u, v)| self.is_banned(u, v))
            .collect()
    }

    /// Number of present edges.
    pub fn edge_count(&self) -> usize {
        self.weights.iter().filter(|&&w| w != ABSENT).count()
    }

    pub fn max_weight(&self) -> Weight {
        self.weights.iter().copied().max().unwrap_or(0).max(0)
    }

    /// Whether the available edges admit a matching saturating U
    /// (augmenting-path search, no weights involved).
    pub fn has_perfect_matching(&self) -> bool {
        let mut mate_v = vec![usize::MAX; self.n2];
        let mut seen = vec![usize::MAX; self.n2];
        for root in 0..self.n1 {
            if !self.augment_kuhn(root, root, &mut mate_v, &mut seen) {
                return false;
            }
        }
        true
    }

    fn augment_kuhn(&self, u: usize, stamp: usize, mate_v: &mut [usize], seen: &mut [usize]) -> bool {
        // Explicit stack: recursion depth can reach n1 on long alternating paths.
        let mut stack: Vec<(usize, usize)> = vec![(u, 0)];
        let mut via: Vec<usize> = Vec::new();
        while let Some(&mut (x, ref mut next)) = stack.last_mut() {
            let mut advanced = false;
            while *next < self.n2 {
                let v = *next;
                *next += 1;
                if self.available(x, v).is_none() || seen[v] == stamp {
                    continue;
                }
                seen[v] = stamp;
                if mate_v[v] == usize::MAX {
                    via.push(v);
                    // Flip the alternating path recorded on the stack.
                    for (&(row, _), &col) in stack.iter().zip(via.iter()) {
                        mate_v[col] = row;
                    }
                    return true;
                }
                via.push(v);
                stack.push((mate_v[v], 0));
                advanced = true;
                break;
            }
            if !advanced {
                stack.pop();
                via.pop();
            }
        }
        false
    }
}

/// A graph together with the partition count `m` and capacity `ubar`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: BipartiteGraph,
    pub m: usize,
    pub ubar: usize,
}

impl Instance {
    /// Validates `m·ubar ≥ n1` and perfect-matching feasibility.
    pub fn new(graph: BipartiteGraph, m: usize, ubar: usize) -> Result<Self> {
        if m == 0 || ubar == 0 {
            return Err(Error::InfeasibleInstance("m and ubar must be positive".into()));
        }
        if m.saturating_mul(ubar) < graph.n1() {
            return Err(Error::InfeasibleInstance(format!(
                "m*ubar = {}*{} < n1 = {}",
                m,
                ubar,
                graph.n1()
            )));
        }
        if !graph.has_perfect_matching() {
            return Err(Error::InfeasibleInstance(
                "available edges admit no matching saturating U".into(),
            ));
        }
        Ok(Self { graph, m, ubar })
    }

    /// Serializes to the text instance format (row-major edge list).
    pub fn to_text(&self) -> String {
        let g = &self.graph;
        let mut out = String::new();
        let _ = writeln!(out, "{} {} {} {}", g.n1, g.n2, self.m, self.ubar);
        for u in 0..g.n1 {
            for v in 0..g.n2 {
                if let Some(w) = g.weight(u, v) {
                    let _ = writeln!(out, "{u} {v} {}", format_weight(w, g.scale));
                }
            }
        }
        out
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }
}

/// Reads and validates an instance file.
pub fn load_instance(path: impl AsRef<Path>) -> Result<Instance> {
    let text = std::fs::read_to_string(path)?;
    parse_instance(&text)
}

/// Parses the text instance format.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(Error::Parse { line: 0, msg: "empty file".into() })?;
    let fields = header
        .split_whitespace()
        .map(|t| t.parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|e| Error::Parse { line: hline, msg: format!("bad header: {e}") })?;
    let [n1, n2, m, ubar] = fields[..] else {
        return Err(Error::Parse { line: hline, msg: "header must be `n1 n2 m ubar`".into() });
    };
    if n1 == 0 || n2 < n1 {
        return Err(Error::Parse {
            line: hline,
            msg: format!("need 1 <= n1 <= n2, got n1={n1} n2={n2}"),
        });
    }

    let mut raw: Vec<(usize, usize, u64, String)> = Vec::new();
    let mut digits = 0usize;
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [ut, vt, wt] = toks[..] else {
            return Err(Error::Parse { line, msg: "edge line must be `u v w`".into() });
        };
        let perr = |msg: String| Error::Parse { line, msg };
        let u: usize = ut.parse().map_err(|e| perr(format!("bad u: {e}")))?;
        let v: usize = vt.parse().map_err(|e| perr(format!("bad v: {e}")))?;
        if u >= n1 || v >= n2 {
            return Err(perr(format!("edge ({u},{v}) out of range")));
        }
        if wt.starts_with('-') {
            return Err(perr(format!("negative weight {wt}")));
        }
        let (int_part, frac) = wt.split_once('.').unwrap_or((wt, ""));
        if frac.len() > MAX_FRACTION_DIGITS {
            return Err(perr(format!("weight {wt} has more than {MAX_FRACTION_DIGITS} fractional digits")));
        }
        let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
        if int_part.is_empty() && frac.is_empty() || !all_digits(int_part) || !all_digits(frac) {
            return Err(perr(format!("bad weight {wt}")));
        }
        let int: u64 = if int_part.is_empty() {
            0
        } else {
            int_part.parse().map_err(|e| perr(format!("bad weight {wt}: {e}")))?
        };
        digits = digits.max(frac.len());
        raw.push((u, v, int, frac.to_string()));
    }

    let scale = 10i64.pow(digits as u32);
    let mut graph = BipartiteGraph::empty(n1, n2)?;
    graph.scale = scale;
    for (u, v, int, frac) in raw {
        let mut frac = frac;
        while frac.len() < digits {
            frac.push('0');
        }
        let frac_val: i64 = if frac.is_empty() { 0 } else { frac.parse().expect("validated digits") };
        let w = i64::try_from(int)
            .ok()
            .and_then(|i| i.checked_mul(scale))
            .and_then(|i| i.checked_add(frac_val))
            .ok_or(Error::Parse { line: 0, msg: format!("weight of edge ({u},{v}) overflows") })?;
        if graph.weight(u, v).is_some() {
            return Err(Error::Parse { line: 0, msg: format!("duplicate edge ({u},{v})") });
        }
        graph.set_edge(u, v, w);
    }
    Instance::new(graph, m, ubar)
}

/// Renders a scaled weight back in file units, exactly.
pub fn format_weight(w: Weight, scale: i64) -> String {
    if scale == 1 {
        return w.to_string();
    }
    let digits = scale.ilog10() as usize;
    let sign = if w < 0 { "-" } else { "" };
    let a = w.unsigned_abs();
    let s = scale as u64;
    let frac = format!("{:0digits$}", a % s);
    let frac = frac.trim_end_matches('0');
    if frac.is_empty() {
        format!("{sign}{}", a / s)
    } else {
        format!("{sign}{}.{frac}", a / s)
    }
}

/// Assignment of each U-vertex to one of `m` capacity-bounded partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartitionAssignment {
    pub m: usize,
    pub ubar: usize,
    pub part_of: Vec<usize>,
}

impl PartitionAssignment {
    pub fn new(m: usize, ubar: usize, part_of: Vec<usize>) -> Self {
        Self { m, ubar, part_of }
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.m];
        for &k in &self.part_of {
            if k < self.m {
                sizes[k] += 1;
            }
        }
        sizes
    }

    /// Per-partition sums of `weights[i]` over the items assigned to each partition.
    pub fn sums(&self, weights: &[Weight]) -> Vec<Weight> {
        let mut sums = vec![0; self.m];
        for (i, &k) in self.part_of.iter().enumerate() {
            sums[k] += weights[i];
        }
        sums
    }

    /// First violation of exhaustiveness (every item in exactly one valid
    /// partition) or capacity, if any.
    pub fn check(&self, n: usize) -> Option<Violation> {
        if self.part_of.len() != n {
            return Some(Violation::PartitionLength { expected: n, found: self.part_of.len() });
        }
        if let Some(u) = self.part_of.iter().position(|&k| k >= self.m) {
            return Some(Violation::Unpartitioned { u, part: self.part_of[u] });
        }
        let sizes = self.sizes();
        sizes
            .iter()
            .position(|&s| s > self.ubar)
            .map(|k| Violation::CapacityExceeded { part: k, size: sizes[k], ubar: self.ubar })
    }
}

/// A matching on U plus a partition of U, with its cached objective.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub mate: Vec<usize>,
    pub partition: PartitionAssignment,
    pub objective: Weight,
}

impl Solution {
    /// Builds a solution and evaluates its objective against `g`.
    pub fn new(g: &BipartiteGraph, mate: Vec<usize>, partition: PartitionAssignment) -> Self {
        let mut sol = Self { mate, partition, objective: 0 };
        evaluate_objective(g, &mut sol);
        sol
    }

    /// Matched weight of every U-vertex.
    pub fn matched_weights(&self, g: &BipartiteGraph) -> Vec<Weight> {
        self.mate
            .iter()
            .enumerate()
            .map(|(u, &v)| g.weight(u, v).expect("matched edge present"))
            .collect()
    }
}

/// Sum of matched edge weights per partition, in partition-index order.
pub fn partition_weights(g: &BipartiteGraph, sol: &Solution) -> Vec<Weight> {
    sol.partition.sums(&sol.matched_weights(g))
}

/// `max_k W(U_k)`; also stored into `sol.objective`.
pub fn evaluate_objective(g: &BipartiteGraph, sol: &mut Solution) -> Weight {
    let obj = partition_weights(g, sol).into_iter().max().unwrap_or(0);
    sol.objective = obj;
    obj
}

/// Constraint violated by a candidate solution. Vertex and partition ids are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Matching array has the wrong length.
    MatchingLength { expected: usize, found: usize },
    /// `u` is not matched to a valid V-vertex.
    Unmatched { u: usize },
    /// `(u, v)` is absent or banned.
    UnavailableEdge { u: usize, v: usize },
    /// Two U-vertices share one V-vertex.
    SharedVertex { v: usize, first: usize, second: usize },
    /// Partition array has the wrong length.
    PartitionLength { expected: usize, found: usize },
    /// `u` is assigned to a partition index outside `0..m`.
    Unpartitioned { u: usize, part: usize },
    CapacityExceeded { part: usize, size: usize, ubar: usize },
}

impl Violation {
    /// Number (1-4) of the violated model constraint.
    pub fn constraint(&self) -> u8 {
        match self {
            Self::MatchingLength { .. } | Self::Unmatched { .. } | Self::UnavailableEdge { .. } => 1,
            Self::SharedVertex { .. } => 2,
            Self::PartitionLength { .. } | Self::Unpartitioned { .. } => 3,
            Self::CapacityExceeded { .. } => 4,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "constraint ({}) violated: ", self.constraint())?;
        match self {
            Self::MatchingLength { expected, found } => {
                write!(f, "matching has {found} entries, expected {expected}")
            }
            Self::Unmatched { u } => write!(f, "u={u} is not matched"),
            Self::UnavailableEdge { u, v } => write!(f, "edge ({u},{v}) is not available"),
            Self::SharedVertex { v, first, second } => {
                write!(f, "v={v} matched to both u={first} and u={second}")
            }
            Self::PartitionLength { expected, found } => {
                write!(f, "partition has {found} entries, expected {expected}")
            }
            Self::Unpartitioned { u, part } => write!(f, "u={u} assigned to invalid partition {part}"),
            Self::CapacityExceeded { part, size, ubar } => {
                write!(f, "partition {part} holds {size} > {ubar} vertices")
            }
        }
    }
}

/// Checks constraints (1)-(4) in order and reports the first violation.
pub fn validate_solution(g: &BipartiteGraph, sol: &Solution) -> std::result::Result<(), Violation> {
    let n1 = g.n1();
    if sol.mate.len() != n1 {
        return Err(Violation::MatchingLength { expected: n1, found: sol.mate.len() });
    }
    for (u, &v) in sol.mate.iter().enumerate() {
        if v >= g.n2() {
            return Err(Violation::Unmatched { u });
        }
        if g.available(u, v).is_none() {
            return Err(Violation::UnavailableEdge { u, v });
        }
    }
    let mut owner = vec![usize::MAX; g.n2()];
    for (u, &v) in sol.mate.iter().enumerate() {
        if owner[v] != usize::MAX {
            return Err(Violation::SharedVertex { v, first: owner[v], second: u });
        }
        owner[v] = u;
    }
    match sol.partition.check(n1) {
        Some(v) => Err(v),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn parses_two_by_two() {
        let inst = parse_instance("2 2 1 2\n0 0 1\n0 1 2\n1 0 2\n1 1 1").unwrap();
        let g = &inst.graph;
        assert_eq!((g.n1(), g.n2(), inst.m, inst.ubar), (2, 2, 1, 2));
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.weight(0, 0), Some(1));
        assert_eq!(g.weight(0, 1), Some(2));
        assert_eq!(g.weight(1, 0), Some(2));
        assert_eq!(g.weight(1, 1), Some(1));
    }

    #[test]
    fn rejects_insufficient_capacity() {
        let text = "3 3 1 2\n0 0 1\n1 1 1\n2 2 1\n";
        assert!(matches!(parse_instance(text), Err(Error::InfeasibleInstance(_))));
    }

    #[test]
    fn rejects_missing_perfect_matching() {
        let text = "2 2 2 1\n0 0 1\n1 0 1\n";
        assert!(matches!(parse_instance(text), Err(Error::InfeasibleInstance(_))));
    }

    #[test]
    fn parse_errors() {
        for bad in [
            "",
            "2 2 1\n",
            "2 1 1 2\n0 0 1\n",
            "1 1 1 1\n0 0 -1\n",
            "1 1 1 1\n0 1 1\n",
            "1 1 1 1\n0 0 1.1234567\n",
            "1 1 1 1\n0 0 abc\n",
            "1 1 1 1\n0 0 1\n0 0 2\n",
            "1 1 1 1\n0 0\n",
        ] {
            assert!(matches!(parse_instance(bad), Err(Error::Parse { .. })), "accepted {bad:?}");
        }
    }

    #[test]
    fn decimal_weights_are_scaled() {
        let inst = parse_instance("# comment\n2 2 2 1\n0 0 1.5\n1 1 2\n0 1 .25\n").unwrap();
        let g = &inst.graph;
        assert_eq!(g.scale(), 100);
        assert_eq!(g.weight(0, 0), Some(150));
        assert_eq!(g.weight(1, 1), Some(200));
        assert_eq!(g.weight(0, 1), Some(25));
        assert_eq!(g.weight(1, 0), None);
        assert_eq!(format_weight(150, 100), "1.5");
        assert_eq!(format_weight(200, 100), "2");
        assert_eq!(format_weight(25, 100), "0.25");
        let again = parse_instance(&inst.to_text()).unwrap();
        assert_eq!(again, inst);
    }

    #[test]
    fn fig1_instance_is_feasible() {
        let inst = fixtures::fig1_instance();
        assert_eq!(inst.graph.n1(), 6);
        let reparsed = parse_instance(&inst.to_text()).unwrap();
        assert_eq!(reparsed, inst);
    }

    #[test]
    fn fig1_partition_weights() {
        let inst = fixtures::fig1_instance();
        let g = &inst.graph;
        let mut a = fixtures::fig1_solution_a();
        assert_eq!(partition_weights(g, &a), vec![4, 2, 5]);
        assert_eq!(evaluate_objective(g, &mut a), 5);
        assert_eq!(a.objective, 5);
        assert_eq!(validate_solution(g, &a), Ok(()));

        let mut b = fixtures::fig1_solution_b();
        assert_eq!(partition_weights(g, &b), vec![4, 4, 4]);
        assert_eq!(evaluate_objective(g, &mut b), 4);
        assert_eq!(validate_solution(g, &b), Ok(()));
    }

    #[test]
    fn single_partition_sums_everything() {
        let g = BipartiteGraph::complete(&[vec![3, 9], vec![4, 1]]).unwrap();
        let mut sol = Solution::new(&g, vec![0, 1], PartitionAssignment::new(1, 2, vec![0, 0]));
        assert_eq!(partition_weights(&g, &sol), vec![4]);
        assert_eq!(evaluate_objective(&g, &mut sol), 4);

        let g1 = BipartiteGraph::complete(&[vec![7]]).unwrap();
        let mut one = Solution::new(&g1, vec![0], PartitionAssignment::new(1, 1, vec![0]));
        assert_eq!(evaluate_objective(&g1, &mut one), 7);
    }

    #[test]
    fn shared_vertex_flags_constraint_two() {
        let g = BipartiteGraph::complete(&[vec![1, 2], vec![2, 1]]).unwrap();
        let sol = Solution::new(&g, vec![0, 0], PartitionAssignment::new(2, 1, vec![0, 1]));
        let err = validate_solution(&g, &sol).unwrap_err();
        assert_eq!(err, Violation::SharedVertex { v: 0, first: 0, second: 1 });
        assert_eq!(err.constraint(), 2);
    }

    #[test]
    fn over_capacity_flags_constraint_four() {
        let g = BipartiteGraph::complete(&[vec![1, 2], vec![2, 1]]).unwrap();
        let sol = Solution::new(&g, vec![0, 1], PartitionAssignment::new(2, 1, vec![1, 1]));
        let err = validate_solution(&g, &sol).unwrap_err();
        assert_eq!(err, Violation::CapacityExceeded { part: 1, size: 2, ubar: 1 });
        assert_eq!(err.constraint(), 4);
    }

    #[test]
    fn banned_edge_is_unavailable() {
        let mut g = BipartiteGraph::complete(&[vec![1, 2], vec![2, 1]]).unwrap();
        assert!(g.ban(0, 0));
        assert!(!g.ban(0, 0));
        let sol = Solution::new(&g, vec![0, 1], PartitionAssignment::new(1, 2, vec![0, 0]));
        assert_eq!(validate_solution(&g, &sol), Err(Violation::UnavailableEdge { u: 0, v: 0 }));
        assert!(g.has_perfect_matching());
        g.ban(1, 0);
        assert!(!g.has_perfect_matching());
        assert!(g.unban(1, 0));
        assert_eq!(g.banned_edges(), vec![(0, 0)]);
    }

    #[test]
    fn kuhn_handles_long_alternating_chain() {
        // u_i adjacent to v_i and v_{i+1}; greedy order forces long augmenting paths.
        let n = 300;
        let mut g = BipartiteGraph::empty(n, n).unwrap();
        for u in 0..n {
            g.set_edge(u, u, 1);
            if u + 1 < n {
                g.set_edge(u, u + 1, 1);
            }
        }
        assert!(g.has_perfect_matching());
    }
}
