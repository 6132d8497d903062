//! Hand-encoded instances shared by tests, examples and the acceptance suite.
//!
//! The six-vertex instance reproduces the introductory worked example: three
//! partitions of capacity three, a minimum-weight matching whose partition
//! weights are 4, 2, 5, and two independent fixes that both reach 4.

use crate::graph::{BipartiteGraph, Instance, PartitionAssignment, Solution};

/// `(u, v, w)` edge list of the worked example, 0-based.
pub const FIG1_EDGES: [(usize, usize, i64); 12] = [
    (0, 0, 2),
    (0, 2, 5),
    (1, 0, 6),
    (1, 2, 2),
    (2, 1, 3),
    (2, 5, 1),
    (3, 3, 1),
    (3, 4, 4),
    (4, 1, 4),
    (4, 5, 3),
    (5, 3, 5),
    (5, 4, 1),
];

pub fn fig1_instance() -> Instance {
    let mut g = BipartiteGraph::empty(6, 6).expect("valid dims");
    for (u, v, w) in FIG1_EDGES {
        g.set_edge(u, v, w);
    }
    Instance::new(g, 3, 3).expect("worked example is feasible")
}

/// Configuration (a): partition weights 4, 2, 5.
pub fn fig1_solution_a() -> Solution {
    let inst = fig1_instance();
    Solution::new(
        &inst.graph,
        vec![0, 2, 5, 3, 1, 4],
        PartitionAssignment::new(3, 3, vec![0, 0, 1, 1, 2, 2]),
    )
}

/// Configuration (a) with u6 relocated to the second partition.
pub fn fig1_solution_relocated() -> Solution {
    let inst = fig1_instance();
    Solution::new(
        &inst.graph,
        vec![0, 2, 5, 3, 1, 4],
        PartitionAssignment::new(3, 3, vec![0, 0, 1, 1, 2, 1]),
    )
}

/// Configuration (b): u3 and u5 swap their V-partners, partition weights 4, 4, 4.
pub fn fig1_solution_b() -> Solution {
    let inst = fig1_instance();
    Solution::new(
        &inst.graph,
        vec![0, 2, 1, 3, 5, 4],
        PartitionAssignment::new(3, 3, vec![0, 0, 1, 1, 2, 2]),
    )
}
