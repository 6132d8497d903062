//! Solver toolkit for the Partitioning Min-Max Weighted Matching problem.
//!
//! Given a weighted bipartite graph `G(U, V, E)` with `|U| ≤ |V|`, find a
//! matching saturating U and a partition of U into `m` parts of at most `ubar`
//! vertices each, minimizing the heaviest part's matched weight.
//!
//! The main solver ([`orchestrator::solve`]) alternates a match stage (exact
//! min-weight matching, repaired incrementally between iterations) and a
//! partition stage (hybrid genetic algorithm with multilevel local search),
//! then perturbs the graph by banning edges with a tenure.

pub mod error;
pub mod fixtures;
pub mod graph;
pub mod harness;
pub mod hga;
pub mod instgen;
pub mod matcher;
pub mod numpart;
pub mod orchestrator;

pub use error::{Error, Result};
pub use graph::{
    evaluate_objective, load_instance, parse_instance, partition_weights, validate_solution,
    BipartiteGraph, Instance, PartitionAssignment, Solution, Violation, Weight,
};
pub use matcher::MatchState;
