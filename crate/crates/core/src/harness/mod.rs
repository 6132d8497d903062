//! Verification and benchmarking plumbing shared by the command-line tool.

mod bench;
mod oracle;
mod report;

pub use bench::{
    bench, compare, instance_files, read_reports, run_one, time_ratio, write_comparison, write_reports,
    BenchOptions, ComparisonRow, ComparisonSummary, Outcome, RunReport,
};
pub use oracle::{exact_oracle, ORACLE_MATCHING_LIMIT, ORACLE_MAX_N1, ORACLE_PARTITION_LIMIT};
pub use report::{weight_value, write_stats, SolutionFile};

use crate::error::{Error, Result};
use crate::graph::Instance;
use crate::orchestrator::{solve, Algorithm, FimpParams, SolveOutcome};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 2;
    pub const PARSE: i32 = 3;
    pub const INFEASIBLE: i32 = 4;
    pub const TOO_LARGE: i32 = 5;
    pub const IO: i32 = 6;
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Json(_) => exit::PARSE,
        Error::InfeasibleInstance(_) | Error::NoPerfectMatching { .. } | Error::CapacityInfeasible { .. } => {
            exit::INFEASIBLE
        }
        Error::TooLarge(_) => exit::TOO_LARGE,
        Error::SpecInvalid(_) | Error::InvalidParams(_) => exit::USAGE,
        Error::Io(_) => exit::IO,
        Error::Csv(c) => match c.kind() {
            csv::ErrorKind::Io(_) => exit::IO,
            _ => exit::PARSE,
        },
    }
}

/// Simplified local-search comparison anchor: the orchestrator loop with a
/// from-scratch matching after every ban, LPT plus relocation descent for
/// the partition, and no edge recovery.
pub fn baseline_ls(inst: &Instance, params: &FimpParams) -> Result<SolveOutcome> {
    solve(inst, params, Algorithm::Baseline)
}
