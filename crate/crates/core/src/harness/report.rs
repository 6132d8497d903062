//! Solution and run-statistics files.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{Number, Value};

use crate::error::{Error, Result};
use crate::graph::{format_weight, partition_weights, validate_solution, BipartiteGraph, Instance, PartitionAssignment, Solution, Weight};
use crate::orchestrator::RunStats;

/// Weight in file units: an integer when the instance is integral.
pub fn weight_value(w: Weight, scale: i64) -> Value {
    if scale == 1 {
        Value::from(w)
    } else {
        let text = format_weight(w, scale);
        text.parse::<f64>().ok().and_then(Number::from_f64).map(Value::Number).unwrap_or(Value::String(text))
    }
}

fn value_weight(v: &Value, scale: i64) -> Option<Weight> {
    match v {
        Value::Number(n) if scale == 1 => n.as_i64(),
        Value::Number(n) => n.as_f64().map(|x| (x * scale as f64).round() as Weight),
        _ => None,
    }
}

/// On-disk form of a solution.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionFile {
    pub algo: String,
    pub objective: Value,
    pub m: usize,
    pub ubar: usize,
    pub mate: Vec<usize>,
    pub part_of: Vec<usize>,
    pub partition_weights: Vec<Value>,
    pub seed: u64,
    pub iterations: usize,
    pub wall_time_ms: f64,
}

impl SolutionFile {
    pub fn new(g: &BipartiteGraph, sol: &Solution, algo: &str, seed: u64, iterations: usize, wall_time_ms: f64) -> Self {
        let scale = g.scale();
        Self {
            algo: algo.to_string(),
            objective: weight_value(sol.objective, scale),
            m: sol.partition.m,
            ubar: sol.partition.ubar,
            mate: sol.mate.clone(),
            part_of: sol.partition.part_of.clone(),
            partition_weights: partition_weights(g, sol).into_iter().map(|w| weight_value(w, scale)).collect(),
            seed,
            iterations,
            wall_time_ms,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data");
        s.push('\n');
        s
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }

    pub fn read(path: &Path) -> Result<Self> {
        Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
    }

    /// Rebuilds the solution against `inst`, validates it and checks the
    /// recorded objective.
    pub fn reload(&self, inst: &Instance) -> Result<Solution> {
        let g = &inst.graph;
        if self.m != inst.m || self.ubar != inst.ubar {
            return Err(Error::InfeasibleInstance(format!(
                "solution has m={} ubar={}, instance has m={} ubar={}",
                self.m, self.ubar, inst.m, inst.ubar
            )));
        }
        let sol = Solution {
            mate: self.mate.clone(),
            partition: PartitionAssignment::new(self.m, self.ubar, self.part_of.clone()),
            objective: 0,
        };
        validate_solution(g, &sol).map_err(|v| Error::InfeasibleInstance(format!("invalid solution: {v}")))?;
        let sol = Solution::new(g, sol.mate, sol.partition);
        if value_weight(&self.objective, g.scale()) != Some(sol.objective) {
            return Err(Error::InfeasibleInstance(format!(
                "recorded objective {} differs from evaluated {}",
                self.objective,
                format_weight(sol.objective, g.scale())
            )));
        }
        Ok(sol)
    }
}

pub fn write_stats(stats: &RunStats, path: &Path) -> Result<()> {
    let mut s = serde_json::to_string_pretty(stats)?;
    s.push('\n');
    std::fs::write(path, s)?;
    Ok(())
}
