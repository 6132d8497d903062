//! `pmmwm` command-line tool.
//!
//! Exit codes: 0 ok, 2 usage or invalid parameters, 3 parse error,
//! 4 infeasible instance, 5 enumeration too large, 6 I/O error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pmmwm::graph::format_weight;
use pmmwm::harness::{self, BenchOptions, SolutionFile};
use pmmwm::hga::HgaParams;
use pmmwm::instgen::{self, BenchmarkGroup, InstanceSpec, WeightModel};
use pmmwm::orchestrator::{solve, Algorithm, FimpParams};
use pmmwm::{load_instance, Error, Result};

#[derive(Parser)]
#[command(name = "pmmwm", version, about = "Partitioning min-max weighted matching solver")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate one random instance.
    Generate(GenerateArgs),
    /// Generate a benchmark group (60 instances plus manifest.csv).
    BenchmarkGen(BenchmarkGenArgs),
    /// Solve an instance.
    Solve(SolveArgs),
    /// Exact optimum of a tiny instance by exhaustive enumeration.
    Oracle(OracleArgs),
    /// Solve every instance of a directory and write a CSV report.
    Bench(BenchArgs),
    /// Compare two bench reports per instance.
    Compare(CompareArgs),
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    n1: usize,
    /// Defaults to n1.
    #[arg(long)]
    n2: Option<usize>,
    #[arg(long)]
    m: usize,
    /// Defaults to ceil(1.2 * n1 / m).
    #[arg(long)]
    ubar: Option<usize>,
    #[arg(long, default_value_t = 1.0)]
    density: f64,
    #[arg(long, default_value = "consistent")]
    model: WeightModel,
    #[arg(long, default_value_t = 100)]
    w_max: i64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short, long)]
    out: PathBuf,
}

#[derive(Args)]
struct BenchmarkGenArgs {
    /// consistent-dense, consistent-sparse, independent-dense,
    /// independent-sparse, or `all` (one subdirectory per group).
    #[arg(long)]
    group: String,
    #[arg(short, long)]
    out: PathBuf,
}

#[derive(Args, Clone)]
struct SolverArgs {
    #[arg(long, default_value = "fimp-hga")]
    algo: Algorithm,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    time_limit_ms: Option<u64>,
    #[arg(long, default_value_t = 500)]
    max_iterations: usize,
    #[arg(long, default_value_t = 20)]
    tenure: usize,
    #[arg(long, default_value_t = 0.05)]
    recovery_threshold: f64,
    #[arg(long, default_value_t = 0.5)]
    recovery_prob: f64,
    #[arg(long, default_value_t = 20)]
    pop_size: usize,
    #[arg(long, default_value_t = 200)]
    generations: usize,
    #[arg(long, default_value_t = 20)]
    stall_limit: usize,
    #[arg(long, default_value_t = 0.2)]
    mutation_rate: f64,
    #[arg(long, default_value_t = 1)]
    elite: usize,
}

impl SolverArgs {
    fn params(&self) -> FimpParams {
        FimpParams {
            max_iterations: self.max_iterations,
            time_limit_ms: self.time_limit_ms,
            tenure: self.tenure,
            recovery_threshold: self.recovery_threshold,
            recovery_prob: self.recovery_prob,
            hga: HgaParams {
                pop_size: self.pop_size,
                max_generations: self.generations,
                stall_limit: self.stall_limit,
                mutation_rate: self.mutation_rate,
                elite_count: self.elite,
                rng_seed: 0,
            },
            rng_seed: self.seed,
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    instance: PathBuf,
    #[command(flatten)]
    solver: SolverArgs,
    /// Write the solution as JSON.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Write run statistics and the per-iteration trace as JSON.
    #[arg(long)]
    stats: Option<PathBuf>,
    /// Record wall_time_ms as 0 so equal seeds give byte-identical JSON.
    #[arg(long)]
    reproducible: bool,
}

#[derive(Args)]
struct OracleArgs {
    instance: PathBuf,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    dir: PathBuf,
    #[command(flatten)]
    solver: SolverArgs,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Fill the optimum and gap columns where the exact oracle applies.
    #[arg(long)]
    oracle: bool,
    #[arg(short, long)]
    out: PathBuf,
}

#[derive(Args)]
struct CompareArgs {
    a: PathBuf,
    b: PathBuf,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

fn run(cli: Cli) -> Result<()> {
    match cli.cmd {
        Command::Generate(a) => {
            let spec = InstanceSpec {
                n1: a.n1,
                n2: a.n2.unwrap_or(a.n1),
                m: a.m,
                ubar: a.ubar.unwrap_or_else(|| instgen::default_capacity(a.n1, a.m.max(1))),
                density: a.density,
                weight_model: a.model,
                w_max: a.w_max,
                seed: a.seed,
            };
            instgen::generate(&spec)?.write(&a.out)?;
        }
        Command::BenchmarkGen(a) => {
            let groups: Vec<BenchmarkGroup> = if a.group == "all" {
                BenchmarkGroup::ALL.to_vec()
            } else {
                vec![a.group.parse().map_err(Error::SpecInvalid)?]
            };
            for g in &groups {
                let dir = if groups.len() > 1 { a.out.join(g.name()) } else { a.out.clone() };
                let files = instgen::generate_benchmark(*g, &dir)?;
                println!("{}: {} instances in {}", g, files.len(), dir.display());
            }
        }
        Command::Solve(a) => {
            let inst = load_instance(&a.instance)?;
            let params = a.solver.params();
            let out = solve(&inst, &params, a.solver.algo)?;
            let wall = if a.reproducible { 0.0 } else { out.stats.wall_time_ms };
            println!("{}", format_weight(out.solution.objective, inst.graph.scale()));
            if let Some(path) = &a.json {
                SolutionFile::new(&inst.graph, &out.solution, a.solver.algo.name(), params.rng_seed, out.stats.iterations, wall)
                    .write(path)?;
            }
            if let Some(path) = &a.stats {
                let mut stats = out.stats.clone();
                if a.reproducible {
                    stats.wall_time_ms = 0.0;
                    stats.match_time_ms = 0.0;
                    stats.hga_time_ms = 0.0;
                    for r in &mut stats.trace {
                        r.match_time_ms = 0.0;
                        r.hga_time_ms = 0.0;
                    }
                }
                harness::write_stats(&stats, path)?;
            }
        }
        Command::Oracle(a) => {
            let inst = load_instance(&a.instance)?;
            let (opt, sol) = harness::exact_oracle(&inst.graph, inst.m, inst.ubar)?;
            println!("{}", format_weight(opt, inst.graph.scale()));
            if let Some(path) = &a.json {
                SolutionFile::new(&inst.graph, &sol, "oracle", 0, 0, 0.0).write(path)?;
            }
        }
        Command::Bench(a) => {
            let opts = BenchOptions {
                algo: a.solver.algo,
                params: a.solver.params(),
                jobs: a.jobs,
                with_oracle: a.oracle,
            };
            let rows = harness::bench(&a.dir, &opts)?;
            harness::write_reports(&rows, &a.out)?;
            println!("{} instances -> {}", rows.len(), a.out.display());
        }
        Command::Compare(a) => {
            let ra = harness::read_reports(&a.a)?;
            let rb = harness::read_reports(&a.b)?;
            let (rows, summary) = harness::compare(&ra, &rb)?;
            if let Some(path) = &a.out {
                harness::write_comparison(&rows, path)?;
            }
            println!("{summary}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(harness::exit_code(&e) as u8)
        }
    }
}
