//! `mids`: command-line front end for the independent domination toolkit.
//!
//! Exit codes: 0 success (an infeasible marked instance is a success with
//! `feasible: false`), 1 internal error, 2 invalid flags, 3 unreadable or
//! malformed input, 4 timeout.

mod report;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use mids_core::exact::{SolveOptions, Solver};
use mids_core::io::{read_graph, write_dimacs};
use mids_core::mis::{for_each_bounded, oracle_opt};
use mids_core::recurrence::factor_of;
use mids_core::{
    approx_fixed_r, approx_partition, bench_fit, gnp, r_of_ratio, verify_solution, Graph,
    GraphSpec, Instance, VertexSet,
};
use serde_json::json;

use report::{InstanceInfo, Report, ResultInfo, StatsInfo};

#[derive(Parser)]
#[command(
    name = "mids",
    version,
    about = "Minimum independent dominating set toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact branch-and-reduce solver.
    Solve(SolveArgs),
    /// Brute-force optimum (small instances only).
    Oracle(GraphArgs),
    /// Exponential-time approximation with a chosen ratio.
    Approx(ApproxArgs),
    /// List maximal independent sets, one per line.
    Enumerate(EnumerateArgs),
    /// Branching factor of a comma-separated decrement list.
    Factor(FactorArgs),
    /// Write a generated graph in DIMACS format.
    Gen(GenArgs),
    /// Node counts of the exact solver on a seeded G(n, p) suite.
    Bench(BenchArgs),
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["input", "gen"]))]
struct GraphArgs {
    /// DIMACS or edge-list file (format detected from the header).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Generator spec such as `gnp/30/0.2/7`, `cycle/5` or `triangles/3`.
    #[arg(long)]
    gen: Option<String>,
    /// Overrides the seed of a `gnp` spec.
    #[arg(long)]
    seed: Option<u64>,
    /// Comma-separated vertex ids that may not enter the solution.
    #[arg(long, value_delimiter = ',')]
    marked: Vec<usize>,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Abort with exit code 4 after this many milliseconds.
    #[arg(long)]
    timeout_ms: Option<u64>,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("algo").required(true).args(["prop1", "prop2"]))]
#[command(group = clap::ArgGroup::new("param").required(true).args(["r", "target_ratio"]))]
struct ApproxArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Ratio r with enumeration up to n/r, else any maximal independent set.
    #[arg(long)]
    prop1: bool,
    /// Adds the windowed search, ratio r - ((r-1)/r)log2 r.
    #[arg(long)]
    prop2: bool,
    #[arg(long)]
    r: Option<f64>,
    /// Ratio to achieve; r is recovered by inverting the ratio formula.
    #[arg(long)]
    target_ratio: Option<f64>,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Only sets with at most this many vertices.
    #[arg(long)]
    max_size: Option<usize>,
}

#[derive(Args)]
struct FactorArgs {
    /// Decrements such as `2,4` or `3.2,3.2,5.2`.
    #[arg(value_delimiter = ',', required = true, allow_hyphen_values = true)]
    decrements: Vec<f64>,
}

#[derive(Args)]
struct GenArgs {
    /// Generator spec such as `gnp/30/0.2/7`.
    spec: String,
    #[arg(long)]
    seed: Option<u64>,
    /// Destination file; standard output when omitted.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_value = "16,20,24,28")]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    /// Number of seeds per size.
    #[arg(long, default_value_t = 10)]
    seeds: u64,
    /// First seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    threads: Option<usize>,
}

enum Failure {
    Usage(anyhow::Error),
    Input(anyhow::Error),
    Timeout(Box<Report>),
    Internal(anyhow::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Internal(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Input(_) => 3,
            Failure::Timeout(_) => 4,
        }
    }
}

type Outcome = Result<(), Failure>;

struct Loaded {
    graph: Arc<Graph>,
    marked: VertexSet,
    source: String,
}

impl Loaded {
    fn info(&self) -> InstanceInfo {
        InstanceInfo {
            n: self.graph.n(),
            m: self.graph.m(),
            source: self.source.clone(),
            marked: self.marked.to_vec(),
        }
    }

    fn instance(&self) -> Instance {
        Instance::with_marked(self.graph.clone(), &self.marked)
    }

    fn require_unmarked(&self, command: &str) -> Outcome {
        if self.marked.is_empty() {
            Ok(())
        } else {
            Err(Failure::Usage(anyhow!(
                "--marked is not supported by `{command}`"
            )))
        }
    }
}

fn parse_spec(spec: &str, seed: Option<u64>) -> Result<GraphSpec, Failure> {
    let mut spec: GraphSpec = spec
        .parse()
        .map_err(|e| Failure::Usage(anyhow!("bad generator spec {spec:?}: {e}")))?;
    if let (Some(s), GraphSpec::Gnp { seed, .. }) = (seed, &mut spec) {
        *seed = s;
    }
    Ok(spec)
}

fn build(spec: &GraphSpec) -> Result<Graph, Failure> {
    spec.build()
        .map_err(|e| Failure::Usage(anyhow!("cannot build {spec}: {e}")))
}

fn load(args: &GraphArgs) -> Result<Loaded, Failure> {
    let (graph, source) = match (&args.input, &args.gen) {
        (Some(path), _) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))
                .map_err(Failure::Input)?;
            let g = read_graph(&text)
                .with_context(|| format!("parsing {}", path.display()))
                .map_err(Failure::Input)?;
            (g, format!("file:{}", path.display()))
        }
        (None, Some(spec)) => {
            let spec = parse_spec(spec, args.seed)?;
            (build(&spec)?, format!("gen:{spec}"))
        }
        (None, None) => {
            return Err(Failure::Usage(anyhow!(
                "one of --input or --gen is required"
            )))
        }
    };
    let n = graph.n();
    if let Some(&v) = args.marked.iter().find(|&&v| v >= n) {
        return Err(Failure::Usage(anyhow!(
            "marked vertex {v} out of range for n = {n}"
        )));
    }
    Ok(Loaded {
        marked: VertexSet::from_iter_with_capacity(n, args.marked.iter().copied()),
        graph: Arc::new(graph),
        source,
    })
}

fn emit(value: &impl serde::Serialize) -> Outcome {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Internal(e.into()))?;
    println!("{text}");
    Ok(())
}

fn init_pool(threads: Option<usize>) -> Outcome {
    if let Some(t) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure::Internal(e.into()))?;
    }
    Ok(())
}

fn run_solve(args: SolveArgs) -> Outcome {
    if args.threads == 0 {
        return Err(Failure::Usage(anyhow!("--threads must be at least 1")));
    }
    let loaded = load(&args.graph)?;
    let started = Instant::now();
    let solver = Solver::new(SolveOptions {
        threads: args.threads,
        deadline: args
            .timeout_ms
            .map(|ms| started + Duration::from_millis(ms)),
        ..SolveOptions::default()
    });
    let params = json!({ "threads": args.threads, "timeout_ms": args.timeout_ms });
    let outcome = if loaded.marked.is_empty() {
        solver.solve_graph(&loaded.graph)
    } else {
        solver.solve(loaded.instance())
    };
    let (solution, stats) = match outcome {
        Ok(done) => done,
        Err(aborted) => {
            return Err(Failure::Timeout(Box::new(Report {
                instance: loaded.info(),
                algorithm: "exact".into(),
                result: None,
                stats: StatsInfo::from_branch(&aborted.stats, started.elapsed()),
                params,
            })))
        }
    };
    let free = loaded.graph.vertices().difference(&loaded.marked);
    if !solution.certify(&loaded.graph, &free) {
        return Err(Failure::Internal(anyhow!(
            "solver produced an invalid certificate"
        )));
    }
    emit(&Report {
        instance: loaded.info(),
        algorithm: "exact".into(),
        result: Some(ResultInfo::from_solution(&solution, None)),
        stats: StatsInfo::from_branch(&stats, started.elapsed()),
        params,
    })
}

fn run_oracle(args: GraphArgs) -> Outcome {
    let loaded = load(&args)?;
    if loaded.graph.n() > 64 {
        return Err(Failure::Usage(anyhow!(
            "the oracle handles at most 64 vertices"
        )));
    }
    let started = Instant::now();
    let solution = oracle_opt(&loaded.instance());
    emit(&Report {
        instance: loaded.info(),
        algorithm: "oracle".into(),
        result: Some(ResultInfo::from_solution(&solution, None)),
        stats: StatsInfo::timed(started.elapsed()),
        params: json!({}),
    })
}

fn run_approx(args: ApproxArgs) -> Outcome {
    init_pool(args.threads)?;
    let loaded = load(&args.graph)?;
    loaded.require_unmarked("approx")?;
    let r = match (args.r, args.target_ratio) {
        (Some(r), _) => r,
        (None, Some(rho)) => r_of_ratio(rho).map_err(|e| Failure::Usage(e.into()))?,
        (None, None) => unreachable!("clap requires one of --r and --target-ratio"),
    };
    let started = Instant::now();
    let (name, rep) = if args.prop1 {
        ("approx-prop1", approx_fixed_r(&loaded.graph, r))
    } else {
        ("approx-prop2", approx_partition(&loaded.graph, r))
    };
    let rep = rep.map_err(|e| Failure::Usage(e.into()))?;
    if !verify_solution(&loaded.graph, rep.vertices()).is_valid() {
        return Err(Failure::Internal(anyhow!(
            "approximation produced an invalid certificate"
        )));
    }
    let mut stats = StatsInfo::timed(started.elapsed());
    stats.nodes = rep.enumeration_nodes;
    emit(&Report {
        instance: loaded.info(),
        algorithm: name.into(),
        result: Some(ResultInfo::from_solution(
            &rep.solution,
            Some(rep.certified_optimal),
        )),
        stats,
        params: json!({
            "r_internal": rep.r_internal,
            "target_ratio": args.target_ratio,
            "ratio_bound": rep.ratio_bound,
            "blocks": rep.blocks,
            "subsets_tried": rep.subsets_tried,
        }),
    })
}

fn run_enumerate(args: EnumerateArgs) -> Outcome {
    let loaded = load(&args.graph)?;
    loaded.require_unmarked("enumerate")?;
    let bound = args.max_size.unwrap_or(loaded.graph.n());
    let mut sets = Vec::new();
    for_each_bounded(&loaded.graph, bound, |s| {
        sets.push(s.clone());
        std::ops::ControlFlow::Continue(())
    });
    sets.sort_by(|a, b| a.cmp_size_lex(b));
    let mut out = std::io::stdout().lock();
    for s in sets {
        let line: Vec<String> = s.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", line.join(" ")).map_err(|e| Failure::Internal(e.into()))?;
    }
    Ok(())
}

fn run_factor(args: FactorArgs) -> Outcome {
    let x = factor_of(&args.decrements).map_err(|e| Failure::Usage(e.into()))?;
    emit(&json!({ "decrements": args.decrements, "factor": x, "log2": x.log2() }))
}

fn run_gen(args: GenArgs) -> Outcome {
    let g = build(&parse_spec(&args.spec, args.seed)?)?;
    match args.output {
        Some(path) => {
            let file = fs::File::create(&path)
                .with_context(|| format!("creating {}", path.display()))
                .map_err(Failure::Input)?;
            write_dimacs(&g, std::io::BufWriter::new(file)).map_err(|e| Failure::Input(e.into()))
        }
        None => write_dimacs(&g, std::io::stdout().lock()).map_err(|e| Failure::Internal(e.into())),
    }
}

fn run_bench(args: BenchArgs) -> Outcome {
    use rayon::prelude::*;
    init_pool(args.threads)?;
    let jobs: Vec<(usize, u64)> = args
        .sizes
        .iter()
        .flat_map(|&n| (args.seed..args.seed + args.seeds).map(move |s| (n, s)))
        .collect();
    let graphs = jobs
        .iter()
        .map(|&(n, s)| gnp(n, args.p, s).map_err(|e| Failure::Usage(e.into())))
        .collect::<Result<Vec<_>, _>>()?;
    let started = Instant::now();
    let runs: Vec<_> = graphs
        .par_iter()
        .zip(&jobs)
        .map(|(g, &(n, seed))| {
            let (solution, stats) = mids_core::solve_graph(g);
            json!({
                "n": n,
                "seed": seed,
                "nodes": stats.nodes,
                "max_depth": stats.max_depth,
                "size": solution.size(),
            })
        })
        .collect();
    let points: Vec<(usize, u64)> = runs
        .iter()
        .map(|r| {
            (
                r["n"].as_u64().unwrap() as usize,
                r["nodes"].as_u64().unwrap(),
            )
        })
        .collect();
    let slope = bench_fit(&points).map_err(|e| Failure::Usage(e.into()))?;
    emit(&json!({
        "algorithm": "exact",
        "params": { "sizes": args.sizes, "p": args.p, "seeds": args.seeds, "first_seed": args.seed },
        "runs": runs,
        "fitted_exponent": slope,
        "reference_exponent": 0.424,
        "caveat": "0.424 is a worst-case bound over all graphs, not an expectation for random graphs",
        "wall_ms": started.elapsed().as_millis() as u64,
    }))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Solve(a) => run_solve(a),
        Command::Oracle(a) => run_oracle(a),
        Command::Approx(a) => run_approx(a),
        Command::Enumerate(a) => run_enumerate(a),
        Command::Factor(a) => run_factor(a),
        Command::Gen(a) => run_gen(a),
        Command::Bench(a) => run_bench(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            let code = failure.code();
            match failure {
                Failure::Timeout(report) => {
                    let _ = emit(&report);
                    eprintln!("error: timed out");
                }
                Failure::Usage(e) | Failure::Input(e) | Failure::Internal(e) => {
                    eprintln!("error: {e:#}")
                }
            }
            ExitCode::from(code)
        }
    }
}
