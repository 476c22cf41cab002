//! Command-line surface: family generation, FS statistics, verification
//! sweeps, girth computation, trajectory inspection, ear decompositions, the
//! counterexample-evidence search, and graph export.
//!
//! Exit codes: 0 success/verified, 1 mismatch found, 2 usage error,
//! 3 budget exceeded. All results go to stdout as JSON; logs to stderr.

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use fslab::connectivity::{self, SweepOptions};
use fslab::ear;
use fslab::error::Error;
use fslab::families::{self, FamilySpec, ShapeKind};
use fslab::fs_explicit;
use fslab::girth_theory::{self, SubgraphBudget};
use fslab::graph::Graph;
use fslab::search::{self, SearchConfig};
use fslab::star_search::{self, GirthValue, SearchOptions};
use fslab::trajectories;

#[derive(Parser)]
#[command(name = "fslab", version, about = "Friends-and-strangers graph laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family instance (or enumerate instances of a shape).
    Families(FamiliesArgs),
    /// Components, girth, and the sign check of an explicit FS(X, Y).
    FsStats(FsStatsArgs),
    /// Theorem-vs-oracle sweeps.
    Verify(VerifyArgs),
    /// Girth of FS(X, Star_n) by search or by formula.
    Girth(GirthArgs),
    /// Family trajectory and its simulation report.
    Trajectory(TrajectoryArgs),
    /// Open ear decomposition of a biconnected graph.
    Ears(EarsArgs),
    /// Evidence search over the unresolved shape families.
    Search(SearchArgs),
    /// Export a graph or an explicit FS graph as JSON or DOT.
    Export(ExportArgs),
}

#[derive(Args)]
struct FamiliesArgs {
    /// Family spec string, e.g. cycle:5, barbell:6,6,0, theta:4,4,4, theta0.
    spec: Option<String>,
    /// Enumerate instances of a shape instead (cycle, barbell, theta,
    /// theta4, theta5, k4s, k33s).
    #[arg(long)]
    enumerate: Option<String>,
    /// Vertex budget for enumeration.
    #[arg(long, default_value_t = 10)]
    budget: usize,
}

#[derive(Args)]
struct FsStatsArgs {
    /// X graph: family spec string or a JSON file path.
    #[arg(long)]
    x: String,
    /// Y graph: family spec string or a JSON file path.
    #[arg(long)]
    y: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// What to verify: connectivity or girth.
    kind: String,
    #[arg(long)]
    n: usize,
    /// Enumerate the full labeled space (slow at n >= 6).
    #[arg(long)]
    exhaustive: bool,
    /// Sample size for n = 7 hosts.
    #[arg(long, default_value_t = 50)]
    sample: usize,
}

#[derive(Args)]
struct GirthArgs {
    /// X graph: family spec string or a JSON file path.
    #[arg(long)]
    x: String,
    /// search (default) or formula.
    #[arg(long, default_value = "search")]
    method: String,
    /// Cap on BFS depth (levels) for the search.
    #[arg(long)]
    depth_cap: Option<usize>,
    /// Worker threads (also FSLAB_THREADS).
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct TrajectoryArgs {
    /// Family spec with a known trajectory (cycle, barbell, theta, theta0).
    #[arg(long)]
    family: String,
}

#[derive(Args)]
struct EarsArgs {
    /// Graph JSON file path (or a family spec string).
    graph: String,
    /// Force this simple cycle (comma-separated vertices) as P_0.
    #[arg(long)]
    cycle: Option<String>,
}

#[derive(Args)]
struct SearchArgs {
    /// Comma-separated shapes from {theta4, theta5, k4s, k33s}.
    #[arg(long)]
    shapes: String,
    #[arg(long, default_value_t = 10)]
    budget: usize,
    /// Wall-clock budget in seconds.
    #[arg(long)]
    time_budget: Option<u64>,
    /// Per-root visited-state cap.
    #[arg(long)]
    state_cap: Option<usize>,
    /// Append NDJSON records here and skip specs already present.
    #[arg(long)]
    log: Option<PathBuf>,
    /// Check full usage over all candidate girth cycles.
    #[arg(long)]
    exhaustive_cycles: bool,
}

#[derive(Args)]
struct ExportArgs {
    /// X graph: family spec string or a JSON file path.
    #[arg(long)]
    x: String,
    /// Optional Y graph: export the explicit FS(X, Y) instead (n <= 6).
    #[arg(long)]
    y: Option<String>,
    #[arg(long, default_value = "json")]
    format: String,
    /// Output path (stdout when omitted).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

const EXIT_OK: u8 = 0;
const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_threads();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Budget { .. } => EXIT_BUDGET,
                _ => EXIT_USAGE,
            };
            ExitCode::from(code)
        }
    }
}

fn init_threads() {
    if let Ok(threads) = std::env::var("FSLAB_THREADS") {
        if let Ok(t) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
        }
    }
}

/// A graph argument is a family spec string when it parses as one, otherwise
/// a path to a graph JSON file.
fn load_graph(arg: &str) -> Result<Graph, Error> {
    match FamilySpec::parse(arg) {
        Ok(spec) => Ok(families::make(&spec)?.0),
        Err(spec_err) => {
            if std::path::Path::new(arg).exists() {
                Graph::from_json(&std::fs::read_to_string(arg)?)
            } else {
                Err(spec_err)
            }
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Families(args) => cmd_families(args),
        Command::FsStats(args) => cmd_fs_stats(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Girth(args) => cmd_girth(args),
        Command::Trajectory(args) => cmd_trajectory(args),
        Command::Ears(args) => cmd_ears(args),
        Command::Search(args) => cmd_search(args),
        Command::Export(args) => cmd_export(args),
    }
}

fn cmd_families(args: FamiliesArgs) -> Result<u8, Error> {
    if let Some(shape) = args.enumerate {
        let kind = ShapeKind::parse(&shape)?;
        let specs = families::enumerate_instances(kind, args.budget);
        for spec in specs {
            println!(
                "{}",
                json!({ "spec": spec.to_spec_string(), "n": spec.vertex_count() })
            );
        }
        return Ok(EXIT_OK);
    }
    let Some(spec_text) = args.spec else {
        return Err(Error::InvalidSpec("pass a spec string or --enumerate".into()));
    };
    let spec = FamilySpec::parse(&spec_text)?;
    let (graph, landmarks) = families::make(&spec)?;
    println!(
        "{}",
        json!({
            "spec": spec.to_spec_string(),
            "graph": serde_json::from_str::<serde_json::Value>(&graph.to_json())?,
            "landmarks": landmarks,
        })
    );
    Ok(EXIT_OK)
}

fn cmd_fs_stats(args: FsStatsArgs) -> Result<u8, Error> {
    let x = load_graph(&args.x)?;
    let y = load_graph(&args.y)?;
    let fs = fs_explicit::build(&x, &y, fs_explicit::DEFAULT_N_LIMIT)?;
    let girth = fs.girth_explicit();
    println!(
        "{}",
        json!({
            "components": fs.components(),
            "girth": girth.map_or(json!("inf"), |g| json!(g)),
            "bipartite_check": fs.bipartite_sign_check(),
        })
    );
    Ok(EXIT_OK)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, Error> {
    let opts = SweepOptions { exhaustive: args.exhaustive, sample: args.sample, ..Default::default() };
    let report = match args.kind.as_str() {
        "connectivity" => connectivity::verify_connectivity_sweep(args.n, &opts)?,
        "girth" => star_search::verify_girth_sweep(args.n, &opts)?,
        other => {
            return Err(Error::InvalidSpec(format!(
                "unknown verify kind '{other}' (expected connectivity or girth)"
            )))
        }
    };
    println!("{}", serde_json::to_string(&report)?);
    Ok(if report.ok() { EXIT_OK } else { EXIT_MISMATCH })
}

fn cmd_girth(args: GirthArgs) -> Result<u8, Error> {
    if let Some(t) = args.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let x = load_graph(&args.x)?;
    match args.method.as_str() {
        "search" => {
            let opts = SearchOptions { depth_cap: args.depth_cap, state_cap: None };
            let report = star_search::girth_star(&x, &opts)?;
            let girth = match &report.value {
                GirthValue::Finite(v) => json!(v),
                GirthValue::Infinite => json!("inf"),
                GirthValue::UnknownAbove { floor, .. } => json!(format!("unknown_above_{floor}")),
            };
            let upper = match &report.value {
                GirthValue::UnknownAbove { best_upper, .. } => best_upper.map(|u| json!(u)),
                _ => None,
            };
            let mut doc = json!({
                "girth": girth,
                "witness": report.witness.as_ref().map(|w| json!(w.steps)),
                "start_vertex": report.witness.as_ref().map(|w| json!(w.start_vertex)),
                "method": "search",
            });
            if let Some(u) = upper {
                doc["upper_bound"] = u;
            }
            println!("{doc}");
            Ok(EXIT_OK)
        }
        "formula" => {
            let classification = girth_theory::classify(&x)?;
            let prediction = girth_theory::predicted_girth(&x, &SubgraphBudget::default())?;
            println!(
                "{}",
                json!({
                    "prediction": prediction,
                    "classification": classification,
                    "method": "formula",
                })
            );
            Ok(EXIT_OK)
        }
        other => Err(Error::InvalidSpec(format!(
            "unknown method '{other}' (expected search or formula)"
        ))),
    }
}

fn cmd_trajectory(args: TrajectoryArgs) -> Result<u8, Error> {
    let spec = FamilySpec::parse(&args.family)?;
    let (graph, _) = families::make(&spec)?;
    let seq = trajectories::family_sequence(&spec)?;
    let report = trajectories::simulate(&graph, &seq)?;
    println!(
        "{}",
        json!({
            "spec": spec.to_spec_string(),
            "start_vertex": seq.start_vertex,
            "steps": seq.steps,
            "report": report,
        })
    );
    Ok(EXIT_OK)
}

fn cmd_ears(args: EarsArgs) -> Result<u8, Error> {
    let g = load_graph(&args.graph)?;
    let forced: Option<Vec<usize>> = match &args.cycle {
        Some(text) => Some(
            text.split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|e| Error::InvalidSpec(format!("bad cycle list: {e}")))?,
        ),
        None => None,
    };
    let d = ear::decompose(&g, forced.as_deref())?;
    println!("{}", json!({ "p0": d.initial_cycle, "ears": d.ears }));
    Ok(EXIT_OK)
}

fn cmd_search(args: SearchArgs) -> Result<u8, Error> {
    let shapes: Vec<ShapeKind> = args
        .shapes
        .split(',')
        .map(|t| ShapeKind::parse(t.trim()))
        .collect::<Result<_, _>>()?;
    let allowed = |k: &ShapeKind| {
        matches!(
            k,
            ShapeKind::Theta(4) | ShapeKind::Theta(5) | ShapeKind::K4Subdivision | ShapeKind::K33Subdivision
        )
    };
    if !shapes.iter().all(allowed) {
        return Err(Error::InvalidSpec(
            "search shapes must be among theta4, theta5, k4s, k33s".into(),
        ));
    }
    let done = match &args.log {
        Some(path) if path.exists() => search::load_done_keys(&std::fs::read_to_string(path)?),
        _ => Default::default(),
    };
    let mut log_file: Option<std::fs::File> = match &args.log {
        Some(path) => Some(std::fs::OpenOptions::new().create(true).append(true).open(path)?),
        None => None,
    };
    let config = SearchConfig {
        shapes,
        vertex_budget: args.budget,
        time_budget: args.time_budget.map(Duration::from_secs),
        state_cap: args.state_cap,
        exhaustive_cycles: args.exhaustive_cycles,
    };
    let outcome = search::run_search(
        &config,
        &done,
        log_file.as_mut().map(|f| f as &mut dyn std::io::Write),
    )?;
    for record in &outcome.records {
        println!("{}", serde_json::to_string(record)?);
    }
    if outcome.out_of_time {
        eprintln!("time budget exceeded with instances remaining");
        return Ok(EXIT_BUDGET);
    }
    Ok(EXIT_OK)
}

fn cmd_export(args: ExportArgs) -> Result<u8, Error> {
    let x = load_graph(&args.x)?;
    let text = match &args.y {
        None => match args.format.as_str() {
            "json" => x.to_json(),
            "dot" => x.to_dot(),
            other => return Err(Error::InvalidSpec(format!("unknown format '{other}'"))),
        },
        Some(y_arg) => {
            let y = load_graph(y_arg)?;
            // Explicit FS export is capped at n = 6 (720 vertices).
            let fs = fs_explicit::build(&x, &y, 6)?;
            match args.format.as_str() {
                "json" => {
                    let edges: Vec<(u32, u32)> = fs.edges().collect();
                    serde_json::to_string(&json!({
                        "n": fs.vertex_count(),
                        "edges": edges,
                    }))?
                }
                "dot" => {
                    let mut out = String::from("graph FS {\n");
                    for r in 0..fs.vertex_count() {
                        out.push_str(&format!("  {r};\n"));
                    }
                    for (a, b) in fs.edges() {
                        out.push_str(&format!("  {a} -- {b};\n"));
                    }
                    out.push_str("}\n");
                    out
                }
                other => return Err(Error::InvalidSpec(format!("unknown format '{other}'"))),
            }
        }
    };
    match args.output {
        Some(path) => std::fs::write(path, text)?,
        None => println!("{text}"),
    }
    Ok(EXIT_OK)
}
