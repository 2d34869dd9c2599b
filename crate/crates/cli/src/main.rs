//! `strongedge`: generate large-girth regular bipartite graphs, certify
//! their strong chromatic index lower bound, and run the strong coloring
//! solvers.
//!
//! Exit codes: 0 success, 2 invalid input, 3 verification failure,
//! 4 budget exhausted without an answer, 1 internal error.
//!
//! `STRONGEDGE_THREADS` caps the worker pool used by sweeps (0 or unset
//! means one worker per core).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use strongedge::bounds::{check_class_sizes, lemma1_certificate};
use strongedge::dimacs::{parse_dimacs, serialize_bipartite, to_dot, GraphFile};
use strongedge::generator::{choose_n, generate_with, GenerateOptions};
use strongedge::pipeline::{
    build_counterexample, certify_graph, conjecture2_on_files, conjecture2_sweep, usage_row,
    CounterexampleOptions, SweepConfig,
};
use strongedge::solver::{
    exact_chi_s, greedy_color, Budget, ColoringFile, OrderPolicy, SolveStatus, StrongColoring,
};
use strongedge::Error;

const EXIT_INVALID: u8 = 2;
const EXIT_VERIFY: u8 = 3;
const EXIT_TIMEOUT: u8 = 4;
const EXIT_INTERNAL: u8 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "strongedge",
    version,
    about = "Strong edge-coloring of large-girth regular bipartite graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a k-regular bipartite graph on 2n vertices with girth >= g.
    Generate {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        g: usize,
        /// Side size; defaults to the smallest guaranteed n not divisible by 2k-1.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the step trace here.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(short, long)]
        output: PathBuf,
        /// Allow n below the guaranteed bound.
        #[arg(long)]
        force: bool,
    },
    /// Compute (or bound) the strong chromatic index.
    Solve {
        graph: PathBuf,
        #[arg(long, conflicts_with = "greedy")]
        exact: bool,
        #[arg(long)]
        greedy: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Write the best coloring as JSON.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a coloring file against a graph.
    Verify { graph: PathBuf, coloring: PathBuf },
    /// Minimize the use of color 2k over strong 2k-colorings.
    Conjecture2 {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Write the evidence as JSON.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build, re-verify and record an instance with chi'_s >= 2k.
    Counterexample {
        #[arg(long)]
        g: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Record JSON path (stdout if omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        graph_out: Option<PathBuf>,
        /// Also record a greedy strong coloring's color count.
        #[arg(long)]
        solver_bound: bool,
    },
    /// Re-verify a graph file and print its record.
    Certify {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        /// Required girth; defaults to the measured girth.
        #[arg(long)]
        g: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Last-color usage over generated instances or given graph files.
    Conjecture2Sweep {
        #[arg(long)]
        k: usize,
        #[arg(long, required_unless_present = "graphs")]
        g: Option<usize>,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Side size of the first instance (default: the guaranteed bound).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        force: bool,
        /// Use these graph files instead of generating.
        #[arg(long, num_args = 1.., conflicts_with_all = ["g", "n", "force"])]
        graphs: Vec<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Export a graph in Graphviz DOT form.
    Dot {
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct BudgetArgs {
    /// Wall-clock limit in milliseconds.
    #[arg(long, conflicts_with = "node_budget")]
    budget_ms: Option<u64>,
    /// Search-node limit (reproducible).
    #[arg(long)]
    node_budget: Option<u64>,
}

impl BudgetArgs {
    fn budget(self) -> Budget {
        Budget {
            time: self.budget_ms.map(Duration::from_millis),
            nodes: self.node_budget,
        }
    }
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match &err {
            Error::VerificationFailed { .. } | Error::IdentityViolation { .. } => EXIT_VERIFY,
            Error::InvariantViolated(_) | Error::ConstructionFailed(_) => EXIT_INTERNAL,
            _ => EXIT_INVALID,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

type CliResult = Result<(), Failure>;

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| fail(EXIT_INVALID, format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> CliResult {
    fs::write(path, contents).map_err(|e| fail(EXIT_INVALID, format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<GraphFile, Failure> {
    parse_dimacs(&read(path)?).map_err(|e| fail(EXIT_INVALID, format!("{}: {e}", path.display())))
}

fn to_json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Writes to `path`, or prints when there is none.
fn emit(path: Option<&Path>, contents: &str) -> CliResult {
    match path {
        Some(p) => write(p, contents),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn configure_threads() -> CliResult {
    let Ok(raw) = std::env::var("STRONGEDGE_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().map_err(|_| {
        fail(
            EXIT_INVALID,
            format!("STRONGEDGE_THREADS: bad value `{raw}`"),
        )
    })?;
    if threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| fail(EXIT_INTERNAL, e.to_string()))?;
    }
    Ok(())
}

fn cmd_generate(
    k: usize,
    g: usize,
    n: Option<usize>,
    seed: u64,
    trace_path: Option<&Path>,
    output: &Path,
    force: bool,
) -> CliResult {
    let n = match n {
        Some(n) => n,
        None => choose_n(k, g)?,
    };
    let (graph, trace) = generate_with(k, g, n, seed, GenerateOptions { force })?;
    write(output, &serialize_bipartite(&graph))?;
    if let Some(p) = trace_path {
        write(p, &trace.to_text())?;
    }
    println!(
        "generated k={k} g={g} n={n} seed={seed}: {} vertices, {} edges, girth {}, {} swaps",
        graph.vertex_count(),
        graph.edge_count(),
        graph.girth(),
        trace.swap_count()
    );
    Ok(())
}

fn cmd_solve(path: &Path, greedy: bool, budget: Budget, output: Option<&Path>) -> CliResult {
    let file = read_graph(path)?;
    let cg = file.graph.conflict_graph();
    let (coloring, unfinished) = if greedy {
        let phi = greedy_color(&cg, OrderPolicy::Saturation, 0);
        println!("greedy: {} colors (upper bound)", phi.color_count());
        (phi, false)
    } else {
        let out = exact_chi_s(&cg, budget);
        match out.status {
            SolveStatus::Exact => {
                println!("chi_s = {} (exact, {} nodes)", out.upper_bound, out.nodes)
            }
            SolveStatus::UpperBoundOnly => println!(
                "{} <= chi_s <= {} (budget exhausted after {} nodes)",
                out.lower_bound, out.upper_bound, out.nodes
            ),
        }
        (out.best, out.status == SolveStatus::UpperBoundOnly)
    };
    if let Some(p) = output {
        write(
            p,
            &to_json(&ColoringFile::from_coloring(&file.graph, &coloring)?),
        )?;
    }
    if unfinished {
        return Err(fail(
            EXIT_TIMEOUT,
            "exact search did not finish within the budget",
        ));
    }
    Ok(())
}

fn cmd_verify(graph_path: &Path, coloring_path: &Path) -> CliResult {
    let file = read_graph(graph_path)?;
    let stored: ColoringFile = serde_json::from_str(&read(coloring_path)?)
        .map_err(|e| fail(EXIT_INVALID, format!("{}: {e}", coloring_path.display())))?;
    let mut phi: StrongColoring = stored.to_coloring(&file.graph)?;
    if !phi.verify(&file.graph.conflict_graph())? {
        return Err(fail(
            EXIT_VERIFY,
            "not a strong edge-coloring: two edges within distance one share a color",
        ));
    }
    println!(
        "valid strong edge-coloring with {} colors",
        phi.color_count()
    );
    if let Some(k) = file.graph.regular_degree().filter(|&k| k >= 2) {
        let report = check_class_sizes(&file.graph, k, &phi)?;
        let cert = lemma1_certificate(&file.graph, k)?;
        println!(
            "{k}-regular, m = {}: largest class {} <= cap {}; chi_s >= {}",
            cert.m,
            report.counts.iter().max().copied().unwrap_or(0),
            report.cap,
            cert.chi_s_lower
        );
    }
    Ok(())
}

fn cmd_conjecture2(path: &Path, k: usize, budget: Budget, output: Option<&Path>) -> CliResult {
    let file = read_graph(path)?;
    let row = usage_row(&file.graph, k, budget, path.display().to_string())?;
    let usage = row.usage.map_or("-".to_string(), |u| u.to_string());
    println!(
        "k={k} m={} cap={} usage={usage} status={}{}",
        row.m,
        row.cap,
        row.status,
        if row.flagged { " FLAGGED" } else { "" }
    );
    if let Some(p) = output {
        write(p, &to_json(&row))?;
    }
    if row.status == "timeout" {
        return Err(fail(
            EXIT_TIMEOUT,
            "budget exhausted before any 2k-coloring was settled",
        ));
    }
    Ok(())
}

fn cmd_counterexample(
    g: usize,
    k: usize,
    seed: u64,
    output: Option<&Path>,
    graph_out: Option<&Path>,
    solver_bound: bool,
) -> CliResult {
    let mut built = build_counterexample(
        g,
        k,
        seed,
        CounterexampleOptions {
            solver_upper_bound: solver_bound,
        },
    )?;
    if let Some(p) = graph_out {
        write(p, &built.dimacs)?;
        built.record.graph_path = Some(p.display().to_string());
    }
    let r = &built.record;
    eprintln!(
        "{} vertices, {} edges, girth {}, chi_s >= {}",
        r.vertices,
        r.m,
        r.girth_measured
            .map_or("inf".to_string(), |g| g.to_string()),
        r.certificate.chi_s_lower
    );
    emit(output, &to_json(&built.record))
}

fn cmd_certify(path: &Path, k: usize, g: Option<usize>, output: Option<&Path>) -> CliResult {
    let text = read(path)?;
    let mut record = certify_graph(&text, k, g)?;
    record.graph_path = Some(path.display().to_string());
    emit(output, &to_json(&record))
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    k: usize,
    g: Option<usize>,
    count: usize,
    seed: u64,
    n: Option<usize>,
    force: bool,
    graphs: &[PathBuf],
    budget: Budget,
    output: Option<&Path>,
) -> CliResult {
    let evidence = if graphs.is_empty() {
        let g = g.ok_or_else(|| fail(EXIT_INVALID, "--g is required without --graphs"))?;
        conjecture2_sweep(SweepConfig {
            k,
            g,
            count,
            seed,
            n,
            force,
            budget,
        })?
    } else {
        let files = graphs
            .iter()
            .map(|p| Ok((p.display().to_string(), read(p)?)))
            .collect::<Result<Vec<_>, Failure>>()?;
        conjecture2_on_files(&files, k, budget)?
    };
    print!("{}", evidence.to_table());
    println!(
        "{} of {} instances flagged",
        evidence.flagged,
        evidence.rows.len()
    );
    if let Some(p) = output {
        write(p, &to_json(&evidence))?;
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult {
    configure_threads()?;
    match cli.command {
        Command::Generate {
            k,
            g,
            n,
            seed,
            trace,
            output,
            force,
        } => cmd_generate(k, g, n, seed, trace.as_deref(), &output, force),
        Command::Solve {
            graph,
            exact: _,
            greedy,
            budget,
            output,
        } => cmd_solve(&graph, greedy, budget.budget(), output.as_deref()),
        Command::Verify { graph, coloring } => cmd_verify(&graph, &coloring),
        Command::Conjecture2 {
            graph,
            k,
            budget,
            output,
        } => cmd_conjecture2(&graph, k, budget.budget(), output.as_deref()),
        Command::Counterexample {
            g,
            k,
            seed,
            output,
            graph_out,
            solver_bound,
        } => cmd_counterexample(
            g,
            k,
            seed,
            output.as_deref(),
            graph_out.as_deref(),
            solver_bound,
        ),
        Command::Certify {
            graph,
            k,
            g,
            output,
        } => cmd_certify(&graph, k, g, output.as_deref()),
        Command::Conjecture2Sweep {
            k,
            g,
            count,
            seed,
            n,
            force,
            graphs,
            budget,
            output,
        } => cmd_sweep(
            k,
            g,
            count,
            seed,
            n,
            force,
            &graphs,
            budget.budget(),
            output.as_deref(),
        ),
        Command::Dot { graph, output } => {
            let file = read_graph(&graph)?;
            emit(output.as_deref(), &to_dot(&file.graph))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
