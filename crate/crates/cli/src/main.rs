//! Command-line front end: graphs in as names or graph6, reports out as text or JSON.

mod commands;
mod input;
mod report;
mod sweep;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use prismatic::budget::DEFAULT_NODES;
use prismatic::graph::{write_dot, write_graph6};
use prismatic::spectral::COMPARISON_TOLERANCE;
use prismatic::structural::HamMode;
use prismatic::Budget;

use commands::{Ctx, Outcome};
use report::{BudgetInfo, InputInfo, Report, SCHEMA_VERSION};

#[derive(Parser)]
#[command(name = "prismatic", version, about = "Complementary prisms and their invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Node limit for exhaustive searches.
    #[arg(long, global = true, env = "PRISMATIC_BUDGET", default_value_t = DEFAULT_NODES)]
    budget_nodes: u64,
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Print the full JSON report instead of a text summary.
    #[arg(long, global = true)]
    json: bool,
    /// Tolerance when comparing closed-form and numeric spectra.
    #[arg(long, global = true, default_value_t = COMPARISON_TOLERANCE)]
    tolerance: f64,
}

#[derive(Args)]
struct GraphArgs {
    /// Named graph such as `cycle:5`, `paley:13`, `kneser:10:4`, `exa1`.
    #[arg(long)]
    name: Option<String>,
    /// Graph in graph6 format. Without --name or --g6 the first line of stdin is read.
    #[arg(long)]
    g6: Option<String>,
    /// Analyse the complementary prism of the input graph.
    #[arg(long)]
    prism: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Path,
    Cycle,
    Connected,
}

#[derive(Subcommand)]
enum Command {
    /// Print a graph as graph6 (or DOT).
    Construct {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        dot: bool,
    },
    /// Print the complementary prism of a graph as graph6 (or DOT).
    Prism {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        dot: bool,
    },
    /// Automorphism group; prisms in standard labelling also get the structured group and ratio.
    Aut(GraphArgs),
    /// Antimorphisms (isomorphisms onto the complement).
    Antimorph {
        #[command(flatten)]
        graph: GraphArgs,
        /// Enumerate all antimorphisms rather than one.
        #[arg(long)]
        all: bool,
    },
    /// Core and retraction; prisms also get their case classification.
    Core(GraphArgs),
    /// Family membership, ratio class, strong regularity and prism predicates.
    Classify(GraphArgs),
    /// Exact Cheeger number; with --prism the closed form for the prism.
    Cheeger(GraphArgs),
    /// Adjacency spectrum; with --prism also the closed form for regular graphs.
    Spectrum(GraphArgs),
    /// Strong regularity and walk regularity.
    Srg {
        #[command(flatten)]
        graph: GraphArgs,
        /// Highest adjacency power inspected for walk regularity.
        #[arg(long, default_value_t = 8)]
        max_power: usize,
    },
    /// Theta bounds and eigenvalue checks for self-complementary regular graphs.
    Theta(GraphArgs),
    /// Hamiltonian path, cycle or Hamilton-connectedness search.
    Hamilton {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value = "cycle")]
        mode: Mode,
        /// Endpoints of a path between two given vertices; overrides --mode.
        #[arg(long, num_args = 2, value_names = ["FROM", "TO"])]
        between: Option<Vec<usize>>,
    },
    /// Independence, clique, chromatic and connectivity numbers with bound checks.
    Invariants(GraphArgs),
    /// Re-verify a stored fixture: exa1, spindle_nine, self_complementary_nine, mysterious505, kneser.
    VerifyFixture { name: String },
    /// Cross-check structured results against brute force on all small graphs.
    Sweep {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Construct { .. } => "construct",
            Command::Prism { .. } => "prism",
            Command::Aut(_) => "aut",
            Command::Antimorph { .. } => "antimorph",
            Command::Core(_) => "core",
            Command::Classify(_) => "classify",
            Command::Cheeger(_) => "cheeger",
            Command::Spectrum(_) => "spectrum",
            Command::Srg { .. } => "srg",
            Command::Theta(_) => "theta",
            Command::Hamilton { .. } => "hamilton",
            Command::Invariants(_) => "invariants",
            Command::VerifyFixture { .. } => "verify-fixture",
            Command::Sweep { .. } => "sweep",
        }
    }
}

fn load(args: &GraphArgs) -> Result<input::Input, String> {
    let i = input::resolve(args.name.as_deref(), args.g6.as_deref())?;
    if i.graph.n() == 0 {
        return Err("the graph has no vertices".into());
    }
    Ok(i)
}

fn run(cli: Cli) -> Result<(Option<input::Input>, Outcome, bool, Budget), String> {
    let mut ctx = Ctx { budget: Budget::new(cli.global.budget_nodes), tolerance: cli.global.tolerance, prism: false };
    let mut dot = false;
    let (inp, outcome) = match cli.command {
        Command::Construct { graph, dot: d } => {
            dot = d;
            let i = load(&graph)?;
            ctx.prism = graph.prism;
            let o = commands::construct(&i.graph, &ctx);
            (Some(i), o)
        }
        Command::Prism { graph, dot: d } => {
            dot = d;
            let i = load(&graph)?;
            let o = commands::prism(&i.graph);
            (Some(i), o)
        }
        Command::Aut(graph) => with_graph(&graph, &mut ctx, |g, c| commands::aut(g, c))?,
        Command::Antimorph { graph, all } => with_graph(&graph, &mut ctx, |g, _| commands::antimorph(g, all))?,
        Command::Core(graph) => with_graph(&graph, &mut ctx, commands::core)?,
        Command::Classify(graph) => with_graph(&graph, &mut ctx, |g, _| commands::classify(g))?,
        Command::Cheeger(graph) => with_graph(&graph, &mut ctx, |g, c| commands::cheeger(g, c))?,
        Command::Spectrum(graph) => with_graph(&graph, &mut ctx, |g, c| commands::spectrum(g, c))?,
        Command::Srg { graph, max_power } => with_graph(&graph, &mut ctx, |g, c| commands::srg(g, c, max_power))?,
        Command::Theta(graph) => with_graph(&graph, &mut ctx, commands::theta)?,
        Command::Hamilton { graph, mode, between } => {
            let mode = match (between.as_deref(), mode) {
                (Some(&[u, v]), _) => HamMode::PathBetween(u, v),
                (_, Mode::Path) => HamMode::Path,
                (_, Mode::Cycle) => HamMode::Cycle,
                (_, Mode::Connected) => HamMode::Connected,
            };
            let i = load(&graph)?;
            ctx.prism = graph.prism;
            let n = if ctx.prism { 2 * i.graph.n() } else { i.graph.n() };
            if let HamMode::PathBetween(u, v) = mode {
                if u >= n || v >= n {
                    return Err(format!("--between endpoints must be below {n}"));
                }
            }
            let o = commands::hamilton(&i.graph, &mut ctx, mode);
            (Some(i), o)
        }
        Command::Invariants(graph) => with_graph(&graph, &mut ctx, commands::invariants)?,
        Command::VerifyFixture { name } => (None, commands::verify_fixture(&name, &mut ctx)?),
        Command::Sweep { max_n } => {
            if max_n > 7 {
                return Err("--max-n above 7 is not supported".into());
            }
            (None, Outcome { results: sweep::sweep(max_n), ..Default::default() })
        }
    };
    Ok((inp, outcome, dot, ctx.budget))
}

fn with_graph(
    args: &GraphArgs,
    ctx: &mut Ctx,
    f: impl FnOnce(&prismatic::Graph, &mut Ctx) -> Outcome,
) -> Result<(Option<input::Input>, Outcome), String> {
    let i = load(args)?;
    ctx.prism = args.prism;
    let o = f(&i.graph, ctx);
    Ok((Some(i), o))
}

/// Writes to stdout; a reader that closed the pipe early is not an error.
fn emit(text: &str) -> ExitCode {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let json_out = cli.global.json;
    let command = cli.command.name().to_string();
    let start = Instant::now();
    let (inp, outcome, dot, budget) = match run(cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = if json_out {
        let report = Report {
            schema_version: SCHEMA_VERSION,
            command,
            input: inp.map(|i| InputInfo {
                descriptor: i.descriptor,
                n: i.graph.n(),
                edges: i.graph.edge_count(),
                graph6: write_graph6(&i.graph),
            }),
            results: outcome.results,
            witnesses: outcome.witnesses,
            budget: BudgetInfo { limit: budget.limit(), used: budget.used(), exhausted: budget.used() >= budget.limit() },
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        };
        format!("{}\n", serde_json::to_string_pretty(&report).expect("report serialises"))
    } else if let Some(g) = &outcome.graph {
        if dot {
            write_dot(g)
        } else {
            format!("{}\n", write_graph6(g))
        }
    } else {
        report::render_text(&outcome.results)
    };
    emit(&text)
}
