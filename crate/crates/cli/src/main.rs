//! `sandpile`: sandpile groups, cycle-chain families and tree-count formulas
//! from the command line.
//!
//! Exit status: 0 on success, 1 when a verification run finds a failing
//! trial, 2 for usage, parse and input errors.

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use sandpile_core::families::{build_ch_canonical, build_ch_member, build_h, ChSpec, HSpec};
use sandpile_core::formulas::{f_recursive, g_closed_form};
use sandpile_core::sandpile::{sandpile_group, sandpile_group_dropping};
use sandpile_core::verify::{self, Bounds, Theorem};
use sandpile_core::{IntMatrix, Multigraph};
use serde_json::Value;

use report::{decimal_list, ReportResult, RunReport};

#[derive(Parser)]
#[command(name = "sandpile", version, about = "Sandpile groups of multigraphs")]
struct Cli {
    /// Emit a JSON report instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sandpile group of a graph file.
    Group {
        path: PathBuf,
        /// Vertex whose row and column are removed (default: the last one).
        #[arg(long)]
        drop: Option<usize>,
    },
    /// Print the Laplacian of a graph file, optionally reduced.
    Laplacian {
        path: PathBuf,
        /// Remove this vertex's row and column.
        #[arg(long)]
        reduced: Option<usize>,
    },
    /// Generate a family member as a graph file.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[command(flatten)]
        params: Box<GenParams>,
        /// Write the graph here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write Graphviz DOT instead of the graph text format.
        #[arg(long)]
        dot: bool,
    },
    /// Evaluate the recursive (f) or closed-form (g) tree-count formula.
    Formula {
        #[arg(value_enum)]
        kind: FormulaKind,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        a: Vec<BigInt>,
    },
    /// Run a seeded randomized property suite.
    Verify {
        #[arg(value_enum)]
        theorem: TheoremArg,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cycle length, arity, cycle count or vertex count bound, by theorem.
        #[arg(long)]
        max_len: Option<usize>,
        /// Part size, argument, cycle length or edge-count bound, by theorem.
        #[arg(long)]
        max_value: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    ChCanonical,
    ChMember,
    H,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormulaKind {
    F,
    G,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    T1,
    T3,
    T4,
    MatrixTree,
}

impl TheoremArg {
    fn theorem(self) -> Theorem {
        match self {
            TheoremArg::T1 => Theorem::AttachmentInvariance,
            TheoremArg::T3 => Theorem::ClosedForm,
            TheoremArg::T4 => Theorem::ChainGroup,
            TheoremArg::MatrixTree => Theorem::MatrixTree,
        }
    }

    fn name(self) -> &'static str {
        match self {
            TheoremArg::T1 => "t1",
            TheoremArg::T3 => "t3",
            TheoremArg::T4 => "t4",
            TheoremArg::MatrixTree => "matrix-tree",
        }
    }
}

#[derive(Args, Default)]
struct GenParams {
    /// Cycle lengths for ch-canonical and ch-member.
    #[arg(long, value_delimiter = ',')]
    a: Vec<u64>,
    /// Attachment plan for ch-member (1-based pair indices).
    #[arg(long, value_delimiter = ',')]
    plan: Vec<usize>,
    /// Cycle length for h.
    #[arg(long)]
    n: Option<usize>,
    /// Attachment index for h.
    #[arg(long)]
    i: Option<usize>,
    /// Graph file for F (omit for an empty F).
    #[arg(long)]
    f_graph: Option<PathBuf>,
    /// Graph file for G (omit for an empty G).
    #[arg(long)]
    g_graph: Option<PathBuf>,
    #[arg(long, value_delimiter = ',')]
    f1: Vec<u64>,
    #[arg(long, value_delimiter = ',')]
    f2: Vec<u64>,
    #[arg(long, value_delimiter = ',')]
    g1: Vec<u64>,
    #[arg(long, value_delimiter = ',')]
    g2: Vec<u64>,
}

#[derive(Debug)]
struct CliError(String);

impl From<sandpile_core::Error> for CliError {
    fn from(e: sandpile_core::Error) -> Self {
        match e {
            sandpile_core::Error::Parse { .. } => CliError(format!("parse error: {e}")),
            other => CliError(other.to_string()),
        }
    }
}

fn read_graph(path: &Path) -> Result<Multigraph, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError(format!("{}: {e}", path.display())))?;
    Multigraph::parse(&text).map_err(|e| match e {
        sandpile_core::Error::Parse { .. } => CliError(format!("parse error: {}: {e}", path.display())),
        other => other.into(),
    })
}

fn path_value(path: &Path) -> Value {
    Value::String(path.display().to_string())
}

fn cmd_group(path: &Path, drop: Option<usize>) -> Result<RunReport, CliError> {
    let g = read_graph(path)?;
    let group = match drop {
        Some(d) => sandpile_group_dropping(&g, d)?,
        None => sandpile_group(&g)?,
    };
    let mut report = RunReport::new("group", ReportResult::group(&group)).input("path", path_value(path));
    if let Some(d) = drop {
        report = report.input("drop", d);
    }
    Ok(report)
}

fn cmd_laplacian(path: &Path, reduced: Option<usize>) -> Result<RunReport, CliError> {
    let g = read_graph(path)?;
    let m: IntMatrix = match reduced {
        Some(d) => g.reduced_laplacian(d)?,
        None => g.laplacian(),
    };
    let matrix = (0..m.rows())
        .map(|r| m.row(r).iter().map(ToString::to_string).collect())
        .collect();
    let mut report = RunReport::new("laplacian", ReportResult::Matrix { matrix }).input("path", path_value(path));
    if let Some(d) = reduced {
        report = report.input("reduced", d);
    }
    Ok(report)
}

fn build_hspec(p: &GenParams) -> Result<HSpec, CliError> {
    let n = p.n.ok_or_else(|| CliError("gen h requires --n".into()))?;
    let i = p.i.ok_or_else(|| CliError("gen h requires --i".into()))?;
    let f_graph = p.f_graph.as_deref().map(read_graph).transpose()?;
    let g_graph = p.g_graph.as_deref().map(read_graph).transpose()?;
    Ok(HSpec {
        f_graph,
        g_graph,
        cycle_len: n,
        f1: p.f1.clone(),
        f2: p.f2.clone(),
        g1: p.g1.clone(),
        g2: p.g2.clone(),
        attach: i,
    })
}

fn cmd_gen(kind: GenKind, p: &GenParams, out: Option<&Path>, dot: bool) -> Result<RunReport, CliError> {
    let (name, graph, inputs): (&str, Multigraph, Vec<(&str, Value)>) = match kind {
        GenKind::ChCanonical => (
            "gen ch-canonical",
            build_ch_canonical(&p.a)?,
            vec![("a", decimal_list(&p.a))],
        ),
        GenKind::ChMember => {
            let spec = ChSpec::new(p.a.clone(), p.plan.clone())?;
            (
                "gen ch-member",
                build_ch_member(&spec)?,
                vec![("a", decimal_list(&p.a)), ("plan", decimal_list(&p.plan))],
            )
        }
        GenKind::H => {
            let spec = build_hspec(p)?;
            let mut inputs = vec![
                ("n", Value::from(spec.cycle_len)),
                ("i", Value::from(spec.attach)),
                ("f1", decimal_list(&p.f1)),
                ("f2", decimal_list(&p.f2)),
                ("g1", decimal_list(&p.g1)),
                ("g2", decimal_list(&p.g2)),
            ];
            if let Some(f) = &p.f_graph {
                inputs.push(("f_graph", path_value(f)));
            }
            if let Some(g) = &p.g_graph {
                inputs.push(("g_graph", path_value(g)));
            }
            ("gen h", build_h(&spec)?, inputs)
        }
    };
    let rendered = if dot { graph.to_dot() } else { graph.to_text() };
    if let Some(path) = out {
        fs::write(path, &rendered).map_err(|e| CliError(format!("{}: {e}", path.display())))?;
    }
    let result = ReportResult::Graph {
        vertices: graph.vertex_count().to_string(),
        edges: graph.total_multiplicity().to_string(),
        graph: out.is_none().then_some(rendered),
    };
    let mut report = RunReport::new(name, result);
    for (k, v) in inputs {
        report = report.input(k, v);
    }
    if let Some(path) = out {
        report = report.input("out", path_value(path));
    }
    Ok(report)
}

fn cmd_formula(kind: FormulaKind, a: &[BigInt]) -> Result<RunReport, CliError> {
    let (name, value) = match kind {
        FormulaKind::F => ("formula f", f_recursive(a)?),
        FormulaKind::G => ("formula g", g_closed_form(a)?),
    };
    Ok(RunReport::new(
        name,
        ReportResult::Value {
            value: value.to_string(),
        },
    )
    .input("a", decimal_list(a)))
}

fn cmd_verify(
    theorem: TheoremArg,
    trials: u64,
    seed: u64,
    max_len: Option<usize>,
    max_value: Option<u64>,
) -> Result<RunReport, CliError> {
    let defaults = Bounds::default_for(theorem.theorem());
    let bounds = Bounds {
        max_len: max_len.unwrap_or(defaults.max_len),
        max_value: max_value.unwrap_or(defaults.max_value),
    };
    if theorem.theorem() == Theorem::MatrixTree && bounds.max_value > sandpile_core::sandpile::BRUTE_FORCE_EDGE_LIMIT {
        return Err(CliError(format!(
            "--max-value for matrix-tree must be at most {}",
            sandpile_core::sandpile::BRUTE_FORCE_EDGE_LIMIT
        )));
    }
    let outcome = verify::run(theorem.theorem(), trials as usize, seed, bounds);
    Ok(RunReport::new(theorem.name(), ReportResult::verification(&outcome))
        .input("theorem", theorem.name())
        .input("trials", trials)
        .input("seed", seed)
        .input("max_len", bounds.max_len)
        .input("max_value", bounds.max_value))
}

fn run(cli: &Cli) -> Result<RunReport, CliError> {
    match &cli.command {
        Command::Group { path, drop } => cmd_group(path, *drop),
        Command::Laplacian { path, reduced } => cmd_laplacian(path, *reduced),
        Command::Gen { kind, params, out, dot } => cmd_gen(*kind, params, out.as_deref(), *dot),
        Command::Formula { kind, a } => cmd_formula(*kind, a),
        Command::Verify {
            theorem,
            trials,
            seed,
            max_len,
            max_value,
        } => cmd_verify(*theorem, *trials, *seed, *max_len, *max_value),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                print!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
                if let ReportResult::Graph {
                    vertices,
                    edges,
                    graph: Some(_),
                } = &report.result
                {
                    eprintln!("vertices: {vertices}, edges: {edges}");
                }
            }
            if report.result.is_failure() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(CliError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
