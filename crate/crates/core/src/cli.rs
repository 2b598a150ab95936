//! Command-line front end. [`run`] maps every outcome to an exit code:
//! 0 success, 1 rejected cover, 2 usage or parse error, 3 hypothesis or
//! pair violation, 4 construction failure.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::base::{brute_pdpc, OracleConfig, PairSpec, PathCover};
use crate::error::Error;
use crate::graph::is_equitable;
use crate::pdpc::{SolveError, Solver};
use crate::sweep::{fuzz, Family, FuzzConfig};
use crate::verify::verify_pdpc;
use crate::weld::{
    assemble, kmm_weld, parse_weld_spec_str, serialize_weld_spec, transposition_graph, WeldTree,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;
pub const EXIT_CONSTRUCTION: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "weldpath", version, about = "Paired disjoint path covers of welded bipartite graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a weld spec for a graph family
    Gen(GenArgs),
    /// Build a path cover for the given pairs
    Solve(SolveArgs),
    /// Check a cover against a graph and pairs
    Verify(VerifyArgs),
    /// Exhaustive search for a cover (small graphs only)
    Oracle(OracleArgs),
    /// Solve and verify seeded random instances
    Fuzz(FuzzArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(subcommand)]
    pub family: GenFamily,
    /// Spec output path; stdout when absent
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Also write Graphviz DOT here
    #[arg(long, global = true)]
    pub dot: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GenFamily {
    /// Cayley graph of S_n under all transpositions
    Transposition { n: usize },
    /// Recursive weld of K_{m,m} leaves with seeded random matchings
    KmmWeld {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        m: usize,
        /// Children per node at every level; defaults to the rank
        #[arg(long)]
        layers: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Re-validate and normalise an existing spec
    Custom {
        #[arg(long)]
        spec: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub pairs: PathBuf,
    /// Cover output path; stdout when absent
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write the solve trace here
    #[arg(long)]
    pub trace: Option<PathBuf>,
    /// Accept leaves too large for the oracle without checking them
    #[arg(long)]
    pub trust_leaves: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub pairs: PathBuf,
    #[arg(long)]
    pub cover: PathBuf,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub pairs: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FamilyArg {
    Transposition,
    KmmWeld,
}

#[derive(Debug, Args)]
pub struct FuzzArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long, default_value_t = 1000)]
    pub instances: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 5)]
    pub max_rank: usize,
}

/// Outcome that ends the process with `code`.
#[derive(Debug)]
pub struct Exit {
    pub code: i32,
    pub message: String,
}

impl Exit {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Exit {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        Exit::new(EXIT_USAGE, e.to_string())
    }
}

/// Runs one command, writing results to `out`. Diagnostics for non-zero
/// exits travel in the returned [`Exit`].
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), Exit> {
    match cli.command {
        Command::Gen(args) => gen(args, out),
        Command::Solve(args) => solve(args, out),
        Command::Verify(args) => verify(args, out),
        Command::Oracle(args) => oracle(args, out),
        Command::Fuzz(args) => fuzz_cmd(args, out),
    }
}

fn read(path: &Path) -> Result<String, Exit> {
    fs::read_to_string(path).map_err(|e| Exit::new(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Exit> {
    fs::write(path, text).map_err(|e| Exit::new(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn load_tree(path: &Path) -> Result<WeldTree, Exit> {
    parse_weld_spec_str(&read(path)?).map_err(|e| Exit::new(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn load_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Exit> {
    serde_json::from_str(&read(path)?).map_err(|e| Exit::new(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), Exit> {
    match path {
        Some(p) => write_file(p, text),
        None => writeln!(out, "{text}").map_err(|e| Exit::new(EXIT_USAGE, e.to_string())),
    }
}

fn say(out: &mut dyn Write, text: impl std::fmt::Display) -> Result<(), Exit> {
    writeln!(out, "{text}").map_err(|e| Exit::new(EXIT_USAGE, e.to_string()))
}

fn oracle_config(trust_leaves: bool) -> Result<OracleConfig, Exit> {
    let mut config = OracleConfig::from_env()?;
    config.trust_leaves = trust_leaves;
    Ok(config)
}

fn gen(args: GenArgs, out: &mut dyn Write) -> Result<(), Exit> {
    let tree = match args.family {
        GenFamily::Transposition { n } => transposition_graph(n)?,
        GenFamily::KmmWeld { rank, m, layers, seed } => kmm_weld(rank, m, layers.unwrap_or(rank), seed)?,
        GenFamily::Custom { spec } => load_tree(&spec)?,
    };
    let g = assemble(&tree)?;
    let spec = to_json(&serialize_weld_spec(&tree));
    if let Some(p) = &args.dot {
        write_file(p, &g.to_dot())?;
    }
    let c = g.coloring();
    let summary = format!(
        "rank {}: {} vertices, {} edges, {} black / {} white, equitable: {}",
        tree.rank(),
        g.num_vertices(),
        g.num_edges(),
        c.black_count,
        c.white_count,
        is_equitable(&g)
    );
    match &args.out {
        Some(p) => {
            write_file(p, &spec)?;
            say(out, summary)
        }
        None => {
            eprintln!("{summary}");
            say(out, spec)
        }
    }
}

fn solve(args: SolveArgs, out: &mut dyn Write) -> Result<(), Exit> {
    let tree = load_tree(&args.graph)?;
    let pairs: PairSpec = load_json(&args.pairs)?;
    let config = oracle_config(args.trust_leaves)?;
    let solver = Solver::with_config(&tree, &config).map_err(solve_exit)?;
    match solver.solve(&pairs.pairs) {
        Ok((cover, trace)) => {
            if let Some(p) = &args.trace {
                write_file(p, &to_json(&trace))?;
            }
            emit(out, args.out.as_deref(), &to_json(&cover))
        }
        Err(e) => {
            if let (Some(p), SolveError::Construction { trace, .. }) = (&args.trace, &e) {
                write_file(p, &to_json(trace))?;
            }
            Err(solve_exit(e))
        }
    }
}

fn solve_exit(e: SolveError) -> Exit {
    match e {
        SolveError::Hypothesis(report) => {
            Exit::new(EXIT_HYPOTHESIS, format!("weld fails the solver's hypotheses:\n{report}"))
        }
        SolveError::Pairs(msg) => Exit::new(EXIT_HYPOTHESIS, format!("invalid pairs: {msg}")),
        SolveError::Construction { error, trace } => Exit::new(
            EXIT_CONSTRUCTION,
            format!("construction failed: {error}\n{}", to_json(&trace)),
        ),
    }
}

fn verify(args: VerifyArgs, out: &mut dyn Write) -> Result<(), Exit> {
    let g = assemble(&load_tree(&args.graph)?)?;
    let pairs: PairSpec = load_json(&args.pairs)?;
    let cover: PathCover = load_json(&args.cover)?;
    let verdict = verify_pdpc(&g, &pairs.pairs, &cover.paths);
    say(out, to_json(&verdict))?;
    if verdict.accepted {
        Ok(())
    } else {
        Err(Exit::new(EXIT_REJECT, "cover rejected"))
    }
}

fn oracle(args: OracleArgs, out: &mut dyn Write) -> Result<(), Exit> {
    let g = assemble(&load_tree(&args.graph)?)?;
    let pairs: PairSpec = load_json(&args.pairs)?;
    match brute_pdpc(&g, &pairs.pairs, &oracle_config(false)?)? {
        Some(cover) => say(out, to_json(&cover)),
        None => say(out, "NONE"),
    }
}

fn fuzz_cmd(args: FuzzArgs, out: &mut dyn Write) -> Result<(), Exit> {
    let family = match args.family {
        FamilyArg::Transposition => Family::Transposition,
        FamilyArg::KmmWeld => Family::KmmWeld,
    };
    let report = fuzz(&FuzzConfig {
        family,
        instances: args.instances,
        seed: args.seed,
        max_rank: args.max_rank,
    })?;
    say(out, format!("passed {}/{}", report.passed, report.instances))?;
    for (label, count) in &report.histogram {
        say(out, format!("{count:>8}  {label}"))?;
    }
    for f in &report.failures {
        say(out, format!("FAIL #{} rank {} {:?}: {}", f.instance, f.rank, f.pairs, f.reason))?;
    }
    if report.failures.is_empty() {
        Ok(())
    } else {
        Err(Exit::new(
            EXIT_CONSTRUCTION,
            format!("{} of {} instances failed", report.failures.len(), report.instances),
        ))
    }
}
