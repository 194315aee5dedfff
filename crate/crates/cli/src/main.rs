//! `rd2`: build colorings, solve them, and check bounds from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 size guard refusal.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use rd2_core::coloring::{k_color_construction, three_color_construction, two_color_extremal};
use rd2_core::dimacs::{parse_dimacs, write_dimacs};
use rd2_core::kcol::{parse_kcol, write_kcol};
use rd2_core::solve::{max_diam2_bruteforce, max_diam2_exact, BRUTE_FORCE_MAX_N};
use rd2_core::verify::{self, VerificationReport, VerifyOptions, DEFAULT_NODE_BUDGET};
use rd2_core::{dispatch_bits, Budget, Diam2Options, EdgeColoring, Error, Graph, SolveResult};

#[derive(Parser)]
#[command(
    name = "rd2",
    version,
    about = "Monochromatic diameter-two subgraphs of edge-colored complete graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a construction and write it as .kcol
    Construct(ConstructArgs),
    /// Largest diameter-two subgraph of each color class
    Solve(SolveArgs),
    /// Brute-force largest diameter-two subgraph (n <= 22)
    Oracle(OracleArgs),
    /// Check a claimed bound and emit a report
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// Number of colors (3, or at least 4)
    #[arg(long, required_unless_present = "two_color")]
    k: Option<usize>,
    /// Block size
    #[arg(long, required_unless_present = "two_color")]
    s: Option<usize>,
    /// Balanced four-block 2-coloring on this many vertices; ignores --k/--s
    #[arg(long, value_name = "N")]
    two_color: Option<usize>,
    /// Output file (stdout if omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write each color class as PREFIX_color<i>.dimacs
    #[arg(long, value_name = "PREFIX")]
    emit_dimacs: Option<String>,
}

#[derive(Args)]
#[group(id = "source", required = true, multiple = false)]
struct InputArgs {
    /// Coloring in .kcol format
    #[arg(long = "in", value_name = "FILE", group = "source")]
    input: Option<PathBuf>,
    /// Single graph in DIMACS edge format
    #[arg(long, value_name = "FILE", group = "source")]
    dimacs: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Solve only this color
    #[arg(long)]
    color: Option<usize>,
    /// Search-node budget per color; 0 means unlimited
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Report the lexicographically least optimal vertex set
    #[arg(long)]
    deterministic: bool,
}

#[derive(Args)]
struct OracleArgs {
    /// Coloring in .kcol format
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Solve only this color
    #[arg(long)]
    color: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    /// Vertex cover of the circle graph [2s+1,3s] on 6s+1 vertices vs 4s
    Lemma2,
    /// Vertex cover of the circle graph [2s/3,s] on 6s+1 vertices vs 4s
    Lemma3,
    /// Largest diameter-two subgraph of [5s/3+1,8s/3] on 6s+1 vertices vs 2s+3
    Lemma4,
    /// Every class of the three-color construction vs 2s+3
    Thm2,
    /// Every class of the k-color construction vs its class bound and 2s+7
    Thm3,
    /// The 3n/4 extraction on seeded random 2-colorings
    Thm1,
    /// Quoted neighbourhood sets vs recomputed ones
    Identities,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    target: Target,
    /// Block size
    #[arg(long)]
    s: Option<usize>,
    /// Number of colors (thm3, identities)
    #[arg(long)]
    k: Option<usize>,
    /// Vertex count for thm1 (fixed)
    #[arg(long)]
    n: Option<usize>,
    /// Smallest vertex count for thm1 when --n is absent
    #[arg(long, default_value_t = 5)]
    n_min: usize,
    /// Largest vertex count for thm1 when --n is absent
    #[arg(long, default_value_t = 40)]
    n_max: usize,
    /// Random colorings for thm1
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Seed for thm1
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Search-node budget per solve; 0 means unlimited
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Emit CSV instead of JSON
    #[arg(long)]
    csv: bool,
}

enum Failure {
    Input(String),
    Refused(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::GraphTooLarge { .. } => Failure::Refused(e.to_string()),
            Error::Invariant(_) => Failure::Failed(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn budget(nodes: u64) -> Budget {
    if nodes == 0 {
        Budget::unlimited()
    } else {
        Budget::nodes(nodes)
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_kcol(path: &Path) -> CliResult<EdgeColoring> {
    parse_kcol(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn construct(args: ConstructArgs) -> CliResult<()> {
    let coloring = match (args.two_color, args.k, args.s) {
        (Some(n), _, _) => two_color_extremal(n)?.coloring,
        (None, Some(3), Some(s)) => three_color_construction(s)?.coloring,
        (None, Some(k), Some(s)) if k >= 4 => k_color_construction(k, s)?.coloring,
        (None, Some(k), Some(_)) => {
            return Err(Failure::Input(format!(
                "--k must be 3 or at least 4, got {k} (use --two-color for k = 2)"
            )))
        }
        _ => {
            return Err(Failure::Input(
                "need --two-color, or both --k and --s".into(),
            ))
        }
    };
    let text = write_kcol(&coloring);
    match &args.out {
        Some(path) => write(path, &text)?,
        None => print!("{text}"),
    }
    if let Some(prefix) = &args.emit_dimacs {
        for color in 0..coloring.k() {
            let edges = dispatch_bits!(coloring.n(), W => {
                let g: Graph<W> = coloring.class_graph(color)?;
                Ok(g.edges())
            })?;
            write(
                Path::new(&format!("{prefix}_color{color}.dimacs")),
                &write_dimacs(coloring.n(), &edges),
            )?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct ColorResult {
    color: Option<usize>,
    n: usize,
    #[serde(flatten)]
    result: SolveResult,
}

fn colors_to_solve(coloring: &EdgeColoring, only: Option<usize>) -> CliResult<Vec<usize>> {
    match only {
        Some(c) if c >= coloring.k() => Err(Failure::Input(format!(
            "--color {c} outside 0..{}",
            coloring.k()
        ))),
        Some(c) => Ok(vec![c]),
        None => Ok((0..coloring.k()).collect()),
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("results serialize")
    );
}

fn solve(args: SolveArgs) -> CliResult<()> {
    let options = Diam2Options::default()
        .with_budget(budget(args.budget))
        .deterministic(args.deterministic);
    if let Some(path) = &args.input.dimacs {
        let (n, edges) = parse_dimacs(&read(path)?)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        let result = dispatch_bits!(n, W => {
            let g = Graph::<W>::from_edges(n, edges.iter().copied())?;
            max_diam2_exact(&g, &options)
        })?;
        print_json(&[ColorResult {
            color: None,
            n,
            result,
        }]);
        return Ok(());
    }
    let path = args.input.input.as_ref().expect("clap enforces one input");
    let coloring = load_kcol(path)?;
    let colors = colors_to_solve(&coloring, args.color)?;
    let n = coloring.n();
    let results: Vec<ColorResult> = colors
        .par_iter()
        .map(|&color| {
            let result = dispatch_bits!(n, W => {
                let g: Graph<W> = coloring.class_graph(color)?;
                max_diam2_exact(&g, &options)
            })?;
            Ok(ColorResult {
                color: Some(color),
                n,
                result,
            })
        })
        .collect::<Result<_, Error>>()?;
    print_json(&results);
    Ok(())
}

fn oracle(args: OracleArgs) -> CliResult<()> {
    let coloring = load_kcol(&args.input)?;
    let n = coloring.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Failure::Refused(format!(
            "brute force is limited to n <= {BRUTE_FORCE_MAX_N}, file has n = {n}"
        )));
    }
    let results = colors_to_solve(&coloring, args.color)?
        .into_iter()
        .map(|color| {
            let g: Graph<u32> = coloring.class_graph(color)?;
            Ok(ColorResult {
                color: Some(color),
                n,
                result: max_diam2_bruteforce(&g)?,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    print_json(&results);
    Ok(())
}

fn need(value: Option<usize>, flag: &str) -> CliResult<usize> {
    value.ok_or_else(|| Failure::Input(format!("this target needs {flag}")))
}

fn verify(args: VerifyArgs) -> CliResult<bool> {
    let opts = VerifyOptions {
        budget: budget(args.budget),
    };
    let report: VerificationReport = match args.target {
        Target::Lemma2 => verify::verify_cover_upper_block(need(args.s, "--s")?, &opts)?,
        Target::Lemma3 => verify::verify_cover_middle_block(need(args.s, "--s")?, &opts)?,
        Target::Lemma4 => verify::verify_middle_class(need(args.s, "--s")?, &opts)?,
        Target::Thm2 => verify::verify_three_color(need(args.s, "--s")?, &opts)?,
        Target::Thm3 => verify::verify_k_color(need(args.k, "--k")?, need(args.s, "--s")?, &opts)?,
        Target::Identities => {
            verify::verify_identities(need(args.k, "--k")?, need(args.s, "--s")?)?
        }
        Target::Thm1 => {
            let range = match args.n {
                Some(n) => n..=n,
                None => args.n_min..=args.n_max,
            };
            verify::verify_three_quarter(range, args.trials, args.seed)?
        }
    };
    if args.csv {
        print!("{}", report.to_csv());
    } else {
        println!("{}", report.to_json());
    }
    Ok(report.pass)
}

fn configure_threads() -> CliResult<()> {
    let Ok(raw) = std::env::var("RD2_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().ok().filter(|&t| t > 0).ok_or_else(|| {
        Failure::Input(format!(
            "RD2_THREADS must be a positive integer, got {raw:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::Input(e.to_string()))
}

fn run(cli: Cli) -> CliResult<bool> {
    configure_threads()?;
    match cli.command {
        Command::Construct(a) => construct(a).map(|_| true),
        Command::Solve(a) => solve(a).map(|_| true),
        Command::Oracle(a) => oracle(a).map(|_| true),
        Command::Verify(a) => verify(a),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Failed(msg)) => {
            eprintln!("rd2: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("rd2: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Refused(msg)) => {
            eprintln!("rd2: refused: {msg}");
            ExitCode::from(3)
        }
    }
}
