//! `flagineq` — checks the inequality family on face numbers of flag
//! simplicial complexes, in exact arithmetic.
//!
//! Exit codes: 0 = everything holds and all routes agree; 2 = some
//! inequality is violated; 1 = parse or internal error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::builder::ArgGroup;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::One;

use flagineq::complex::Complex;
use flagineq::engine::{
    check_inequalities_with_order, default_order, homotopy_ranks, series_analysis,
    InequalityReport,
};
use flagineq::fvector::FVector;
use flagineq::graph::Graph;
use flagineq::harness::{run_corpus, CorpusKind, CorpusResult, CorpusSpec, EdgeProb};
use flagineq::report::{to_json, CheckReport, CorpusReport, InputKind};

#[derive(Parser)]
#[command(
    name = "flagineq",
    version,
    about = "Exact checks of the face-number inequalities for flag simplicial complexes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the inequality family on a graph, a facet list, or a raw f-vector
    Check(CheckArgs),
    /// Print the clique-complex f-vector of a graph
    Fvector {
        /// Edge-list file
        path: PathBuf,
    },
    /// Print D(t), Q(t), the v-sequence, and the homotopy-rank relabeling
    Series(SeriesArgs),
    /// Check every labeled graph on the given vertex count
    Enumerate(EnumerateArgs),
    /// Check seeded Erdős–Rényi random graphs
    Random(RandomArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
#[command(group(ArgGroup::new("input").required(true)))]
struct CheckArgs {
    /// Edge-list file of a graph; its clique complex is checked
    #[arg(long, value_name = "PATH", group = "input")]
    graph: Option<PathBuf>,
    /// Facet-list file of a simplicial complex
    #[arg(long, value_name = "PATH", group = "input")]
    facets: Option<PathBuf>,
    /// Inline comma-separated f-vector; the empty string is the empty complex
    #[arg(long, value_name = "LIST", group = "input")]
    fvector: Option<String>,
    /// Largest N to check
    #[arg(long = "max-n", value_name = "N", default_value_t = 10)]
    max_n: usize,
    /// Series truncation order (default: max(16, max-n))
    #[arg(long, value_name = "K")]
    order: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct SeriesArgs {
    /// Inline comma-separated f-vector
    #[arg(long, value_name = "LIST")]
    fvector: String,
    /// Series truncation order (default: 16)
    #[arg(long, value_name = "K")]
    order: Option<usize>,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Vertex count m; all 2^C(m,2) labeled graphs are checked
    #[arg(long, value_name = "M")]
    vertices: usize,
    #[arg(long = "max-n", value_name = "N", default_value_t = 10)]
    max_n: usize,
    #[arg(long, value_name = "K")]
    order: Option<usize>,
    /// Worker threads (default: available cores)
    #[arg(long, value_name = "W")]
    workers: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct RandomArgs {
    /// Vertex count m
    #[arg(long, value_name = "M")]
    vertices: usize,
    /// Edge probability, as "p/q" or a decimal such as 0.5
    #[arg(long, value_name = "P")]
    prob: String,
    /// Number of graphs to draw
    #[arg(long, value_name = "T")]
    trials: u64,
    /// Stream seed; identical seeds reproduce identical graphs
    #[arg(long, value_name = "S")]
    seed: u64,
    #[arg(long = "max-n", value_name = "N", default_value_t = 10)]
    max_n: usize,
    #[arg(long, value_name = "K")]
    order: Option<usize>,
    /// Worker threads (default: available cores)
    #[arg(long, value_name = "W")]
    workers: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let ok = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return ExitCode::from(if ok { 0 } else { 1 });
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Check(args) => cmd_check(args),
        Command::Fvector { path } => cmd_fvector(&path),
        Command::Series(args) => cmd_series(args),
        Command::Enumerate(args) => {
            let spec = CorpusSpec {
                kind: CorpusKind::Exhaustive,
                vertices: args.vertices,
                max_n: args.max_n,
                order: resolve_order(args.order, args.max_n)?,
            };
            cmd_corpus(&spec, args.workers, args.format)
        }
        Command::Random(args) => {
            let spec = CorpusSpec {
                kind: CorpusKind::Random {
                    edge_prob: parse_prob(&args.prob)?,
                    trials: args.trials,
                    seed: args.seed,
                },
                vertices: args.vertices,
                max_n: args.max_n,
                order: resolve_order(args.order, args.max_n)?,
            };
            cmd_corpus(&spec, args.workers, args.format)
        }
    }
}

fn read_file(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn resolve_order(order: Option<usize>, max_n: usize) -> Result<usize, String> {
    if max_n == 0 {
        return Err("max-n must be at least 1".into());
    }
    let order = order.unwrap_or_else(|| default_order(max_n));
    if order < max_n {
        return Err(format!("order {order} does not cover max-n {max_n}"));
    }
    Ok(order)
}

/// Accepts "p/q" or a plain decimal like "0.25".
fn parse_prob(text: &str) -> Result<EdgeProb, String> {
    let bad = |_| format!("cannot parse probability {text:?}");
    let p = if let Some((numer, denom)) = text.split_once('/') {
        let numer: u64 = numer.trim().parse().map_err(bad)?;
        let denom: u64 = denom.trim().parse().map_err(bad)?;
        if denom == 0 {
            return Err(format!("probability {text:?} has zero denominator"));
        }
        EdgeProb::new(numer, denom)
    } else if let Some((whole, frac)) = text.split_once('.') {
        let digits = frac.len() as u32;
        if digits == 0 || digits > 18 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("cannot parse probability {text:?}"));
        }
        let whole: u64 = if whole.is_empty() { 0 } else { whole.parse().map_err(bad)? };
        let frac: u64 = frac.parse().map_err(bad)?;
        let denom = 10u64.pow(digits);
        EdgeProb::new(whole * denom + frac, denom)
    } else {
        let whole: u64 = text.trim().parse().map_err(bad)?;
        EdgeProb::new(whole, 1)
    };
    if p > EdgeProb::one() {
        return Err(format!("probability {p} exceeds 1"));
    }
    Ok(p)
}

fn cmd_check(args: CheckArgs) -> Result<ExitCode, String> {
    let order_default = resolve_order(args.order, args.max_n)?;
    let (f, input_kind, is_flag) = if let Some(path) = &args.graph {
        let g = Graph::parse_edge_list(&read_file(path)?)
            .map_err(|e| format!("{}: {e}", path.display()))?;
        // clique complexes are flag by construction
        (g.clique_fvector(), InputKind::Graph, Some(true))
    } else if let Some(path) = &args.facets {
        let c = Complex::parse_facet_list(&read_file(path)?)
            .map_err(|e| format!("{}: {e}", path.display()))?;
        let flag = c.is_flag();
        (c.fvector(), InputKind::Facets, Some(flag))
    } else {
        let text = args.fvector.as_deref().unwrap_or_default();
        let f: FVector = text.parse().map_err(|e| format!("--fvector: {e}"))?;
        (f, InputKind::Fvector, None)
    };

    let report = check_inequalities_with_order(&f, args.max_n, order_default);
    let serialized = CheckReport::new(&report, input_kind, is_flag);
    match args.format {
        Format::Json => println!("{}", to_json(&serialized)),
        Format::Text => print!("{}", render_check_text(&report, input_kind, is_flag)),
    }
    Ok(exit_for(report.all_hold && report.routes_agree))
}

fn exit_for(clean: bool) -> ExitCode {
    ExitCode::from(if clean { 0 } else { 2 })
}

fn render_check_text(
    report: &InequalityReport,
    input_kind: InputKind,
    is_flag: Option<bool>,
) -> String {
    let mut out = String::new();
    let kind = match input_kind {
        InputKind::Graph => "graph",
        InputKind::Facets => "facets",
        InputKind::Fvector => "fvector",
    };
    let _ = writeln!(out, "input kind:    {kind}");
    let _ = writeln!(out, "f-vector:      ({})", report.fvector);
    let alpha: Vec<String> = report.alpha.values().iter().map(|a| a.to_string()).collect();
    let _ = writeln!(out, "alpha:         {}", alpha.join(","));
    let _ = writeln!(out, "max N:         {}", report.max_n);
    let flag = match is_flag {
        Some(true) => "true",
        Some(false) => "false",
        None => "null",
    };
    let _ = writeln!(out, "is flag:       {flag}");
    let _ = writeln!(out, "  N  lhs  v  integral  holds");
    for e in &report.entries {
        let _ = writeln!(
            out,
            "  {}  {}  {}  {}  {}",
            e.n,
            e.lhs,
            rational(&e.v),
            e.v_integral,
            e.holds
        );
    }
    let _ = writeln!(out, "all hold:      {}", report.all_hold);
    let _ = writeln!(out, "routes agree:  {}", report.routes_agree);
    out
}

fn rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Integer coefficients print bare, anything else as p/q.
fn coeff(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        rational(r)
    }
}

fn cmd_fvector(path: &Path) -> Result<ExitCode, String> {
    let g = Graph::parse_edge_list(&read_file(path)?)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    println!("{}", g.clique_fvector());
    Ok(ExitCode::from(0))
}

fn cmd_series(args: SeriesArgs) -> Result<ExitCode, String> {
    let f: FVector = args.fvector.parse().map_err(|e| format!("--fvector: {e}"))?;
    let order = args.order.unwrap_or_else(|| default_order(1));
    if order == 0 {
        return Err("order must be at least 1".into());
    }
    let analysis = series_analysis(&f, order);
    let join = |s: &flagineq::series::TruncatedSeries| {
        s.coeffs().iter().map(coeff).collect::<Vec<_>>().join(",")
    };
    println!("f-vector:     ({f})");
    println!("order:        {order}");
    println!("D:            {}", join(&analysis.dseries));
    println!("Q:            {}", join(&analysis.qseries));
    println!(
        "v:            {}",
        analysis.v.values().iter().map(coeff).collect::<Vec<_>>().join(",")
    );
    let pi: Vec<String> = homotopy_ranks(&analysis.v)
        .iter()
        .map(|(i, rank)| format!("pi_{i}={}", coeff(rank)))
        .collect();
    println!("pi ranks:     {}", pi.join(" "));
    println!("routes agree: {}", analysis.routes_agree);
    Ok(exit_for(analysis.routes_agree))
}

fn cmd_corpus(
    spec: &CorpusSpec,
    workers: Option<usize>,
    format: Format,
) -> Result<ExitCode, String> {
    let result = run_corpus(spec, workers).map_err(|e| e.to_string())?;
    eprintln!("elapsed: {:.3}s", result.elapsed.as_secs_f64());
    match format {
        Format::Json => println!("{}", to_json(&CorpusReport::new(&result))),
        Format::Text => print!("{}", render_corpus_text(&result)),
    }
    Ok(exit_for(result.is_clean()))
}

fn render_corpus_text(result: &CorpusResult) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "kind:                {}", result.spec.kind.name());
    let _ = writeln!(out, "vertices:            {}", result.spec.vertices);
    if let CorpusKind::Random { edge_prob, trials, seed } = &result.spec.kind {
        let _ = writeln!(out, "edge probability:    {edge_prob}");
        let _ = writeln!(out, "trials:              {trials}");
        let _ = writeln!(out, "seed:                {seed}");
    }
    let _ = writeln!(out, "max N:               {}", result.spec.max_n);
    let _ = writeln!(out, "order:               {}", result.spec.order);
    let _ = writeln!(out, "total checked:       {}", result.total);
    let _ = writeln!(out, "violations:          {}", result.violations.len());
    let _ = writeln!(out, "route disagreements: {}", result.route_disagreements);
    let max_v: Vec<String> = result
        .max_v_seen
        .iter()
        .map(|v| v.as_ref().map_or_else(|| "-".to_string(), coeff))
        .collect();
    let _ = writeln!(out, "max v per N:         {}", max_v.join(","));
    for v in &result.violations {
        let _ = writeln!(out, "violation input={} N={} lhs={}", v.input, v.n, v.lhs);
    }
    out
}
