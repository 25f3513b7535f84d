//! `trisquare`: command-line front end.
//!
//! Exit status is 0 on success, 1 when a checked property fails (or a
//! computation cannot complete), and 2 on usage errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;
use trisquare::extreme::{extreme_graph, extreme_graph_balanced, ExtremeGraph};
use trisquare::polytope::{polygon_qr, scaled_polygon, LimitRegion};
use trisquare::profile::cycle_point;
use trisquare::realize::{realize, ComponentCache};
use trisquare::sample::{sample_batch, write_csv, SampleConfig};
use trisquare::spectral::spectral_moments;
use trisquare::svg::{polygon_svg, scaled_vs_limit_svg, scatter_svg};
use trisquare::verify::{run_bollobas_suite, run_region_suite, RegionSuiteConfig, SuiteReport};
use trisquare::{Error, Graph, Partition, Polygon, QPoint, Rat};

#[derive(Parser)]
#[command(name = "trisquare", version, about = "Triangle and square densities of regular graphs")]
struct Cli {
    /// Worker threads for parallel stages (0 = all cores).
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Vertices of the polygon Q^r.
    Polygon(PolygonArgs),
    /// Build an extreme graph C^r_l and verify it.
    Construct(ConstructArgs),
    /// Realize a rational point of Q^r by an explicit graph.
    Realize(RealizeArgs),
    /// Exhaustive property suites.
    Verify(VerifyArgs),
    /// Configuration-model samples and their density points.
    Sample(SampleArgs),
    /// Spectral moments of a regular graph.
    Moments(MomentsArgs),
    /// The scaled limit region and point membership.
    LimitRegion(LimitArgs),
}

#[derive(Args)]
struct PolygonArgs {
    r: usize,
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Write an SVG figure to this path.
    #[arg(long, value_name = "PATH")]
    svg: Option<PathBuf>,
    /// Apply (x, y) -> (6x/r^2, 8y/r^3).
    #[arg(long)]
    scaled: bool,
}

#[derive(Args)]
struct ConstructArgs {
    r: usize,
    /// Number of parts of the balanced partition (0 gives K_{r,r}).
    l: Option<usize>,
    /// Explicit partition of r, e.g. `1,2,2`, instead of `l`.
    #[arg(long, value_delimiter = ',', conflicts_with = "l")]
    parts: Option<Vec<usize>>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the graph JSON here instead of embedding it in the output.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Write the hypergraph JSON here.
    #[arg(long, value_name = "PATH")]
    hypergraph_out: Option<PathBuf>,
}

#[derive(Args)]
struct RealizeArgs {
    r: usize,
    /// Triangle density, e.g. `1/2`.
    x: Rat,
    /// Square density, e.g. `3/4`.
    y: Rat,
    /// Print the blueprint without building the graph.
    #[arg(long)]
    blueprint_only: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the realized graph JSON here.
    #[arg(value_name = "GRAPH_OUT")]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true)]
struct VerifyArgs {
    #[command(subcommand)]
    suite: Option<VerifySuite>,
    #[arg(long, default_value_t = 3)]
    r: usize,
    #[arg(long, default_value_t = 10)]
    nmax: usize,
    /// Stop after this many seconds and report the run as incomplete.
    #[arg(long, value_name = "SECS")]
    time_limit: Option<u64>,
    /// Also evaluate the informational averaged-point property.
    #[arg(long)]
    experimental: bool,
    #[command(flatten)]
    output: ReportOutput,
}

#[derive(Subcommand)]
enum VerifySuite {
    /// Triple identities and the Turán bound on all small graphs.
    Bollobas {
        #[arg(long, default_value_t = 7)]
        vmax: usize,
        #[arg(long, value_name = "SECS")]
        time_limit: Option<u64>,
        #[command(flatten)]
        output: ReportOutput,
    },
}

#[derive(Args)]
struct ReportOutput {
    /// Print the report as JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Also write the JSON report to this path.
    #[arg(long, value_name = "PATH")]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct SampleArgs {
    #[arg(long, default_value_t = 3)]
    r: usize,
    #[arg(long, default_value_t = 100)]
    n: usize,
    #[arg(long, default_value_t = 1000)]
    count: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Write per-sample points as CSV.
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
    /// Write a scatter plot over Q^r.
    #[arg(long, value_name = "PATH")]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct MomentsArgs {
    /// Graph JSON or edge list (`-` reads stdin).
    graph: PathBuf,
    /// Highest moment.
    #[arg(long, default_value_t = 4)]
    k: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct LimitArgs {
    /// Curve points (1/k, 1/k^2) drawn for k up to this value.
    #[arg(long, default_value_t = 64)]
    cutoff: u64,
    /// Classify the point `x y`.
    #[arg(long, num_args = 2, value_names = ["X", "Y"])]
    point: Option<Vec<Rat>>,
    /// Write scaled polygons for these r against the limit region.
    #[arg(long, value_delimiter = ',')]
    overlay: Vec<usize>,
    #[arg(long, value_name = "PATH")]
    svg: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

enum Failure {
    Usage(String),
    Violation(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameters(_)
            | Error::Parity { .. }
            | Error::PointOutsideRegion(_)
            | Error::MalformedDegrees(_)
            | Error::Parse(_)
            | Error::Json(_)
            | Error::NotRegular { .. }
            | Error::InvalidEdge(..)
            | Error::VertexOutOfRange { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

type CliResult = Result<(), Failure>;

fn write_file(path: &Path, contents: &str) -> CliResult {
    fs::write(path, contents).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(text: &str) -> CliResult {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn print_json<T: Serialize>(value: &T) -> CliResult {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Runtime(e.to_string()))?;
    emit(&format!("{text}\n"))
}

fn polygon_text(p: &Polygon) -> String {
    p.vertices
        .iter()
        .map(|v| {
            let (x, y) = v.to_f64();
            format!("{v}  ~ ({x:.6}, {y:.6})\n")
        })
        .collect()
}

fn cmd_polygon(a: PolygonArgs) -> CliResult {
    let poly = if a.scaled { scaled_polygon(a.r)? } else { polygon_qr(a.r)? };
    if a.json {
        print_json(&json!({ "r": a.r, "scaled": a.scaled, "vertices": poly.vertices }))?;
    } else {
        emit(&polygon_text(&poly))?;
    }
    if let Some(path) = a.svg {
        write_file(&path, &polygon_svg(a.r, a.scaled)?)?;
    }
    Ok(())
}

fn cmd_construct(a: ConstructArgs) -> CliResult {
    let built: ExtremeGraph = match (&a.parts, a.l) {
        (Some(parts), _) => {
            let p = Partition::new(parts.clone())?;
            if p.total() != a.r {
                return Err(Failure::Usage(format!("parts sum to {}, expected {}", p.total(), a.r)));
            }
            extreme_graph(&p, a.seed)?
        }
        (None, Some(l)) => extreme_graph_balanced(a.r, l, a.seed)?,
        (None, None) => return Err(Failure::Usage("give l or --parts".into())),
    };
    let report = built.verify();
    let point = cycle_point(&built.graph)?;
    let mut out = json!({
        "r": built.r,
        "partition": built.partition.as_ref().map(|p| p.parts().to_vec()),
        "order": built.graph.order(),
        "point": point,
        "report": report,
        "passed": report.passed(),
    });
    match &a.out {
        Some(path) => write_file(path, &serde_json::to_string(&built.graph).map_err(Error::from)?)?,
        None => out["graph"] = serde_json::to_value(&built.graph).map_err(Error::from)?,
    }
    if let (Some(path), Some(h)) = (&a.hypergraph_out, &built.hypergraph) {
        write_file(path, &serde_json::to_string(h).map_err(Error::from)?)?;
    }
    print_json(&out)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Violation("extreme graph failed verification".into()))
    }
}

fn cmd_realize(a: RealizeArgs) -> CliResult {
    let cache = ComponentCache::new();
    let target = QPoint::new(a.x, a.y);
    let blueprint = realize(a.r, &target, a.seed, &cache)?;
    let mut out = json!({ "blueprint": blueprint.to_json() });
    if !a.blueprint_only {
        let g = blueprint.assemble()?;
        let recount = cycle_point(&g)?;
        out["recount"] = serde_json::to_value(&recount).map_err(Error::from)?;
        out["recount_matches"] = json!(recount == target);
        if let Some(path) = &a.out {
            write_file(path, &serde_json::to_string(&g).map_err(Error::from)?)?;
        }
        if recount != target {
            print_json(&out)?;
            return Err(Failure::Violation(format!("recount {recount} differs from target {target}")));
        }
    }
    print_json(&out)
}

fn emit_report(report: &SuiteReport, output: &ReportOutput) -> CliResult {
    if output.json {
        print_json(report)?;
    } else {
        emit(&report.to_text())?;
    }
    if let Some(path) = &output.report {
        write_file(path, &serde_json::to_string_pretty(report).map_err(Error::from)?)?;
    }
    if report.passed() {
        Ok(())
    } else if !report.complete && report.counterexample.is_none() {
        Err(Failure::Runtime("time limit reached before the suite completed".into()))
    } else {
        Err(Failure::Violation(format!("suite {} found a counterexample", report.suite)))
    }
}

fn cmd_verify(a: VerifyArgs, jobs: usize) -> CliResult {
    match a.suite {
        Some(VerifySuite::Bollobas {
            vmax,
            time_limit,
            output,
        }) => {
            let report = run_bollobas_suite(vmax, time_limit.map(Duration::from_secs))?;
            emit_report(&report, &output)
        }
        None => {
            let config = RegionSuiteConfig {
                r: a.r,
                n_max: a.nmax,
                jobs,
                time_limit: a.time_limit.map(Duration::from_secs),
                experimental: a.experimental,
            };
            let report = run_region_suite(&config)?;
            emit_report(&report, &a.output)
        }
    }
}

fn cmd_sample(a: SampleArgs, jobs: usize) -> CliResult {
    let batch = sample_batch(&SampleConfig {
        r: a.r,
        n: a.n,
        count: a.count,
        seed: a.seed,
        jobs,
    })?;
    if let Some(path) = &a.csv {
        let mut buf = Vec::new();
        write_csv(&batch.records, &mut buf)?;
        fs::write(path, buf)?;
    }
    if let Some(path) = &a.svg {
        let points: Vec<QPoint> = batch.records.iter().map(|s| s.point.clone()).collect();
        write_file(path, &scatter_svg(a.r, &points)?)?;
    }
    let outside = batch.records.iter().filter(|s| !s.location.is_inside()).count();
    print_json(&json!({
        "r": batch.r,
        "n": batch.n,
        "count": batch.records.len(),
        "seed": batch.seed,
        "mean": batch.mean,
        "min": batch.min,
        "max": batch.max,
        "outside": outside,
    }))?;
    if outside == 0 {
        Ok(())
    } else {
        Err(Failure::Violation(format!("{outside} samples fall outside Q^{}", a.r)))
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
    };
    Ok(Graph::parse(&text)?)
}

fn cmd_moments(a: MomentsArgs) -> CliResult {
    let g = read_graph(&a.graph)?;
    let m = spectral_moments(&g, a.k)?;
    if a.json {
        let list: Vec<_> = m
            .moments
            .iter()
            .enumerate()
            .map(|(k, v)| json!({ "k": k, "value": v, "approx": v.to_f64() }))
            .collect();
        return print_json(&json!({ "r": m.r, "moments": list }));
    }
    let text: String = m
        .moments
        .iter()
        .enumerate()
        .map(|(k, v)| format!("m{k} = {v} ~ {:.10}\n", v.to_f64()))
        .collect();
    emit(&text)
}

fn cmd_limit(a: LimitArgs) -> CliResult {
    let region = LimitRegion { cutoff: a.cutoff.max(1) };
    let poly = region.polygon();
    let location = match &a.point {
        Some(p) => Some(region.contains(&QPoint::new(p[0].clone(), p[1].clone()))),
        None => None,
    };
    if a.json {
        print_json(&json!({ "cutoff": region.cutoff, "vertices": poly.vertices, "location": location }))?;
    } else {
        match location {
            Some(l) => emit(&format!("{}\n", serde_json::to_value(l).map_err(Error::from)?.as_str().unwrap_or("")))?,
            None => emit(&polygon_text(&poly))?,
        }
    }
    if let Some(path) = &a.svg {
        write_file(path, &scaled_vs_limit_svg(&a.overlay)?)?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli.jobs;
    let result = match cli.command {
        Command::Polygon(a) => cmd_polygon(a),
        Command::Construct(a) => cmd_construct(a),
        Command::Realize(a) => cmd_realize(a),
        Command::Verify(a) => cmd_verify(a, jobs),
        Command::Sample(a) => cmd_sample(a, jobs),
        Command::Moments(a) => cmd_moments(a),
        Command::LimitRegion(a) => cmd_limit(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation(msg)) => {
            eprintln!("trisquare: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("trisquare: error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("trisquare: error: {msg}");
            ExitCode::from(2)
        }
    }
}
