//! `sepcube`: constructions, verification, projection, and matrix tooling
//! over the text formats of the core library, with reproducible JSON run
//! reports.
//!
//! Exit codes: 0 pass, 1 property/verification failure, 2 usage or input
//! error, 3 resource cap. Reports are byte-identical for identical inputs
//! and seed; wall-clock time is only included behind `--timing`.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use sepcube::construct::{
    edge_hull_relaxation, edge_polytope, halfsquare_separator, hamming_separator,
    pairwise_polytope, verify_separation_direct_threads, verify_separation_ef_threads,
    SeparationReport, VerifyMethod,
};
use sepcube::error::Error;
use sepcube::io::{
    read_bool_set, read_ef, read_graph, read_hpolytope, write_ef, write_hpolytope,
};
use sepcube::matrix::{
    ene_decompose_bipartite, ene_decompose_general, ene_matrix, eis_matrix, read_decomposition,
    read_matrix, verify_decomposition, write_decomposition, write_matrix, MatrixFormat,
    EIS_DEFAULT_CAP,
};
use sepcube::poly::HPolytope;
use sepcube::project::{ef_boolean_points, is_contained, project_onto};
use sepcube::suite::{run_suite, SuiteConfig};

const EXIT_PASS: i32 = 0;
const EXIT_FAIL: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_CAP: i32 = 3;

#[derive(Parser)]
#[command(
    name = "sepcube",
    version,
    about = "Separating polytopes for subsets of the Boolean cube",
    long_about = "Constructs and verifies separating polytopes, projects \
        H-representations by exact variable elimination, and builds \
        edge/non-edge matrices with rectangle decompositions.\n\n\
        The env var SEPCUBE_MAX_N overrides the default cube dimension cap."
)]
struct Cli {
    /// Emit a machine-readable run report (schema 1) to stdout
    #[arg(long, global = true)]
    json: bool,
    /// Add wall-clock time to report metrics (breaks byte-for-byte
    /// reproducibility of reports)
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a separating polytope or relaxation and write it out
    Construct(ConstructArgs),
    /// Check that a polytope or lifted formulation separates a target set
    Verify(VerifyArgs),
    /// Project an H-polytope onto a subset of coordinates
    Project(ProjectArgs),
    /// Decide whether one H-polytope is contained in another
    CheckContain(CheckContainArgs),
    /// Write the edge/non-edge or edge/independent-set matrix of a graph
    Matrix(MatrixArgs),
    /// Partition the 1-entries of a graph's edge/non-edge matrix into
    /// rectangles
    Decompose(DecomposeArgs),
    /// Check a rectangle decomposition against a matrix
    VerifyDecomp(VerifyDecompArgs),
    /// Run the randomized property suites
    Suite(SuiteArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ConstructKind {
    /// Distance separator: one constraint per cube point
    Hamming,
    /// Weight-two separator with 2n inequalities
    Edge,
    /// Lifted separator over two coordinate blocks
    Halfsquare,
    /// Pairwise non-edge relaxation of a graph
    Qg,
    /// Bipartite intermediate relaxation of a graph
    Rpg,
}

#[derive(clap::Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    kind: ConstructKind,
    /// Target set file (SET format) for hamming/edge/halfsquare
    #[arg(long)]
    set: Option<PathBuf>,
    /// Graph file (GRAPH format) for qg/rpg
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Per-point canonical lift (needs a coordinate partition)
    Lift,
    /// Variable-elimination projection of the lift polytope
    Oracle,
    /// Enumerate cube points against an H-polytope
    Direct,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Lifted formulation file (EF format)
    #[arg(long, conflicts_with = "poly")]
    ef: Option<PathBuf>,
    /// H-polytope file
    #[arg(long)]
    poly: Option<PathBuf>,
    /// Target set file (SET format)
    #[arg(long)]
    set: PathBuf,
    #[arg(long, value_enum)]
    method: Option<Method>,
    /// Run both the lift and the elimination oracle; fail on divergence
    #[arg(long)]
    cross_check: bool,
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(clap::Args)]
struct ProjectArgs {
    #[arg(long)]
    poly: PathBuf,
    /// 1-based coordinates to keep, e.g. --onto 1,3
    #[arg(long, value_delimiter = ',', required = true)]
    onto: Vec<usize>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(clap::Args)]
struct CheckContainArgs {
    #[arg(long)]
    inner: PathBuf,
    #[arg(long)]
    outer: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MatrixKind {
    Ene,
    Eis,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Dense,
    Sparse,
}

#[derive(clap::Args)]
struct MatrixArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_enum)]
    kind: MatrixKind,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value_t = FormatArg::Dense)]
    format: FormatArg,
}

#[derive(clap::Args)]
struct DecomposeArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    out: PathBuf,
}

#[derive(clap::Args)]
struct VerifyDecompArgs {
    #[arg(long)]
    matrix: PathBuf,
    #[arg(long)]
    decomp: PathBuf,
}

#[derive(clap::Args)]
struct SuiteArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Lower the randomized size ranges (never raises them)
    #[arg(long)]
    max_n: Option<usize>,
    /// Run a single property by name
    #[arg(long)]
    only: Option<String>,
    /// Pin every part to one size
    #[arg(long)]
    n: Option<usize>,
    /// Run only the enumerated (non-random) parts
    #[arg(long)]
    exhaustive: bool,
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

/// Accumulates the pieces of a run report while a command executes.
struct Report {
    command: &'static str,
    inputs: Map<String, Value>,
    parameters: Map<String, Value>,
    metrics: Map<String, Value>,
    result: Value,
}

impl Report {
    fn new(command: &'static str) -> Self {
        Report {
            command,
            inputs: Map::new(),
            parameters: Map::new(),
            metrics: Map::new(),
            result: Value::Null,
        }
    }

    /// Reads a file, recording its sha256 under the given path.
    fn load(&mut self, path: &Path) -> sepcube::Result<String> {
        let bytes = fs::read(path)?;
        let digest = hex::encode(Sha256::digest(&bytes));
        self.inputs.insert(path.display().to_string(), json!(digest));
        String::from_utf8(bytes)
            .map_err(|_| Error::invalid(format!("{} is not valid UTF-8", path.display())))
    }

    fn param(&mut self, key: &str, value: impl Into<Value>) {
        self.parameters.insert(key.to_string(), value.into());
    }

    fn metric(&mut self, key: &str, value: impl Into<Value>) {
        self.metrics.insert(key.to_string(), value.into());
    }

    fn to_json(&self, outcome: &str, wall_ms: Option<u128>) -> Value {
        let mut metrics = self.metrics.clone();
        if let Some(ms) = wall_ms {
            metrics.insert("wall_ms".to_string(), json!(ms));
        }
        json!({
            "schema": 1,
            "tool": {"name": "sepcube", "version": env!("CARGO_PKG_VERSION")},
            "command": self.command,
            "inputs": Value::Object(self.inputs.clone()),
            "parameters": Value::Object(self.parameters.clone()),
            "outcome": outcome,
            "metrics": Value::Object(metrics),
            "result": self.result.clone(),
        })
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::ResourceCap { .. } | Error::DimensionCap { .. } => EXIT_CAP,
        _ => EXIT_USAGE,
    }
}

fn main() {
    let cli = Cli::parse();
    let started = Instant::now();
    let (mut report, outcome) = dispatch(&cli.command);
    let wall = cli.timing.then(|| started.elapsed().as_millis());
    match outcome {
        Ok((code, human)) => {
            let verdict = if code == EXIT_PASS { "pass" } else { "fail" };
            if cli.json {
                println!("{}", report.to_json(verdict, wall));
            } else {
                println!("{human}");
            }
            std::process::exit(code);
        }
        Err(e) => {
            if cli.json {
                report.result = json!({"error": e.to_string()});
                println!("{}", report.to_json("error", wall));
            } else {
                eprintln!("error: {e}");
            }
            std::process::exit(exit_code_for(&e));
        }
    }
}

type CmdResult = sepcube::Result<(i32, String)>;

fn dispatch(command: &Command) -> (Report, CmdResult) {
    match command {
        Command::Construct(args) => {
            let mut r = Report::new("construct");
            let out = cmd_construct(args, &mut r);
            (r, out)
        }
        Command::Verify(args) => {
            let mut r = Report::new("verify");
            let out = cmd_verify(args, &mut r);
            (r, out)
        }
        Command::Project(args) => {
            let mut r = Report::new("project");
            let out = cmd_project(args, &mut r);
            (r, out)
        }
        Command::CheckContain(args) => {
            let mut r = Report::new("check-contain");
            let out = cmd_check_contain(args, &mut r);
            (r, out)
        }
        Command::Matrix(args) => {
            let mut r = Report::new("matrix");
            let out = cmd_matrix(args, &mut r);
            (r, out)
        }
        Command::Decompose(args) => {
            let mut r = Report::new("decompose");
            let out = cmd_decompose(args, &mut r);
            (r, out)
        }
        Command::VerifyDecomp(args) => {
            let mut r = Report::new("verify-decomp");
            let out = cmd_verify_decomp(args, &mut r);
            (r, out)
        }
        Command::Suite(args) => {
            let mut r = Report::new("suite");
            let out = cmd_suite(args, &mut r);
            (r, out)
        }
    }
}

fn kind_name(kind: ConstructKind) -> &'static str {
    match kind {
        ConstructKind::Hamming => "hamming",
        ConstructKind::Edge => "edge",
        ConstructKind::Halfsquare => "halfsquare",
        ConstructKind::Qg => "qg",
        ConstructKind::Rpg => "rpg",
    }
}

fn record_polytope_metrics(report: &mut Report, p: &HPolytope) {
    report.metric("dimension", p.dim());
    report.metric("inequalities", p.num_inequalities());
    report.metric("equalities", p.num_equalities());
}

fn cmd_construct(args: &ConstructArgs, report: &mut Report) -> CmdResult {
    let kind = kind_name(args.kind);
    report.param("kind", kind);
    report.param("out", args.out.display().to_string());

    let needs_set = matches!(
        args.kind,
        ConstructKind::Hamming | ConstructKind::Edge | ConstructKind::Halfsquare
    );
    if needs_set {
        if args.graph.is_some() {
            return Err(Error::invalid(format!("--kind {kind} takes --set, not --graph")));
        }
        let path = args
            .set
            .as_ref()
            .ok_or_else(|| Error::invalid(format!("--kind {kind} requires --set")))?;
        let a = read_bool_set(&report.load(path)?)?;
        report.metric("target_dimension", a.dim());
        report.metric("target_points", a.cardinality());
        let human = match args.kind {
            ConstructKind::Halfsquare => {
                let ef = halfsquare_separator(&a)?;
                record_polytope_metrics(report, ef.polytope());
                report.metric("lift_dimension", ef.polytope().dim());
                report.metric("dimension", ef.target_dim());
                fs::write(&args.out, write_ef(&ef))?;
                format!(
                    "wrote {}: lifted formulation, {} inequalities over {} lifted coordinates",
                    args.out.display(),
                    ef.polytope().num_inequalities(),
                    ef.polytope().dim()
                )
            }
            kind2 => {
                let p = match kind2 {
                    ConstructKind::Hamming => hamming_separator(&a)?,
                    _ => edge_polytope(&a)?,
                };
                record_polytope_metrics(report, &p);
                fs::write(&args.out, write_hpolytope(&p))?;
                format!(
                    "wrote {}: {} inequalities, {} equalities, dimension {}",
                    args.out.display(),
                    p.num_inequalities(),
                    p.num_equalities(),
                    p.dim()
                )
            }
        };
        return Ok((EXIT_PASS, human));
    }

    if args.set.is_some() {
        return Err(Error::invalid(format!("--kind {kind} takes --graph, not --set")));
    }
    let path = args
        .graph
        .as_ref()
        .ok_or_else(|| Error::invalid(format!("--kind {kind} requires --graph")))?;
    let g = read_graph(&report.load(path)?)?;
    report.metric("vertices", g.nv());
    report.metric("edges", g.ne());
    let p = match args.kind {
        ConstructKind::Qg => pairwise_polytope(&g)?,
        _ => edge_hull_relaxation(&g)?,
    };
    record_polytope_metrics(report, &p);
    fs::write(&args.out, write_hpolytope(&p))?;
    Ok((
        EXIT_PASS,
        format!(
            "wrote {}: {} inequalities, {} equalities, dimension {}",
            args.out.display(),
            p.num_inequalities(),
            p.num_equalities(),
            p.dim()
        ),
    ))
}

const MISMATCHES_IN_REPORT: usize = 16;

fn separation_json(rep: &SeparationReport) -> Value {
    let mismatches: Vec<Value> = rep
        .mismatches
        .iter()
        .take(MISMATCHES_IN_REPORT)
        .map(|m| {
            json!({
                "point": m.point.to_string(),
                "expected": match m.expected {
                    sepcube::construct::Expectation::In => "in",
                    sepcube::construct::Expectation::Out => "out",
                },
            })
        })
        .collect();
    json!({
        "passed": rep.passed,
        "method": rep.method.to_string(),
        "target_points": rep.target.cardinality(),
        "computed_points": rep.computed.cardinality(),
        "mismatch_count": rep.mismatches.len(),
        "mismatches": mismatches,
    })
}

fn separation_human(rep: &SeparationReport) -> String {
    if rep.passed {
        format!(
            "PASS ({}): computed set matches the target ({} points)",
            rep.method,
            rep.target.cardinality()
        )
    } else {
        let first = &rep.mismatches[0];
        format!(
            "FAIL ({}): {} mismatches; first: {} expected {}",
            rep.method,
            rep.mismatches.len(),
            first.point,
            match first.expected {
                sepcube::construct::Expectation::In => "inside",
                sepcube::construct::Expectation::Out => "outside",
            }
        )
    }
}

fn cmd_verify(args: &VerifyArgs, report: &mut Report) -> CmdResult {
    report.param("threads", args.threads);
    report.param("cross_check", args.cross_check);
    if let Some(m) = args.method {
        report.param("method", format!("{m:?}").to_lowercase());
    }
    let a = read_bool_set(&report.load(&args.set)?)?;
    report.metric("target_dimension", a.dim());

    if let Some(poly_path) = &args.poly {
        if matches!(args.method, Some(Method::Lift) | Some(Method::Oracle)) {
            return Err(Error::invalid("--method lift/oracle applies to --ef, use direct"));
        }
        if args.cross_check {
            return Err(Error::invalid("--cross-check applies to --ef"));
        }
        let p = read_hpolytope(&report.load(poly_path)?)?;
        let rep = verify_separation_direct_threads(&p, &a, args.threads)?;
        report.metric("mismatches", rep.mismatches.len());
        report.result = separation_json(&rep);
        let code = if rep.passed { EXIT_PASS } else { EXIT_FAIL };
        return Ok((code, separation_human(&rep)));
    }

    let Some(ef_path) = &args.ef else {
        return Err(Error::invalid("verify requires --ef or --poly"));
    };
    let ef = read_ef(&report.load(ef_path)?)?;

    if args.cross_check {
        if ef.partition().is_none() {
            return Err(Error::invalid(
                "--cross-check needs a formulation with a coordinate partition",
            ));
        }
        let lift = verify_separation_ef_threads(&ef, &a, args.threads)?;
        let oracle = SeparationReport::compare(
            a.clone(),
            ef_boolean_points(&ef)?,
            VerifyMethod::FmOracle,
        )?;
        let agree = lift.computed == oracle.computed;
        let passed = lift.passed && oracle.passed && agree;
        report.metric("mismatches", lift.mismatches.len() + oracle.mismatches.len());
        report.result = json!({
            "agree": agree,
            "lift": separation_json(&lift),
            "oracle": separation_json(&oracle),
        });
        let human = format!(
            "cross-check: lift {}, oracle {}, verdicts {}",
            if lift.passed { "PASS" } else { "FAIL" },
            if oracle.passed { "PASS" } else { "FAIL" },
            if agree { "agree" } else { "DIVERGE" }
        );
        return Ok((if passed { EXIT_PASS } else { EXIT_FAIL }, human));
    }

    let rep = match args.method {
        Some(Method::Direct) => {
            return Err(Error::invalid("--method direct applies to --poly"));
        }
        Some(Method::Lift) => {
            if ef.partition().is_none() {
                return Err(Error::invalid(
                    "--method lift needs a formulation with a coordinate partition",
                ));
            }
            verify_separation_ef_threads(&ef, &a, args.threads)?
        }
        Some(Method::Oracle) => SeparationReport::compare(
            a.clone(),
            ef_boolean_points(&ef)?,
            VerifyMethod::FmOracle,
        )?,
        None => verify_separation_ef_threads(&ef, &a, args.threads)?,
    };
    report.metric("mismatches", rep.mismatches.len());
    report.result = separation_json(&rep);
    let code = if rep.passed { EXIT_PASS } else { EXIT_FAIL };
    Ok((code, separation_human(&rep)))
}

fn cmd_project(args: &ProjectArgs, report: &mut Report) -> CmdResult {
    report.param("onto", args.onto.clone());
    report.param("out", args.out.display().to_string());
    let p = read_hpolytope(&report.load(&args.poly)?)?;
    let mut coords = Vec::with_capacity(args.onto.len());
    for &c in &args.onto {
        if c == 0 || c > p.dim() {
            return Err(Error::invalid(format!(
                "--onto index {c} out of range 1..={}",
                p.dim()
            )));
        }
        coords.push(c - 1);
    }
    coords.sort_unstable();
    coords.dedup();
    if coords.len() != args.onto.len() {
        return Err(Error::invalid("--onto indices must be distinct"));
    }
    let proj = project_onto(&p, &coords)?;
    report.metric("input_constraints", p.num_constraints());
    report.metric("output_constraints", proj.num_constraints());
    report.metric("output_dimension", proj.dim());
    fs::write(&args.out, write_hpolytope(&proj))?;
    Ok((
        EXIT_PASS,
        format!(
            "wrote {}: {} constraints over {} coordinates",
            args.out.display(),
            proj.num_constraints(),
            proj.dim()
        ),
    ))
}

fn cmd_check_contain(args: &CheckContainArgs, report: &mut Report) -> CmdResult {
    let inner = read_hpolytope(&report.load(&args.inner)?)?;
    let outer = read_hpolytope(&report.load(&args.outer)?)?;
    report.metric("inner_constraints", inner.num_constraints());
    report.metric("outer_constraints", outer.num_constraints());
    let contained = is_contained(&inner, &outer)?;
    report.result = json!({ "contained": contained });
    if contained {
        Ok((EXIT_PASS, "CONTAINED".to_string()))
    } else {
        Ok((EXIT_FAIL, "NOT CONTAINED".to_string()))
    }
}

fn cmd_matrix(args: &MatrixArgs, report: &mut Report) -> CmdResult {
    let kind = match args.kind {
        MatrixKind::Ene => "ene",
        MatrixKind::Eis => "eis",
    };
    let format = match args.format {
        FormatArg::Dense => MatrixFormat::Dense,
        FormatArg::Sparse => MatrixFormat::Sparse,
    };
    report.param("kind", kind);
    report.param("format", format!("{:?}", args.format).to_lowercase());
    report.param("out", args.out.display().to_string());
    let g = read_graph(&report.load(&args.graph)?)?;
    let m = match args.kind {
        MatrixKind::Ene => ene_matrix(&g)?,
        MatrixKind::Eis => eis_matrix(&g, EIS_DEFAULT_CAP)?,
    };
    report.metric("rows", m.rows());
    report.metric("cols", m.cols());
    report.metric("ones", m.count_ones());
    fs::write(&args.out, write_matrix(&m, format))?;
    Ok((
        EXIT_PASS,
        format!(
            "wrote {}: {kind} matrix, {} rows x {} cols",
            args.out.display(),
            m.rows(),
            m.cols()
        ),
    ))
}

fn cmd_decompose(args: &DecomposeArgs, report: &mut Report) -> CmdResult {
    report.param("out", args.out.display().to_string());
    let g = read_graph(&report.load(&args.graph)?)?;
    let (d, strategy) = if g.left_size().is_some() {
        (ene_decompose_bipartite(&g)?, "bipartite")
    } else {
        (ene_decompose_general(&g)?, "general")
    };
    report.param("strategy", strategy);
    report.metric("rectangles", d.count());
    fs::write(&args.out, write_decomposition(&d))?;
    Ok((
        EXIT_PASS,
        format!(
            "wrote {}: {} rectangles ({strategy} families)",
            args.out.display(),
            d.count()
        ),
    ))
}

fn cmd_verify_decomp(args: &VerifyDecompArgs, report: &mut Report) -> CmdResult {
    let m = read_matrix(&report.load(&args.matrix)?)?;
    let d = read_decomposition(&report.load(&args.decomp)?)?;
    let verdict = verify_decomposition(&m, &d)?;
    report.metric("rectangles", verdict.rectangle_count);
    report.result = match &verdict.violation {
        None => json!({ "passed": true, "violation": Value::Null }),
        Some(v) => json!({
            "passed": false,
            "violation": {
                "kind": v.kind.to_string(),
                "row": v.row,
                "col": v.col,
                "row_label": v.row_label,
                "col_label": v.col_label,
            },
        }),
    };
    match &verdict.violation {
        None => Ok((
            EXIT_PASS,
            format!(
                "PASS: {} rectangles cover the 1-entries exactly",
                verdict.rectangle_count
            ),
        )),
        Some(v) => Ok((
            EXIT_FAIL,
            format!("FAIL: {} at ({}, {})", v.kind, v.row_label, v.col_label),
        )),
    }
}

fn opt_param(report: &mut Report, key: &str, value: Option<impl Into<Value>>) {
    match value {
        Some(v) => report.param(key, v),
        None => report.param(key, Value::Null),
    }
}

fn cmd_suite(args: &SuiteArgs, report: &mut Report) -> CmdResult {
    report.param("seed", args.seed);
    opt_param(report, "max_n", args.max_n);
    opt_param(report, "only", args.only.clone());
    opt_param(report, "n", args.n);
    report.param("exhaustive", args.exhaustive);
    report.param("threads", args.threads);
    let cfg = SuiteConfig {
        seed: args.seed,
        max_n: args.max_n,
        only: args.only.clone(),
        n: args.n,
        exhaustive: args.exhaustive,
        threads: args.threads,
    };
    let reports = run_suite(&cfg)?;
    let mut lines = Vec::new();
    let mut all_passed = true;
    let mut total_cases = 0usize;
    let mut failed_cases = 0usize;
    let mut results = Vec::new();
    for r in &reports {
        all_passed &= r.passed();
        total_cases += r.cases;
        failed_cases += r.failed_cases;
        let mut line = format!(
            "{}: {} ({} cases)",
            r.name,
            if r.passed() { "PASS" } else { "FAIL" },
            r.cases
        );
        if !r.passed() {
            line.push_str(&format!(", {} failed", r.failed_cases));
            for f in &r.failures {
                line.push_str(&format!("\n    {f}"));
            }
        }
        lines.push(line);
        results.push(json!({
            "name": r.name,
            "cases": r.cases,
            "failed_cases": r.failed_cases,
            "failures": r.failures,
        }));
    }
    report.metric("properties", reports.len());
    report.metric("cases", total_cases);
    report.metric("failed_cases", failed_cases);
    report.result = Value::Array(results);
    lines.push(format!("suite: {}", if all_passed { "PASS" } else { "FAIL" }));
    Ok((
        if all_passed { EXIT_PASS } else { EXIT_FAIL },
        lines.join("\n"),
    ))
}
