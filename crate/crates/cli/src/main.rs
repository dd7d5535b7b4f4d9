//! Command-line front end: generate the example families, verify
//! certificates, search for certificates, and run the desk-scale oracles.
//!
//! Exit codes: 0 verified/pass/found, 1 premise violation or negative
//! verdict, 2 parse or usage error, 3 budget or size limit exhausted.

mod formats;

use clap::{Args, Parser, Subcommand, ValueEnum};
use formats::{
    parse_certificate, parse_graph, parse_lengths, parse_positive_rational, rational_to_string,
    CertificateDoc, Report, ViolationDoc,
};
use sha2::{Digest, Sha256};
use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;
use twcert_core::{
    balanced_separator, check_half_coverage, exact_treewidth_with_limit, intro_grid_lengths,
    lower_bound_unit, make_grid, make_wheel, search_certificate, verify_certificate,
    verify_cyclespace_certificate, wall_certificate, Certificate, CertificateError,
    CoverageOutcome, Flavor, Graph, LengthFn, MetricError, SeparatorError, TreewidthError,
    VertexSet, DEFAULT_VERTEX_LIMIT, DEFAULT_WORK_BUDGET,
};

const EXIT_OK: u8 = 0;
const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_EXHAUSTED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "twcert",
    about = "Tree-width lower bounds from cycle-space certificates",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a certificate against a graph and report the implied bound.
    Verify(VerifyArgs),
    /// Generate a graph family with its canonical lengths and certificate.
    Gen(GenArgs),
    /// Run a brute-force oracle (exact tree-width, balanced separator,
    /// exhaustive coverage).
    Oracle(OracleArgs),
    /// Search for the best certificate at a given bound.
    Search(SearchArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Graph document (`-` for stdin).
    graph: String,
    /// Certificate JSON (`-` for stdin).
    certificate: String,
    /// Edge-length file overriding inline weights.
    #[arg(long)]
    length_file: Option<String>,
    /// Work budget for cycle enumeration, in extension steps.
    #[arg(long, default_value_t = DEFAULT_WORK_BUDGET)]
    work_budget: u64,
    /// Include wall-clock timing in the report (breaks byte determinism).
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Grid,
    Wheel,
    Wall,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LengthKind {
    /// 1 on the grid boundary, 2 elsewhere.
    Intro,
    /// Wall lengths: 1 per outer branch, 3 per inner branch, rescaled by
    /// 1/18.
    Corollary,
}

#[derive(Args)]
struct GenArgs {
    /// Family to generate.
    #[arg(value_enum)]
    kind: GenKind,
    /// Grid side, wheel rim size, or wall parameter.
    size: usize,
    /// Canonical length function to emit alongside the graph.
    #[arg(long, value_enum)]
    lengths: Option<LengthKind>,
    /// Output path prefix; defaults to `<kind><size>`.
    #[arg(long)]
    out: Option<String>,
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct OracleArgs {
    #[command(subcommand)]
    which: OracleCommand,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Exact tree-width by two cross-checked algorithms.
    Tw {
        graph: String,
        /// Vertex limit for the oracle.
        #[arg(long, default_value_t = DEFAULT_VERTEX_LIMIT)]
        oracle_limit: usize,
        #[arg(long)]
        timing: bool,
    },
    /// Lexicographically least balanced separator of order at most k.
    Separator {
        graph: String,
        #[arg(short)]
        k: usize,
        /// Target vertex set as a comma-separated id list; defaults to all
        /// vertices.
        #[arg(long)]
        set: Option<String>,
        #[arg(long, default_value_t = DEFAULT_WORK_BUDGET)]
        work_budget: u64,
        #[arg(long)]
        timing: bool,
    },
    /// Exhaustively check that every removal of at most k vertices leaves
    /// half the certificate cycle in one component.
    Precise {
        graph: String,
        certificate: String,
        #[arg(short)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_WORK_BUDGET)]
        work_budget: u64,
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Args)]
struct SearchArgs {
    /// Graph document (`-` for stdin).
    graph: String,
    /// Generator length bound, as `num/den` or a bare integer.
    #[arg(short)]
    r: String,
    #[arg(long)]
    length_file: Option<String>,
    #[arg(long, default_value_t = DEFAULT_WORK_BUDGET)]
    work_budget: u64,
    /// Also write the found certificate JSON to this path.
    #[arg(long)]
    out: Option<String>,
    #[arg(long)]
    timing: bool,
}

/// A command outcome that still prints a report.
struct Outcome {
    report: Report,
    code: u8,
}

/// A failure that aborts before a report makes sense.
enum Failure {
    Usage(String),
    Exhausted(String),
}

impl From<formats::FormatError> for Failure {
    fn from(e: formats::FormatError) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let result = match cli.command {
        Command::Verify(args) => cmd_verify(args, started),
        Command::Gen(args) => cmd_gen(args, started),
        Command::Oracle(args) => match args.which {
            OracleCommand::Tw {
                graph,
                oracle_limit,
                timing,
            } => cmd_oracle_tw(graph, oracle_limit, timing, started),
            OracleCommand::Separator {
                graph,
                k,
                set,
                work_budget,
                timing,
            } => cmd_oracle_separator(graph, k, set, work_budget, timing, started),
            OracleCommand::Precise {
                graph,
                certificate,
                k,
                work_budget,
                timing,
            } => cmd_oracle_precise(graph, certificate, k, work_budget, timing, started),
        },
        Command::Search(args) => cmd_search(args, started),
    };
    match result {
        Ok(outcome) => {
            print!("{}", outcome.report.render());
            ExitCode::from(outcome.code)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Exhausted(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_EXHAUSTED)
        }
    }
}

fn read_input(path: &str) -> Result<Vec<u8>, Failure> {
    if path == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))
    }
}

fn digest_of(parts: &[&[u8]]) -> String {
    let mut hasher = Sha256::new();
    for p in parts {
        hasher.update(p);
    }
    format!("sha256:{:x}", hasher.finalize())
}

fn finish(
    mut report: Report,
    code: u8,
    timing: bool,
    started: Instant,
) -> Result<Outcome, Failure> {
    if timing {
        report.timing_ms = Some(started.elapsed().as_millis());
    }
    Ok(Outcome { report, code })
}

/// Graph plus the effective length function: an explicit length file wins
/// over inline weights, which win over unit lengths.
fn load_graph_and_lengths(
    graph_path: &str,
    length_path: Option<&str>,
) -> Result<(Graph, LengthFn, Vec<Vec<u8>>), Failure> {
    let graph_bytes = read_input(graph_path)?;
    let text = String::from_utf8_lossy(&graph_bytes).into_owned();
    let (graph, inline) = parse_graph(&text)?;
    let mut raw = vec![graph_bytes];
    let lengths = match length_path {
        Some(p) => {
            let bytes = read_input(p)?;
            let l = parse_lengths(&String::from_utf8_lossy(&bytes), &graph)?;
            raw.push(bytes);
            l
        }
        None => inline.unwrap_or_else(|| LengthFn::unit(&graph)),
    };
    Ok((graph, lengths, raw))
}

fn cmd_verify(args: VerifyArgs, started: Instant) -> Result<Outcome, Failure> {
    let (graph, lengths, mut raw) =
        load_graph_and_lengths(&args.graph, args.length_file.as_deref())?;
    let cert_bytes = read_input(&args.certificate)?;
    let cert = parse_certificate(&String::from_utf8_lossy(&cert_bytes), &graph)?;
    raw.push(cert_bytes);
    let digest = digest_of(&raw.iter().map(|b| b.as_slice()).collect::<Vec<_>>());

    let verdict = match cert.flavor() {
        Flavor::RationalGeodesic => verify_certificate(&graph, &lengths, &cert)
            .map(|v| (v.lower_bound(), v.cycle_length().clone())),
        Flavor::UnitPrecise => {
            if !lengths.is_unit() {
                return Err(Failure::Usage(
                    "the unit-precise flavor requires unit lengths".into(),
                ));
            }
            lower_bound_unit(&graph, &cert).map(|v| (v.lower_bound(), v.cycle_length().clone()))
        }
        Flavor::CycleSpace => {
            if !lengths.is_unit() {
                return Err(Failure::Usage(
                    "the cyclespace flavor requires unit lengths".into(),
                ));
            }
            let p = cert.bound_as_integer().expect("validated at parse time");
            verify_cyclespace_certificate(&graph, cert.cycle(), p, args.work_budget)
                .map(|v| (v.lower_bound, twcert_core::rat(v.cycle_edges as i64, 1)))
        }
    };

    match verdict {
        Ok((k, cycle_length)) => {
            let mut report = Report::new("verify", digest, "verified");
            report.k = Some(k);
            report.cycle_length = Some(rational_to_string(&cycle_length));
            finish(report, EXIT_OK, args.timing, started)
        }
        Err(CertificateError::Rejected(mut violations)) => {
            violations.sort();
            let mut report = Report::new("verify", digest, "rejected");
            report.violations = violations
                .iter()
                .map(ViolationDoc::from_violation)
                .collect();
            finish(report, EXIT_VIOLATION, args.timing, started)
        }
        Err(CertificateError::Metric(MetricError::BudgetExhausted { budget })) => Err(
            Failure::Exhausted(format!("work budget of {budget} steps exhausted")),
        ),
        Err(e) => Err(Failure::Usage(e.to_string())),
    }
}

fn write_file(path: &str, contents: &str, files: &mut Vec<String>) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    files.push(path.to_string());
    Ok(())
}

fn cmd_gen(args: GenArgs, started: Instant) -> Result<Outcome, Failure> {
    let kind_name = match args.kind {
        GenKind::Grid => "grid",
        GenKind::Wheel => "wheel",
        GenKind::Wall => "wall",
    };
    let prefix = args
        .out
        .clone()
        .unwrap_or_else(|| format!("{kind_name}{}", args.size));
    let mut files = Vec::new();

    match (args.kind, args.lengths) {
        (GenKind::Grid, lengths) => {
            if lengths == Some(LengthKind::Corollary) {
                return Err(Failure::Usage(
                    "corollary lengths belong to walls; grids take --lengths intro".into(),
                ));
            }
            let grid = make_grid(args.size).map_err(|e| Failure::Usage(e.to_string()))?;
            write_file(
                &format!("{prefix}.graph"),
                &formats::write_graph(&grid.graph),
                &mut files,
            )?;
            if lengths == Some(LengthKind::Intro) {
                let l = intro_grid_lengths(&grid);
                write_file(
                    &format!("{prefix}.lengths"),
                    &formats::write_lengths(&l),
                    &mut files,
                )?;
            }
            let cert = Certificate::new(
                grid.outer_cycle().clone(),
                grid.faces().to_vec(),
                twcert_core::rat(8, 1),
                Flavor::RationalGeodesic,
            )
            .expect("grid certificate is well formed");
            write_file(
                &format!("{prefix}.cert.json"),
                &formats::write_certificate(&cert),
                &mut files,
            )?;
        }
        (GenKind::Wheel, None) => {
            let wheel = make_wheel(args.size).map_err(|e| Failure::Usage(e.to_string()))?;
            write_file(
                &format!("{prefix}.graph"),
                &formats::write_graph(&wheel.graph),
                &mut files,
            )?;
        }
        (GenKind::Wheel, Some(_)) => {
            return Err(Failure::Usage(
                "wheels have no canonical length function".into(),
            ));
        }
        (GenKind::Wall, lengths) => {
            if lengths == Some(LengthKind::Intro) {
                return Err(Failure::Usage(
                    "intro lengths belong to grids; walls take --lengths corollary".into(),
                ));
            }
            let wc =
                wall_certificate(args.size, None).map_err(|e| Failure::Usage(e.to_string()))?;
            write_file(
                &format!("{prefix}.graph"),
                &formats::write_graph(&wc.graph),
                &mut files,
            )?;
            if lengths == Some(LengthKind::Corollary) {
                write_file(
                    &format!("{prefix}.lengths"),
                    &formats::write_lengths(&wc.lengths),
                    &mut files,
                )?;
                write_file(
                    &format!("{prefix}.cert.json"),
                    &formats::write_certificate(&wc.certificate),
                    &mut files,
                )?;
            }
        }
    }

    let spec_line = format!(
        "gen {kind_name} {} {}",
        args.size,
        match args.lengths {
            None => "plain",
            Some(LengthKind::Intro) => "intro",
            Some(LengthKind::Corollary) => "corollary",
        }
    );
    let mut report = Report::new("gen", digest_of(&[spec_line.as_bytes()]), "ok");
    report.files = files;
    finish(report, EXIT_OK, args.timing, started)
}

fn cmd_oracle_tw(
    graph_path: String,
    oracle_limit: usize,
    timing: bool,
    started: Instant,
) -> Result<Outcome, Failure> {
    let graph_bytes = read_input(&graph_path)?;
    let (graph, _) = parse_graph(&String::from_utf8_lossy(&graph_bytes))?;
    let digest = digest_of(&[&graph_bytes]);
    match exact_treewidth_with_limit(&graph, oracle_limit) {
        Ok(tw) => {
            let mut report = Report::new("oracle tw", digest, "ok");
            report.treewidth = Some(tw);
            finish(report, EXIT_OK, timing, started)
        }
        Err(e @ TreewidthError::TooLarge { .. }) => Err(Failure::Exhausted(e.to_string())),
        Err(e) => Err(Failure::Usage(e.to_string())),
    }
}

fn parse_vertex_list(s: &str, graph: &Graph) -> Result<VertexSet, Failure> {
    let ids = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Usage(format!("bad vertex list: {e}")))?;
    VertexSet::from_vertices(graph, &ids).map_err(|e| Failure::Usage(e.to_string()))
}

fn cmd_oracle_separator(
    graph_path: String,
    k: usize,
    set: Option<String>,
    work_budget: u64,
    timing: bool,
    started: Instant,
) -> Result<Outcome, Failure> {
    let graph_bytes = read_input(&graph_path)?;
    let (graph, _) = parse_graph(&String::from_utf8_lossy(&graph_bytes))?;
    let digest = digest_of(&[&graph_bytes]);
    let target = match set {
        Some(s) => parse_vertex_list(&s, &graph)?,
        None => graph.full_vertex_set(),
    };
    match balanced_separator(&graph, &target, k, work_budget) {
        Ok(Some(x)) => {
            let mut report = Report::new("oracle separator", digest, "found");
            report.separator = Some(x.iter().collect());
            finish(report, EXIT_OK, timing, started)
        }
        Ok(None) => {
            let report = Report::new("oracle separator", digest, "none");
            finish(report, EXIT_VIOLATION, timing, started)
        }
        Err(SeparatorError::BudgetExhausted { budget }) => Err(Failure::Exhausted(format!(
            "search budget of {budget} exhausted"
        ))),
        Err(e) => Err(Failure::Usage(e.to_string())),
    }
}

fn cmd_oracle_precise(
    graph_path: String,
    certificate_path: String,
    k: usize,
    work_budget: u64,
    timing: bool,
    started: Instant,
) -> Result<Outcome, Failure> {
    let graph_bytes = read_input(&graph_path)?;
    let (graph, _) = parse_graph(&String::from_utf8_lossy(&graph_bytes))?;
    let cert_bytes = read_input(&certificate_path)?;
    let cert = parse_certificate(&String::from_utf8_lossy(&cert_bytes), &graph)?;
    let digest = digest_of(&[&graph_bytes, &cert_bytes]);
    match check_half_coverage(&graph, cert.cycle(), k, work_budget) {
        Ok(CoverageOutcome::Holds) => {
            let report = Report::new("oracle precise", digest, "pass");
            finish(report, EXIT_OK, timing, started)
        }
        Ok(CoverageOutcome::Counterexample(x)) => {
            let mut report = Report::new("oracle precise", digest, "counterexample");
            report.counterexample = Some(x.iter().collect());
            finish(report, EXIT_VIOLATION, timing, started)
        }
        Err(SeparatorError::BudgetExhausted { budget }) => Err(Failure::Exhausted(format!(
            "search budget of {budget} exhausted"
        ))),
        Err(e) => Err(Failure::Usage(e.to_string())),
    }
}

fn cmd_search(args: SearchArgs, started: Instant) -> Result<Outcome, Failure> {
    let (graph, lengths, raw) = load_graph_and_lengths(&args.graph, args.length_file.as_deref())?;
    let digest = digest_of(&raw.iter().map(|b| b.as_slice()).collect::<Vec<_>>());
    let r = parse_positive_rational(&args.r, 0).map_err(|e| Failure::Usage(e.to_string()))?;
    match search_certificate(&graph, &lengths, &r, args.work_budget) {
        Ok(Some(cert)) => {
            let doc = CertificateDoc::from_certificate(&cert);
            if let Some(path) = &args.out {
                let mut files = Vec::new();
                write_file(path, &formats::write_certificate(&cert), &mut files)?;
            }
            let verified =
                verify_certificate(&graph, &lengths, &cert).expect("searched certificates verify");
            let mut report = Report::new("search", digest, "found");
            report.k = Some(verified.lower_bound());
            report.cycle_length = Some(rational_to_string(verified.cycle_length()));
            report.certificate = Some(doc);
            finish(report, EXIT_OK, args.timing, started)
        }
        Ok(None) => {
            let report = Report::new("search", digest, "none");
            finish(report, EXIT_OK, args.timing, started)
        }
        Err(CertificateError::Metric(MetricError::BudgetExhausted { budget })) => Err(
            Failure::Exhausted(format!("work budget of {budget} steps exhausted")),
        ),
        Err(e) => Err(Failure::Usage(e.to_string())),
    }
}
