//! On-disk formats: the graph document, edge-length files, certificate
//! JSON, and the machine-readable report.
//!
//! Graph document:
//! ```text
//! graph <n> <m>
//! e <u> <v> [<num>/<den>]
//! ```
//! exactly `m` edge lines with 0-based vertex ids; an omitted weight means
//! `1/1`. Length files carry one `l <edge-id> <num>/<den>` line per edge;
//! edges not mentioned default to `1/1`.

use num_traits::Signed;
use serde::{Deserialize, Serialize};
use thiserror::Error;
use twcert_core::{Certificate, Cycle, Flavor, Graph, LengthFn, Rational, Violation};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph construction failed: {0}")]
    Graph(#[from] twcert_core::GraphError),
    #[error("length function invalid: {0}")]
    Metric(#[from] twcert_core::MetricError),
    #[error("certificate invalid: {0}")]
    Cycle(#[from] twcert_core::CycleRejection),
    #[error("certificate invalid: {0}")]
    Certificate(String),
    #[error("certificate JSON: {0}")]
    Json(#[from] serde_json::Error),
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

/// Parses a positive rational written as `num/den` (or a bare integer).
pub fn parse_positive_rational(s: &str, line: usize) -> Result<Rational, FormatError> {
    let r: Rational = s
        .parse()
        .map_err(|e| parse_err(line, format!("bad rational {s:?}: {e}")))?;
    if !r.is_positive() {
        return Err(parse_err(line, format!("rational {s} must be positive")));
    }
    Ok(r)
}

/// Canonical `num/den` rendering, denominator always explicit.
pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses a graph document. Inline edge weights, when present, are
/// returned alongside the graph.
pub fn parse_graph(text: &str) -> Result<(Graph, Option<LengthFn>), FormatError> {
    let mut lines = text.lines().enumerate();
    let (line_no, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| parse_err(0, "empty document"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 3 || tokens[0] != "graph" {
        return Err(parse_err(line_no + 1, "expected header `graph <n> <m>`"));
    }
    let n: usize = tokens[1]
        .parse()
        .map_err(|_| parse_err(line_no + 1, "bad vertex count"))?;
    let m: usize = tokens[2]
        .parse()
        .map_err(|_| parse_err(line_no + 1, "bad edge count"))?;

    let mut edges = Vec::with_capacity(m);
    let mut weights = Vec::with_capacity(m);
    let mut any_weight = false;
    for (line_no, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] != "e" || !(tokens.len() == 3 || tokens.len() == 4) {
            return Err(parse_err(line_no + 1, "expected `e <u> <v> [<num>/<den>]`"));
        }
        let u: usize = tokens[1]
            .parse()
            .map_err(|_| parse_err(line_no + 1, "bad vertex id"))?;
        let v: usize = tokens[2]
            .parse()
            .map_err(|_| parse_err(line_no + 1, "bad vertex id"))?;
        edges.push((u, v));
        if tokens.len() == 4 {
            any_weight = true;
            weights.push(parse_positive_rational(tokens[3], line_no + 1)?);
        } else {
            weights.push(twcert_core::rat(1, 1));
        }
    }
    if edges.len() != m {
        return Err(parse_err(
            0,
            format!("header promises {m} edges, found {}", edges.len()),
        ));
    }
    let graph = Graph::new(n, &edges)?;
    let lengths = if any_weight {
        Some(LengthFn::from_values(&graph, weights)?)
    } else {
        None
    };
    Ok((graph, lengths))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("graph {} {}\n", g.vertex_count(), g.edge_count());
    for e in 0..g.edge_count() {
        let (u, v) = g.endpoints(e);
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

/// Parses a length file against a known graph; unmentioned edges default
/// to length 1.
pub fn parse_lengths(text: &str, g: &Graph) -> Result<LengthFn, FormatError> {
    let mut values = vec![twcert_core::rat(1, 1); g.edge_count()];
    let mut seen = vec![false; g.edge_count()];
    for (line_no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 3 || tokens[0] != "l" {
            return Err(parse_err(line_no + 1, "expected `l <edge-id> <num>/<den>`"));
        }
        let e: usize = tokens[1]
            .parse()
            .map_err(|_| parse_err(line_no + 1, "bad edge id"))?;
        if e >= g.edge_count() {
            return Err(parse_err(line_no + 1, format!("edge id {e} out of range")));
        }
        if seen[e] {
            return Err(parse_err(
                line_no + 1,
                format!("duplicate length for edge {e}"),
            ));
        }
        seen[e] = true;
        values[e] = parse_positive_rational(tokens[2], line_no + 1)?;
    }
    Ok(LengthFn::from_values(g, values)?)
}

pub fn write_lengths(l: &LengthFn) -> String {
    let mut out = String::new();
    for (e, v) in l.values().iter().enumerate() {
        out.push_str(&format!("l {e} {}\n", rational_to_string(v)));
    }
    out
}

/// JSON shape of a certificate. Cycles are closed walks written without
/// the repeated final vertex.
#[derive(Debug, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub flavor: String,
    pub cycle: Vec<usize>,
    pub generators: Vec<Vec<usize>>,
    pub bound: String,
}

impl CertificateDoc {
    pub fn from_certificate(cert: &Certificate) -> CertificateDoc {
        CertificateDoc {
            flavor: cert.flavor().as_str().to_string(),
            cycle: cert.cycle().vertex_order().to_vec(),
            generators: cert
                .generators()
                .iter()
                .map(|c| c.vertex_order().to_vec())
                .collect(),
            bound: rational_to_string(cert.bound()),
        }
    }

    pub fn into_certificate(self, g: &Graph) -> Result<Certificate, FormatError> {
        let flavor = Flavor::parse(&self.flavor)
            .ok_or_else(|| FormatError::Certificate(format!("unknown flavor {:?}", self.flavor)))?;
        let cycle = Cycle::from_vertex_sequence(g, &self.cycle)?;
        let generators = self
            .generators
            .iter()
            .map(|seq| Cycle::from_vertex_sequence(g, seq))
            .collect::<Result<Vec<_>, _>>()?;
        let bound = parse_positive_rational(&self.bound, 0)?;
        Certificate::new(cycle, generators, bound, flavor)
            .map_err(|e| FormatError::Certificate(e.to_string()))
    }
}

pub fn parse_certificate(text: &str, g: &Graph) -> Result<Certificate, FormatError> {
    let doc: CertificateDoc = serde_json::from_str(text)?;
    doc.into_certificate(g)
}

pub fn write_certificate(cert: &Certificate) -> String {
    let mut s = serde_json::to_string_pretty(&CertificateDoc::from_certificate(cert))
        .expect("certificate serializes");
    s.push('\n');
    s
}

/// One failed premise in a report.
#[derive(Debug, Serialize)]
pub struct ViolationDoc {
    pub premise: String,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
}

impl ViolationDoc {
    pub fn from_violation(v: &Violation) -> ViolationDoc {
        let (detail, witness) = match v {
            Violation::SumMismatch { residue } => (
                "the generators do not sum to the cycle".to_string(),
                Some(serde_json::json!({
                    "residue_edges": residue.iter().collect::<Vec<_>>(),
                })),
            ),
            Violation::GeneratorTooLong { index, length } => (
                format!("generator {index} exceeds the bound"),
                Some(serde_json::json!({
                    "generator": index,
                    "length": rational_to_string(length),
                })),
            ),
            Violation::NotGeodesic(w) => (
                "the cycle is not geodesic".to_string(),
                Some(serde_json::json!({
                    "pair": [w.a, w.b],
                    "arc_length": rational_to_string(&w.arc_length),
                    "distance": rational_to_string(&w.distance),
                })),
            ),
            Violation::BasisOutsideSpan { cycle } => (
                "a basis cycle lies outside the span of the short cycles".to_string(),
                Some(serde_json::json!({
                    "basis_cycle_edges": cycle.iter().collect::<Vec<_>>(),
                })),
            ),
        };
        ViolationDoc {
            premise: v.premise().to_string(),
            detail,
            witness,
        }
    }
}

/// The machine-readable result of any subcommand. Reports are
/// byte-deterministic for fixed inputs and budgets; timing is only
/// included on request.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: InputsDigest,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub treewidth: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle_length: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separator: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateDoc>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub violations: Vec<ViolationDoc>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub files: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

#[derive(Debug, Serialize)]
pub struct InputsDigest {
    pub digest: String,
}

impl Report {
    pub fn new(command: &str, digest: String, verdict: &str) -> Report {
        Report {
            command: command.to_string(),
            inputs: InputsDigest { digest },
            verdict: verdict.to_string(),
            k: None,
            treewidth: None,
            cycle_length: None,
            separator: None,
            counterexample: None,
            certificate: None,
            violations: Vec::new(),
            files: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
