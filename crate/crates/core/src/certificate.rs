//! Certificates for tree-width lower bounds: the data model, full premise
//! verification for all three flavors, the subdivision reduction from
//! rational to unit lengths, and a best-effort certificate search.
//!
//! A verified certificate witnesses that the graph contains a geodesic
//! cycle `C` which is the GF(2) sum of generator cycles of length at most
//! the bound `r`; the resulting tree-width lower bound is
//! `k = ⌊ℓ(C) / 2r⌋` (rational flavor), `k = ⌊|C| / 4⌊p/2⌋⌋` (unit
//! flavor), or `k = ⌊|C| / p⌋` (whole-cycle-space flavor).

use crate::graph::{
    decompose_in_span, f2_sum, fundamental_cycle_basis, Cycle, EdgeSet, Gf2Basis, Graph, GraphError,
};
use crate::metric::{
    enumerate_cycles_up_to, geodesic_violation, geodesic_violation_with_matrix, subgraph_length,
    DistanceMatrix, GeodesicWitness, LengthFn, MetricError, Rational,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;
use thiserror::Error;

/// Which verification contract a certificate claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    /// Rational length function, generator bound `r` is a rational length.
    RationalGeodesic,
    /// Unit lengths, generator bound `p` is an edge count.
    UnitPrecise,
    /// Unit lengths; the whole cycle space must be generated by cycles of
    /// at most `p` edges. Explicit generators are not required.
    CycleSpace,
}

impl Flavor {
    pub fn as_str(&self) -> &'static str {
        match self {
            Flavor::RationalGeodesic => "rational-geodesic",
            Flavor::UnitPrecise => "unit-precise",
            Flavor::CycleSpace => "cyclespace",
        }
    }

    pub fn parse(s: &str) -> Option<Flavor> {
        match s {
            "rational-geodesic" => Some(Flavor::RationalGeodesic),
            "unit-precise" => Some(Flavor::UnitPrecise),
            "cyclespace" => Some(Flavor::CycleSpace),
            _ => None,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A claimed certificate: a cycle, a generating multiset of cycles, and a
/// length bound. Duplicate generators are permitted and cancel mod 2 in
/// the sum check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    cycle: Cycle,
    generators: Vec<Cycle>,
    bound: Rational,
    flavor: Flavor,
}

#[derive(Debug, Error)]
pub enum CertificateError {
    #[error("bound must be positive")]
    NonPositiveBound,
    #[error("bound must be an integer for the {0} flavor")]
    NonIntegerBound(Flavor),
    #[error("a certificate for a nonempty cycle needs at least one generator")]
    NoGenerators,
    #[error("expected a {expected} certificate, got {got}")]
    FlavorMismatch { expected: Flavor, got: Flavor },
    #[error("certificate premises violated")]
    Rejected(Vec<Violation>),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error("edge {edge} would subdivide into {count} edges, which is not a positive integer")]
    BadSubdivisionCount { edge: usize, count: String },
    #[error("subdivision count for edge {edge} does not fit in memory")]
    SubdivisionTooLarge { edge: usize },
}

/// A failed certificate premise together with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The generators do not sum to the cycle; carries the nonzero
    /// residue `⊕generators ⊕ C`.
    SumMismatch { residue: EdgeSet },
    /// Some generator exceeds the bound; the first offender is reported.
    GeneratorTooLong { index: usize, length: Rational },
    /// The cycle is not geodesic.
    NotGeodesic(GeodesicWitness),
    /// A fundamental cycle outside the span of the short cycles
    /// (cycle-space flavor only).
    BasisOutsideSpan { cycle: EdgeSet },
}

impl Violation {
    /// Stable premise label, also the canonical report order.
    pub fn premise(&self) -> &'static str {
        match self {
            Violation::SumMismatch { .. } => "sum",
            Violation::GeneratorTooLong { .. } => "generator-length",
            Violation::BasisOutsideSpan { .. } => "span",
            Violation::NotGeodesic(_) => "geodesic",
        }
    }
}

impl Certificate {
    pub fn new(
        cycle: Cycle,
        generators: Vec<Cycle>,
        bound: Rational,
        flavor: Flavor,
    ) -> Result<Certificate, CertificateError> {
        if !bound.is_positive() {
            return Err(CertificateError::NonPositiveBound);
        }
        if matches!(flavor, Flavor::UnitPrecise | Flavor::CycleSpace) && !bound.is_integer() {
            return Err(CertificateError::NonIntegerBound(flavor));
        }
        if generators.is_empty() && flavor != Flavor::CycleSpace {
            return Err(CertificateError::NoGenerators);
        }
        Ok(Certificate {
            cycle,
            generators,
            bound,
            flavor,
        })
    }

    pub fn cycle(&self) -> &Cycle {
        &self.cycle
    }

    pub fn generators(&self) -> &[Cycle] {
        &self.generators
    }

    pub fn bound(&self) -> &Rational {
        &self.bound
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Integer value of the bound, for the unit and cycle-space flavors.
    pub fn bound_as_integer(&self) -> Option<u64> {
        if self.bound.is_integer() {
            self.bound.to_integer().to_u64()
        } else {
            None
        }
    }
}

/// The outcome of a successful verification; constructible only through
/// the verify functions.
#[derive(Debug, Clone)]
pub struct VerifiedCertificate {
    certificate: Certificate,
    cycle_length: Rational,
    max_generator_length: Rational,
    lower_bound: u64,
}

impl VerifiedCertificate {
    pub fn certificate(&self) -> &Certificate {
        &self.certificate
    }

    pub fn cycle_length(&self) -> &Rational {
        &self.cycle_length
    }

    pub fn max_generator_length(&self) -> &Rational {
        &self.max_generator_length
    }

    /// The certified tree-width lower bound `k`.
    pub fn lower_bound(&self) -> u64 {
        self.lower_bound
    }
}

fn floor_ratio_to_u64(r: &Rational) -> u64 {
    r.floor()
        .to_integer()
        .to_u64()
        .expect("lower bound fits in u64 at desk scale")
}

/// Verifies a rational-geodesic certificate: (a) the generators sum to
/// the cycle, (b) every generator has length at most the bound, (c) the
/// cycle is geodesic. All three checks always run, so a rejection reports
/// every failed premise; the violation list is ordered by premise label.
pub fn verify_certificate(
    g: &Graph,
    l: &LengthFn,
    cert: &Certificate,
) -> Result<VerifiedCertificate, CertificateError> {
    if cert.flavor != Flavor::RationalGeodesic {
        return Err(CertificateError::FlavorMismatch {
            expected: Flavor::RationalGeodesic,
            got: cert.flavor,
        });
    }
    let mut violations = Vec::new();

    let sum = f2_sum(g, cert.generators.iter().map(|c| c.edge_set()))?;
    if &sum != cert.cycle.edge_set() {
        let residue = sum.symmetric_difference(cert.cycle.edge_set())?;
        violations.push(Violation::SumMismatch { residue });
    }

    let mut max_generator_length = Rational::zero();
    let mut too_long: Option<Violation> = None;
    for (index, d) in cert.generators.iter().enumerate() {
        let length = subgraph_length(l, d.edge_set());
        if length > cert.bound && too_long.is_none() {
            too_long = Some(Violation::GeneratorTooLong {
                index,
                length: length.clone(),
            });
        }
        if length > max_generator_length {
            max_generator_length = length;
        }
    }
    if let Some(v) = too_long {
        violations.push(v);
    }

    if let Some(witness) = geodesic_violation(g, l, &cert.cycle) {
        violations.push(Violation::NotGeodesic(witness));
    }

    if !violations.is_empty() {
        return Err(CertificateError::Rejected(violations));
    }
    let cycle_length = subgraph_length(l, cert.cycle.edge_set());
    let k = floor_ratio_to_u64(&(&cycle_length / (rational_two() * &cert.bound)));
    Ok(VerifiedCertificate {
        certificate: cert.clone(),
        cycle_length,
        max_generator_length,
        lower_bound: k,
    })
}

fn rational_two() -> Rational {
    Rational::from_integer(BigInt::from(2))
}

/// Verifies a unit-length certificate and extracts
/// `k = ⌊|C| / 4⌊p/2⌋⌋`. Lengths are edge counts throughout.
pub fn lower_bound_unit(
    g: &Graph,
    cert: &Certificate,
) -> Result<VerifiedCertificate, CertificateError> {
    if cert.flavor != Flavor::UnitPrecise {
        return Err(CertificateError::FlavorMismatch {
            expected: Flavor::UnitPrecise,
            got: cert.flavor,
        });
    }
    let p = cert
        .bound_as_integer()
        .ok_or(CertificateError::NonIntegerBound(Flavor::UnitPrecise))?;
    let mut violations = Vec::new();

    let sum = f2_sum(g, cert.generators.iter().map(|c| c.edge_set()))?;
    if &sum != cert.cycle.edge_set() {
        let residue = sum.symmetric_difference(cert.cycle.edge_set())?;
        violations.push(Violation::SumMismatch { residue });
    }

    let mut max_generator = 0usize;
    let mut too_long: Option<Violation> = None;
    for (index, d) in cert.generators.iter().enumerate() {
        let edges = d.len();
        if edges as u64 > p && too_long.is_none() {
            too_long = Some(Violation::GeneratorTooLong {
                index,
                length: Rational::from_integer(BigInt::from(edges)),
            });
        }
        max_generator = max_generator.max(edges);
    }
    if let Some(v) = too_long {
        violations.push(v);
    }

    let unit = LengthFn::unit(g);
    if let Some(witness) = geodesic_violation(g, &unit, &cert.cycle) {
        violations.push(Violation::NotGeodesic(witness));
    }

    if !violations.is_empty() {
        return Err(CertificateError::Rejected(violations));
    }
    // p >= 2 here: cycles have >= 3 edges, so p = 1 cannot pass the
    // generator length check with a nonempty generator list
    let denom = 4 * (p / 2);
    debug_assert!(denom > 0);
    let k = cert.cycle.len() as u64 / denom;
    Ok(VerifiedCertificate {
        certificate: cert.clone(),
        cycle_length: Rational::from_integer(BigInt::from(cert.cycle.len())),
        max_generator_length: Rational::from_integer(BigInt::from(max_generator)),
        lower_bound: k,
    })
}

/// Result of a whole-cycle-space verification.
#[derive(Debug, Clone)]
pub struct CycleSpaceVerification {
    pub cycle_edges: usize,
    pub short_cycle_count: usize,
    pub basis_rank: usize,
    pub lower_bound: u64,
}

/// Verifies the whole-cycle-space flavor: a fundamental cycle basis from a
/// spanning forest must lie in the span of all cycles with at most `p`
/// edges, and the given cycle must be geodesic under unit lengths. On
/// success returns `k = ⌊|C| / p⌋`.
pub fn verify_cyclespace_certificate(
    g: &Graph,
    c: &Cycle,
    p: u64,
    budget: u64,
) -> Result<CycleSpaceVerification, CertificateError> {
    if p == 0 {
        return Err(CertificateError::NonPositiveBound);
    }
    let unit = LengthFn::unit(g);
    let bound = Rational::from_integer(BigInt::from(p));
    let short = enumerate_cycles_up_to(g, &unit, &bound, budget)?;
    let mut span = Gf2Basis::new(g.edge_count(), short.len());
    for s in &short {
        span.insert(s.edge_set());
    }

    let mut violations = Vec::new();
    for basis_cycle in fundamental_cycle_basis(g) {
        if !span.contains(basis_cycle.edge_set()) {
            violations.push(Violation::BasisOutsideSpan {
                cycle: basis_cycle.edge_set().clone(),
            });
            break;
        }
    }
    if let Some(witness) = geodesic_violation(g, &unit, c) {
        violations.push(Violation::NotGeodesic(witness));
    }
    if !violations.is_empty() {
        return Err(CertificateError::Rejected(violations));
    }
    Ok(CycleSpaceVerification {
        cycle_edges: c.len(),
        short_cycle_count: short.len(),
        basis_rank: span.rank(),
        lower_bound: c.len() as u64 / p,
    })
}

/// Smallest positive integer `M` such that `M·r` and every `M·ℓ(e)` are
/// integers: the lcm of all denominators.
pub fn scale_factor(l: &LengthFn, r: &Rational) -> BigInt {
    let mut m = r.denom().clone();
    for v in l.values() {
        m = m.lcm(v.denom());
    }
    m
}

/// An edge subdivision with bookkeeping: every original edge maps to the
/// ordered path of new edge ids that replaced it.
#[derive(Debug, Clone)]
pub struct SubdivisionMap {
    subdivided: Graph,
    edge_paths: Vec<Vec<usize>>,
    counts: Vec<usize>,
    original_vertices: usize,
}

impl SubdivisionMap {
    /// Replaces edge `e` by a path of `counts[e]` edges. Original vertex
    /// ids are preserved; interior path vertices and path edges are
    /// numbered in original edge order, so an all-ones count vector
    /// reproduces the graph with identical ids.
    pub fn by_counts(g: &Graph, counts: &[usize]) -> Result<SubdivisionMap, CertificateError> {
        assert_eq!(counts.len(), g.edge_count());
        for (edge, &c) in counts.iter().enumerate() {
            if c == 0 {
                return Err(CertificateError::BadSubdivisionCount {
                    edge,
                    count: "0".into(),
                });
            }
        }
        let extra: usize = counts.iter().map(|&c| c - 1).sum();
        let mut edges = Vec::with_capacity(counts.iter().sum());
        let mut edge_paths = Vec::with_capacity(g.edge_count());
        let mut next_vertex = g.vertex_count();
        for (e, &count) in counts.iter().enumerate() {
            let (u, v) = g.endpoints(e);
            let mut path = Vec::with_capacity(count);
            let mut prev = u;
            for _ in 0..count - 1 {
                path.push(edges.len());
                edges.push((prev, next_vertex));
                prev = next_vertex;
                next_vertex += 1;
            }
            path.push(edges.len());
            edges.push((prev, v));
            edge_paths.push(path);
        }
        let subdivided = Graph::new(g.vertex_count() + extra, &edges)
            .expect("subdividing a simple graph stays simple");
        Ok(SubdivisionMap {
            subdivided,
            edge_paths,
            counts: counts.to_vec(),
            original_vertices: g.vertex_count(),
        })
    }

    pub fn subdivided(&self) -> &Graph {
        &self.subdivided
    }

    /// New edge ids replacing original edge `e`, in path order.
    pub fn path(&self, e: usize) -> &[usize] {
        &self.edge_paths[e]
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn original_vertex_count(&self) -> usize {
        self.original_vertices
    }

    /// Lifts an edge set of the original graph to the subdivision. Paths
    /// of distinct edges are disjoint, so lifting commutes with GF(2)
    /// sums, and `|lift(S)| = Σ_{e∈S} counts[e]`.
    pub fn lift(&self, s: &EdgeSet) -> EdgeSet {
        let mut out = self.subdivided.empty_edge_set();
        for e in s.iter() {
            for &ne in &self.edge_paths[e] {
                out.insert(ne);
            }
        }
        out
    }

    /// Lifts a cycle of the original graph; the lift of a cycle is again a
    /// cycle.
    pub fn lift_cycle(&self, g: &Graph, c: &Cycle) -> Cycle {
        let _ = g;
        Cycle::from_edge_set(&self.subdivided, &self.lift(c.edge_set()))
            .expect("lift of a cycle is a cycle")
    }
}

/// Subdivides every edge `e` into a path of `M·ℓ(e)` edges; all the
/// products must be integral.
pub fn subdivide(g: &Graph, l: &LengthFn, m: &BigInt) -> Result<SubdivisionMap, CertificateError> {
    assert_eq!(l.edge_count(), g.edge_count());
    let m_ratio = Rational::from_integer(m.clone());
    let mut counts = Vec::with_capacity(g.edge_count());
    for (edge, v) in l.values().iter().enumerate() {
        let scaled = &m_ratio * v;
        if !scaled.is_integer() || !scaled.is_positive() {
            return Err(CertificateError::BadSubdivisionCount {
                edge,
                count: scaled.to_string(),
            });
        }
        let count = scaled
            .to_integer()
            .to_usize()
            .ok_or(CertificateError::SubdivisionTooLarge { edge })?;
        counts.push(count);
    }
    SubdivisionMap::by_counts(g, counts.as_slice())
}

/// Best-effort search for a rational-geodesic certificate at bound `r`:
/// enumerates the cycles of length at most `r`, takes their GF(2) span,
/// and returns the longest geodesic cycle inside that span together with
/// its decomposition. Returns `None` when no such cycle exists.
pub fn search_certificate(
    g: &Graph,
    l: &LengthFn,
    r: &Rational,
    budget: u64,
) -> Result<Option<Certificate>, CertificateError> {
    let short = enumerate_cycles_up_to(g, l, r, budget)?;
    if short.is_empty() {
        return Ok(None);
    }
    let short_sets: Vec<EdgeSet> = short.iter().map(|c| c.edge_set().clone()).collect();
    let mut span = Gf2Basis::new(g.edge_count(), short_sets.len());
    for s in &short_sets {
        span.insert(s);
    }

    let matrix = DistanceMatrix::new(g, l);
    // a geodesic cycle splits at a near-antipodal vertex pair into two
    // arcs of length at most diameter + max edge, bounding its length
    let candidate_bound = match (matrix.diameter(), l.max_value()) {
        (Some(diam), Some(max_edge)) => (rational_two() * diam + max_edge).min(l.total()),
        _ => l.total(),
    };
    if !candidate_bound.is_positive() {
        return Ok(None);
    }
    let mut candidates = enumerate_cycles_up_to(g, l, &candidate_bound, budget)?;
    let mut keyed: Vec<(Rational, usize)> = candidates
        .iter()
        .enumerate()
        .map(|(i, c)| (subgraph_length(l, c.edge_set()), i))
        .collect();
    // longest first; enumeration index breaks ties deterministically
    keyed.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

    for (_, idx) in keyed {
        let cand = &candidates[idx];
        if !span.contains(cand.edge_set()) {
            continue;
        }
        if geodesic_violation_with_matrix(g, &matrix, l, cand).is_some() {
            continue;
        }
        let indices = decompose_in_span(g, cand.edge_set(), &short_sets)?
            .expect("span membership was just checked");
        let generators: Vec<Cycle> = indices.iter().map(|&i| short[i].clone()).collect();
        let cycle = candidates.swap_remove(idx);
        let cert = Certificate::new(cycle, generators, r.clone(), Flavor::RationalGeodesic)?;
        return Ok(Some(cert));
    }
    Ok(None)
}

impl PartialOrd for Violation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Violation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        fn rank(v: &Violation) -> u8 {
            match v {
                Violation::SumMismatch { .. } => 0,
                Violation::GeneratorTooLong { .. } => 1,
                Violation::BasisOutsideSpan { .. } => 2,
                Violation::NotGeodesic(_) => 3,
            }
        }
        rank(self).cmp(&rank(other))
    }
}
