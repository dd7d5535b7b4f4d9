//! Certified tree-width lower bounds from cycle-space structure.
//!
//! A certificate consists of a geodesic cycle `C`, a multiset `𝒟` of
//! cycles with `C = ⊕𝒟` over GF(2), and a length bound on the members of
//! `𝒟`. This crate verifies such certificates under exact rational
//! arithmetic, extracts the implied lower bound, constructs the standard
//! example families (grids, wheels, walls), and ships desk-scale
//! brute-force oracles (exact tree-width, balanced separators, exhaustive
//! coverage checks) that every soundness claim is tested against.
//!
//! Module map:
//! - [`graph`]: graphs, GF(2) edge-set algebra, cycles, components.
//! - [`metric`]: rational length functions, shortest paths, geodecity.
//! - [`certificate`]: certificate model, verification, subdivision, search.
//! - [`separators`]: R-families, the witness/absorption dichotomy,
//!   separator oracles.
//! - [`treewidth`]: exact tree-width via two cross-checked algorithms.
//! - [`generators`]: grids, wheels, walls and their canonical certificates.
//! - [`corpus`]: seeded random instances for the test suites.

mod bits;

pub mod certificate;
pub mod corpus;
pub mod generators;
pub mod graph;
pub mod metric;
pub mod separators;
pub mod treewidth;

pub use certificate::{
    lower_bound_unit, scale_factor, search_certificate, subdivide, verify_certificate,
    verify_cyclespace_certificate, Certificate, CertificateError, CycleSpaceVerification, Flavor,
    SubdivisionMap, VerifiedCertificate, Violation,
};
pub use generators::{
    intro_grid_lengths, make_grid, make_wall, make_wheel, subdivide_edges, wall_certificate,
    GeneratorError, GridGraph, WallCertificate, WallGraph, WheelGraph,
};
pub use graph::{
    bfs_distances, components, decompose_in_span, f2_sum, fundamental_cycle_basis, spanning_forest,
    Cycle, CycleRejection, EdgeSet, Gf2Basis, Graph, GraphError, VertexSet,
};
pub use metric::{
    distance, distances_from, enumerate_cycles_up_to, geodesic_violation,
    geodesic_violation_algebraic, is_geodesic_algebraic, is_geodesic_cycle, rat, subgraph_length,
    DistanceMatrix, GeodesicWitness, LengthFn, MetricError, Rational, DEFAULT_WORK_BUDGET,
};
pub use separators::{
    absorb_component, balanced_separator, check_half_coverage, extend_separator, vertex_range,
    CoverageOutcome, Dichotomy, FamilyViolation, RFamily, SeparatorError,
};
pub use treewidth::{
    exact_treewidth, exact_treewidth_with_limit, TreewidthError, DEFAULT_VERTEX_LIMIT,
};
