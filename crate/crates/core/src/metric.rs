//! Exact-rational length functions, shortest-path distances, and both
//! characterizations of geodesic cycles.
//!
//! All arithmetic is exact; there is no floating point anywhere in this
//! module. Distances are `Option<Rational>` with `None` meaning
//! unreachable.

use crate::graph::{Cycle, EdgeSet, Graph};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::cmp::Reverse;
use std::collections::BinaryHeap;
use thiserror::Error;

/// Exact rational scalar used for all lengths and distances.
pub type Rational = num_rational::BigRational;

/// Shorthand for building a rational from small integers. Panics on a zero
/// denominator; intended for literals in tests and constructions.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Default work budget for cycle enumeration, in extension steps.
pub const DEFAULT_WORK_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MetricError {
    #[error("vertex id {0} out of range")]
    InvalidVertex(usize),
    #[error("length of edge {edge} is not positive")]
    NonPositiveLength { edge: usize },
    #[error("expected {expected} edge lengths, got {got}")]
    WrongLengthCount { expected: usize, got: usize },
    #[error("bound must be positive")]
    NonPositiveBound,
    #[error("work budget of {budget} extension steps exhausted")]
    BudgetExhausted { budget: u64 },
}

/// A strictly positive rational length for every edge of a fixed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthFn {
    values: Vec<Rational>,
}

impl LengthFn {
    /// The constant length function 1.
    pub fn unit(g: &Graph) -> LengthFn {
        LengthFn {
            values: vec![rat(1, 1); g.edge_count()],
        }
    }

    pub fn from_values(g: &Graph, values: Vec<Rational>) -> Result<LengthFn, MetricError> {
        if values.len() != g.edge_count() {
            return Err(MetricError::WrongLengthCount {
                expected: g.edge_count(),
                got: values.len(),
            });
        }
        for (edge, v) in values.iter().enumerate() {
            if !v.is_positive() {
                return Err(MetricError::NonPositiveLength { edge });
            }
        }
        Ok(LengthFn { values })
    }

    pub fn get(&self, e: usize) -> &Rational {
        &self.values[e]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn edge_count(&self) -> usize {
        self.values.len()
    }

    pub fn is_unit(&self) -> bool {
        let one = rat(1, 1);
        self.values.iter().all(|v| *v == one)
    }

    pub fn max_value(&self) -> Option<&Rational> {
        self.values.iter().max()
    }

    pub fn total(&self) -> Rational {
        self.values.iter().sum()
    }
}

/// Sum of lengths over the members of an edge set.
pub fn subgraph_length(l: &LengthFn, s: &EdgeSet) -> Rational {
    s.iter().map(|e| l.get(e).clone()).sum()
}

/// Dijkstra from `source`; exact rational labels, ties settled by vertex
/// id.
pub fn distances_from(g: &Graph, l: &LengthFn, source: usize) -> Vec<Option<Rational>> {
    assert!(source < g.vertex_count());
    assert_eq!(l.edge_count(), g.edge_count());
    let mut dist: Vec<Option<Rational>> = vec![None; g.vertex_count()];
    dist[source] = Some(Rational::zero());
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((Rational::zero(), source)));
    while let Some(Reverse((d, v))) = heap.pop() {
        if dist[v].as_ref() != Some(&d) {
            continue; // stale entry
        }
        for &(w, e) in g.neighbors(v) {
            let nd = &d + l.get(e);
            if dist[w].as_ref().is_none_or(|cur| nd < *cur) {
                dist[w] = Some(nd.clone());
                heap.push(Reverse((nd, w)));
            }
        }
    }
    dist
}

/// Minimum length of a path containing both `u` and `v`; `None` when no
/// path exists, zero when `u == v`.
pub fn distance(
    g: &Graph,
    l: &LengthFn,
    u: usize,
    v: usize,
) -> Result<Option<Rational>, MetricError> {
    if u >= g.vertex_count() {
        return Err(MetricError::InvalidVertex(u));
    }
    if v >= g.vertex_count() {
        return Err(MetricError::InvalidVertex(v));
    }
    Ok(distances_from(g, l, u)[v].clone())
}

/// All-pairs distances, one Dijkstra per source.
pub struct DistanceMatrix {
    rows: Vec<Vec<Option<Rational>>>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph, l: &LengthFn) -> DistanceMatrix {
        DistanceMatrix {
            rows: (0..g.vertex_count())
                .map(|v| distances_from(g, l, v))
                .collect(),
        }
    }

    pub fn get(&self, u: usize, v: usize) -> Option<&Rational> {
        self.rows[u][v].as_ref()
    }

    /// Largest finite pairwise distance, or `None` on an empty graph.
    pub fn diameter(&self) -> Option<Rational> {
        self.rows
            .iter()
            .flat_map(|row| row.iter().flatten())
            .max()
            .cloned()
    }
}

/// A pair of cycle vertices whose shorter arc is longer than their
/// distance in the host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeodesicWitness {
    pub a: usize,
    pub b: usize,
    /// Length of the shorter arc of the cycle between `a` and `b`.
    pub arc_length: Rational,
    /// Shortest-path distance between `a` and `b` in the whole graph.
    pub distance: Rational,
}

/// Checks every vertex pair of the cycle; `None` means the cycle is
/// geodesic, otherwise the first violating pair (in stored order) is
/// returned with both values.
pub fn geodesic_violation(g: &Graph, l: &LengthFn, c: &Cycle) -> Option<GeodesicWitness> {
    let matrix = DistanceMatrix::new(g, l);
    geodesic_violation_with_matrix(g, &matrix, l, c)
}

/// As `geodesic_violation`, reusing a precomputed distance matrix.
pub fn geodesic_violation_with_matrix(
    g: &Graph,
    matrix: &DistanceMatrix,
    l: &LengthFn,
    c: &Cycle,
) -> Option<GeodesicWitness> {
    let order = c.vertex_order();
    let edge_ids = c.edge_ids_in_order(g);
    // prefix[i] = length of the arc order[0] .. order[i]
    let mut prefix = Vec::with_capacity(order.len() + 1);
    prefix.push(Rational::zero());
    for &e in &edge_ids {
        let last = prefix.last().unwrap().clone();
        prefix.push(last + l.get(e));
    }
    let total = prefix.last().unwrap().clone();
    for i in 0..order.len() {
        for j in (i + 1)..order.len() {
            let arc = &prefix[j] - &prefix[i];
            let other = &total - &arc;
            let min_arc = arc.min(other);
            let d = matrix
                .get(order[i], order[j])
                .expect("cycle vertices are connected through the cycle");
            debug_assert!(*d <= min_arc, "an arc is itself a path");
            if *d != min_arc {
                return Some(GeodesicWitness {
                    a: order[i],
                    b: order[j],
                    arc_length: min_arc,
                    distance: d.clone(),
                });
            }
        }
    }
    None
}

/// True iff the cycle contains a shortest path between each pair of its
/// vertices.
pub fn is_geodesic_cycle(g: &Graph, l: &LengthFn, c: &Cycle) -> bool {
    geodesic_violation(g, l, c).is_none()
}

/// Enumerates exactly the cycles of length at most `bound`, each once, in
/// deterministic order. Each cycle is discovered at its minimum edge id:
/// for every anchor edge a length-bounded DFS over strictly larger edge
/// ids searches for a closing path between the anchor endpoints.
pub fn enumerate_cycles_up_to(
    g: &Graph,
    l: &LengthFn,
    bound: &Rational,
    budget: u64,
) -> Result<Vec<Cycle>, MetricError> {
    if !bound.is_positive() {
        return Err(MetricError::NonPositiveBound);
    }
    let mut steps = 0u64;
    let mut out = Vec::new();
    for anchor in 0..g.edge_count() {
        let (u, v) = g.endpoints(anchor);
        let anchor_len = l.get(anchor).clone();
        if anchor_len > *bound {
            continue;
        }
        // distances in the whole graph underestimate distances in the
        // restricted subgraph, so they are a safe pruning bound
        let dist_u = distances_from(g, l, u);
        let mut on_path = vec![false; g.vertex_count()];
        on_path[v] = true;
        let mut path_edges = Vec::new();
        dfs_extend(
            g,
            l,
            bound,
            anchor,
            u,
            &anchor_len,
            &dist_u,
            v,
            &Rational::zero(),
            &mut on_path,
            &mut path_edges,
            &mut steps,
            budget,
            &mut out,
        )?;
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn dfs_extend(
    g: &Graph,
    l: &LengthFn,
    bound: &Rational,
    anchor: usize,
    target: usize,
    anchor_len: &Rational,
    dist_to_target: &[Option<Rational>],
    cur: usize,
    path_len: &Rational,
    on_path: &mut [bool],
    path_edges: &mut Vec<usize>,
    steps: &mut u64,
    budget: u64,
    out: &mut Vec<Cycle>,
) -> Result<(), MetricError> {
    for &(w, e) in g.neighbors(cur) {
        if e <= anchor {
            continue;
        }
        *steps += 1;
        if *steps > budget {
            return Err(MetricError::BudgetExhausted { budget });
        }
        let extended = path_len + l.get(e);
        if w == target {
            if &extended + anchor_len <= *bound {
                let mut edges = EdgeSet::from_edges(g, path_edges).unwrap();
                edges.insert(e);
                edges.insert(anchor);
                let cycle = Cycle::from_edge_set(g, &edges).expect("closed DFS path is a cycle");
                out.push(cycle);
            }
            continue;
        }
        if on_path[w] {
            continue;
        }
        match &dist_to_target[w] {
            None => continue,
            Some(back) => {
                if &extended + back + anchor_len > *bound {
                    continue;
                }
            }
        }
        on_path[w] = true;
        path_edges.push(e);
        dfs_extend(
            g,
            l,
            bound,
            anchor,
            target,
            anchor_len,
            dist_to_target,
            w,
            &extended,
            on_path,
            path_edges,
            steps,
            budget,
            out,
        )?;
        path_edges.pop();
        on_path[w] = false;
    }
    Ok(())
}

/// Algebraic geodecity check: the cycle fails to be geodesic exactly when
/// it splits as `D1 ⊕ D2` with both strictly shorter. Returns the first
/// such pair found, or `None` when the cycle is geodesic.
pub fn geodesic_violation_algebraic(
    g: &Graph,
    l: &LengthFn,
    c: &Cycle,
    budget: u64,
) -> Result<Option<(Cycle, Cycle)>, MetricError> {
    let total = subgraph_length(l, c.edge_set());
    let shorter = enumerate_cycles_up_to(g, l, &total, budget)?;
    Ok(split_into_shorter_pair(g, l, c, &shorter))
}

/// Scans a pre-enumerated list of candidate cycles for a shorter-pair
/// split of `c`. The list must contain every cycle of length below
/// `l(c)`.
pub fn split_into_shorter_pair(
    g: &Graph,
    l: &LengthFn,
    c: &Cycle,
    candidates: &[Cycle],
) -> Option<(Cycle, Cycle)> {
    let total = subgraph_length(l, c.edge_set());
    for d1 in candidates {
        if subgraph_length(l, d1.edge_set()) >= total {
            continue;
        }
        let rest = c.edge_set().symmetric_difference(d1.edge_set()).unwrap();
        if rest.is_empty() {
            continue;
        }
        if let Ok(d2) = Cycle::from_edge_set(g, &rest) {
            if subgraph_length(l, d2.edge_set()) < total {
                return Some((d1.clone(), d2));
            }
        }
    }
    None
}

/// Boolean form of the algebraic check.
pub fn is_geodesic_algebraic(
    g: &Graph,
    l: &LengthFn,
    c: &Cycle,
    budget: u64,
) -> Result<bool, MetricError> {
    Ok(geodesic_violation_algebraic(g, l, c, budget)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::f2_sum;

    fn triangle() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn cycle_graph(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn wheel(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        edges.extend((0..n).map(|i| (i, n)));
        Graph::new(n + 1, &edges).unwrap()
    }

    #[test]
    fn unit_triangle_distances() {
        let g = triangle();
        let l = LengthFn::unit(&g);
        assert_eq!(distance(&g, &l, 0, 1).unwrap(), Some(rat(1, 1)));
        assert_eq!(distance(&g, &l, 0, 0).unwrap(), Some(rat(0, 1)));
    }

    #[test]
    fn isolated_vertices_unreachable() {
        let g = Graph::new(2, &[]).unwrap();
        let l = LengthFn::unit(&g);
        assert_eq!(distance(&g, &l, 0, 1).unwrap(), None);
    }

    #[test]
    fn invalid_vertex_rejected() {
        let g = triangle();
        let l = LengthFn::unit(&g);
        assert_eq!(distance(&g, &l, 0, 7), Err(MetricError::InvalidVertex(7)));
    }

    #[test]
    fn nonpositive_lengths_rejected() {
        let g = triangle();
        assert_eq!(
            LengthFn::from_values(&g, vec![rat(1, 1), rat(0, 1), rat(1, 1)]),
            Err(MetricError::NonPositiveLength { edge: 1 })
        );
    }

    #[test]
    fn empty_set_has_length_zero() {
        let g = triangle();
        let l = LengthFn::unit(&g);
        assert_eq!(subgraph_length(&l, &g.empty_edge_set()), rat(0, 1));
    }

    #[test]
    fn triangle_cycle_is_geodesic() {
        let g = triangle();
        let l = LengthFn::unit(&g);
        let c = Cycle::from_vertex_sequence(&g, &[0, 1, 2]).unwrap();
        assert!(is_geodesic_cycle(&g, &l, &c));
    }

    #[test]
    fn wheel6_rim_not_geodesic_with_hub_witness() {
        let g = wheel(6);
        let l = LengthFn::unit(&g);
        let rim = Cycle::from_vertex_sequence(&g, &[0, 1, 2, 3, 4, 5]).unwrap();
        let w = geodesic_violation(&g, &l, &rim).expect("rim has a hub shortcut");
        // the witness pair sits at rim-distance 3 but graph-distance 2
        assert_eq!(w.arc_length, rat(3, 1));
        assert_eq!(w.distance, rat(2, 1));
        assert_eq!((w.b + 6 - w.a) % 6, 3);
    }

    #[test]
    fn enumerate_triangle() {
        let g = triangle();
        let l = LengthFn::unit(&g);
        let cycles = enumerate_cycles_up_to(&g, &l, &rat(3, 1), DEFAULT_WORK_BUDGET).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 3);
    }

    #[test]
    fn enumerate_k4_triangles() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let l = LengthFn::unit(&g);
        let cycles = enumerate_cycles_up_to(&g, &l, &rat(3, 1), DEFAULT_WORK_BUDGET).unwrap();
        // one triangle per vertex triple
        assert_eq!(cycles.len(), 4);
        assert!(cycles.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn enumeration_budget_reports_exhaustion() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let l = LengthFn::unit(&g);
        let err = enumerate_cycles_up_to(&g, &l, &rat(3, 1), 2).unwrap_err();
        assert_eq!(err, MetricError::BudgetExhausted { budget: 2 });
    }

    #[test]
    fn algebraic_check_on_triangle() {
        let g = triangle();
        let l = LengthFn::unit(&g);
        let c = Cycle::from_vertex_sequence(&g, &[0, 1, 2]).unwrap();
        assert!(is_geodesic_algebraic(&g, &l, &c, DEFAULT_WORK_BUDGET).unwrap());
    }

    #[test]
    fn wheel6_rim_splits_into_two_five_cycles() {
        let g = wheel(6);
        let l = LengthFn::unit(&g);
        let rim = Cycle::from_vertex_sequence(&g, &[0, 1, 2, 3, 4, 5]).unwrap();
        let (d1, d2) = geodesic_violation_algebraic(&g, &l, &rim, DEFAULT_WORK_BUDGET)
            .unwrap()
            .expect("rim splits");
        assert_eq!(d1.len(), 5);
        assert_eq!(d2.len(), 5);
        assert!(d1.contains_vertex(6) && d2.contains_vertex(6));
        let sum = f2_sum(&g, [d1.edge_set(), d2.edge_set()]).unwrap();
        assert_eq!(&sum, rim.edge_set());
    }

    #[test]
    fn ten_cycle_is_geodesic_both_ways() {
        let g = cycle_graph(10);
        let l = LengthFn::unit(&g);
        let c = Cycle::from_vertex_sequence(&g, &(0..10).collect::<Vec<_>>()).unwrap();
        assert!(is_geodesic_cycle(&g, &l, &c));
        assert!(is_geodesic_algebraic(&g, &l, &c, DEFAULT_WORK_BUDGET).unwrap());
    }
}
