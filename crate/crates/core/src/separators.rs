//! Separator machinery around geodesic cycles: growing a vertex set into a
//! family of pairwise-far parts whose cycle traces are arcs, the
//! witness/absorption dichotomy for generated cycles, and brute-force
//! separator oracles for small graphs.
//!
//! Everything in this module works in the unit-length world: distances are
//! hop counts and arc lengths are edge counts.

use crate::graph::{bfs_distances, components, f2_sum, Cycle, Graph, VertexSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeparatorError {
    #[error("vertex {0} is not a member of the set")]
    NotInSet(usize),
    #[error("distance parameter d must be at least 1")]
    InvalidDistance,
    #[error("the generators do not sum to the cycle")]
    GeneratorsDoNotSum,
    #[error("family invariant violated: {0}")]
    InvalidFamily(FamilyViolation),
    #[error("cycle vertex {vertex} outside the parts lies in no single absorbing component")]
    DichotomyFailure { vertex: usize },
    #[error("the parts cover every vertex, leaving no component to absorb the cycle")]
    NoComponentsRemain,
    #[error("search budget of {budget} exhausted")]
    BudgetExhausted { budget: u64 },
}

/// Which guarantee of an R-family failed.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyViolation {
    #[error("part {0} is empty")]
    EmptyPart(usize),
    #[error("parts {0} and {1} overlap")]
    Overlap(usize, usize),
    #[error("vertex {0} of X is not covered by any part")]
    UncoveredSeed(usize),
    #[error("part vertex {0} lies outside X and the cycle")]
    OutsideSeedAndCycle(usize),
    #[error("parts meet the cycle in {got} vertices, above the bound {bound}")]
    CycleTraceTooLarge { got: usize, bound: usize },
    #[error("part {0} meets the cycle in a disconnected trace")]
    TraceNotAnArc(usize),
    #[error("parts {i} and {j} are at distance {dist}, not more than d = {d}")]
    TooClose {
        i: usize,
        j: usize,
        dist: usize,
        d: usize,
    },
}

/// A family of pairwise-far vertex sets whose traces on a fixed cycle are
/// arcs. Produced by `extend_separator`.
#[derive(Debug, Clone)]
pub struct RFamily {
    parts: Vec<VertexSet>,
    d: usize,
}

impl RFamily {
    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn union(&self, g: &Graph) -> VertexSet {
        let mut u = g.empty_vertex_set();
        for p in &self.parts {
            u = u.union(p);
        }
        u
    }

    /// Structural invariants that do not mention the seed set: nonempty
    /// disjoint parts, cycle traces that are arcs, pairwise distance
    /// greater than `d`.
    pub fn verify_parts(&self, g: &Graph, c: &Cycle) -> Result<(), FamilyViolation> {
        for (i, p) in self.parts.iter().enumerate() {
            if p.is_empty() {
                return Err(FamilyViolation::EmptyPart(i));
            }
            for (j, q) in self.parts.iter().enumerate().skip(i + 1) {
                if !p.is_disjoint(q) {
                    return Err(FamilyViolation::Overlap(i, j));
                }
            }
        }
        // each trace must be empty or a contiguous arc of the cycle
        let order = c.vertex_order();
        for (i, p) in self.parts.iter().enumerate() {
            let marks: Vec<bool> = order.iter().map(|&v| p.contains(v)).collect();
            let run_starts = (0..marks.len())
                .filter(|&s| marks[s] && !marks[(s + marks.len() - 1) % marks.len()])
                .count();
            if run_starts > 1 {
                return Err(FamilyViolation::TraceNotAnArc(i));
            }
        }
        // pairwise distance > d, via one bounded BFS per part
        for (i, p) in self.parts.iter().enumerate() {
            let dist = multi_source_hops(g, p);
            for (j, q) in self.parts.iter().enumerate() {
                if i == j {
                    continue;
                }
                for v in q.iter() {
                    if let Some(h) = dist[v] {
                        if h <= self.d {
                            return Err(FamilyViolation::TooClose {
                                i,
                                j,
                                dist: h,
                                d: self.d,
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// All guarantees, including the ones tying the family to the seed set
    /// `x`: coverage `X ⊆ ∪parts ⊆ X ∪ V(C)` and the cycle-trace bound
    /// `|∪parts ∩ V(C)| ≤ 2·d·|X|`.
    pub fn verify(&self, g: &Graph, c: &Cycle, x: &VertexSet) -> Result<(), FamilyViolation> {
        self.verify_parts(g, c)?;
        let union = self.union(g);
        if let Some(v) = x.iter().find(|&v| !union.contains(v)) {
            return Err(FamilyViolation::UncoveredSeed(v));
        }
        let cycle_vertices = c.vertex_set(g);
        if let Some(v) = union
            .iter()
            .find(|&v| !x.contains(v) && !cycle_vertices.contains(v))
        {
            return Err(FamilyViolation::OutsideSeedAndCycle(v));
        }
        let got = union.intersection_count(&cycle_vertices);
        let bound = 2 * self.d * x.count();
        if got > bound {
            return Err(FamilyViolation::CycleTraceTooLarge { got, bound });
        }
        Ok(())
    }
}

fn multi_source_hops(g: &Graph, sources: &VertexSet) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    let mut queue = std::collections::VecDeque::new();
    for v in sources.iter() {
        dist[v] = Some(0);
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        let dv = dist[v].unwrap();
        for &(w, _) in g.neighbors(v) {
            if dist[w].is_none() {
                dist[w] = Some(dv + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// The range of `y` in `Y` at scale `d`: the maximum `j` such that the
/// ball `B_Y^j(y) = {z ∈ Y : dist(y,z) ≤ j·d}` has at least `1 + j`
/// members. Always at least 0 since the radius-0 ball is `{y}` itself.
pub fn vertex_range(
    g: &Graph,
    y_set: &VertexSet,
    y: usize,
    d: usize,
) -> Result<usize, SeparatorError> {
    if d == 0 {
        return Err(SeparatorError::InvalidDistance);
    }
    if !y_set.contains(y) {
        return Err(SeparatorError::NotInSet(y));
    }
    let hops = bfs_distances(g, y);
    Ok(range_from_hops(&hops, y_set, d))
}

fn range_from_hops(hops: &[Option<usize>], y_set: &VertexSet, d: usize) -> usize {
    // member z enters the ball at j = ceil(hops(z) / d)
    let mut thresholds: Vec<usize> = y_set
        .iter()
        .filter_map(|z| hops[z])
        .map(|h| h.div_ceil(d))
        .collect();
    thresholds.sort_unstable();
    let mut best = 0;
    for j in 0..=thresholds.len() {
        let ball = thresholds.partition_point(|&t| t <= j);
        if ball > j {
            best = j;
        }
    }
    best
}

fn ball(
    g: &Graph,
    members: &VertexSet,
    center: usize,
    radius: usize,
) -> (VertexSet, Vec<Option<usize>>) {
    let hops = bfs_distances(g, center);
    let mut b = VertexSet::empty(g);
    for z in members.iter() {
        if hops[z].is_some_and(|h| h <= radius) {
            b.insert(z);
        }
    }
    (b, hops)
}

/// Grows the seed set `x` into an R-family along the geodesic cycle `c`:
/// repeatedly pick a remaining seed vertex on the cycle of maximum range
/// (ties to the least id), take the ball of seed vertices around it, walk
/// both arcs of the cycle out to the ball radius and trim them back to
/// ball members, and remove the ball from the seeds. Remaining off-cycle
/// seeds become one final part.
///
/// The caller is responsible for `c` being geodesic under unit lengths;
/// with that hypothesis the result satisfies `RFamily::verify` against
/// `x` and `c`.
pub fn extend_separator(
    g: &Graph,
    c: &Cycle,
    x: &VertexSet,
    d: usize,
) -> Result<RFamily, SeparatorError> {
    if d == 0 {
        return Err(SeparatorError::InvalidDistance);
    }
    assert_eq!(x.universe(), g.vertex_count());
    let order = c.vertex_order();
    let mut position = vec![None; g.vertex_count()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = Some(i);
    }
    let cycle_len = order.len();

    let mut remaining = x.clone();
    let mut parts = Vec::new();
    loop {
        let on_cycle: Vec<usize> = remaining
            .iter()
            .filter(|&v| position[v].is_some())
            .collect();
        if on_cycle.is_empty() {
            break;
        }
        // maximum range, ties settled toward the least vertex id
        let mut picked = on_cycle[0];
        let mut picked_range = {
            let hops = bfs_distances(g, picked);
            range_from_hops(&hops, &remaining, d)
        };
        for &y in &on_cycle[1..] {
            let hops = bfs_distances(g, y);
            let r = range_from_hops(&hops, &remaining, d);
            if r > picked_range {
                picked = y;
                picked_range = r;
            }
        }
        let radius = picked_range * d;
        let (ball_set, _) = ball(g, &remaining, picked, radius);
        debug_assert!(ball_set.contains(picked));

        // walk both arcs out to the radius (capped at half the cycle so
        // the two walks stay edge-disjoint), then trim each back to its
        // last ball member
        let cap = radius.min(cycle_len / 2);
        let p0 = position[picked].unwrap();
        let forward_keep = (0..=cap)
            .rev()
            .find(|&s| ball_set.contains(order[(p0 + s) % cycle_len]))
            .unwrap_or(0);
        let backward_keep = (0..=cap)
            .rev()
            .find(|&s| ball_set.contains(order[(p0 + cycle_len - s) % cycle_len]))
            .unwrap_or(0);

        let mut part = ball_set.clone();
        for s in 0..=forward_keep {
            part.insert(order[(p0 + s) % cycle_len]);
        }
        for s in 0..=backward_keep {
            part.insert(order[(p0 + cycle_len - s) % cycle_len]);
        }
        parts.push(part);
        remaining = remaining.minus(&ball_set);
    }
    if !remaining.is_empty() {
        parts.push(remaining);
    }
    Ok(RFamily { parts, d })
}

/// Outcome of scanning a generated cycle against an R-family: either some
/// generator meets two distinct parts, or one component of the graph minus
/// the parts absorbs every cycle vertex outside them.
#[derive(Debug, Clone)]
pub enum Dichotomy {
    Witness {
        generator_index: usize,
        generator: Cycle,
        first_part: VertexSet,
        second_part: VertexSet,
    },
    Absorbed {
        component: VertexSet,
    },
}

/// Applies the dichotomy. Preconditions (checked): the generators sum to
/// the cycle and the family satisfies its structural invariants. The
/// dichotomy is guaranteed under those hypotheses; if no witness exists
/// and no single component absorbs the off-family cycle vertices, a
/// `DichotomyFailure` is reported instead of a wrong answer.
pub fn absorb_component(
    g: &Graph,
    c: &Cycle,
    generators: &[Cycle],
    fam: &RFamily,
) -> Result<Dichotomy, SeparatorError> {
    let sum = f2_sum(g, generators.iter().map(|d| d.edge_set()))
        .map_err(|_| SeparatorError::GeneratorsDoNotSum)?;
    if &sum != c.edge_set() {
        return Err(SeparatorError::GeneratorsDoNotSum);
    }
    fam.verify_parts(g, c)
        .map_err(SeparatorError::InvalidFamily)?;

    for (generator_index, dcyc) in generators.iter().enumerate() {
        let touched: Vec<usize> = fam
            .parts
            .iter()
            .enumerate()
            .filter(|(_, p)| dcyc.vertex_order().iter().any(|&v| p.contains(v)))
            .map(|(i, _)| i)
            .collect();
        if touched.len() >= 2 {
            return Ok(Dichotomy::Witness {
                generator_index,
                generator: dcyc.clone(),
                first_part: fam.parts[touched[0]].clone(),
                second_part: fam.parts[touched[1]].clone(),
            });
        }
    }

    let union = fam.union(g);
    let comps = components(g, &union);
    let outside: Vec<usize> = c
        .vertex_order()
        .iter()
        .copied()
        .filter(|&v| !union.contains(v))
        .collect();
    match outside.first() {
        None => comps
            .into_iter()
            .next()
            .map(|component| Dichotomy::Absorbed { component })
            .ok_or(SeparatorError::NoComponentsRemain),
        Some(&first) => {
            let home = comps
                .into_iter()
                .find(|q| q.contains(first))
                .expect("unremoved vertex lies in a component");
            match outside.iter().find(|&&v| !home.contains(v)) {
                Some(&stray) => Err(SeparatorError::DichotomyFailure { vertex: stray }),
                None => Ok(Dichotomy::Absorbed { component: home }),
            }
        }
    }
}

/// Outcome of the exhaustive half-coverage check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverageOutcome {
    /// Every candidate removal left at least half the cycle vertices in
    /// one component.
    Holds,
    /// The first removal set (in colexicographic order, sizes ascending)
    /// splitting the cycle more evenly.
    Counterexample(VertexSet),
}

/// Exhaustively checks, over every `X ⊆ V(G)` with `|X| ≤ k`, that some
/// component of `G - X` contains at least half the vertices of `c`.
/// Subsets are visited in colexicographic order within ascending sizes
/// and the first counterexample is returned, so witnesses are
/// reproducible.
pub fn check_half_coverage(
    g: &Graph,
    c: &Cycle,
    k: usize,
    budget: u64,
) -> Result<CoverageOutcome, SeparatorError> {
    let cycle_vertices = c.vertex_set(g);
    let target = c.len();
    let mut checked = 0u64;
    let mut subset = Vec::with_capacity(k);
    for size in 0..=k {
        if let Some(cx) = colex_scan(
            g,
            &cycle_vertices,
            target,
            size,
            g.vertex_count(),
            &mut subset,
            &mut checked,
            budget,
        )? {
            return Ok(CoverageOutcome::Counterexample(cx));
        }
    }
    Ok(CoverageOutcome::Holds)
}

#[allow(clippy::too_many_arguments)]
fn colex_scan(
    g: &Graph,
    cycle_vertices: &VertexSet,
    target: usize,
    size: usize,
    max_exclusive: usize,
    subset: &mut Vec<usize>,
    checked: &mut u64,
    budget: u64,
) -> Result<Option<VertexSet>, SeparatorError> {
    if size == 0 {
        *checked += 1;
        if *checked > budget {
            return Err(SeparatorError::BudgetExhausted { budget });
        }
        let removed = VertexSet::from_vertices(g, subset).unwrap();
        let ok = components(g, &removed)
            .iter()
            .any(|q| 2 * q.intersection_count(cycle_vertices) >= target);
        return Ok(if ok { None } else { Some(removed) });
    }
    // colex: the largest element grows last
    for last in (size - 1)..max_exclusive {
        subset.push(last);
        let found = colex_scan(
            g,
            cycle_vertices,
            target,
            size - 1,
            last,
            subset,
            checked,
            budget,
        )?;
        subset.pop();
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Exhaustive search for a balanced separator: the lexicographically least
/// `X` with `|X| ≤ k` such that every component of `G - X` contains at
/// most `|A \ X| / 2` vertices of `A`, or `None` when no such set exists.
pub fn balanced_separator(
    g: &Graph,
    a: &VertexSet,
    k: usize,
    budget: u64,
) -> Result<Option<VertexSet>, SeparatorError> {
    let mut prefix = Vec::with_capacity(k);
    let mut checked = 0u64;
    lex_scan(g, a, k, 0, &mut prefix, &mut checked, budget)
}

fn lex_scan(
    g: &Graph,
    a: &VertexSet,
    k: usize,
    start: usize,
    prefix: &mut Vec<usize>,
    checked: &mut u64,
    budget: u64,
) -> Result<Option<VertexSet>, SeparatorError> {
    *checked += 1;
    if *checked > budget {
        return Err(SeparatorError::BudgetExhausted { budget });
    }
    let x = VertexSet::from_vertices(g, prefix).unwrap();
    let allowance = a.minus(&x).count();
    let balanced = components(g, &x)
        .iter()
        .all(|q| 2 * q.intersection_count(a) <= allowance);
    if balanced {
        return Ok(Some(x));
    }
    if prefix.len() == k {
        return Ok(None);
    }
    for v in start..g.vertex_count() {
        prefix.push(v);
        let found = lex_scan(g, a, k, v + 1, prefix, checked, budget)?;
        prefix.pop();
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeSet;
    use crate::metric::DEFAULT_WORK_BUDGET;

    fn cycle_graph(n: usize) -> (Graph, Cycle) {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let g = Graph::new(n, &edges).unwrap();
        let c = Cycle::from_vertex_sequence(&g, &(0..n).collect::<Vec<_>>()).unwrap();
        (g, c)
    }

    fn wheel(n: usize) -> (Graph, Cycle, Vec<Cycle>) {
        let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        edges.extend((0..n).map(|i| (i, n)));
        let g = Graph::new(n + 1, &edges).unwrap();
        let rim = Cycle::from_vertex_sequence(&g, &(0..n).collect::<Vec<_>>()).unwrap();
        let triangles = (0..n)
            .map(|i| Cycle::from_vertex_sequence(&g, &[n, i, (i + 1) % n]).unwrap())
            .collect();
        (g, rim, triangles)
    }

    fn grid3() -> (Graph, Cycle, Vec<Cycle>) {
        // 3x3 grid, vertex (i,j) -> 3*(j-1) + (i-1)
        let id = |i: usize, j: usize| 3 * (j - 1) + (i - 1);
        let mut edges = Vec::new();
        for j in 1..=3 {
            for i in 1..=3 {
                if i < 3 {
                    edges.push((id(i, j), id(i + 1, j)));
                }
                if j < 3 {
                    edges.push((id(i, j), id(i, j + 1)));
                }
            }
        }
        let g = Graph::new(9, &edges).unwrap();
        let outer = Cycle::from_vertex_sequence(
            &g,
            &[
                id(1, 1),
                id(2, 1),
                id(3, 1),
                id(3, 2),
                id(3, 3),
                id(2, 3),
                id(1, 3),
                id(1, 2),
            ],
        )
        .unwrap();
        let squares = (1..=2)
            .flat_map(|j| (1..=2).map(move |i| (i, j)))
            .map(|(i, j)| {
                Cycle::from_vertex_sequence(
                    &g,
                    &[id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)],
                )
                .unwrap()
            })
            .collect();
        (g, outer, squares)
    }

    #[test]
    fn range_of_singleton_is_zero() {
        let (g, _) = cycle_graph(8);
        let y = VertexSet::from_vertices(&g, &[0]).unwrap();
        assert_eq!(vertex_range(&g, &y, 0, 2).unwrap(), 0);
    }

    #[test]
    fn range_on_eight_cycle() {
        let (g, _) = cycle_graph(8);
        let y = VertexSet::from_vertices(&g, &[0, 2]).unwrap();
        // |B^1| = 2 >= 2 but |B^2| = 2 < 3
        assert_eq!(vertex_range(&g, &y, 0, 2).unwrap(), 1);
        // v2 is at distance 2 > 1
        assert_eq!(vertex_range(&g, &y, 0, 1).unwrap(), 0);
    }

    #[test]
    fn range_requires_membership() {
        let (g, _) = cycle_graph(8);
        let y = VertexSet::from_vertices(&g, &[0]).unwrap();
        assert_eq!(vertex_range(&g, &y, 3, 1), Err(SeparatorError::NotInSet(3)));
    }

    #[test]
    fn extend_single_seed_on_eight_cycle() {
        let (g, c) = cycle_graph(8);
        let x = VertexSet::from_vertices(&g, &[0]).unwrap();
        let fam = extend_separator(&g, &c, &x, 2).unwrap();
        assert_eq!(fam.parts().len(), 1);
        assert_eq!(fam.parts()[0].iter().collect::<Vec<_>>(), vec![0]);
        fam.verify(&g, &c, &x).unwrap();
    }

    #[test]
    fn extend_two_seeds_on_eight_cycle() {
        let (g, c) = cycle_graph(8);
        let x = VertexSet::from_vertices(&g, &[0, 2]).unwrap();
        let fam = extend_separator(&g, &c, &x, 2).unwrap();
        assert_eq!(fam.parts().len(), 1);
        assert_eq!(fam.parts()[0].iter().collect::<Vec<_>>(), vec![0, 1, 2]);
        fam.verify(&g, &c, &x).unwrap();
    }

    #[test]
    fn seeds_off_cycle_stay_one_untouched_part() {
        let (g, _, _) = wheel(6);
        let rim = Cycle::from_vertex_sequence(&g, &(0..6).collect::<Vec<_>>()).unwrap();
        let x = VertexSet::from_vertices(&g, &[6]).unwrap(); // hub only
        let fam = extend_separator(&g, &rim, &x, 1).unwrap();
        assert_eq!(fam.parts().len(), 1);
        assert_eq!(fam.parts()[0], x);
    }

    #[test]
    fn absorb_grid_center() {
        let (g, outer, squares) = grid3();
        let center = VertexSet::from_vertices(&g, &[4]).unwrap();
        let fam = RFamily {
            parts: vec![center],
            d: 1,
        };
        match absorb_component(&g, &outer, &squares, &fam).unwrap() {
            Dichotomy::Absorbed { component } => {
                assert_eq!(component.count(), 8);
            }
            other => panic!("expected absorption, got {other:?}"),
        }
    }

    #[test]
    fn wheel_rim_parts_absorb_through_hub() {
        let (g, rim, triangles) = wheel(6);
        let fam = RFamily {
            parts: vec![
                VertexSet::from_vertices(&g, &[1]).unwrap(),
                VertexSet::from_vertices(&g, &[3]).unwrap(),
            ],
            d: 1,
        };
        // no triangle contains both v1 and v3, so absorption wins
        match absorb_component(&g, &rim, &triangles, &fam).unwrap() {
            Dichotomy::Absorbed { component } => {
                assert!(component.contains(6));
                assert_eq!(component.count(), 5);
            }
            other => panic!("expected absorption, got {other:?}"),
        }
    }

    #[test]
    fn single_part_never_witnesses() {
        let (g, c) = cycle_graph(6);
        let part = VertexSet::from_vertices(&g, &[0]).unwrap();
        let fam = RFamily {
            parts: vec![part.clone()],
            d: 1,
        };
        match absorb_component(&g, &c, std::slice::from_ref(&c), &fam).unwrap() {
            Dichotomy::Absorbed { component } => {
                let expected = g.full_vertex_set().minus(&part);
                assert_eq!(component, expected);
            }
            other => panic!("expected absorption, got {other:?}"),
        }
    }

    #[test]
    fn witness_found_when_generator_spans_parts() {
        let (g, c) = cycle_graph(6);
        let fam = RFamily {
            parts: vec![
                VertexSet::from_vertices(&g, &[0]).unwrap(),
                VertexSet::from_vertices(&g, &[3]).unwrap(),
            ],
            d: 1,
        };
        match absorb_component(&g, &c, std::slice::from_ref(&c), &fam).unwrap() {
            Dichotomy::Witness {
                generator_index, ..
            } => assert_eq!(generator_index, 0),
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn bad_sum_is_reported() {
        let (g, c) = cycle_graph(6);
        let fam = RFamily {
            parts: vec![VertexSet::from_vertices(&g, &[0]).unwrap()],
            d: 1,
        };
        let err = absorb_component(&g, &c, &[], &fam).unwrap_err();
        assert_eq!(err, SeparatorError::GeneratorsDoNotSum);
    }

    #[test]
    fn half_coverage_k0_is_vacuous() {
        let (g, c) = cycle_graph(6);
        assert_eq!(
            check_half_coverage(&g, &c, 0, DEFAULT_WORK_BUDGET).unwrap(),
            CoverageOutcome::Holds
        );
    }

    #[test]
    fn half_coverage_counterexample_on_bare_cycle() {
        // removing two antipodal vertices splits an 8-cycle evenly: each
        // side has 3 < 4 of the 8 cycle vertices
        let (g, c) = cycle_graph(8);
        match check_half_coverage(&g, &c, 2, DEFAULT_WORK_BUDGET).unwrap() {
            CoverageOutcome::Counterexample(x) => {
                assert_eq!(x.count(), 2);
            }
            CoverageOutcome::Holds => panic!("a bare cycle splits"),
        }
    }

    #[test]
    fn half_coverage_on_wheel8_rim() {
        // hub plus one rim vertex still leaves a 7-vertex rim path, so no
        // removal of two vertices splits the rim; three can (hub plus two
        // opposite rim vertices)
        let (g, rim, _) = wheel(8);
        assert_eq!(
            check_half_coverage(&g, &rim, 2, DEFAULT_WORK_BUDGET).unwrap(),
            CoverageOutcome::Holds
        );
        match check_half_coverage(&g, &rim, 3, DEFAULT_WORK_BUDGET).unwrap() {
            CoverageOutcome::Counterexample(x) => {
                assert!(x.count() <= 3);
                let rim_vertices = rim.vertex_set(&g);
                for q in crate::graph::components(&g, &x) {
                    assert!(2 * q.intersection_count(&rim_vertices) < rim.len());
                }
            }
            CoverageOutcome::Holds => panic!("k = 3 splits the rim"),
        }
    }

    #[test]
    fn ball_gap_property_on_random_sets() {
        // everything outside the chosen ball sits strictly beyond the
        // next radius step
        let mut rng = crate::corpus::rng(77);
        use rand::Rng;
        for _ in 0..200 {
            let n = rng.gen_range(3..=9);
            let g = crate::corpus::random_connected_graph(&mut rng, n, 0.35);
            let members: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
            if members.is_empty() {
                continue;
            }
            let y_set = VertexSet::from_vertices(&g, &members).unwrap();
            let y = members[rng.gen_range(0..members.len())];
            let d = rng.gen_range(1..=3);
            let j = vertex_range(&g, &y_set, y, d).unwrap();
            let hops = crate::graph::bfs_distances(&g, y);
            for &z in &members {
                if let Some(h) = hops[z] {
                    if h > j * d {
                        assert!(h > (j + 1) * d, "range maximality violated");
                    }
                }
            }
        }
    }

    #[test]
    fn balanced_separator_boundary_example() {
        let g = Graph::new(1, &[]).unwrap();
        let a = VertexSet::from_vertices(&g, &[0]).unwrap();
        assert_eq!(
            balanced_separator(&g, &a, 0, DEFAULT_WORK_BUDGET).unwrap(),
            None
        );
        let x = balanced_separator(&g, &a, 1, DEFAULT_WORK_BUDGET)
            .unwrap()
            .unwrap();
        assert_eq!(x.iter().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn k5_has_no_small_balanced_separator() {
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in (u + 1)..5 {
                edges.push((u, v));
            }
        }
        let g = Graph::new(5, &edges).unwrap();
        let a = g.full_vertex_set();
        assert_eq!(
            balanced_separator(&g, &a, 2, DEFAULT_WORK_BUDGET).unwrap(),
            None
        );
    }

    #[test]
    fn wheel8_rim_separator_exists_at_k4() {
        let (g, rim, _) = wheel(8);
        let a = rim.vertex_set(&g);
        let x = balanced_separator(&g, &a, 4, DEFAULT_WORK_BUDGET).unwrap();
        assert!(x.is_some());
    }

    #[test]
    fn parity_of_cycle_edges_between_component_and_parts() {
        let (g, outer, squares) = grid3();
        let center = VertexSet::from_vertices(&g, &[4]).unwrap();
        let fam = RFamily {
            parts: vec![center],
            d: 1,
        };
        let Dichotomy::Absorbed { component } =
            absorb_component(&g, &outer, &squares, &fam).unwrap()
        else {
            panic!("expected absorption")
        };
        for part in fam.parts() {
            let crossing = count_cycle_edges_between(&g, outer.edge_set(), &component, part);
            assert_eq!(crossing % 2, 0);
        }
    }

    fn count_cycle_edges_between(
        g: &Graph,
        cycle_edges: &EdgeSet,
        a: &VertexSet,
        b: &VertexSet,
    ) -> usize {
        cycle_edges
            .iter()
            .filter(|&e| {
                let (u, v) = g.endpoints(e);
                (a.contains(u) && b.contains(v)) || (a.contains(v) && b.contains(u))
            })
            .count()
    }
}
