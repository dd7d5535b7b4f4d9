//! Exact tree-width for small graphs, computed by two independent methods
//! whose agreement is asserted: branch-and-bound over elimination
//! orderings (with simplicial reduction, dominance and degeneracy
//! pruning) and bottom-up dynamic programming over vertex subsets.
//!
//! This oracle anchors every soundness test in the workspace, which is why
//! it refuses to trust a single algorithm.

use crate::graph::Graph;
use std::collections::HashMap;
use thiserror::Error;

/// Default vertex limit for the oracle.
pub const DEFAULT_VERTEX_LIMIT: usize = 12;

// the subset DP table has 2^n entries
const HARD_VERTEX_LIMIT: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreewidthError {
    #[error("graph has {vertices} vertices, above the oracle limit {limit}")]
    TooLarge { vertices: usize, limit: usize },
    #[error("elimination search found width {branch_and_bound}, subset DP found {subset_dp}")]
    MethodDisagreement {
        branch_and_bound: usize,
        subset_dp: usize,
    },
}

/// Exact tree-width with the default vertex limit.
pub fn exact_treewidth(g: &Graph) -> Result<usize, TreewidthError> {
    exact_treewidth_with_limit(g, DEFAULT_VERTEX_LIMIT)
}

/// Exact tree-width for graphs up to `limit` vertices (capped at 20).
pub fn exact_treewidth_with_limit(g: &Graph, limit: usize) -> Result<usize, TreewidthError> {
    let n = g.vertex_count();
    let limit = limit.min(HARD_VERTEX_LIMIT);
    if n > limit {
        return Err(TreewidthError::TooLarge { vertices: n, limit });
    }
    if n == 0 {
        return Ok(0);
    }
    let adj = adjacency_masks(g);
    let a = elimination_branch_and_bound(&adj);
    let b = subset_dp(&adj);
    if a != b {
        return Err(TreewidthError::MethodDisagreement {
            branch_and_bound: a,
            subset_dp: b,
        });
    }
    Ok(a)
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    let mut adj = vec![0u32; g.vertex_count()];
    for e in 0..g.edge_count() {
        let (u, v) = g.endpoints(e);
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

fn bits_of(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

// ---------------------------------------------------------------------
// Method A: branch and bound over elimination orderings.
// ---------------------------------------------------------------------

/// Width of the greedy minimum-degree elimination ordering; a valid upper
/// bound because the ordering is explicit.
fn greedy_min_degree_width(adj: &[u32]) -> usize {
    let n = adj.len();
    let mut work = adj.to_vec();
    let mut remaining: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut width = 0;
    while remaining != 0 {
        let v = bits_of(remaining)
            .min_by_key(|&v| ((work[v] & remaining).count_ones(), v))
            .unwrap();
        width = width.max(eliminate(&mut work, &mut remaining, v));
    }
    width
}

/// Eliminates `v`: its remaining neighborhood becomes a clique. Returns
/// the degree of `v` at elimination time.
fn eliminate(work: &mut [u32], remaining: &mut u32, v: usize) -> usize {
    let nb = work[v] & *remaining & !(1 << v);
    for u in bits_of(nb) {
        work[u] |= nb & !(1 << u);
    }
    *remaining &= !(1 << v);
    nb.count_ones() as usize
}

/// Degeneracy of the remaining subgraph: a lower bound on its tree-width.
fn degeneracy(work: &[u32], remaining: u32) -> usize {
    let mut rem = remaining;
    let mut best = 0;
    while rem != 0 {
        let v = bits_of(rem)
            .min_by_key(|&v| (work[v] & rem).count_ones())
            .unwrap();
        best = best.max((work[v] & rem).count_ones() as usize);
        rem &= !(1 << v);
    }
    best
}

fn is_simplicial(work: &[u32], remaining: u32, v: usize) -> bool {
    let nb = work[v] & remaining & !(1 << v);
    bits_of(nb).all(|u| nb & !(1 << u) & !work[u] == 0)
}

fn elimination_branch_and_bound(adj: &[u32]) -> usize {
    let n = adj.len();
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut best = greedy_min_degree_width(adj);
    // remaining-mask -> smallest width-so-far seen; the filled graph on the
    // remaining vertices depends only on the eliminated set, so dominated
    // revisits can be cut
    let mut seen: HashMap<u32, usize> = HashMap::new();
    branch(adj, full, 0, &mut best, &mut seen);
    best
}

fn branch(
    work: &[u32],
    remaining: u32,
    width_so_far: usize,
    best: &mut usize,
    seen: &mut HashMap<u32, usize>,
) {
    if width_so_far >= *best {
        return;
    }
    let count = remaining.count_ones() as usize;
    // any completion of few vertices stays within the current width
    if count == 0 || count - 1 <= width_so_far {
        *best = width_so_far;
        return;
    }
    match seen.get(&remaining) {
        Some(&w) if w <= width_so_far => return,
        _ => {
            seen.insert(remaining, width_so_far);
        }
    }
    if width_so_far.max(degeneracy(work, remaining)) >= *best {
        return;
    }
    // a simplicial vertex can always be eliminated first
    if let Some(v) = bits_of(remaining).find(|&v| is_simplicial(work, remaining, v)) {
        let mut next = work.to_vec();
        let mut rem = remaining;
        let deg = eliminate(&mut next, &mut rem, v);
        branch(&next, rem, width_so_far.max(deg), best, seen);
        return;
    }
    for v in bits_of(remaining) {
        let deg = (work[v] & remaining & !(1 << v)).count_ones() as usize;
        if width_so_far.max(deg) >= *best {
            continue;
        }
        let mut next = work.to_vec();
        let mut rem = remaining;
        let deg = eliminate(&mut next, &mut rem, v);
        branch(&next, rem, width_so_far.max(deg), best, seen);
    }
}

// ---------------------------------------------------------------------
// Method B: dynamic programming over vertex subsets.
// ---------------------------------------------------------------------

/// Number of vertices outside `s ∪ {v}` reachable from `v` through `s`:
/// the degree of `v` when eliminated right after the set `s`.
fn reach_degree(adj: &[u32], s: u32, v: usize) -> usize {
    let vbit = 1u32 << v;
    let mut comp = vbit;
    loop {
        let mut nb = 0u32;
        for u in bits_of(comp) {
            nb |= adj[u];
        }
        let grown = comp | (nb & s);
        if grown == comp {
            return (nb & !s & !vbit).count_ones() as usize;
        }
        comp = grown;
    }
}

fn subset_dp(adj: &[u32]) -> usize {
    let n = adj.len();
    let size = 1usize << n;
    let mut dp = vec![u8::MAX; size];
    dp[0] = 0;
    for s in 1..size {
        let mut value = u8::MAX;
        for v in bits_of(s as u32) {
            let prev = s & !(1usize << v);
            let q = reach_degree(adj, prev as u32, v) as u8;
            value = value.min(dp[prev].max(q));
        }
        dp[s] = value;
    }
    dp[size - 1] as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    fn wheel(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        edges.extend((0..n).map(|i| (i, n)));
        Graph::new(n + 1, &edges).unwrap()
    }

    fn grid(n: usize) -> Graph {
        let id = |i: usize, j: usize| n * j + i;
        let mut edges = Vec::new();
        for j in 0..n {
            for i in 0..n {
                if i + 1 < n {
                    edges.push((id(i, j), id(i + 1, j)));
                }
                if j + 1 < n {
                    edges.push((id(i, j), id(i, j + 1)));
                }
            }
        }
        Graph::new(n * n, &edges).unwrap()
    }

    #[test]
    fn trees_have_width_one() {
        let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(exact_treewidth(&star).unwrap(), 1);
        let path = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert_eq!(exact_treewidth(&path).unwrap(), 1);
    }

    #[test]
    fn cliques_have_width_n_minus_one() {
        for n in 1..=7 {
            assert_eq!(exact_treewidth(&complete(n)).unwrap(), n - 1);
        }
    }

    #[test]
    fn wheels_have_width_three() {
        for n in 4..=10 {
            assert_eq!(exact_treewidth(&wheel(n)).unwrap(), 3, "wheel {n}");
        }
    }

    #[test]
    fn small_grids_have_width_n() {
        for n in 2..=4 {
            assert_eq!(
                exact_treewidth_with_limit(&grid(n), 16).unwrap(),
                n,
                "grid {n}"
            );
        }
    }

    #[test]
    fn isolated_vertices_have_width_zero() {
        let g = Graph::new(3, &[]).unwrap();
        assert_eq!(exact_treewidth(&g).unwrap(), 0);
    }

    #[test]
    fn size_limit_enforced() {
        let g = Graph::new(13, &[]).unwrap();
        assert_eq!(
            exact_treewidth(&g),
            Err(TreewidthError::TooLarge {
                vertices: 13,
                limit: 12
            })
        );
    }
}
