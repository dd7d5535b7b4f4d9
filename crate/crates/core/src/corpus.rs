//! Seeded random instances and a cabinet of named small graphs, shared by
//! the property suites and the acceptance tests.

use crate::graph::Graph;
use crate::metric::{rat, LengthFn, Rational};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// A reproducible generator; all randomized suites derive from explicit
/// seeds.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A connected graph on `n` vertices: a random spanning tree plus each
/// remaining pair independently with probability `p`.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    assert!(n >= 1);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    let tree: std::collections::HashSet<(usize, usize)> =
        edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    for u in 0..n {
        for v in (u + 1)..n {
            if !tree.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("construction avoids loops and duplicates")
}

/// Random positive lengths with numerators 1..=3 and denominators drawn
/// from the given pool.
pub fn random_lengths(rng: &mut ChaCha8Rng, g: &Graph, denominators: &[i64]) -> LengthFn {
    let values: Vec<Rational> = (0..g.edge_count())
        .map(|_| {
            let numer = rng.gen_range(1..=3);
            let denom = denominators[rng.gen_range(0..denominators.len())];
            rat(numer, denom)
        })
        .collect();
    LengthFn::from_values(g, values).expect("values are positive")
}

pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn cycle_graph(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges).unwrap()
}

pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges).unwrap()
}

/// The octahedron `K_{2,2,2}`: all edges except the antipodal pairs
/// `(0,3)`, `(1,4)`, `(2,5)`.
pub fn octahedron() -> Graph {
    let mut edges = Vec::new();
    for u in 0..6usize {
        for v in (u + 1)..6 {
            if v != u + 3 {
                edges.push((u, v));
            }
        }
    }
    Graph::new(6, &edges).unwrap()
}

/// The 3-cube.
pub fn cube() -> Graph {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for b in 0..3 {
            let v = u ^ (1 << b);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::new(8, &edges).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Graph::new(a + b, &edges).unwrap()
}

/// Named small graphs with at most 8 vertices.
pub fn named_small_graphs() -> Vec<(&'static str, Graph)> {
    vec![
        ("k4", complete_graph(4)),
        ("k5", complete_graph(5)),
        ("c4", cycle_graph(4)),
        ("c7", cycle_graph(7)),
        ("octahedron", octahedron()),
        ("cube", cube()),
        ("k33", complete_bipartite(3, 3)),
        ("k23", complete_bipartite(2, 3)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_graphs_are_connected_and_reproducible() {
        let mut r1 = rng(7);
        let mut r2 = rng(7);
        for _ in 0..20 {
            let n = r1.gen_range(2..=10);
            let g1 = random_connected_graph(&mut r1, n, 0.3);
            let n2 = r2.gen_range(2..=10);
            let g2 = random_connected_graph(&mut r2, n2, 0.3);
            assert!(g1.is_connected());
            assert_eq!(g1, g2);
        }
    }

    #[test]
    fn named_graphs_fit_eight_vertices() {
        for (name, g) in named_small_graphs() {
            assert!(g.vertex_count() <= 8, "{name}");
        }
    }
}
