//! Constructions of the standard example families: grids, wheels and
//! walls, together with their canonical landmarks (outer cycles, faces,
//! hub triangles, bricks), the 1-on-the-boundary/2-inside grid length
//! function, and the wall-based certificate construction.
//!
//! All constructors are deterministic: identical parameters produce
//! identical graphs including edge-id assignment.

use crate::certificate::{Certificate, CertificateError, Flavor, SubdivisionMap};
use crate::graph::{f2_sum, Cycle, Graph};
use crate::metric::{rat, subgraph_length, LengthFn, Rational};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeneratorError {
    #[error("grid side must be at least 2, got {0}")]
    GridTooSmall(usize),
    #[error("wheel rim must have at least 3 vertices, got {0}")]
    WheelTooSmall(usize),
    #[error("wall parameter must be at least 2, got {0}")]
    WallTooSmall(usize),
    #[error("expected {expected} subdivision counts, got {got}")]
    WrongCountLength { expected: usize, got: usize },
    #[error("a generator of the wall certificate has length {0}, above the bound 1")]
    WallGeneratorTooLong(Rational),
    #[error(transparent)]
    Certificate(#[from] CertificateError),
}

/// The n×n grid with its outer cycle and unit-square faces.
///
/// Vertices are the pairs `(i, j)` with `1 ≤ i, j ≤ n`, adjacent at
/// Euclidean distance 1; `i` is the column and `j` the row.
#[derive(Debug, Clone)]
pub struct GridGraph {
    pub graph: Graph,
    n: usize,
    outer: Cycle,
    faces: Vec<Cycle>,
}

impl GridGraph {
    pub fn side(&self) -> usize {
        self.n
    }

    /// Vertex id of grid point `(i, j)`, both 1-based.
    pub fn vertex_at(&self, i: usize, j: usize) -> usize {
        debug_assert!(1 <= i && i <= self.n && 1 <= j && j <= self.n);
        (j - 1) * self.n + (i - 1)
    }

    /// The cycle bounding the outer face, of length `4(n-1)`.
    pub fn outer_cycle(&self) -> &Cycle {
        &self.outer
    }

    /// The `(n-1)²` unit squares, row-major by lower-left corner.
    pub fn faces(&self) -> &[Cycle] {
        &self.faces
    }
}

pub fn make_grid(n: usize) -> Result<GridGraph, GeneratorError> {
    if n < 2 {
        return Err(GeneratorError::GridTooSmall(n));
    }
    let id = |i: usize, j: usize| (j - 1) * n + (i - 1);
    let mut edges = Vec::new();
    for j in 1..=n {
        for i in 1..=n {
            if i < n {
                edges.push((id(i, j), id(i + 1, j)));
            }
            if j < n {
                edges.push((id(i, j), id(i, j + 1)));
            }
        }
    }
    let graph = Graph::new(n * n, &edges).expect("grid edges are simple");

    let mut boundary = Vec::with_capacity(4 * (n - 1));
    for i in 1..=n {
        boundary.push(id(i, 1));
    }
    for j in 2..=n {
        boundary.push(id(n, j));
    }
    for i in (1..n).rev() {
        boundary.push(id(i, n));
    }
    for j in (2..n).rev() {
        boundary.push(id(1, j));
    }
    let outer = Cycle::from_vertex_sequence(&graph, &boundary).expect("grid boundary is a cycle");

    let mut faces = Vec::with_capacity((n - 1) * (n - 1));
    for j in 1..n {
        for i in 1..n {
            let square = [id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)];
            faces.push(Cycle::from_vertex_sequence(&graph, &square).unwrap());
        }
    }
    Ok(GridGraph {
        graph,
        n,
        outer,
        faces,
    })
}

/// Length 1 on the outer cycle, 2 on every other edge: under this function
/// the outer cycle is geodesic and every face has length at most 8.
pub fn intro_grid_lengths(grid: &GridGraph) -> LengthFn {
    let outer = grid.outer_cycle().edge_set();
    let values = (0..grid.graph.edge_count())
        .map(|e| {
            if outer.contains(e) {
                rat(1, 1)
            } else {
                rat(2, 1)
            }
        })
        .collect();
    LengthFn::from_values(&grid.graph, values).expect("all values positive")
}

/// The n-wheel: a rim cycle of length n plus a hub adjacent to every rim
/// vertex.
#[derive(Debug, Clone)]
pub struct WheelGraph {
    pub graph: Graph,
    n: usize,
    rim: Cycle,
    triangles: Vec<Cycle>,
}

impl WheelGraph {
    pub fn rim_size(&self) -> usize {
        self.n
    }

    pub fn hub(&self) -> usize {
        self.n
    }

    pub fn rim(&self) -> &Cycle {
        &self.rim
    }

    /// The n hub triangles, one per rim edge; their GF(2) sum is the rim.
    pub fn triangles(&self) -> &[Cycle] {
        &self.triangles
    }
}

pub fn make_wheel(n: usize) -> Result<WheelGraph, GeneratorError> {
    if n < 3 {
        return Err(GeneratorError::WheelTooSmall(n));
    }
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).map(|i| (i, n)));
    let graph = Graph::new(n + 1, &edges).expect("wheel edges are simple");
    let rim = Cycle::from_vertex_sequence(&graph, &(0..n).collect::<Vec<_>>()).unwrap();
    let triangles = (0..n)
        .map(|i| Cycle::from_vertex_sequence(&graph, &[n, i, (i + 1) % n]).unwrap())
        .collect();
    Ok(WheelGraph {
        graph,
        n,
        rim,
        triangles,
    })
}

/// An elementary t-wall: the 2t×t grid with the vertical edges
/// `(i,j)-(i,j+1)` deleted whenever `i` and `j` have the same parity, and
/// the two resulting degree-1 vertices removed. Every vertex has degree
/// at most 3; the bounded faces are `(t-1)²` hexagonal bricks.
#[derive(Debug, Clone)]
pub struct WallGraph {
    pub graph: Graph,
    t: usize,
    outer: Cycle,
    bricks: Vec<Cycle>,
    coords: Vec<(usize, usize)>,
}

impl WallGraph {
    pub fn parameter(&self) -> usize {
        self.t
    }

    /// The cycle bounding the outer face; it has `8t - 10` edges.
    pub fn outer_cycle(&self) -> &Cycle {
        &self.outer
    }

    /// The hexagonal faces in row-major order.
    pub fn bricks(&self) -> &[Cycle] {
        &self.bricks
    }

    /// Final vertex id of wall point `(i, j)` (column `i ∈ 1..=2t`, row
    /// `j ∈ 1..=t`), or `None` for the two deleted corners.
    pub fn vertex_at(&self, i: usize, j: usize) -> Option<usize> {
        self.coords.iter().position(|&c| c == (i, j))
    }
}

pub fn make_wall(t: usize) -> Result<WallGraph, GeneratorError> {
    if t < 2 {
        return Err(GeneratorError::WallTooSmall(t));
    }
    let cols = 2 * t;
    let rows = t;
    // kept edges on the full grid, by coordinates
    let mut coord_edges: Vec<((usize, usize), (usize, usize))> = Vec::new();
    for j in 1..=rows {
        for i in 1..=cols {
            if i < cols {
                coord_edges.push(((i, j), (i + 1, j)));
            }
            if j < rows && i % 2 != j % 2 {
                coord_edges.push(((i, j), (i, j + 1)));
            }
        }
    }
    let mut degree = std::collections::HashMap::new();
    for &(a, b) in &coord_edges {
        *degree.entry(a).or_insert(0usize) += 1;
        *degree.entry(b).or_insert(0usize) += 1;
    }
    let deleted: Vec<(usize, usize)> = (1..=rows)
        .flat_map(|j| (1..=cols).map(move |i| (i, j)))
        .filter(|c| degree.get(c).copied().unwrap_or(0) == 1)
        .collect();
    assert_eq!(deleted.len(), 2, "a wall has exactly two degree-1 corners");

    // relabel surviving vertices in row-major coordinate order
    let mut coords = Vec::new();
    let mut final_id = std::collections::HashMap::new();
    for j in 1..=rows {
        for i in 1..=cols {
            let c = (i, j);
            if !deleted.contains(&c) {
                final_id.insert(c, coords.len());
                coords.push(c);
            }
        }
    }
    let edges: Vec<(usize, usize)> = coord_edges
        .iter()
        .filter(|(a, b)| !deleted.contains(a) && !deleted.contains(b))
        .map(|(a, b)| (final_id[a], final_id[b]))
        .collect();
    let graph = Graph::new(coords.len(), &edges).expect("wall edges are simple");
    assert!((0..graph.vertex_count()).all(|v| graph.degree(v) >= 2 && graph.degree(v) <= 3));

    let mut bricks = Vec::with_capacity((t - 1) * (t - 1));
    for j in 1..rows {
        let rungs: Vec<usize> = (1..=cols).filter(|i| i % 2 != j % 2).collect();
        for w in rungs.windows(2) {
            let (a, b) = (w[0], w[1]);
            debug_assert_eq!(b, a + 2);
            let seq = [
                final_id[&(a, j)],
                final_id[&(a + 1, j)],
                final_id[&(b, j)],
                final_id[&(b, j + 1)],
                final_id[&(a + 1, j + 1)],
                final_id[&(a, j + 1)],
            ];
            bricks.push(Cycle::from_vertex_sequence(&graph, &seq).unwrap());
        }
    }
    // the outer cycle is the GF(2) sum of all bounded faces
    let outer_set = f2_sum(&graph, bricks.iter().map(|b| b.edge_set())).unwrap();
    let outer = Cycle::from_edge_set(&graph, &outer_set).expect("brick sum bounds the outer face");
    Ok(WallGraph {
        graph,
        t,
        outer,
        bricks,
        coords,
    })
}

/// Subdivision with recorded branch paths; the identity when every count
/// is 1.
pub fn subdivide_edges(g: &Graph, counts: &[usize]) -> Result<SubdivisionMap, GeneratorError> {
    if counts.len() != g.edge_count() {
        return Err(GeneratorError::WrongCountLength {
            expected: g.edge_count(),
            got: counts.len(),
        });
    }
    Ok(SubdivisionMap::by_counts(g, counts)?)
}

/// A wall-based certificate: the subdivided wall, the length function that
/// charges 1 per outer branch path and 3 per inner branch path (rescaled
/// by 1/18), and the certificate whose cycle is the subdivided outer cycle
/// and whose generators are the subdivided bricks, at bound 1.
#[derive(Debug, Clone)]
pub struct WallCertificate {
    pub graph: Graph,
    pub lengths: LengthFn,
    pub certificate: Certificate,
    pub wall: WallGraph,
    pub subdivision: SubdivisionMap,
}

/// Builds the wall certificate for parameter `t`, optionally subdividing
/// each wall edge `f` into `counts[f]` edges first. Asserts that every
/// generator has length at most 1 after rescaling.
pub fn wall_certificate(
    t: usize,
    counts: Option<&[usize]>,
) -> Result<WallCertificate, GeneratorError> {
    let wall = make_wall(t)?;
    let m = wall.graph.edge_count();
    let counts: Vec<usize> = match counts {
        Some(c) => {
            if c.len() != m {
                return Err(GeneratorError::WrongCountLength {
                    expected: m,
                    got: c.len(),
                });
            }
            c.to_vec()
        }
        None => vec![1; m],
    };
    let subdivision = SubdivisionMap::by_counts(&wall.graph, &counts)?;
    let sub = subdivision.subdivided().clone();

    let outer_edges = wall.outer_cycle().edge_set();
    let mut values = vec![Rational::from_integer(0.into()); sub.edge_count()];
    for (f, &count) in counts.iter().enumerate() {
        let base = if outer_edges.contains(f) { 1 } else { 3 };
        // path length is base/count per edge, rescaled by 1/18
        let per_edge = rat(base, (18 * count) as i64);
        for &e in subdivision.path(f) {
            values[e] = per_edge.clone();
        }
    }
    let lengths = LengthFn::from_values(&sub, values).expect("all values positive");

    let cycle = subdivision.lift_cycle(&wall.graph, wall.outer_cycle());
    let generators: Vec<Cycle> = wall
        .bricks()
        .iter()
        .map(|b| subdivision.lift_cycle(&wall.graph, b))
        .collect();
    let bound = rat(1, 1);
    for d in &generators {
        let len = subgraph_length(&lengths, d.edge_set());
        if len > bound {
            return Err(GeneratorError::WallGeneratorTooLong(len));
        }
    }
    let certificate = Certificate::new(cycle, generators, bound, Flavor::RationalGeodesic)?;
    Ok(WallCertificate {
        graph: sub,
        lengths,
        certificate,
        wall,
        subdivision,
    })
}
