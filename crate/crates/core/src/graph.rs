//! Simple undirected graphs with stable vertex and edge ids, edge-set
//! algebra over GF(2), cycle recognition, and component machinery.
//!
//! Vertices are `0..vertex_count`, edges are `0..edge_count` in insertion
//! order; neither id is ever reused. Edge sets and vertex sets are bit
//! vectors indexed by those ids, with symmetric difference as the group
//! operation on edge sets.

use crate::bits::Bits;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex id {0} out of range")]
    InvalidVertex(usize),
    #[error("edge id {0} out of range")]
    InvalidEdge(usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("set has universe size {set} but the graph has {graph} elements")]
    GraphMismatch { set: usize, graph: usize },
}

/// A simple undirected graph. No loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    // adj[v] = (neighbor, edge id), sorted by neighbor id for determinism
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph from an edge list. Endpoint order within a pair does
    /// not matter; edges are stored with the smaller endpoint first.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut seen = std::collections::HashSet::new();
        let mut stored = Vec::with_capacity(edges.len());
        let mut adj = vec![Vec::new(); vertex_count];
        for (id, &(a, b)) in edges.iter().enumerate() {
            if a >= vertex_count {
                return Err(GraphError::InvalidVertex(a));
            }
            if b >= vertex_count {
                return Err(GraphError::InvalidVertex(b));
            }
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            let (u, v) = (a.min(b), a.max(b));
            if !seen.insert((u, v)) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            stored.push((u, v));
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            vertex_count,
            edges: stored,
            adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of an edge, smaller id first.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Neighbors of `v` as `(neighbor, edge id)`, sorted by neighbor id.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// The edge joining `u` and `v`, if present.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adj
            .get(u)?
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
    }

    pub fn empty_edge_set(&self) -> EdgeSet {
        EdgeSet {
            bits: Bits::new(self.edge_count()),
        }
    }

    pub fn empty_vertex_set(&self) -> VertexSet {
        VertexSet {
            bits: Bits::new(self.vertex_count()),
        }
    }

    pub fn full_vertex_set(&self) -> VertexSet {
        let mut s = self.empty_vertex_set();
        for v in 0..self.vertex_count() {
            s.insert(v);
        }
        s
    }

    pub fn is_connected(&self) -> bool {
        components(self, &self.empty_vertex_set()).len() <= 1
    }
}

/// Unit-length (hop count) distances from `source` to every vertex.
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[source] = Some(0);
    let mut queue = std::collections::VecDeque::from([source]);
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

/// An edge-indexed bit vector over a fixed graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    bits: Bits,
}

impl EdgeSet {
    pub fn empty(g: &Graph) -> EdgeSet {
        g.empty_edge_set()
    }

    pub fn from_edges(g: &Graph, edges: &[usize]) -> Result<EdgeSet, GraphError> {
        let mut s = g.empty_edge_set();
        for &e in edges {
            if e >= g.edge_count() {
                return Err(GraphError::InvalidEdge(e));
            }
            s.bits.set(e, true);
        }
        Ok(s)
    }

    /// Size of the edge universe this set is defined over.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.bits.get(e)
    }

    pub fn insert(&mut self, e: usize) {
        self.bits.set(e, true);
    }

    pub fn remove(&mut self, e: usize) {
        self.bits.set(e, false);
    }

    pub fn count(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn lowest(&self) -> Option<usize> {
        self.bits.lowest_set_bit()
    }

    /// Symmetric difference; errors when the sets live over different
    /// edge universes.
    pub fn symmetric_difference(&self, other: &EdgeSet) -> Result<EdgeSet, GraphError> {
        if self.universe() != other.universe() {
            return Err(GraphError::GraphMismatch {
                set: other.universe(),
                graph: self.universe(),
            });
        }
        let mut out = self.clone();
        out.bits.xor_assign(&other.bits);
        Ok(out)
    }

    pub(crate) fn xor_assign(&mut self, other: &EdgeSet) {
        self.bits.xor_assign(&other.bits);
    }

    /// Vertices incident to at least one member edge.
    pub fn support(&self, g: &Graph) -> VertexSet {
        let mut s = g.empty_vertex_set();
        for e in self.iter() {
            let (u, v) = g.endpoints(e);
            s.insert(u);
            s.insert(v);
        }
        s
    }
}

/// A vertex-indexed bit vector over a fixed graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: Bits,
}

impl VertexSet {
    pub fn empty(g: &Graph) -> VertexSet {
        g.empty_vertex_set()
    }

    pub fn from_vertices(g: &Graph, vertices: &[usize]) -> Result<VertexSet, GraphError> {
        let mut s = g.empty_vertex_set();
        for &v in vertices {
            if v >= g.vertex_count() {
                return Err(GraphError::InvalidVertex(v));
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.get(v)
    }

    pub fn insert(&mut self, v: usize) {
        self.bits.set(v, true);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.set(v, false);
    }

    pub fn count(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.bits.or_assign(&other.bits);
        out
    }

    pub fn minus(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.bits.and_not_assign(&other.bits);
        out
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.bits.intersects(&other.bits)
    }

    pub fn intersection_count(&self, other: &VertexSet) -> usize {
        self.bits.intersection_count(&other.bits)
    }
}

/// GF(2) sum (symmetric difference) of any number of edge sets over the
/// same graph. Repeated inputs cancel pairwise; the empty sum is the
/// empty set.
pub fn f2_sum<'a, I>(g: &Graph, sets: I) -> Result<EdgeSet, GraphError>
where
    I: IntoIterator<Item = &'a EdgeSet>,
{
    let mut acc = g.empty_edge_set();
    for s in sets {
        if s.universe() != g.edge_count() {
            return Err(GraphError::GraphMismatch {
                set: s.universe(),
                graph: g.edge_count(),
            });
        }
        acc.xor_assign(s);
    }
    Ok(acc)
}

/// Why an edge set is not a cycle.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycleRejection {
    #[error("empty edge set")]
    Empty,
    #[error("vertex {vertex} has degree {degree} in the set")]
    BadDegree { vertex: usize, degree: usize },
    #[error("the edge set is disconnected")]
    Disconnected,
    #[error("no edge between consecutive vertices {0} and {1}")]
    MissingEdge(usize, usize),
    #[error("vertex {0} repeats in the sequence")]
    RepeatedVertex(usize),
    #[error("a cycle needs at least 3 vertices, got {0}")]
    TooShort(usize),
}

/// A cycle: a nonempty, connected, 2-regular edge set, carrying its
/// cyclic vertex order so arc computations are linear in the cycle length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    edges: EdgeSet,
    order: Vec<usize>,
}

impl Cycle {
    /// Recognizes an edge set as a cycle, or reports the violated
    /// condition. The stored order starts at the least incident vertex and
    /// proceeds toward its smaller neighbor, so equal edge sets produce
    /// identical orders.
    pub fn from_edge_set(g: &Graph, set: &EdgeSet) -> Result<Cycle, CycleRejection> {
        assert_eq!(
            set.universe(),
            g.edge_count(),
            "edge set from another graph"
        );
        if set.is_empty() {
            return Err(CycleRejection::Empty);
        }
        // set-degree of every incident vertex must be exactly 2
        let mut deg = vec![0usize; g.vertex_count()];
        for e in set.iter() {
            let (u, v) = g.endpoints(e);
            deg[u] += 1;
            deg[v] += 1;
        }
        for (v, &d) in deg.iter().enumerate() {
            if d != 0 && d != 2 {
                return Err(CycleRejection::BadDegree {
                    vertex: v,
                    degree: d,
                });
            }
        }
        let start = (0..g.vertex_count())
            .find(|&v| deg[v] == 2)
            .expect("nonempty set has an incident vertex");
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            // smaller neighbor first: deterministic traversal direction
            let next = g
                .neighbors(cur)
                .iter()
                .find(|&&(w, e)| set.contains(e) && w != prev)
                .map(|&(w, _)| w)
                .expect("2-regular vertex has a next edge");
            if next == start {
                break;
            }
            order.push(next);
            prev = cur;
            cur = next;
        }
        if order.len() != set.count() {
            return Err(CycleRejection::Disconnected);
        }
        Ok(Cycle {
            edges: set.clone(),
            order,
        })
    }

    /// Builds a cycle from a closed walk given without the repeated final
    /// vertex, validating that consecutive edges exist and vertices are
    /// distinct.
    pub fn from_vertex_sequence(g: &Graph, seq: &[usize]) -> Result<Cycle, CycleRejection> {
        if seq.len() < 3 {
            return Err(CycleRejection::TooShort(seq.len()));
        }
        let mut seen = std::collections::HashSet::new();
        for &v in seq {
            if !seen.insert(v) {
                return Err(CycleRejection::RepeatedVertex(v));
            }
        }
        let mut edges = g.empty_edge_set();
        for i in 0..seq.len() {
            let (a, b) = (seq[i], seq[(i + 1) % seq.len()]);
            match g.edge_between(a, b) {
                Some(e) => edges.insert(e),
                None => return Err(CycleRejection::MissingEdge(a, b)),
            }
        }
        Ok(Cycle {
            edges,
            order: seq.to_vec(),
        })
    }

    pub fn edge_set(&self) -> &EdgeSet {
        &self.edges
    }

    /// The cyclic vertex order; its length equals the edge count.
    pub fn vertex_order(&self) -> &[usize] {
        &self.order
    }

    /// Number of edges (equivalently, vertices) on the cycle.
    pub fn len(&self) -> usize {
        self.order.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        false // a recognized cycle is never empty
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.order.contains(&v)
    }

    pub fn vertex_set(&self, g: &Graph) -> VertexSet {
        let mut s = g.empty_vertex_set();
        for &v in &self.order {
            s.insert(v);
        }
        s
    }

    /// Edge ids along the stored order; entry `i` joins `order[i]` and
    /// `order[i+1 mod len]`.
    pub fn edge_ids_in_order(&self, g: &Graph) -> Vec<usize> {
        (0..self.order.len())
            .map(|i| {
                g.edge_between(self.order[i], self.order[(i + 1) % self.order.len()])
                    .expect("consecutive cycle vertices are adjacent")
            })
            .collect()
    }
}

/// Connected components of `G - removed`, each as a vertex set, ordered by
/// their least vertex. Parts are disjoint and cover `V(G) \ removed`.
pub fn components(g: &Graph, removed: &VertexSet) -> Vec<VertexSet> {
    assert_eq!(removed.universe(), g.vertex_count());
    let mut assigned = removed.clone();
    let mut parts = Vec::new();
    for start in 0..g.vertex_count() {
        if assigned.contains(start) {
            continue;
        }
        let mut part = g.empty_vertex_set();
        part.insert(start);
        assigned.insert(start);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &(w, _) in g.neighbors(v) {
                if !assigned.contains(w) {
                    assigned.insert(w);
                    part.insert(w);
                    queue.push_back(w);
                }
            }
        }
        parts.push(part);
    }
    parts
}

/// Row basis of a set of edge sets over GF(2), with combination tracking.
///
/// Elimination pivots on the lowest set bit of each reduced vector, so the
/// basis is deterministic given insertion order.
pub struct Gf2Basis {
    universe: usize,
    // (reduced vector, combination over inserted indices, pivot)
    rows: Vec<(Bits, Bits, usize)>,
    inserted: usize,
    capacity: usize,
}

impl Gf2Basis {
    /// `capacity` is the number of vectors that will be offered via
    /// `insert`; it sizes the combination bit vectors.
    pub fn new(universe: usize, capacity: usize) -> Gf2Basis {
        Gf2Basis {
            universe,
            rows: Vec::new(),
            inserted: 0,
            capacity,
        }
    }

    fn reduce_bits(&self, v: &EdgeSet) -> (Bits, Bits) {
        let mut vec = Bits::new(self.universe);
        for e in v.iter() {
            vec.set(e, true);
        }
        let mut combo = Bits::new(self.capacity);
        while let Some(pivot) = vec.lowest_set_bit() {
            match self.rows.iter().find(|&&(_, _, p)| p == pivot) {
                Some((row, row_combo, _)) => {
                    vec.xor_assign(row);
                    combo.xor_assign(row_combo);
                }
                None => break,
            }
        }
        (vec, combo)
    }

    /// Offers a vector to the basis; returns true when it was independent
    /// of the rows so far and got added.
    pub fn insert(&mut self, v: &EdgeSet) -> bool {
        assert!(self.inserted < self.capacity, "basis capacity exceeded");
        assert_eq!(v.universe(), self.universe);
        let idx = self.inserted;
        self.inserted += 1;
        let (vec, mut combo) = self.reduce_bits(v);
        combo.set(idx, true);
        match vec.lowest_set_bit() {
            Some(pivot) => {
                self.rows.push((vec, combo, pivot));
                true
            }
            None => false,
        }
    }

    /// True when `v` lies in the span of the inserted vectors.
    pub fn contains(&self, v: &EdgeSet) -> bool {
        self.reduce_bits(v).0.is_empty()
    }

    /// Expresses `v` as a sum of inserted vectors, returning their indices
    /// in ascending order, or `None` when `v` is outside the span.
    pub fn decompose(&self, v: &EdgeSet) -> Option<Vec<usize>> {
        let (residue, combo) = self.reduce_bits(v);
        if residue.is_empty() {
            Some(combo.ones().collect())
        } else {
            None
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// If `target` lies in the GF(2) span of `generators`, returns indices `S`
/// with `⊕_{i∈S} generators[i] = target`, verified by re-summation.
/// Deterministic given generator order.
pub fn decompose_in_span(
    g: &Graph,
    target: &EdgeSet,
    generators: &[EdgeSet],
) -> Result<Option<Vec<usize>>, GraphError> {
    if target.universe() != g.edge_count() {
        return Err(GraphError::GraphMismatch {
            set: target.universe(),
            graph: g.edge_count(),
        });
    }
    let mut basis = Gf2Basis::new(g.edge_count(), generators.len());
    for gen in generators {
        if gen.universe() != g.edge_count() {
            return Err(GraphError::GraphMismatch {
                set: gen.universe(),
                graph: g.edge_count(),
            });
        }
        basis.insert(gen);
    }
    let Some(indices) = basis.decompose(target) else {
        return Ok(None);
    };
    let check = f2_sum(g, indices.iter().map(|&i| &generators[i]))?;
    assert_eq!(&check, target, "decomposition failed re-summation");
    Ok(Some(indices))
}

/// Edge ids of a breadth-first spanning forest, rooted at the least vertex
/// of each component.
pub fn spanning_forest(g: &Graph) -> Vec<usize> {
    let mut visited = vec![false; g.vertex_count()];
    let mut tree = Vec::new();
    for root in 0..g.vertex_count() {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in g.neighbors(v) {
                if !visited[w] {
                    visited[w] = true;
                    tree.push(e);
                    queue.push_back(w);
                }
            }
        }
    }
    tree
}

/// Fundamental cycle basis: one cycle per non-forest edge, formed by the
/// edge plus the forest path between its endpoints.
pub fn fundamental_cycle_basis(g: &Graph) -> Vec<Cycle> {
    let forest = spanning_forest(g);
    let mut in_forest = vec![false; g.edge_count()];
    for &e in &forest {
        in_forest[e] = true;
    }
    // parent pointers within the forest
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; g.vertex_count()];
    let mut visited = vec![false; g.vertex_count()];
    for root in 0..g.vertex_count() {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in g.neighbors(v) {
                if in_forest[e] && !visited[w] {
                    visited[w] = true;
                    parent[w] = Some((v, e));
                    queue.push_back(w);
                }
            }
        }
    }
    let path_to_root = |mut v: usize| {
        let mut edges = g.empty_edge_set();
        while let Some((p, e)) = parent[v] {
            edges.insert(e);
            v = p;
        }
        edges
    };
    let mut basis = Vec::new();
    for (e, _) in in_forest.iter().enumerate().filter(|(_, &t)| !t) {
        let (u, v) = g.endpoints(e);
        let mut set = path_to_root(u);
        set.xor_assign(&path_to_root(v)); // shared root segment cancels
        set.insert(e);
        let cycle = Cycle::from_edge_set(g, &set).expect("chord plus tree path is a cycle");
        basis.push(cycle);
    }
    basis
}
