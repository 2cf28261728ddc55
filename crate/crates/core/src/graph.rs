//! Immutable simple undirected graphs on dense vertex ids `0..n`, with
//! bitset adjacency rows so distance queries stay cheap at the orders the
//! toolkit works with (n ≤ 64).

use std::fmt;

use thiserror::Error;

/// Largest supported order; each adjacency row is a single machine word.
pub const MAX_ORDER: usize = 64;

/// Errors for graph construction and structural queries.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("order {n} exceeds the supported maximum of {max} vertices", max = MAX_ORDER)]
    TooManyVertices { n: usize },
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("diameter is undefined for a graph with no vertices")]
    NoVertices,
    #[error("path is empty")]
    EmptyPath,
    #[error("vertex {vertex} repeats in path")]
    RepeatedVertex { vertex: usize },
}

/// Shortest-path distance between two vertices.
///
/// `Unreachable` marks pairs in different components; it compares greater
/// than every finite distance, so `max` over pairs does the right thing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl Distance {
    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    /// The finite value, or `None` for `Unreachable`.
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(v) => Some(v),
            Distance::Unreachable => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(v) => write!(f, "{v}"),
            Distance::Unreachable => write!(f, "inf"),
        }
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Values are read-only after construction and safe to share across
/// threads; use [`GraphBuilder`] to assemble one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Mutable assembly stage for a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    adj: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::TooManyVertices { n });
        }
        Ok(Self { n, adj: vec![0; n] })
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        for vertex in [u, v] {
            if vertex >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex,
                    order: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        Ok(())
    }

    /// Inserts the edge `{u, v}`; re-inserting an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self, GraphError> {
        self.check_pair(u, v)?;
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(self)
    }

    /// Removes the edge `{u, v}` if present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<&mut Self, GraphError> {
        self.check_pair(u, v)?;
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        Ok(self)
    }

    pub fn build(self) -> Graph {
        Graph {
            n: self.n,
            adj: self.adj,
        }
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Ok(GraphBuilder::new(n)?.build())
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut builder = GraphBuilder::new(n)?;
        for (u, v) in edges {
            builder.add_edge(u, v)?;
        }
        Ok(builder.build())
    }

    /// The path 0–1–⋯–(n−1).
    pub fn path(n: usize) -> Result<Self, GraphError> {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut builder = GraphBuilder::new(n)?;
        for u in 0..n {
            for v in (u + 1)..n {
                builder.add_edge(u, v)?;
            }
        }
        Ok(builder.build())
    }

    /// The cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        let doubled: u32 = self.adj.iter().map(|row| row.count_ones()).sum();
        doubled as usize / 2
    }

    fn check_vertex(&self, vertex: usize) -> Result<(), GraphError> {
        if vertex >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex,
                order: self.n,
            });
        }
        Ok(())
    }

    /// Whether the edge `{u, v}` is present. Panics on out-of-range input.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        u != v && self.adj[u] & (1 << v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        assert!(v < self.n, "vertex out of range");
        self.adj[v].count_ones() as usize
    }

    /// Neighbors of `v` as a bitset row.
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        assert!(v < self.n, "vertex out of range");
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.neighbors_mask(v))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| BitIter(self.adj[u] >> u >> 1).map(move |k| (u, u + 1 + k)))
    }

    /// Sorted degree multiset, a cheap isomorphism invariant.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adj.iter().map(|row| row.count_ones() as usize).collect();
        degrees.sort_unstable();
        degrees
    }

    /// Shortest-path distances from `source` to every vertex.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Distance>, GraphError> {
        self.check_vertex(source)?;
        let mut dist = vec![Distance::Unreachable; self.n];
        let mut visited = 1u64 << source;
        let mut frontier = visited;
        let mut level = 0usize;
        while frontier != 0 {
            for v in BitIter(frontier) {
                dist[v] = Distance::Finite(level);
            }
            let mut next = 0u64;
            for v in BitIter(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !visited;
            visited |= next;
            level += 1;
        }
        Ok(dist)
    }

    /// Shortest-path distance between `u` and `v`.
    pub fn distance(&self, u: usize, v: usize) -> Result<Distance, GraphError> {
        self.check_vertex(v)?;
        Ok(self.bfs_distances(u)?[v])
    }

    /// Maximum distance over all vertex pairs; `Unreachable` when
    /// disconnected so enumeration callers can skip cheaply.
    pub fn diameter(&self) -> Result<Distance, GraphError> {
        if self.n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut max = Distance::Finite(0);
        for v in 0..self.n {
            let dist = self.bfs_distances(v)?;
            for &entry in &dist {
                if entry == Distance::Unreachable {
                    return Ok(Distance::Unreachable);
                }
                max = max.max(entry);
            }
        }
        Ok(max)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs_distances(0)
            .expect("vertex 0 exists")
            .iter()
            .all(|d| d.is_finite())
    }

    /// Whether every pair of the given vertices is adjacent (set semantics;
    /// duplicates are ignored, and sets of size ≤ 1 are vacuously cliques).
    pub fn is_clique(&self, vertices: &[usize]) -> Result<bool, GraphError> {
        let mut mask = 0u64;
        for &v in vertices {
            self.check_vertex(v)?;
            mask |= 1 << v;
        }
        for v in BitIter(mask) {
            if mask & !(1 << v) & !self.adj[v] != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether the sequence is a geodesic: consecutive vertices adjacent and
    /// the endpoint distance equals the number of edges walked.
    pub fn is_geodesic(&self, path: &[usize]) -> Result<bool, GraphError> {
        if path.is_empty() {
            return Err(GraphError::EmptyPath);
        }
        let mut seen = 0u64;
        for &v in path {
            self.check_vertex(v)?;
            if seen & (1 << v) != 0 {
                return Err(GraphError::RepeatedVertex { vertex: v });
            }
            seen |= 1 << v;
        }
        for pair in path.windows(2) {
            if !self.has_edge(pair[0], pair[1]) {
                return Ok(false);
            }
        }
        let endpoints = self.distance(path[0], path[path.len() - 1])?;
        Ok(endpoints == Distance::Finite(path.len() - 1))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (u, v)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Iterates the set bit positions of a word in ascending order.
pub(crate) struct BitIter(pub(crate) u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}
