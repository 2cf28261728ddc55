//! The sharp maximum size of a simple graph with given order and diameter,
//! and the edge-count decomposition (path + attachments + clique) that the
//! maximum splits into.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    /// Diameter 1 means a complete graph and the bound does not apply;
    /// the supported range starts at 2.
    #[error("diameter {d} is below 2; the bound is defined for diameter at least 2 (diameter 1 would mean a complete graph)")]
    DiameterTooSmall { d: usize },
    #[error("diameter {d} does not fit in order {n}; a path of length {d} needs {} vertices", d + 1)]
    DiameterExceedsOrder { n: usize, d: usize },
}

/// Validated (order, diameter) pair with 2 ≤ d ≤ n−1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoundQuery {
    n: usize,
    d: usize,
}

impl BoundQuery {
    pub fn new(n: usize, d: usize) -> Result<Self, BoundError> {
        if d < 2 {
            return Err(BoundError::DiameterTooSmall { d });
        }
        if d + 1 > n {
            return Err(BoundError::DiameterExceedsOrder { n, d });
        }
        Ok(Self { n, d })
    }

    pub fn order(self) -> usize {
        self.n
    }

    pub fn diameter(self) -> usize {
        self.d
    }

    /// Number of vertices left over once a geodesic of length d is removed.
    pub fn off_path_count(self) -> usize {
        self.n - self.d - 1
    }
}

/// The three addends of the maximum size: the d path edges, up to 3 edges
/// from each off-path vertex into the path, and the clique on the off-path
/// vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundBreakdown {
    pub path_edges: usize,
    pub cross_edges: usize,
    pub clique_edges: usize,
    pub total: usize,
}

/// Maximum number of edges in a simple graph of order n and diameter d:
/// d + (n−d−1)(n−d+4)/2. The product is even (its factors differ by 5),
/// so integer division after the product is exact.
pub fn ore_max_size(q: BoundQuery) -> usize {
    q.d + (q.n - q.d - 1) * (q.n - q.d + 4) / 2
}

/// The maximum size split into its three addends; the total always equals
/// [`ore_max_size`] via d + 3s + C(s,2) = d + s(s+5)/2 with s = n−d−1.
pub fn bound_breakdown(q: BoundQuery) -> BoundBreakdown {
    let s = q.off_path_count();
    let path_edges = q.d;
    let cross_edges = 3 * s;
    let clique_edges = s * s.saturating_sub(1) / 2;
    BoundBreakdown {
        path_edges,
        cross_edges,
        clique_edges,
        total: path_edges + cross_edges + clique_edges,
    }
}
