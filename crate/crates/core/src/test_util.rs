//! Helpers shared by unit tests: an independent all-pairs distance oracle
//! and a compact random-graph decoder.

use crate::graph::{Graph, GraphBuilder};

/// All-pairs shortest path lengths by Floyd-Warshall, `None` = unreachable.
/// Deliberately avoids the BFS routines it is used to check.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.order();
    let mut dist = vec![vec![None; n]; n];
    for v in 0..n {
        dist[v][v] = Some(0);
    }
    for (u, v) in g.edges() {
        dist[u][v] = Some(1);
        dist[v][u] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (dist[i][k], dist[k][j]) {
                    let via = a + b;
                    if dist[i][j].map_or(true, |cur| via < cur) {
                        dist[i][j] = Some(via);
                    }
                }
            }
        }
    }
    dist
}

/// Decodes the low `C(n,2)` bits of `mask` as an edge set, bit k covering
/// the k-th pair (u,v), u < v, in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    assert!(n * n.saturating_sub(1) / 2 <= 64, "mask too small for order {n}");
    let mut builder = GraphBuilder::new(n).unwrap();
    let mut bit = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if mask & (1 << bit) != 0 {
                builder.add_edge(u, v).unwrap();
            }
            bit += 1;
        }
    }
    builder.build()
}
