//! Canonical labeling for small graphs: the canonical form is the graph6
//! record of the relabeling that minimizes the upper-triangle adjacency bit
//! string. Two graphs are isomorphic iff their forms are equal, which is
//! what lets constructor output and oracle output be compared as sets.

use std::fmt;

use thiserror::Error;

use crate::g6::encode_g6;
use crate::graph::{Graph, GraphBuilder};

/// Largest order canonical labeling accepts; above this the permutation
/// search is not worth running blind.
pub const MAX_CANON_ORDER: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CanonError {
    #[error("order {n} exceeds the canonical-form maximum of {max}", max = MAX_CANON_ORDER)]
    OrderTooLarge { n: usize },
}

/// Order-invariant fingerprint of a graph: equal forms iff isomorphic
/// graphs. Ordering and hashing follow the underlying bytes, so forms can
/// key sorted sets deterministically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    /// The graph6 record of the canonically relabeled graph.
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Branch-and-bound state for the minimum-bit-string search.
///
/// A placement maps new label k to old vertex sigma[k]. The bit string
/// under construction lists x(i,j) for j = 1..n-1, i = 0..j-1 (graph6
/// order); stream position p lives at u64 bit 63-p, so lexicographic
/// comparison of prefixes is numeric comparison under a prefix mask.
/// C(10,2) = 45 bits, so one word always suffices.
struct Search<'g> {
    g: &'g Graph,
    n: usize,
    sigma: Vec<usize>,
    used: u64,
    best: u64,
    best_sigma: Vec<usize>,
}

impl Search<'_> {
    fn prefix_mask(bits: usize) -> u64 {
        if bits == 0 {
            0
        } else {
            u64::MAX << (64 - bits)
        }
    }

    /// Bits x(0,k)..x(k-1,k) of the column gained by placing `v` at depth
    /// `k`, packed with x(0,k) most significant.
    fn column(&self, v: usize, k: usize) -> u64 {
        let mut col = 0u64;
        for i in 0..k {
            col = (col << 1) | u64::from(self.g.has_edge(self.sigma[i], v));
        }
        col
    }

    fn descend(&mut self, depth: usize, acc: u64) {
        if depth == self.n {
            if acc < self.best {
                self.best = acc;
                self.best_sigma = self.sigma.clone();
            }
            return;
        }
        let filled = depth * depth.saturating_sub(1) / 2;
        let mut candidates: Vec<(u64, usize, usize)> = (0..self.n)
            .filter(|&v| self.used & (1 << v) == 0)
            .map(|v| (self.column(v, depth), self.g.degree(v), v))
            .collect();
        candidates.sort_unstable();
        let total = filled + depth;
        let mask = Self::prefix_mask(total);
        for (col, _, v) in candidates {
            // depth 0 contributes no column bits; guard the 64-bit shift.
            let next = if total == 0 { acc } else { acc | (col << (64 - total)) };
            if next > self.best & mask {
                // Candidates are sorted by column value, so every later one
                // also exceeds the incumbent prefix.
                break;
            }
            self.sigma.push(v);
            self.used |= 1 << v;
            self.descend(depth + 1, next);
            self.used &= !(1 << v);
            self.sigma.pop();
        }
    }
}

/// Computes the canonical form of `g` by exhaustive relabeling search with
/// prefix pruning. Deterministic: equal inputs give identical bytes.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CanonError> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(CanonError::OrderTooLarge { n });
    }
    let mut search = Search {
        g,
        n,
        sigma: Vec::with_capacity(n),
        used: 0,
        best: u64::MAX,
        best_sigma: (0..n).collect(),
    };
    search.descend(0, 0);

    let mut relabeled = GraphBuilder::new(n).expect("order already bounded");
    for j in 0..n {
        for i in 0..j {
            if g.has_edge(search.best_sigma[i], search.best_sigma[j]) {
                relabeled.add_edge(i, j).expect("indices below n");
            }
        }
    }
    let line = encode_g6(&relabeled.build()).expect("canon capacity is below graph6 capacity");
    Ok(CanonicalForm(line))
}

/// Whether two graphs are isomorphic. Mismatched order, size, or degree
/// multiset answers `false` without running the relabeling search.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool, CanonError> {
    for side in [g, h] {
        if side.order() > MAX_CANON_ORDER {
            return Err(CanonError::OrderTooLarge { n: side.order() });
        }
    }
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    if g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}
