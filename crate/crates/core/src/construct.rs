//! Parameterized construction of every extremal graph of order n and
//! diameter d: a path of length d, a clique on the remaining s = n−d−1
//! vertices, and an attachment window of three or four consecutive path
//! positions with a first-three/last-three split.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::bound::{BoundError, BoundQuery};
use crate::canon::{canonical_form, CanonError, CanonicalForm};
use crate::graph::{Graph, GraphBuilder, MAX_ORDER};
use crate::recognize::{Certificate, TripleChoice, Window, WindowLen};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error("a bare path of diameter {d} has order {}, got {n}", d + 1)]
    BarePathOrderMismatch { n: usize, d: usize },
    #[error("a windowed family member needs at least one off-path vertex; order {n} with diameter {d} has none")]
    NoOffPathVertices { n: usize, d: usize },
    #[error("window of length {len} starting at path index {start} runs past the path end {d}")]
    WindowOutOfRange { start: usize, len: usize, d: usize },
    #[error("split ({a},{b}) is invalid: both sides must be positive and sum to {s}")]
    InvalidSplit { a: usize, b: usize, s: usize },
    #[error("order {n} exceeds the graph capacity of {MAX_ORDER} vertices")]
    OrderTooLarge { n: usize },
}

/// Validates both the (n, d) domain and the graph capacity, so `realize`
/// can stay infallible.
fn checked_query(n: usize, d: usize) -> Result<BoundQuery, ConstructError> {
    if n > MAX_ORDER {
        return Err(ConstructError::OrderTooLarge { n });
    }
    Ok(BoundQuery::new(n, d)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum ParamKind {
    BarePath,
    Windowed { window: Window, first: usize, last: usize },
}

/// One member of the extremal family, validated at construction.
///
/// Vertex numbering in the realized graph: path vertices are 0..=d in path
/// order, off-path vertices are d+1..n with the first-triple class before
/// the last-triple class. This fixes the graph6 bytes of the output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExtremalParams {
    n: usize,
    d: usize,
    kind: ParamKind,
}

impl ExtremalParams {
    /// The s = 0 member: the path itself, requiring n = d+1.
    pub fn bare_path(n: usize, d: usize) -> Result<Self, ConstructError> {
        let q = checked_query(n, d)?;
        if q.off_path_count() != 0 {
            return Err(ConstructError::BarePathOrderMismatch { n, d });
        }
        Ok(Self { n, d, kind: ParamKind::BarePath })
    }

    /// Window of three consecutive positions starting at `start`; every
    /// off-path vertex attaches to that triple.
    pub fn window3(n: usize, d: usize, start: usize) -> Result<Self, ConstructError> {
        let q = checked_query(n, d)?;
        let s = q.off_path_count();
        if s == 0 {
            return Err(ConstructError::NoOffPathVertices { n, d });
        }
        if start + 2 > d {
            return Err(ConstructError::WindowOutOfRange { start, len: 3, d });
        }
        Ok(Self {
            n,
            d,
            kind: ParamKind::Windowed {
                window: Window { start, len: WindowLen::Three },
                first: s,
                last: 0,
            },
        })
    }

    /// Window of four consecutive positions starting at `start`, with `a`
    /// off-path vertices on the first triple and `b` on the last; both
    /// sides must be nonempty, else the window degenerates to three.
    pub fn window4(n: usize, d: usize, start: usize, a: usize, b: usize) -> Result<Self, ConstructError> {
        let q = checked_query(n, d)?;
        let s = q.off_path_count();
        if s == 0 {
            return Err(ConstructError::NoOffPathVertices { n, d });
        }
        if start + 3 > d {
            return Err(ConstructError::WindowOutOfRange { start, len: 4, d });
        }
        if a == 0 || b == 0 || a + b != s {
            return Err(ConstructError::InvalidSplit { a, b, s });
        }
        Ok(Self {
            n,
            d,
            kind: ParamKind::Windowed {
                window: Window { start, len: WindowLen::Four },
                first: a,
                last: b,
            },
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn diameter(&self) -> usize {
        self.d
    }

    /// Number of off-path vertices, n−d−1.
    pub fn off_path_count(&self) -> usize {
        self.n - self.d - 1
    }

    pub fn window(&self) -> Option<Window> {
        match self.kind {
            ParamKind::BarePath => None,
            ParamKind::Windowed { window, .. } => Some(window),
        }
    }

    /// Class sizes (first-triple, last-triple); `None` for the bare path.
    pub fn split(&self) -> Option<(usize, usize)> {
        match self.kind {
            ParamKind::BarePath => None,
            ParamKind::Windowed { first, last, .. } => Some((first, last)),
        }
    }

    /// Builds the graph: path edges, off-path clique, and each off-path
    /// vertex joined to exactly its triple of the window.
    pub fn realize(&self) -> Graph {
        let mut b = GraphBuilder::new(self.n).expect("order is within graph capacity");
        for v in 1..=self.d {
            b.add_edge(v - 1, v).expect("path vertices are in range");
        }
        for u in (self.d + 1)..self.n {
            for v in (u + 1)..self.n {
                b.add_edge(u, v).expect("clique vertices are in range");
            }
        }
        if let ParamKind::Windowed { window, first, .. } = self.kind {
            for (k, u) in ((self.d + 1)..self.n).enumerate() {
                let choice = if k < first { TripleChoice::FirstThree } else { TripleChoice::LastThree };
                for p in window.triple(choice) {
                    b.add_edge(u, p).expect("window positions lie on the path");
                }
            }
        }
        b.build()
    }

    /// The certificate the realized graph satisfies, under the fixed
    /// vertex numbering.
    pub fn certificate(&self) -> Certificate {
        let mut choices = BTreeMap::new();
        if let ParamKind::Windowed { first, .. } = self.kind {
            for (k, u) in ((self.d + 1)..self.n).enumerate() {
                let choice = if k < first { TripleChoice::FirstThree } else { TripleChoice::LastThree };
                choices.insert(u, choice);
            }
        }
        Certificate {
            path: (0..=self.d).collect(),
            s_vertices: ((self.d + 1)..self.n).collect(),
            window: self.window(),
            choices,
        }
    }

    /// The member obtained by walking the path from the other end; always
    /// isomorphic to `self`.
    pub fn reversed(&self) -> Self {
        let kind = match self.kind {
            ParamKind::BarePath => ParamKind::BarePath,
            ParamKind::Windowed { window, first, last } => {
                let start = self.d + 1 - window.len.len() - window.start;
                ParamKind::Windowed {
                    window: Window { start, len: window.len },
                    first: last,
                    last: first,
                }
            }
        };
        Self { n: self.n, d: self.d, kind }
    }
}

/// Every member of the family for (n, d), in a fixed order: the bare path
/// when s = 0; otherwise all window-3 starts, then all window-4 starts
/// with all splits.
pub fn enumerate_params(n: usize, d: usize) -> Result<Vec<ExtremalParams>, ConstructError> {
    let q = checked_query(n, d)?;
    let s = q.off_path_count();
    if s == 0 {
        return Ok(vec![ExtremalParams::bare_path(n, d)?]);
    }
    let mut out = Vec::new();
    for start in 0..=(d - 2) {
        out.push(ExtremalParams::window3(n, d, start)?);
    }
    if d >= 3 {
        for start in 0..=(d - 3) {
            for a in 1..s {
                out.push(ExtremalParams::window4(n, d, start, a, s - a)?);
            }
        }
    }
    Ok(out)
}

/// One representative per isomorphism class of the family, keyed and
/// ordered by canonical form. Requires n within canon capacity.
pub fn enumerate_extremal_up_to_iso(
    n: usize,
    d: usize,
) -> Result<Vec<(CanonicalForm, Graph)>, ConstructError> {
    let mut classes: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for p in enumerate_params(n, d)? {
        let g = p.realize();
        let form = canonical_form(&g)?;
        classes.entry(form).or_insert(g);
    }
    Ok(classes.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bound::ore_max_size;
    use crate::canon::are_isomorphic;
    use crate::graph::Distance;
    use crate::recognize::validate_certificate;

    #[test]
    fn window3_at_origin_gives_near_complete_graph() {
        let p = ExtremalParams::window3(5, 2, 0).unwrap();
        let g = p.realize();
        let mut b = GraphBuilder::new(5).unwrap();
        for i in 0..5 {
            for j in (i + 1)..5 {
                b.add_edge(i, j).unwrap();
            }
        }
        b.remove_edge(0, 2).unwrap();
        assert_eq!(g, b.build());
        assert_eq!(g.size(), 9);
        assert_eq!(p.split(), Some((2, 0)));
    }

    #[test]
    fn bare_path_realizes_the_path_graph() {
        for d in 2..=8 {
            let p = ExtremalParams::bare_path(d + 1, d).unwrap();
            assert_eq!(p.realize(), Graph::path(d + 1).unwrap());
            assert_eq!(p.realize().size(), d);
        }
    }

    #[test]
    fn window4_split_example_hits_bound_and_diameter() {
        let p = ExtremalParams::window4(6, 3, 0, 1, 1).unwrap();
        let g = p.realize();
        assert_eq!(g.size(), 10);
        assert_eq!(g.size(), ore_max_size(BoundQuery::new(6, 3).unwrap()));
        assert_eq!(g.diameter().unwrap(), Distance::Finite(3));
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(
            ExtremalParams::bare_path(6, 3).unwrap_err(),
            ConstructError::BarePathOrderMismatch { n: 6, d: 3 }
        );
        assert_eq!(
            ExtremalParams::window3(4, 3, 0).unwrap_err(),
            ConstructError::NoOffPathVertices { n: 4, d: 3 }
        );
        assert_eq!(
            ExtremalParams::window3(5, 3, 2).unwrap_err(),
            ConstructError::WindowOutOfRange { start: 2, len: 3, d: 3 }
        );
        assert_eq!(
            ExtremalParams::window4(6, 3, 1, 1, 1).unwrap_err(),
            ConstructError::WindowOutOfRange { start: 1, len: 4, d: 3 }
        );
        assert_eq!(
            ExtremalParams::window4(6, 3, 0, 2, 0).unwrap_err(),
            ConstructError::InvalidSplit { a: 2, b: 0, s: 2 }
        );
        assert_eq!(
            ExtremalParams::window4(7, 3, 0, 1, 1).unwrap_err(),
            ConstructError::InvalidSplit { a: 1, b: 1, s: 3 }
        );
        assert_eq!(
            ExtremalParams::window3(5, 1, 0).unwrap_err(),
            ConstructError::Bound(BoundError::DiameterTooSmall { d: 1 })
        );
        assert_eq!(
            enumerate_params(5, 5).unwrap_err(),
            ConstructError::Bound(BoundError::DiameterExceedsOrder { n: 5, d: 5 })
        );
        assert_eq!(
            ExtremalParams::window3(65, 2, 0).unwrap_err(),
            ConstructError::OrderTooLarge { n: 65 }
        );
        assert_eq!(
            enumerate_params(65, 2).unwrap_err(),
            ConstructError::OrderTooLarge { n: 65 }
        );
    }

    #[test]
    fn realize_works_at_full_graph_capacity() {
        let g = ExtremalParams::window3(64, 2, 0).unwrap().realize();
        assert_eq!(g.order(), 64);
        assert_eq!(g.size(), ore_max_size(BoundQuery::new(64, 2).unwrap()));
        assert_eq!(g.diameter().unwrap(), Distance::Finite(2));
    }

    #[test]
    fn parameter_counts_match_direct_enumeration() {
        // s=1: window-3 at i in {0,1}, no valid window-4 split.
        assert_eq!(enumerate_params(5, 3).unwrap().len(), 2);
        // s=0: the bare path only.
        let bare = enumerate_params(4, 3).unwrap();
        assert_eq!(bare.len(), 1);
        assert_eq!(bare[0].split(), None);
        // s=2: window-3 at i in {0,1}, window-4 at i=0 with split (1,1).
        assert_eq!(enumerate_params(6, 3).unwrap().len(), 3);
    }

    #[test]
    fn class_counts_after_dedup() {
        assert_eq!(enumerate_extremal_up_to_iso(5, 3).unwrap().len(), 1);
        assert_eq!(enumerate_extremal_up_to_iso(6, 4).unwrap().len(), 2);
        assert_eq!(enumerate_extremal_up_to_iso(6, 3).unwrap().len(), 2);
    }

    #[test]
    fn class_listing_is_sorted_and_consistent() {
        let classes = enumerate_extremal_up_to_iso(7, 3).unwrap();
        let forms: Vec<_> = classes.iter().map(|(f, _)| f.clone()).collect();
        let mut sorted = forms.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(forms, sorted);
        for (form, g) in &classes {
            assert_eq!(&canonical_form(g).unwrap(), form);
        }
    }

    #[test]
    fn reversal_is_an_isomorphic_involution() {
        let samples = [
            ExtremalParams::window3(6, 3, 0).unwrap(),
            ExtremalParams::window3(6, 4, 1).unwrap(),
            ExtremalParams::window4(7, 4, 1, 1, 1).unwrap(),
            ExtremalParams::window4(9, 5, 0, 2, 1).unwrap(),
            ExtremalParams::bare_path(5, 4).unwrap(),
        ];
        for p in samples {
            let r = p.reversed();
            assert_eq!(r.reversed(), p);
            assert!(are_isomorphic(&p.realize(), &r.realize()).unwrap());
        }
        // Window-3 start maps i -> d-2-i, window-4 start maps i -> d-3-i.
        let p = ExtremalParams::window3(6, 4, 0).unwrap();
        assert_eq!(p.reversed().window().unwrap().start, 2);
        let p = ExtremalParams::window4(7, 4, 0, 1, 1).unwrap();
        let r = p.reversed();
        assert_eq!(r.window().unwrap().start, 1);
        assert_eq!(r.split(), Some((1, 1)));
    }

    #[test]
    fn every_member_up_to_order_nine_is_sound() {
        for n in 3..=9 {
            for d in 2..n {
                for p in enumerate_params(n, d).unwrap() {
                    let g = p.realize();
                    let q = BoundQuery::new(n, d).unwrap();
                    assert_eq!(g.order(), n);
                    assert_eq!(g.size(), ore_max_size(q), "params {p:?}");
                    assert_eq!(g.diameter().unwrap(), Distance::Finite(d), "params {p:?}");
                    assert_eq!(
                        validate_certificate(&g, &p.certificate(), d),
                        Ok(true),
                        "params {p:?}"
                    );
                }
            }
        }
    }
}
