//! Recognition of extremal graphs: the metric test (diameter and size),
//! certificate extraction and validation for the structural decomposition
//! (geodesic path + off-path clique + attachment window), and checkers for
//! the two structural facts that force the decomposition.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::bound::{ore_max_size, BoundQuery};
use crate::graph::{Distance, Graph, GraphError};

/// Geodesic enumeration budget used by [`extract_certificate`].
pub const DEFAULT_GEODESIC_LIMIT: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecognizeError {
    #[error("diameter {d} is below 2; extremality is defined for diameter at least 2")]
    DiameterTooSmall { d: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("geodesic enumeration exceeded the limit of {limit} paths")]
    GeodesicLimitExceeded { limit: usize },
    /// The metric test passed but no diametral geodesic admits the
    /// decomposition. The characterization says this cannot happen, so it
    /// is a hard error, never a silent "no certificate".
    #[error("graph of order {n} meets the size bound for diameter {d} but no decomposition was found")]
    CharacterizationViolation { n: usize, d: usize },
    #[error("sequence is not a geodesic of the graph")]
    NotAGeodesic,
    #[error("geodesic endpoints do not realize the graph's diameter")]
    NotDiametral,
    #[error("vertices {u} and {v} are consecutive in the sequence but not adjacent")]
    NotAPath { u: usize, v: usize },
}

/// Which triple of a window an off-path vertex is attached to. For a
/// window of three the two choices name the same triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TripleChoice {
    FirstThree,
    LastThree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WindowLen {
    Three,
    Four,
}

impl WindowLen {
    pub fn len(self) -> usize {
        match self {
            WindowLen::Three => 3,
            WindowLen::Four => 4,
        }
    }
}

/// A run of three or four consecutive positions on the certificate path.
/// Fields are path indices (0-based positions), not vertex labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Window {
    pub start: usize,
    pub len: WindowLen,
}

impl Window {
    /// Last path index covered by the window.
    pub fn end(self) -> usize {
        self.start + self.len.len() - 1
    }

    pub fn first_triple(self) -> [usize; 3] {
        [self.start, self.start + 1, self.start + 2]
    }

    pub fn last_triple(self) -> [usize; 3] {
        [self.end() - 2, self.end() - 1, self.end()]
    }

    pub fn triple(self, choice: TripleChoice) -> [usize; 3] {
        match choice {
            TripleChoice::FirstThree => self.first_triple(),
            TripleChoice::LastThree => self.last_triple(),
        }
    }
}

/// Explicit decomposition witnessing extremality: a diametral geodesic,
/// the off-path clique, and the attachment window with one triple choice
/// per off-path vertex. `window` is `None` exactly when `s_vertices` is
/// empty (the bare-path case).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// Geodesic of length d as a vertex sequence, d+1 entries.
    pub path: Vec<usize>,
    /// Off-path vertices in ascending order.
    pub s_vertices: Vec<usize>,
    pub window: Option<Window>,
    /// Triple choice per off-path vertex; keys equal `s_vertices`.
    pub choices: BTreeMap<usize, TripleChoice>,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "path=")?;
        for (k, v) in self.path.iter().enumerate() {
            if k > 0 {
                write!(f, "-")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, " s={{")?;
        for (k, v) in self.s_vertices.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")?;
        match self.window {
            None => write!(f, " window=none")?,
            Some(w) => write!(f, " window(start={},len={})", w.start, w.len.len())?,
        }
        write!(f, " choices={{")?;
        for (k, (v, choice)) in self.choices.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            let label = match choice {
                TripleChoice::FirstThree => "first3",
                TripleChoice::LastThree => "last3",
            };
            write!(f, "{v}:{label}")?;
        }
        write!(f, "}}")
    }
}

/// Metric extremality test: diameter exactly `d` and size exactly the
/// maximum for (order, d). The characterization makes this equivalent to
/// possessing a certificate; the equivalence is exercised in tests, not
/// assumed here.
pub fn is_extremal(g: &Graph, d: usize) -> Result<bool, RecognizeError> {
    if d < 2 {
        return Err(RecognizeError::DiameterTooSmall { d });
    }
    if g.diameter()? != Distance::Finite(d) {
        return Ok(false);
    }
    let q = BoundQuery::new(g.order(), d)
        .expect("a realized diameter d implies d + 1 <= order");
    Ok(g.size() == ore_max_size(q))
}

/// Pure certificate check, no search: partition, geodesic of length d,
/// off-path clique, legal window, exact triple attachment for every
/// off-path vertex, and size equal to the maximum. Malformed certificates
/// answer `false`; only out-of-range vertices are an error.
pub fn validate_certificate(
    g: &Graph,
    c: &Certificate,
    d: usize,
) -> Result<bool, RecognizeError> {
    let n = g.order();
    for &v in c.path.iter().chain(&c.s_vertices).chain(c.choices.keys()) {
        if v >= n {
            return Err(GraphError::VertexOutOfRange { vertex: v, order: n }.into());
        }
    }

    // The path and the off-path set must partition the vertices.
    let mut path_mask = 0u64;
    for &v in &c.path {
        if path_mask & (1 << v) != 0 {
            return Ok(false);
        }
        path_mask |= 1 << v;
    }
    let mut s_mask = 0u64;
    for &v in &c.s_vertices {
        if s_mask & (1 << v) != 0 {
            return Ok(false);
        }
        s_mask |= 1 << v;
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    if path_mask & s_mask != 0 || path_mask | s_mask != full {
        return Ok(false);
    }

    if c.path.len() != d + 1 {
        return Ok(false);
    }
    let Ok(q) = BoundQuery::new(n, d) else {
        return Ok(false);
    };
    // Vertices are distinct and in range, so is_geodesic cannot error.
    if !g.is_geodesic(&c.path)? {
        return Ok(false);
    }
    if !g.is_clique(&c.s_vertices)? {
        return Ok(false);
    }
    if !c.choices.keys().eq(c.s_vertices.iter()) {
        return Ok(false);
    }

    match (c.window, c.s_vertices.is_empty()) {
        (None, true) => {}
        (Some(w), false) => {
            if w.end() > d {
                return Ok(false);
            }
            for (&u, &choice) in &c.choices {
                let triple = w.triple(choice);
                let expected: u64 = triple.iter().map(|&j| 1u64 << c.path[j]).sum();
                if g.neighbors_mask(u) & path_mask != expected {
                    return Ok(false);
                }
            }
        }
        _ => return Ok(false),
    }

    Ok(g.size() == ore_max_size(q))
}

/// All-pairs distance table, `usize::MAX` marking unreachable pairs.
fn distance_table(g: &Graph) -> Result<Vec<Vec<usize>>, GraphError> {
    g.vertices()
        .map(|v| {
            Ok(g.bfs_distances(v)?
                .into_iter()
                .map(|d| d.finite().unwrap_or(usize::MAX))
                .collect())
        })
        .collect()
}

/// Depth-first enumeration of x-y geodesics in lexicographic vertex order.
/// `visit` returns `false` to stop; the walker then unwinds immediately.
/// Every vertex on any x-y geodesic satisfies dist_x[v] + dist_y[v] = d,
/// which prunes the walk to exactly the geodesic DAG.
fn walk_geodesics(
    g: &Graph,
    dist_x: &[usize],
    dist_y: &[usize],
    d: usize,
    path: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    let u = *path.last().expect("walker starts with the source placed");
    if path.len() == d + 1 {
        return visit(path);
    }
    let depth = path.len() - 1;
    for w in g.neighbors(u) {
        if dist_x[w] == depth + 1 && dist_y[w] == d - depth - 1 {
            path.push(w);
            if !walk_geodesics(g, dist_x, dist_y, d, path, visit) {
                return false;
            }
            path.pop();
        }
    }
    true
}

/// Up to `max_count` geodesics from `x` to `y`, in lexicographic order.
/// Truncation is silent: this is a sampler, not an exhaustive search.
/// Returns an empty list when `y` is unreachable from `x`.
pub fn geodesics_between(
    g: &Graph,
    x: usize,
    y: usize,
    max_count: usize,
) -> Result<Vec<Vec<usize>>, RecognizeError> {
    let dist_x: Vec<usize> = g
        .bfs_distances(x)?
        .into_iter()
        .map(|d| d.finite().unwrap_or(usize::MAX))
        .collect();
    let dist_y: Vec<usize> = g
        .bfs_distances(y)?
        .into_iter()
        .map(|d| d.finite().unwrap_or(usize::MAX))
        .collect();
    if dist_x[y] == usize::MAX {
        return Ok(Vec::new());
    }
    let d = dist_x[y];
    let mut out = Vec::new();
    let mut path = vec![x];
    walk_geodesics(g, &dist_x, &dist_y, d, &mut path, &mut |p| {
        out.push(p.to_vec());
        out.len() < max_count
    });
    Ok(out)
}

/// Tries to decompose `g` along the given diametral geodesic: off-path
/// vertices must form a clique and each must be adjacent to exactly three
/// consecutive path vertices, with all the triples packed into a window of
/// at most four consecutive positions.
fn decompose_along(g: &Graph, path: &[usize]) -> Option<Certificate> {
    let d = path.len() - 1;
    let mut path_mask = 0u64;
    let mut position = vec![usize::MAX; g.order()];
    for (j, &v) in path.iter().enumerate() {
        path_mask |= 1 << v;
        position[v] = j;
    }
    let s_vertices: Vec<usize> = g.vertices().filter(|&v| path_mask & (1 << v) == 0).collect();

    if s_vertices.is_empty() {
        return Some(Certificate {
            path: path.to_vec(),
            s_vertices,
            window: None,
            choices: BTreeMap::new(),
        });
    }
    if !g.is_clique(&s_vertices).expect("vertices come from the graph") {
        return None;
    }

    // Each off-path vertex must see exactly the triple {t, t+1, t+2}.
    let mut starts = Vec::with_capacity(s_vertices.len());
    for &u in &s_vertices {
        let mut positions: Vec<usize> = g
            .neighbors(u)
            .filter(|&w| path_mask & (1 << w) != 0)
            .map(|w| position[w])
            .collect();
        positions.sort_unstable();
        let [a, b, c] = positions.as_slice() else {
            return None;
        };
        if (*b != a + 1) || (*c != a + 2) {
            return None;
        }
        starts.push(*a);
    }

    let lo = *starts.iter().min().expect("off-path set is nonempty");
    let hi = *starts.iter().max().expect("off-path set is nonempty");
    let window = match hi - lo {
        0 => Window { start: lo, len: WindowLen::Three },
        1 => Window { start: lo, len: WindowLen::Four },
        _ => return None,
    };
    debug_assert!(window.end() <= d, "triples live on path positions");
    let choices = s_vertices
        .iter()
        .zip(&starts)
        .map(|(&u, &t)| {
            let choice = if t == lo { TripleChoice::FirstThree } else { TripleChoice::LastThree };
            (u, choice)
        })
        .collect();
    Some(Certificate {
        path: path.to_vec(),
        s_vertices,
        window: Some(window),
        choices,
    })
}

/// [`extract_certificate`] with an explicit geodesic budget shared across
/// all diametral pairs of the call.
pub fn extract_certificate_with_cap(
    g: &Graph,
    d: usize,
    cap: usize,
) -> Result<Option<Certificate>, RecognizeError> {
    if !is_extremal(g, d)? {
        return Ok(None);
    }
    let table = distance_table(g)?;
    let mut remaining = cap;
    let mut exceeded = false;
    let mut found: Option<Certificate> = None;

    'pairs: for x in g.vertices() {
        for y in (x + 1)..g.order() {
            if table[x][y] != d {
                continue;
            }
            let mut path = vec![x];
            walk_geodesics(g, &table[x], &table[y], d, &mut path, &mut |p| {
                if remaining == 0 {
                    exceeded = true;
                    return false;
                }
                remaining -= 1;
                match decompose_along(g, p) {
                    Some(cert) => {
                        found = Some(cert);
                        false
                    }
                    None => true,
                }
            });
            if found.is_some() || exceeded {
                break 'pairs;
            }
        }
    }

    match (found, exceeded) {
        (Some(cert), _) => {
            debug_assert_eq!(validate_certificate(g, &cert, d), Ok(true));
            Ok(Some(cert))
        }
        (None, true) => Err(RecognizeError::GeodesicLimitExceeded { limit: cap }),
        (None, false) => Err(RecognizeError::CharacterizationViolation { n: g.order(), d }),
    }
}

/// Searches diametral pairs in ascending order and their geodesics in
/// lexicographic order for a decomposition; the first hit wins, so output
/// is deterministic. Returns `None` exactly for non-extremal input; an
/// extremal graph with no decomposition is a hard error because the
/// characterization rules it out.
pub fn extract_certificate(g: &Graph, d: usize) -> Result<Option<Certificate>, RecognizeError> {
    extract_certificate_with_cap(g, d, DEFAULT_GEODESIC_LIMIT)
}

/// Checks, along a diametral geodesic, that every off-path vertex has
/// path-neighbors spanning at most three consecutive positions (hence at
/// most three of them). A wider spread would shortcut the geodesic.
pub fn geodesic_neighbor_lemma(g: &Graph, path: &[usize]) -> Result<bool, RecognizeError> {
    if !g.is_geodesic(path)? {
        return Err(RecognizeError::NotAGeodesic);
    }
    let endpoints = Distance::Finite(path.len() - 1);
    if g.diameter()? != endpoints {
        return Err(RecognizeError::NotDiametral);
    }
    Ok(off_path_spans(g, path).all(|(lo, hi)| hi - lo <= 2))
}

/// Checks, along a simple path, that the union of all off-path vertices'
/// path-neighborhoods fits inside four consecutive positions. Unlike
/// [`geodesic_neighbor_lemma`] this accepts any simple path, so it can
/// witness how the bound fails on paths that are not diametral geodesics.
pub fn window_union_lemma(g: &Graph, path: &[usize]) -> Result<bool, RecognizeError> {
    if path.is_empty() {
        return Err(GraphError::EmptyPath.into());
    }
    let mut seen = 0u64;
    for &v in path {
        if v >= g.order() {
            return Err(GraphError::VertexOutOfRange { vertex: v, order: g.order() }.into());
        }
        if seen & (1 << v) != 0 {
            return Err(GraphError::RepeatedVertex { vertex: v }.into());
        }
        seen |= 1 << v;
    }
    for pair in path.windows(2) {
        if !g.has_edge(pair[0], pair[1]) {
            return Err(RecognizeError::NotAPath { u: pair[0], v: pair[1] });
        }
    }
    let mut lo = usize::MAX;
    let mut hi = 0usize;
    for (span_lo, span_hi) in off_path_spans(g, path) {
        lo = lo.min(span_lo);
        hi = hi.max(span_hi);
    }
    Ok(lo == usize::MAX || hi - lo + 1 <= 4)
}

/// For each off-path vertex with at least one path neighbor, the lowest
/// and highest path positions among its neighbors.
fn off_path_spans<'a>(
    g: &'a Graph,
    path: &'a [usize],
) -> impl Iterator<Item = (usize, usize)> + 'a {
    let mut path_mask = 0u64;
    let mut position = vec![usize::MAX; g.order()];
    for (j, &v) in path.iter().enumerate() {
        path_mask |= 1 << v;
        position[v] = j;
    }
    g.vertices().filter_map(move |u| {
        if path_mask & (1 << u) != 0 {
            return None;
        }
        let positions = g
            .neighbors(u)
            .filter(|&w| path_mask & (1 << w) != 0)
            .map(|w| position[w]);
        let (lo, hi) = positions.fold((usize::MAX, 0), |(lo, hi), p| (lo.min(p), hi.max(p)));
        (lo != usize::MAX).then_some((lo, hi))
    })
}
