//! Extremal graphs of given order and diameter.
//!
//! For fixed order `n` and diameter `d >= 2` there is a sharp upper bound on
//! how many edges a simple graph can carry, and the graphs attaining it have
//! a rigid shape: a geodesic path of length `d`, the remaining vertices
//! forming a clique, each attached to the first three or last three of a
//! window of three or four consecutive path vertices. This crate makes that
//! statement executable:
//!
//! - [`bound`]: the closed-form maximum and its edge-count breakdown.
//! - [`construct`]: parameterized construction of every extremal graph.
//! - [`recognize`]: certificate extraction and validation for candidate
//!   graphs, plus checkers for the structural facts behind the bound.
//! - [`oracle`]: independent brute-force verification over all graphs of
//!   small order, with no reliance on the formula it is checking.
//! - [`graph`], [`g6`], [`canon`]: the supporting graph type, graph6
//!   serialization, and canonical forms for isomorphism-aware comparison.

pub mod bound;
pub mod canon;
pub mod construct;
pub mod g6;
pub mod graph;
pub mod oracle;
pub mod recognize;

#[cfg(test)]
pub(crate) mod test_util;

pub use bound::{bound_breakdown, ore_max_size, BoundBreakdown, BoundError, BoundQuery};
pub use canon::{are_isomorphic, canonical_form, CanonError, CanonicalForm, MAX_CANON_ORDER};
pub use construct::{
    enumerate_extremal_up_to_iso, enumerate_params, ConstructError, ExtremalParams,
};
pub use g6::{decode_g6, encode_g6, G6Error, MAX_G6_ORDER};
pub use graph::{Distance, Graph, GraphBuilder, GraphError, MAX_ORDER};
pub use oracle::{
    oracle_search, oracle_table, OracleConfig, OracleError, OracleMode, OracleReport,
    MAX_ORACLE_ORDER,
};
pub use recognize::{
    extract_certificate, extract_certificate_with_cap, geodesic_neighbor_lemma,
    geodesics_between, is_extremal, validate_certificate, window_union_lemma, Certificate,
    RecognizeError, TripleChoice, Window, WindowLen, DEFAULT_GEODESIC_LIMIT,
};
