//! Independent exhaustive verification. For small (n, d) the oracle walks
//! every labeled graph as an edge-set bitmask, keeps the maximum size among
//! graphs of diameter exactly d, and collects the canonical forms of all
//! maximizers. It deliberately never imports the closed-form bound: its
//! answers come from enumeration alone, so agreement with the formula is
//! evidence, not circularity.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::{Graph, GraphBuilder};

/// Largest order the exhaustive scan accepts (2^28 masks).
pub const MAX_ORACLE_ORDER: usize = 8;

/// Masks with at least this many bits are split across workers by their
/// high-order bits.
const CHUNK_BITS: u32 = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle order {n} is outside the supported range 3..={max}", max = MAX_ORACLE_ORDER)]
    OrderOutOfRange { n: usize },
    #[error("diameter {d} is invalid for order {n}; need 2 <= d <= n-1")]
    InvalidDiameter { n: usize, d: usize },
    #[error("no graph of order {n} has diameter {d}{}", match .floor { Some(f) => format!(" at size {f} or above"), None => String::new() })]
    NoGraphs { n: usize, d: usize, floor: Option<usize> },
    #[error("worker count must be at least 1")]
    NoWorkers,
}

/// Search mode: `Full` proves the maximum unconditionally; `Pruned` skips
/// all masks below `min_size`, so it certifies "the maximum, assuming it
/// is at least `min_size`" and exists to make n = 8 affordable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMode {
    Full,
    Pruned { min_size: usize },
}

impl OracleMode {
    fn floor(self) -> usize {
        match self {
            OracleMode::Full => 0,
            OracleMode::Pruned { min_size } => min_size,
        }
    }
}

#[derive(Debug, Clone)]
pub struct OracleConfig {
    /// Number of scan threads; chunk merge order is fixed, so any count
    /// produces identical reports.
    pub workers: usize,
    pub mode: OracleMode,
    /// Skip masks with fewer edges than the best diameter-d graph found so
    /// far. Sound for both the maximum and the tie set: a skipped mask has
    /// strictly fewer edges than some already-seen maximizer candidate.
    pub prune_below_best: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { workers: 1, mode: OracleMode::Full, prune_below_best: true }
    }
}

/// Outcome of one exhaustive (n, d) scan.
#[derive(Debug, Clone)]
pub struct OracleReport {
    pub n: usize,
    pub d: usize,
    /// Maximum size among graphs of diameter exactly d (within the mode's
    /// floor, for pruned runs).
    pub max_size: usize,
    /// Canonical forms of all maximizers, sorted and duplicate-free.
    pub extremal_forms: Vec<CanonicalForm>,
    /// Number of labeled maximizers.
    pub labeled_count: u64,
    pub elapsed: Duration,
    pub mode: OracleMode,
}

impl OracleReport {
    /// Stable one-line rendering; excludes timing so that repeated runs
    /// and different worker counts are byte-identical.
    pub fn summary_line(&self) -> String {
        let mode = match self.mode {
            OracleMode::Full => "full".to_string(),
            OracleMode::Pruned { min_size } => format!("pruned(min={min_size})"),
        };
        format!(
            "oracle n={} d={} max={} classes={} labeled={} mode={}",
            self.n,
            self.d,
            self.max_size,
            self.extremal_forms.len(),
            self.labeled_count,
            mode
        )
    }
}

/// The k-th set bit of a mask covers the k-th vertex pair (i, j), i < j,
/// in lexicographic order.
fn pair_table(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            pairs.push((i, j));
        }
    }
    pairs
}

fn mask_to_graph(n: usize, mask: u64, pairs: &[(usize, usize)]) -> Graph {
    let mut b = GraphBuilder::new(n).expect("oracle orders fit the graph type");
    let mut bits = mask;
    while bits != 0 {
        let k = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let (i, j) = pairs[k];
        b.add_edge(i, j).expect("pair table is in range");
    }
    b.build()
}

/// Diameter == d test on a stack adjacency table, cheapest checks first.
fn diameter_is_exactly(adj: &[u64; MAX_ORACLE_ORDER], n: usize, d: usize) -> bool {
    if d == 2 {
        // Diameter 2: some pair non-adjacent, every non-adjacent pair with
        // a common neighbor. No BFS needed.
        let mut any_nonadjacent = false;
        for i in 0..n {
            for j in (i + 1)..n {
                if adj[i] & (1 << j) == 0 {
                    any_nonadjacent = true;
                    if adj[i] & adj[j] == 0 {
                        return false;
                    }
                }
            }
        }
        return any_nonadjacent;
    }

    // d >= 3: first reject everything of diameter <= 2, which is the
    // common case among dense masks and needs no BFS.
    let mut far_pair_exists = false;
    'scan: for i in 0..n {
        for j in (i + 1)..n {
            if adj[i] & (1 << j) == 0 && adj[i] & adj[j] == 0 {
                far_pair_exists = true;
                break 'scan;
            }
        }
    }
    if !far_pair_exists {
        return false;
    }

    let full: u64 = (1 << n) - 1;
    let mut max_ecc = 0;
    for v in 0..n {
        let mut visited = 1u64 << v;
        let mut frontier = visited;
        let mut ecc = 0;
        while frontier != 0 {
            let mut next = 0u64;
            let mut bits = frontier;
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= adj[u];
            }
            frontier = next & !visited;
            if frontier != 0 {
                ecc += 1;
                if ecc > d {
                    return false;
                }
                visited |= frontier;
            }
        }
        if visited != full {
            return false;
        }
        max_ecc = max_ecc.max(ecc);
    }
    max_ecc == d
}

struct ChunkOutcome {
    /// Maximum size seen among diameter-d graphs this chunk evaluated, and
    /// the masks attaining it. Chunks whose true maximum lies below the
    /// global one may under-report here; the merge discards them anyway.
    max: Option<usize>,
    ties: Vec<u64>,
}

#[allow(clippy::too_many_arguments)]
fn scan_chunk(
    n: usize,
    d: usize,
    pairs: &[(usize, usize)],
    chunk: u64,
    chunk_bits: u32,
    mode_floor: usize,
    prune_below_best: bool,
    best: &AtomicUsize,
) -> ChunkOutcome {
    let base = chunk << chunk_bits;
    let mut max: Option<usize> = None;
    let mut ties: Vec<u64> = Vec::new();
    let mut adj = [0u64; MAX_ORACLE_ORDER];

    for offset in 0..(1u64 << chunk_bits) {
        let mask = base | offset;
        let size = mask.count_ones() as usize;
        let mut floor = mode_floor.max(max.unwrap_or(0));
        if prune_below_best {
            floor = floor.max(best.load(Ordering::Relaxed));
        }
        if size < floor {
            continue;
        }

        adj[..n].fill(0);
        let mut bits = mask;
        while bits != 0 {
            let k = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (i, j) = pairs[k];
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        if !diameter_is_exactly(&adj, n, d) {
            continue;
        }

        if prune_below_best {
            best.fetch_max(size, Ordering::Relaxed);
        }
        match max {
            Some(m) if size == m => ties.push(mask),
            _ => {
                // floor >= chunk max, so a surviving mask never undershoots.
                max = Some(size);
                ties.clear();
                ties.push(mask);
            }
        }
    }
    ChunkOutcome { max, ties }
}

/// Exhaustive scan of all 2^C(n,2) labeled graphs of order n. The mask
/// space is partitioned by high-order bits into chunks; workers share only
/// an advisory best-size floor, and chunk results are merged in fixed
/// order, so reports are identical for any worker count.
pub fn oracle_search(n: usize, d: usize, config: &OracleConfig) -> Result<OracleReport, OracleError> {
    if !(3..=MAX_ORACLE_ORDER).contains(&n) {
        return Err(OracleError::OrderOutOfRange { n });
    }
    if !(2..n).contains(&d) {
        return Err(OracleError::InvalidDiameter { n, d });
    }
    if config.workers == 0 {
        return Err(OracleError::NoWorkers);
    }

    let started = Instant::now();
    let pairs = pair_table(n);
    let edge_bits = pairs.len() as u32;
    let chunk_bits = edge_bits.min(CHUNK_BITS);
    let chunk_count = 1u64 << (edge_bits - chunk_bits);
    let best = AtomicUsize::new(0);
    let mode_floor = config.mode.floor();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .expect("worker pool construction");
    let outcomes: Vec<ChunkOutcome> = pool.install(|| {
        (0..chunk_count)
            .into_par_iter()
            .map(|chunk| {
                scan_chunk(
                    n,
                    d,
                    &pairs,
                    chunk,
                    chunk_bits,
                    mode_floor,
                    config.prune_below_best,
                    &best,
                )
            })
            .collect()
    });

    let max_size = outcomes.iter().filter_map(|o| o.max).max();
    let Some(max_size) = max_size else {
        return Err(OracleError::NoGraphs {
            n,
            d,
            floor: match config.mode {
                OracleMode::Full => None,
                OracleMode::Pruned { min_size } => Some(min_size),
            },
        });
    };

    let mut labeled_count = 0u64;
    let mut forms: Vec<CanonicalForm> = Vec::new();
    for outcome in &outcomes {
        if outcome.max != Some(max_size) {
            continue;
        }
        for &mask in &outcome.ties {
            labeled_count += 1;
            let g = mask_to_graph(n, mask, &pairs);
            forms.push(canonical_form(&g).expect("oracle orders are within canon capacity"));
        }
    }
    forms.sort_unstable();
    forms.dedup();

    Ok(OracleReport {
        n,
        d,
        max_size,
        extremal_forms: forms,
        labeled_count,
        elapsed: started.elapsed(),
        mode: config.mode,
    })
}

/// Reports for every valid pair with n ≤ n_max, ascending by n then d.
pub fn oracle_table(n_max: usize, config: &OracleConfig) -> Result<Vec<OracleReport>, OracleError> {
    if !(3..=MAX_ORACLE_ORDER).contains(&n_max) {
        return Err(OracleError::OrderOutOfRange { n: n_max });
    }
    let mut out = Vec::new();
    for n in 3..=n_max {
        for d in 2..n {
            out.push(oracle_search(n, d, config)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn full(workers: usize) -> OracleConfig {
        OracleConfig { workers, ..OracleConfig::default() }
    }

    #[test]
    fn five_vertices_diameter_two() {
        let r = oracle_search(5, 2, &full(1)).unwrap();
        assert_eq!(r.max_size, 9);
        assert_eq!(r.extremal_forms.len(), 1);
        // Size 9 on 5 vertices means one missing edge: 10 labeled graphs.
        assert_eq!(r.labeled_count, 10);
    }

    #[test]
    fn path_cases_have_one_class() {
        for n in 3..=6 {
            let r = oracle_search(n, n - 1, &full(1)).unwrap();
            assert_eq!(r.max_size, n - 1, "n={n}");
            assert_eq!(r.extremal_forms.len(), 1, "n={n}");
            let path_form = canonical_form(&Graph::path(n).unwrap()).unwrap();
            assert_eq!(r.extremal_forms, vec![path_form]);
        }
        // Labeled paths on 4 vertices: 4!/2.
        let r = oracle_search(4, 3, &full(1)).unwrap();
        assert_eq!(r.labeled_count, 12);
    }

    #[test]
    fn four_vertices_diameter_two() {
        let r = oracle_search(4, 2, &full(1)).unwrap();
        assert_eq!(r.max_size, 5);
        assert_eq!(r.extremal_forms.len(), 1);
        assert_eq!(r.labeled_count, 6);
    }

    #[test]
    fn table_covers_the_domain_in_order() {
        let rows = oracle_table(4, &full(1)).unwrap();
        let keys: Vec<(usize, usize)> = rows.iter().map(|r| (r.n, r.d)).collect();
        assert_eq!(keys, vec![(3, 2), (4, 2), (4, 3)]);
        assert_eq!(rows[0].max_size, 2);
        assert_eq!(rows[0].labeled_count, 3);
    }

    #[test]
    fn input_validation() {
        assert_eq!(
            oracle_search(2, 2, &full(1)).unwrap_err(),
            OracleError::OrderOutOfRange { n: 2 }
        );
        assert_eq!(
            oracle_search(9, 2, &full(1)).unwrap_err(),
            OracleError::OrderOutOfRange { n: 9 }
        );
        assert_eq!(
            oracle_search(5, 1, &full(1)).unwrap_err(),
            OracleError::InvalidDiameter { n: 5, d: 1 }
        );
        assert_eq!(
            oracle_search(5, 5, &full(1)).unwrap_err(),
            OracleError::InvalidDiameter { n: 5, d: 5 }
        );
        assert_eq!(
            oracle_search(5, 2, &OracleConfig { workers: 0, ..Default::default() }).unwrap_err(),
            OracleError::NoWorkers
        );
        assert_eq!(
            oracle_table(9, &full(1)).unwrap_err(),
            OracleError::OrderOutOfRange { n: 9 }
        );
    }

    #[test]
    fn worker_count_never_changes_the_report() {
        for (n, d) in [(5, 2), (6, 3), (6, 5)] {
            let one = oracle_search(n, d, &full(1)).unwrap();
            let four = oracle_search(n, d, &full(4)).unwrap();
            assert_eq!(one.summary_line(), four.summary_line());
            assert_eq!(one.extremal_forms, four.extremal_forms);
            assert_eq!(one.labeled_count, four.labeled_count);
        }
    }

    #[test]
    fn disabling_the_best_prune_changes_nothing() {
        for n in 3..=5 {
            for d in 2..n {
                let pruned = oracle_search(n, d, &full(1)).unwrap();
                let blunt = oracle_search(
                    n,
                    d,
                    &OracleConfig { prune_below_best: false, ..Default::default() },
                )
                .unwrap();
                assert_eq!(pruned.max_size, blunt.max_size, "n={n} d={d}");
                assert_eq!(pruned.extremal_forms, blunt.extremal_forms, "n={n} d={d}");
                assert_eq!(pruned.labeled_count, blunt.labeled_count, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn pruned_mode_agrees_with_full_mode_at_the_true_floor() {
        let reference = oracle_search(6, 3, &full(1)).unwrap();
        let pruned = oracle_search(
            6,
            3,
            &OracleConfig {
                mode: OracleMode::Pruned { min_size: reference.max_size },
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(pruned.max_size, reference.max_size);
        assert_eq!(pruned.extremal_forms, reference.extremal_forms);
        assert_eq!(pruned.labeled_count, reference.labeled_count);
        // 210 labeled maximizers: the two classes have automorphism groups
        // of order 6 and 8, so 720/6 + 720/8 labelings.
        assert_eq!(pruned.summary_line(), "oracle n=6 d=3 max=10 classes=2 labeled=210 mode=pruned(min=10)");
    }

    #[test]
    fn unreachable_floor_reports_no_graphs() {
        let err = oracle_search(
            5,
            4,
            &OracleConfig { mode: OracleMode::Pruned { min_size: 99 }, ..Default::default() },
        )
        .unwrap_err();
        assert_eq!(err, OracleError::NoGraphs { n: 5, d: 4, floor: Some(99) });
    }

    #[test]
    fn summary_line_is_stable() {
        let r = oracle_search(5, 2, &full(2)).unwrap();
        assert_eq!(r.summary_line(), "oracle n=5 d=2 max=9 classes=1 labeled=10 mode=full");
    }
}
