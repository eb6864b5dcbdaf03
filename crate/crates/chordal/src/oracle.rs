//! Independent brute-force verification of the minimum-size formulas at
//! small orders, plus a seeded random chordal generator for test corpora.
//!
//! The search shares as little as possible with the rest of the crate: it
//! enumerates labeled graphs as bitmask rows and decides chordality by the
//! definition (no vertex subset induces a cycle of length at least 4),
//! not by elimination orderings. Formula agreement is therefore a genuine
//! cross-check rather than the same algorithm twice.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::extremal::{g_formula, phi};
use crate::graph::Graph;
use crate::graph6::to_graph6;

/// Hard cap on exhaustive search; the level sizes grow as C(C(n,2), m).
pub const MAX_ORACLE_ORDER: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("exhaustive search is capped at order {MAX_ORACLE_ORDER}, got {0}")]
    OrderTooLarge(usize),
    #[error("invalid parameters n = {n}, k = {k}: need 1 <= k < n")]
    InvalidParams { n: usize, k: usize },
}

/// Whether the minimum runs over graphs with minimum degree exactly `k`
/// or at least `k`. The formulas are stated for the exact version.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeConstraint {
    Exactly,
    AtLeast,
}

/// Outcome of one exhaustive minimum-size search.
///
/// `min_size` is `None` when no graph in range satisfies the constraints.
/// The witness is the lexicographically smallest minimizer with respect to
/// the sorted list of vertex pairs, independent of `jobs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub n: usize,
    pub k: usize,
    pub connected_required: bool,
    pub min_size: Option<usize>,
    pub witness: Option<String>,
    pub witnesses_at_min: u64,
    pub graphs_examined: u64,
}

/// One comparison row: formula value against the brute-force value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub k: usize,
    pub connected: bool,
    pub formula_value: usize,
    pub oracle_value: Option<usize>,
    #[serde(rename = "match")]
    pub matches: bool,
    pub witness_graph6: Option<String>,
    pub witnesses_at_min: u64,
    pub graphs_examined: u64,
}

/// All comparison rows for orders up to some bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableReport {
    pub rows: Vec<TableRow>,
}

impl TableReport {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matches)
    }
}

/// Minimum size of a chordal graph with order `n`, minimum degree exactly
/// `k`, and (optionally) connectivity, found by exhaustive search.
pub fn brute_force_min_size(
    n: usize,
    k: usize,
    connected_required: bool,
) -> Result<OracleReport, OracleError> {
    brute_force_min_size_with(n, k, connected_required, DegreeConstraint::Exactly, 1)
}

/// Same search fanned out over `jobs` threads; the report is identical to
/// the single-threaded one.
pub fn brute_force_min_size_jobs(
    n: usize,
    k: usize,
    connected_required: bool,
    jobs: usize,
) -> Result<OracleReport, OracleError> {
    brute_force_min_size_with(n, k, connected_required, DegreeConstraint::Exactly, jobs)
}

/// Full-control variant: degree constraint mode and thread count.
pub fn brute_force_min_size_with(
    n: usize,
    k: usize,
    connected_required: bool,
    degree: DegreeConstraint,
    jobs: usize,
) -> Result<OracleReport, OracleError> {
    if n > MAX_ORACLE_ORDER {
        return Err(OracleError::OrderTooLarge(n));
    }
    if k < 1 || k >= n {
        return Err(OracleError::InvalidParams { n, k });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    // Degree-sum floor; starting here (never at a formula value) keeps the
    // search independent of the claims it verifies.
    let mut floor = (n * k).div_ceil(2);
    if connected_required {
        floor = floor.max(n - 1);
    }
    let ctx = ScanCtx {
        pairs: &pairs,
        n,
        k,
        connected_required,
        degree,
    };
    let pool = if jobs > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .expect("worker pool"),
        )
    } else {
        None
    };

    let mut graphs_examined = 0;
    for m in floor..=pairs.len() {
        let level = scan_level(&ctx, m, pool.as_ref());
        graphs_examined += level.examined;
        if level.hits > 0 {
            let indices = level.first.expect("hits imply a first witness");
            let witness = graph_from_pair_indices(n, &pairs, &indices);
            return Ok(OracleReport {
                n,
                k,
                connected_required,
                min_size: Some(m),
                witness: Some(to_graph6(&witness)),
                witnesses_at_min: level.hits,
                graphs_examined,
            });
        }
    }
    Ok(OracleReport {
        n,
        k,
        connected_required,
        min_size: None,
        witness: None,
        witnesses_at_min: 0,
        graphs_examined,
    })
}

struct ScanCtx<'a> {
    pairs: &'a [(usize, usize)],
    n: usize,
    k: usize,
    connected_required: bool,
    degree: DegreeConstraint,
}

struct LevelOutcome {
    examined: u64,
    hits: u64,
    first: Option<Vec<usize>>,
}

/// Scans every `m`-subset of the pair list, split into one partition per
/// smallest pair index. Partitions merge in ascending order, so the first
/// witness is the lexicographically smallest regardless of thread count.
fn scan_level(ctx: &ScanCtx, m: usize, pool: Option<&rayon::ThreadPool>) -> LevelOutcome {
    let p = ctx.pairs.len();
    debug_assert!(m >= 1 && m <= p);
    let firsts: Vec<usize> = (0..=p - m).collect();
    let parts: Vec<(u64, u64, Option<Vec<usize>>)> = match pool {
        Some(pool) => pool.install(|| {
            firsts
                .par_iter()
                .map(|&first| scan_partition(ctx, m, first))
                .collect()
        }),
        None => firsts
            .iter()
            .map(|&first| scan_partition(ctx, m, first))
            .collect(),
    };
    let mut outcome = LevelOutcome {
        examined: 0,
        hits: 0,
        first: None,
    };
    for (examined, hits, first) in parts {
        outcome.examined += examined;
        outcome.hits += hits;
        if outcome.first.is_none() {
            outcome.first = first;
        }
    }
    outcome
}

fn scan_partition(ctx: &ScanCtx, m: usize, first: usize) -> (u64, u64, Option<Vec<usize>>) {
    let mut chosen = Vec::with_capacity(m);
    chosen.push(first);
    let mut examined = 0;
    let mut hits = 0;
    let mut best = None;
    extend(ctx, m, &mut chosen, &mut examined, &mut hits, &mut best);
    (examined, hits, best)
}

fn extend(
    ctx: &ScanCtx,
    m: usize,
    chosen: &mut Vec<usize>,
    examined: &mut u64,
    hits: &mut u64,
    best: &mut Option<Vec<usize>>,
) {
    if chosen.len() == m {
        *examined += 1;
        if accept(ctx, chosen) {
            *hits += 1;
            if best.is_none() {
                *best = Some(chosen.clone());
            }
        }
        return;
    }
    let need = m - chosen.len();
    let from = chosen.last().map_or(0, |&i| i + 1);
    for i in from..=(ctx.pairs.len() - need) {
        chosen.push(i);
        extend(ctx, m, chosen, examined, hits, best);
        chosen.pop();
    }
}

fn accept(ctx: &ScanCtx, chosen: &[usize]) -> bool {
    let mut rows = [0u32; MAX_ORACLE_ORDER];
    for &i in chosen {
        let (a, b) = ctx.pairs[i];
        rows[a] |= 1 << b;
        rows[b] |= 1 << a;
    }
    let rows = &rows[..ctx.n];
    let min_degree = rows.iter().map(|r| r.count_ones() as usize).min().unwrap();
    let degree_ok = match ctx.degree {
        DegreeConstraint::Exactly => min_degree == ctx.k,
        DegreeConstraint::AtLeast => min_degree >= ctx.k,
    };
    if !degree_ok {
        return false;
    }
    if ctx.connected_required && !masks_connected(rows) {
        return false;
    }
    masks_chordal(rows)
}

fn graph_from_pair_indices(n: usize, pairs: &[(usize, usize)], indices: &[usize]) -> Graph {
    Graph::from_edges(n, indices.iter().map(|&i| pairs[i]))
        .expect("pair indices are distinct and in range")
}

/// Definition-level chordality check: no vertex subset of size >= 4 may
/// induce a cycle, that is, be 2-regular and connected inside the subset.
fn masks_chordal(rows: &[u32]) -> bool {
    let n = rows.len();
    for sub in 0u32..(1u32 << n) {
        if sub.count_ones() < 4 {
            continue;
        }
        let mut two_regular = true;
        let mut scan = sub;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            if (rows[v] & sub).count_ones() != 2 {
                two_regular = false;
                break;
            }
        }
        if two_regular && masks_connected_within(rows, sub) {
            return false;
        }
    }
    true
}

fn masks_connected(rows: &[u32]) -> bool {
    let n = rows.len();
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    masks_connected_within(rows, all)
}

fn masks_connected_within(rows: &[u32], sub: u32) -> bool {
    if sub == 0 {
        return true;
    }
    let mut reach = 1u32 << sub.trailing_zeros();
    loop {
        let mut next = reach;
        let mut frontier = reach;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            next |= rows[v] & sub;
        }
        if next == reach {
            return reach == sub;
        }
        reach = next;
    }
}

/// The trust-anchor chordality checker, exposed so test suites can compare
/// it against the elimination-ordering recognizer. Exponential in the
/// order; capped accordingly.
pub fn naive_is_chordal(g: &Graph) -> bool {
    let n = g.order();
    assert!(n <= 16, "subset scan is exponential; capped at order 16");
    let mut rows = vec![0u32; n];
    for e in g.edges() {
        rows[e.u()] |= 1 << e.v();
        rows[e.v()] |= 1 << e.u();
    }
    masks_chordal(&rows)
}

/// Compares brute-force minimum sizes against the closed formulas for all
/// `1 <= k < n <= n_max`. Connected rows are emitted only where the
/// connected formula is defined (`k = 1`, or `k >= 2` with `n >= k + 2`).
pub fn verify_tables(n_max: usize) -> Result<TableReport, OracleError> {
    verify_tables_jobs(n_max, 1)
}

/// Same comparison with each search fanned out over `jobs` threads.
pub fn verify_tables_jobs(n_max: usize, jobs: usize) -> Result<TableReport, OracleError> {
    if n_max > MAX_ORACLE_ORDER {
        return Err(OracleError::OrderTooLarge(n_max));
    }
    let mut rows = Vec::new();
    for n in 2..=n_max {
        for k in 1..n {
            let unrestricted = brute_force_min_size_jobs(n, k, false, jobs)?;
            rows.push(row_from_report(
                unrestricted,
                phi(n, k).expect("1 <= k < n is in range"),
            ));
            if k == 1 || n >= k + 2 {
                let connected = brute_force_min_size_jobs(n, k, true, jobs)?;
                rows.push(row_from_report(
                    connected,
                    g_formula(n, k).expect("hypotheses were just checked"),
                ));
            }
        }
    }
    Ok(TableReport { rows })
}

fn row_from_report(report: OracleReport, formula_value: usize) -> TableRow {
    TableRow {
        n: report.n,
        k: report.k,
        connected: report.connected_required,
        formula_value,
        oracle_value: report.min_size,
        matches: report.min_size == Some(formula_value),
        witness_graph6: report.witness,
        witnesses_at_min: report.witnesses_at_min,
        graphs_examined: report.graphs_examined,
    }
}

/// Random chordal graph by reverse perfect elimination: each new vertex
/// attaches to a nonempty subset of a recorded clique, so every prefix
/// stays chordal. Deterministic for a fixed seed.
///
/// `density` is the probability of keeping each optional clique member;
/// values outside `[0, 1]` are clamped.
pub fn random_chordal(n: usize, density: f64, seed: u64) -> Graph {
    assert!(n >= 1, "graphs have at least one vertex");
    let density = if density.is_nan() {
        0.0
    } else {
        density.clamp(0.0, 1.0)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // cliques[v] is the attachment clique recorded when v arrived.
    let mut cliques: Vec<Vec<usize>> = vec![vec![0]];
    let mut edges = Vec::new();
    for i in 1..n {
        let u = rng.random_range(0..i);
        let mut attach = Vec::new();
        for &v in &cliques[u] {
            let keep = rng.random_bool(density);
            if v == u || keep {
                attach.push(v);
            }
        }
        for &v in &attach {
            edges.push((v, i));
        }
        attach.push(i);
        cliques.push(attach);
    }
    Graph::from_edges(n, edges).expect("attachment edges are simple and in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::parse_graph6;
    use crate::recognition::is_chordal;

    #[test]
    fn naive_checker_on_known_graphs() {
        assert!(!naive_is_chordal(&Graph::cycle(4)));
        assert!(!naive_is_chordal(&Graph::cycle(5)));
        assert!(naive_is_chordal(&Graph::complete(4)));
        assert!(naive_is_chordal(&Graph::path(6)));
        let chorded = Graph::cycle(4)
            .add_edge(crate::graph::Edge::new(0, 2).unwrap())
            .unwrap();
        assert!(naive_is_chordal(&chorded));
        let one_chord_of_five = Graph::cycle(5)
            .add_edge(crate::graph::Edge::new(0, 2).unwrap())
            .unwrap();
        assert!(!naive_is_chordal(&one_chord_of_five));
    }

    #[test]
    fn five_vertices_degree_two_minimum_is_six() {
        let report = brute_force_min_size(5, 2, false).unwrap();
        assert_eq!(report.min_size, Some(6));
        // Every minimizer at (5, 2) is a bowtie: two triangles sharing a
        // vertex. 15 labeled copies.
        assert_eq!(report.witnesses_at_min, 15);
        let witness = parse_graph6(report.witness.as_deref().unwrap()).unwrap();
        assert_eq!(witness.order(), 5);
        assert_eq!(witness.size(), 6);
        assert_eq!(witness.min_degree(), 2);
        assert!(naive_is_chordal(&witness));
        let mut degrees: Vec<usize> = (0..5).map(|v| witness.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![2, 2, 2, 2, 4]);
    }

    #[test]
    fn six_vertices_degree_two_connected_minimum_is_seven() {
        let report = brute_force_min_size(6, 2, true).unwrap();
        assert_eq!(report.min_size, Some(7));
        let witness = parse_graph6(report.witness.as_deref().unwrap()).unwrap();
        assert!(witness.is_connected());
        assert_eq!(witness.min_degree(), 2);
        assert!(naive_is_chordal(&witness));
    }

    #[test]
    fn six_vertices_degree_two_unrestricted_has_ten_minimizers() {
        let report = brute_force_min_size(6, 2, false).unwrap();
        assert_eq!(report.min_size, Some(6));
        assert_eq!(report.witnesses_at_min, 10);
    }

    #[test]
    fn parallel_report_is_identical_to_sequential() {
        let sequential = brute_force_min_size(6, 2, false).unwrap();
        let parallel = brute_force_min_size_jobs(6, 2, false, 4).unwrap();
        assert_eq!(sequential, parallel);
    }

    #[test]
    fn relaxed_degree_mode_runs_and_never_exceeds_exact() {
        let exact = brute_force_min_size(6, 2, false).unwrap();
        let relaxed =
            brute_force_min_size_with(6, 2, false, DegreeConstraint::AtLeast, 1).unwrap();
        assert!(relaxed.min_size.unwrap() <= exact.min_size.unwrap());
    }

    #[test]
    fn small_tables_all_match() {
        let report = verify_tables(5).unwrap();
        assert!(report.all_match());
        // Orders 2..=5: unrestricted rows for every k < n, connected rows
        // except (n, k) = (3, 2), (4, 3), (5, 4).
        assert_eq!(report.rows.len(), 10 + 7);
    }

    #[test]
    fn oracle_rejects_out_of_range_parameters() {
        assert_eq!(
            brute_force_min_size(9, 2, false),
            Err(OracleError::OrderTooLarge(9))
        );
        assert_eq!(
            brute_force_min_size(5, 0, false),
            Err(OracleError::InvalidParams { n: 5, k: 0 })
        );
        assert_eq!(
            brute_force_min_size(5, 5, false),
            Err(OracleError::InvalidParams { n: 5, k: 5 })
        );
        assert!(verify_tables(9).is_err());
    }

    #[test]
    fn random_chordal_is_deterministic_and_chordal() {
        assert_eq!(random_chordal(1, 0.5, 7), Graph::edgeless(1));
        let a = random_chordal(40, 0.5, 7);
        let b = random_chordal(40, 0.5, 7);
        assert_eq!(a, b);
        assert!(is_chordal(&a).is_chordal());
        for seed in 0..20 {
            let g = random_chordal(12, 0.7, seed);
            assert!(is_chordal(&g).is_chordal());
            assert!(naive_is_chordal(&g));
        }
        let dense = random_chordal(10, 1.0, 3);
        assert!(is_chordal(&dense).is_chordal());
        let sparse = random_chordal(10, 0.0, 3);
        assert_eq!(sparse.size(), 9); // a tree: only the mandatory anchors
    }
}
