//! Minimum-size formulas for chordal graphs with a given order and minimum
//! degree, and labeled constructions attaining them.
//!
//! Throughout, `n` is the order, `k` the minimum degree, and `n = q(k+1) + r`
//! with `0 <= r <= k`. `phi` is the minimum size over all chordal graphs,
//! `g_formula` the minimum over connected ones (defined for k = 1, n >= 2
//! and for k >= 2, n >= k+2).

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("invalid parameters n = {n}, k = {k}: need k >= 1 and n >= k + 1")]
    InvalidParams { n: usize, k: usize },
    #[error(
        "invalid parameters for the connected minimum, n = {n}, k = {k}: \
         need n >= 2 when k = 1 and n >= k + 2 when k >= 2"
    )]
    InvalidConnectedParams { n: usize, k: usize },
}

/// The derived quantities `q = floor(n / (k+1))` and `r = n - q(k+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalParams {
    pub n: usize,
    pub k: usize,
    pub q: usize,
    pub r: usize,
}

impl ExtremalParams {
    pub fn new(n: usize, k: usize) -> Result<Self, ExtremalError> {
        if k < 1 || n < k + 1 {
            return Err(ExtremalError::InvalidParams { n, k });
        }
        let q = n / (k + 1);
        let r = n - q * (k + 1);
        Ok(Self { n, k, q, r })
    }
}

/// Which case produced a construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FamilyTag {
    /// `q` disjoint copies of `K_{k+1}` (r = 0).
    #[serde(rename = "r0")]
    R0,
    /// One clique joined to two disjoint cliques (r >= 1, q = 1).
    #[serde(rename = "q1")]
    Q1,
    /// The q = 1 graph with one edge swapped toward an appended clique.
    #[serde(rename = "q2")]
    Q2,
    /// The chain extension appending one clique per step (r >= 1, q >= 3).
    #[serde(rename = "q3plus")]
    Q3Plus,
    /// Connected r = 0 family: cliques chained through bridges.
    #[serde(rename = "connected_r0")]
    ConnectedR0,
    /// Path on n vertices (the connected k = 1 minimizer).
    #[serde(rename = "path")]
    Path,
}

/// A built extremal graph together with what the construction promises.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionResult {
    pub graph: Graph,
    pub predicted_size: usize,
    /// Present when the construction guarantees a specific bridge.
    pub designated_cut_edge: Option<Edge>,
    pub family_tag: FamilyTag,
}

/// Minimum size of a chordal graph with order `n` and minimum degree `k`:
/// `q * C(k+1, 2) + k*r - r(r-1)/2`.
pub fn phi(n: usize, k: usize) -> Result<usize, ExtremalError> {
    let p = ExtremalParams::new(n, k)?;
    Ok(p.q * choose2(k + 1) + k * p.r - choose2(p.r))
}

/// Minimum size of a connected chordal graph with order `n` and minimum
/// degree `k`: `n - 1` for k = 1; for k >= 2 and n >= k+2 it is `phi(n, k)`,
/// plus one exactly when `k + 1` divides `n`.
pub fn g_formula(n: usize, k: usize) -> Result<usize, ExtremalError> {
    if k < 1 || (k == 1 && n < 2) || (k >= 2 && n < k + 2) {
        return Err(ExtremalError::InvalidConnectedParams { n, k });
    }
    if k == 1 {
        return Ok(n - 1);
    }
    let p = ExtremalParams::new(n, k)?;
    Ok(phi(n, k)? + usize::from(p.r == 0))
}

fn choose2(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

/// Builds a chordal graph of order `n`, minimum degree exactly `k`, and
/// size `phi(n, k)`.
///
/// Labeling is deterministic: the q = 1 case labels the joined clique
/// first and the two wing cliques after it; every appended clique takes
/// the next block of ids.
pub fn construct_q(n: usize, k: usize) -> Result<ConstructionResult, ExtremalError> {
    let p = ExtremalParams::new(n, k)?;
    let predicted = phi(n, k)?;
    let result = match (p.r, p.q) {
        (0, q) => {
            let mut graph = Graph::complete(k + 1);
            for _ in 1..q {
                graph = graph.disjoint_union(&Graph::complete(k + 1));
            }
            ConstructionResult {
                graph,
                predicted_size: predicted,
                designated_cut_edge: None,
                family_tag: FamilyTag::R0,
            }
        }
        (_, 1) => ConstructionResult {
            graph: joined_wings(n, k),
            predicted_size: predicted,
            designated_cut_edge: None,
            family_tag: FamilyTag::Q1,
        },
        (_, 2) => {
            // Start from the q = 1 graph one clique smaller, swap the edge
            // from its joined clique to the first wing for a bridge into a
            // fresh clique.
            let sub = n - (k + 1);
            let center_size = 2 * k + 2 - sub;
            let b1 = center_size;
            let graph = joined_wings(sub, k)
                .delete_edge(Edge::new(0, b1).unwrap())
                .unwrap()
                .disjoint_union(&Graph::complete(k + 1))
                .add_edge(Edge::new(b1, sub).unwrap())
                .unwrap();
            ConstructionResult {
                graph,
                predicted_size: predicted,
                designated_cut_edge: Some(Edge::new(b1, sub).unwrap()),
                family_tag: FamilyTag::Q2,
            }
        }
        (_, _) => {
            // Reroute the previous bridge through a fresh clique: delete
            // the old bridge {b1, c1} and one clique edge {b2, c2}, then
            // add {b1, b2} and {c1, c2}.
            let sub = n - (k + 1);
            let inner = construct_q(sub, k)?;
            let old = inner
                .designated_cut_edge
                .expect("the q >= 2 cases always designate a bridge");
            let (b1, c1) = (old.u(), old.v());
            let (b2, c2) = (sub, sub + 1);
            let graph = inner
                .graph
                .delete_edge(old)
                .unwrap()
                .disjoint_union(&Graph::complete(k + 1))
                .delete_edge(Edge::new(b2, c2).unwrap())
                .unwrap()
                .add_edge(Edge::new(b1, b2).unwrap())
                .unwrap()
                .add_edge(Edge::new(c1, c2).unwrap())
                .unwrap();
            ConstructionResult {
                graph,
                predicted_size: predicted,
                designated_cut_edge: Some(Edge::new(c1, c2).unwrap()),
                family_tag: FamilyTag::Q3Plus,
            }
        }
    };
    debug_assert_eq!(result.graph.order(), n);
    debug_assert_eq!(result.graph.size(), result.predicted_size);
    debug_assert_eq!(result.graph.min_degree(), k);
    Ok(result)
}

/// `K_c` joined to `K_r + K_r` where `c = 2k - n + 2` and `r = n - k - 1`;
/// the minimizer for `q = 1`, `r >= 1` (that is, k+2 <= n <= 2k+1).
fn joined_wings(n: usize, k: usize) -> Graph {
    let center = 2 * k + 2 - n;
    let wing = n - k - 1;
    Graph::complete(center).join(&Graph::complete(wing).disjoint_union(&Graph::complete(wing)))
}

/// Builds a connected chordal graph of order `n`, minimum degree exactly
/// `k`, and size `g_formula(n, k)`.
pub fn construct_b(n: usize, k: usize) -> Result<ConstructionResult, ExtremalError> {
    if k < 1 || (k == 1 && n < 2) || (k >= 2 && n < k + 2) {
        return Err(ExtremalError::InvalidConnectedParams { n, k });
    }
    let predicted = g_formula(n, k)?;
    if k == 1 {
        let result = ConstructionResult {
            graph: Graph::path(n),
            predicted_size: predicted,
            designated_cut_edge: Some(Edge::new(0, 1).unwrap()),
            family_tag: FamilyTag::Path,
        };
        debug_assert_eq!(result.graph.size(), predicted);
        return Ok(result);
    }
    let p = ExtremalParams::new(n, k)?;
    if p.r != 0 {
        // The size-phi construction is already connected in this regime.
        return construct_q(n, k);
    }
    let result = if p.q == 2 {
        let graph = Graph::complete(k + 1)
            .disjoint_union(&Graph::complete(k + 1))
            .add_edge(Edge::new(0, k + 1).unwrap())
            .unwrap();
        ConstructionResult {
            graph,
            predicted_size: predicted,
            designated_cut_edge: Some(Edge::new(0, k + 1).unwrap()),
            family_tag: FamilyTag::ConnectedR0,
        }
    } else {
        // Same rerouting step as the disconnected chain, but pairing the
        // bridge endpoints head-to-head so the result stays connected.
        let sub = n - (k + 1);
        let inner = construct_b(sub, k)?;
        let old = inner
            .designated_cut_edge
            .expect("the connected r = 0 cases always designate a bridge");
        let (a1, b1) = (old.u(), old.v());
        let (a2, b2) = (sub, sub + 1);
        let graph = inner
            .graph
            .delete_edge(old)
            .unwrap()
            .disjoint_union(&Graph::complete(k + 1))
            .delete_edge(Edge::new(a2, b2).unwrap())
            .unwrap()
            .add_edge(Edge::new(a1, a2).unwrap())
            .unwrap()
            .add_edge(Edge::new(b1, b2).unwrap())
            .unwrap();
        ConstructionResult {
            graph,
            predicted_size: predicted,
            designated_cut_edge: Some(Edge::new(a1, a2).unwrap()),
            family_tag: FamilyTag::ConnectedR0,
        }
    };
    debug_assert_eq!(result.graph.order(), n);
    debug_assert_eq!(result.graph.size(), result.predicted_size);
    debug_assert_eq!(result.graph.min_degree(), k);
    debug_assert!(result.graph.is_connected());
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognition::is_chordal;

    #[test]
    fn phi_closed_form_values() {
        assert_eq!(phi(2, 1).unwrap(), 1);
        assert_eq!(phi(4, 3).unwrap(), 6);
        assert_eq!(phi(5, 2).unwrap(), 6);
        assert_eq!(phi(6, 2).unwrap(), 6);
        assert_eq!(phi(7, 2).unwrap(), 8);
        assert_eq!(phi(8, 2).unwrap(), 9);
        assert_eq!(phi(11, 2).unwrap(), 12);
    }

    #[test]
    fn phi_rejects_bad_parameters() {
        assert_eq!(phi(3, 0), Err(ExtremalError::InvalidParams { n: 3, k: 0 }));
        assert_eq!(phi(3, 3), Err(ExtremalError::InvalidParams { n: 3, k: 3 }));
    }

    #[test]
    fn g_closed_form_values() {
        assert_eq!(g_formula(5, 1).unwrap(), 4);
        assert_eq!(g_formula(6, 2).unwrap(), 7);
        assert_eq!(g_formula(7, 2).unwrap(), 8);
        assert_eq!(g_formula(9, 2).unwrap(), 10);
    }

    #[test]
    fn g_rejects_pairs_outside_its_hypotheses() {
        assert_eq!(
            g_formula(4, 3),
            Err(ExtremalError::InvalidConnectedParams { n: 4, k: 3 })
        );
        assert_eq!(
            g_formula(3, 2),
            Err(ExtremalError::InvalidConnectedParams { n: 3, k: 2 })
        );
        assert_eq!(
            g_formula(1, 1),
            Err(ExtremalError::InvalidConnectedParams { n: 1, k: 1 })
        );
    }

    #[test]
    fn two_triangles_at_six_two() {
        let c = construct_q(6, 2).unwrap();
        assert_eq!(c.family_tag, FamilyTag::R0);
        assert_eq!(c.designated_cut_edge, None);
        assert_eq!(
            c.graph,
            Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]).unwrap()
        );
        // k-regular and disconnected, as the r = 0 family must be.
        assert!((0..6).all(|v| c.graph.degree(v) == 2));
        assert!(!c.graph.is_connected());
    }

    #[test]
    fn bowtie_at_five_two() {
        let c = construct_q(5, 2).unwrap();
        assert_eq!(c.family_tag, FamilyTag::Q1);
        assert_eq!(
            c.graph,
            Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)]).unwrap()
        );
        assert_eq!(c.predicted_size, 6);
    }

    #[test]
    fn chain_case_at_eight_two() {
        let c = construct_q(8, 2).unwrap();
        assert_eq!(c.family_tag, FamilyTag::Q2);
        assert_eq!(c.graph.size(), 9);
        assert_eq!(c.graph.min_degree(), 2);
        assert!(is_chordal(&c.graph).is_chordal());
        let bridge = c.designated_cut_edge.unwrap();
        assert_eq!(bridge, Edge::new(1, 5).unwrap());
        assert!(c.graph.cut_edges().contains(&bridge));
    }

    #[test]
    fn chain_case_at_eleven_two() {
        let c = construct_q(11, 2).unwrap();
        assert_eq!(c.family_tag, FamilyTag::Q3Plus);
        assert_eq!(c.graph.size(), 12);
        assert_eq!(c.graph.min_degree(), 2);
        assert!(is_chordal(&c.graph).is_chordal());
        let bridge = c.designated_cut_edge.unwrap();
        assert_eq!(bridge, Edge::new(5, 9).unwrap());
        assert!(c.graph.cut_edges().contains(&bridge));
    }

    #[test]
    fn degree_one_chain_is_a_sparse_forest() {
        let c = construct_q(5, 1).unwrap();
        assert_eq!(c.graph.size(), 3);
        assert_eq!(c.graph.min_degree(), 1);
        assert!(is_chordal(&c.graph).is_chordal());
        assert!(!c.graph.is_connected());
    }

    #[test]
    fn connected_base_case_joins_two_cliques() {
        let c = construct_b(6, 2).unwrap();
        assert_eq!(c.family_tag, FamilyTag::ConnectedR0);
        assert_eq!(
            c.graph,
            Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3)])
                .unwrap()
        );
        assert_eq!(c.predicted_size, 7);
        assert!(c.graph.cut_edges().contains(&Edge::new(0, 3).unwrap()));
    }

    #[test]
    fn connected_step_case_at_nine_two() {
        let c = construct_b(9, 2).unwrap();
        assert_eq!(c.family_tag, FamilyTag::ConnectedR0);
        assert_eq!(c.graph.size(), 10);
        assert_eq!(c.graph.min_degree(), 2);
        assert!(c.graph.is_connected());
        assert!(is_chordal(&c.graph).is_chordal());
        let bridge = c.designated_cut_edge.unwrap();
        assert_eq!(bridge, Edge::new(0, 6).unwrap());
        assert!(c.graph.cut_edges().contains(&bridge));
    }

    #[test]
    fn connected_nonzero_remainder_reuses_the_sparse_family() {
        let b = construct_b(7, 2).unwrap();
        let q = construct_q(7, 2).unwrap();
        assert_eq!(b.graph, q.graph);
        assert_eq!(b.graph.size(), 8);
        assert!(b.graph.is_connected());
    }

    #[test]
    fn connected_degree_one_is_a_path() {
        let c = construct_b(5, 1).unwrap();
        assert_eq!(c.family_tag, FamilyTag::Path);
        assert_eq!(c.graph, Graph::path(5));
        assert_eq!(c.predicted_size, 4);
    }

    #[test]
    fn construct_rejects_bad_parameters() {
        assert!(construct_q(3, 3).is_err());
        assert!(construct_b(4, 3).is_err());
        assert!(construct_b(3, 2).is_err());
    }

    #[test]
    fn family_tags_serialize_to_their_wire_names() {
        let names: Vec<String> = [
            FamilyTag::R0,
            FamilyTag::Q1,
            FamilyTag::Q2,
            FamilyTag::Q3Plus,
            FamilyTag::ConnectedR0,
            FamilyTag::Path,
        ]
        .iter()
        .map(|t| serde_json::to_string(t).unwrap())
        .collect();
        assert_eq!(
            names,
            vec![
                "\"r0\"",
                "\"q1\"",
                "\"q2\"",
                "\"q3plus\"",
                "\"connected_r0\"",
                "\"path\""
            ]
        );
    }
}
