//! Chordality recognition with certificates.
//!
//! The recognizer runs maximum cardinality search and checks whether the
//! reverse visit order is a perfect elimination ordering. On success the
//! ordering itself is the certificate; on failure a chordless cycle of
//! length at least 4 is extracted from the first violation.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognitionError {
    #[error("ordering is not a permutation of the graph's vertices")]
    NotPermutation,
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("graph is not chordal")]
    NotChordal,
    #[error("graph is complete: no nonadjacent vertex pair exists")]
    CompleteGraph,
}

/// A permutation of `0..n-1`, read as the elimination sequence `v_1, ..., v_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrdering(Vec<usize>);

impl EliminationOrdering {
    /// Wraps a vertex sequence without checking it against any graph.
    pub fn new(order: Vec<usize>) -> Self {
        Self(order)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    fn positions(&self, n: usize) -> Result<Vec<usize>, RecognitionError> {
        if self.0.len() != n {
            return Err(RecognitionError::NotPermutation);
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in self.0.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(RecognitionError::NotPermutation);
            }
            pos[v] = i;
        }
        Ok(pos)
    }
}

/// The first witness that an ordering is not perfect: `later_a` and
/// `later_b` are nonadjacent neighbors of `vertex` that follow it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeoViolation {
    pub vertex: usize,
    pub later_a: usize,
    pub later_b: usize,
}

/// Either a perfect elimination ordering or a chordless cycle of length >= 4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChordalityVerdict {
    Chordal(EliminationOrdering),
    NotChordal(Vec<usize>),
}

impl ChordalityVerdict {
    pub fn is_chordal(&self) -> bool {
        matches!(self, ChordalityVerdict::Chordal(_))
    }
}

/// Maximum cardinality search, returned as an elimination ordering
/// (the reverse of the visit order).
///
/// Ties among maximal weights break toward the smallest vertex id, so the
/// result is fully deterministic.
pub fn mcs_order(g: &Graph) -> EliminationOrdering {
    let n = g.order();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best = usize::MAX;
        let mut best_weight = 0;
        for v in 0..n {
            if !visited[v] && (best == usize::MAX || weight[v] > best_weight) {
                best = v;
                best_weight = weight[v];
            }
        }
        visited[best] = true;
        visit.push(best);
        for w in g.neighbors(best) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    visit.reverse();
    EliminationOrdering(visit)
}

/// Scans the ordering for the first vertex whose later neighbors are not a
/// clique. Returns `None` when the ordering is perfect.
///
/// The scan runs over elimination positions in ascending order, and within
/// each vertex over later-neighbor pairs in ascending id order, so the
/// reported violation is deterministic.
pub fn check_perfect_elimination(
    g: &Graph,
    order: &EliminationOrdering,
) -> Result<Option<PeoViolation>, RecognitionError> {
    let n = g.order();
    let pos = order.positions(n)?;
    let adj = g.adjacency_matrix();
    for (i, &v) in order.as_slice().iter().enumerate() {
        let later: Vec<usize> = g.neighbors(v).filter(|&w| pos[w] > i).collect();
        for (ai, &a) in later.iter().enumerate() {
            for &b in &later[ai + 1..] {
                if !adj.has_edge(a, b) {
                    return Ok(Some(PeoViolation {
                        vertex: v,
                        later_a: a,
                        later_b: b,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// True iff `order` is a perfect elimination ordering of `g`.
pub fn is_perfect_elimination(
    g: &Graph,
    order: &EliminationOrdering,
) -> Result<bool, RecognitionError> {
    Ok(check_perfect_elimination(g, order)?.is_none())
}

/// Decides chordality with a certificate either way.
pub fn is_chordal(g: &Graph) -> ChordalityVerdict {
    let order = mcs_order(g);
    match check_perfect_elimination(g, &order).expect("mcs_order returns a permutation") {
        None => ChordalityVerdict::Chordal(order),
        Some(violation) => {
            let cycle = extract_chordless_cycle(g, &order, violation);
            debug_assert!(is_chordless_cycle(g, &cycle));
            ChordalityVerdict::NotChordal(cycle)
        }
    }
}

/// From a violation `(v, a, b)`, finds a shortest `(a,b)`-path in the graph
/// induced on the vertices after `v` in the ordering minus `N[v] \ {a, b}`,
/// then closes it with `v` into a chordless cycle.
///
/// Maximum cardinality search guarantees such a path exists whenever the
/// ordering it produced has a violation.
fn extract_chordless_cycle(
    g: &Graph,
    order: &EliminationOrdering,
    violation: PeoViolation,
) -> Vec<usize> {
    let n = g.order();
    let pos = order
        .positions(n)
        .expect("violation came from a checked permutation");
    let PeoViolation {
        vertex: v,
        later_a: a,
        later_b: b,
    } = violation;

    let mut allowed = vec![false; n];
    for w in 0..n {
        allowed[w] = pos[w] > pos[v];
    }
    for w in g.neighbors(v) {
        if w != a && w != b {
            allowed[w] = false;
        }
    }
    allowed[v] = false;

    // BFS from a to b; sorted adjacency fixes the tie-breaking.
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    seen[a] = true;
    queue.push_back(a);
    'bfs: while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if allowed[w] && !seen[w] {
                seen[w] = true;
                parent[w] = u;
                if w == b {
                    break 'bfs;
                }
                queue.push_back(w);
            }
        }
    }
    assert!(seen[b], "no witness path: violation does not come from an MCS ordering");

    let mut path = vec![b];
    while *path.last().unwrap() != a {
        path.push(parent[*path.last().unwrap()]);
    }
    path.reverse();
    path.push(v);
    path
}

/// Verifies that `cycle` is a chordless cycle of `g` with length >= 4:
/// distinct vertices, consecutive pairs adjacent, all other pairs not.
pub fn is_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let m = cycle.len();
    if m < 4 {
        return false;
    }
    let mut seen = vec![false; g.order()];
    for &v in cycle {
        if v >= g.order() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    for i in 0..m {
        for j in (i + 1)..m {
            let consecutive = j == i + 1 || (i == 0 && j == m - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

/// True iff the neighborhood of `v` is a clique. Isolated vertices count.
pub fn is_simplicial(g: &Graph, v: usize) -> bool {
    let nbrs: Vec<usize> = g.neighbors(v).collect();
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if !g.has_edge(a, b) {
                return false;
            }
        }
    }
    true
}

/// All simplicial vertices, ascending.
pub fn simplicial_vertices(g: &Graph) -> Vec<usize> {
    (0..g.order()).filter(|&v| is_simplicial(g, v)).collect()
}

/// Two nonadjacent simplicial vertices of a noncomplete chordal graph
/// (such a pair always exists, a classical fact due to Dirac),
/// lexicographically first.
pub fn dirac_pair(g: &Graph) -> Result<(usize, usize), RecognitionError> {
    if !is_chordal(g).is_chordal() {
        return Err(RecognitionError::NotChordal);
    }
    if g.is_complete() {
        return Err(RecognitionError::CompleteGraph);
    }
    let simplicial = simplicial_vertices(g);
    for (i, &u) in simplicial.iter().enumerate() {
        for &w in &simplicial[i + 1..] {
            if !g.has_edge(u, w) {
                return Ok((u, w));
            }
        }
    }
    unreachable!("a noncomplete chordal graph has two nonadjacent simplicial vertices");
}

/// True iff `d(x) = n - 1`.
pub fn is_dominating(g: &Graph, x: usize) -> Result<bool, RecognitionError> {
    if x >= g.order() {
        return Err(RecognitionError::VertexOutOfRange {
            vertex: x,
            order: g.order(),
        });
    }
    Ok(g.degree(x) == g.order() - 1)
}
