//! Chordality-preserving edge edits.
//!
//! Three operations, each of which maps a chordal graph to a chordal graph:
//! adding one edge at a nondominating vertex, deleting one edge at a
//! simplicial vertex, and the two loops built on top of those steps that
//! lower or raise the minimum degree to a target.

use thiserror::Error;

use crate::graph::{Edge, Graph};
use crate::recognition::{is_chordal, is_simplicial, ChordalityVerdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EditError {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("input graph is not chordal")]
    NotChordal,
    #[error("vertex {0} is adjacent to every other vertex: no edge can be added at it")]
    DominatingVertex(usize),
    #[error("vertex {0} is not simplicial")]
    NotSimplicial(usize),
    #[error("edge {edge} is not incident to vertex {vertex}")]
    EdgeNotIncident { edge: Edge, vertex: usize },
    #[error("edge {0} is not present")]
    EdgeAbsent(Edge),
    #[error("target minimum degree {target} is not below the current minimum degree {current}")]
    TargetNotBelow { target: usize, current: usize },
    #[error("graph on {order} vertices is too small for minimum degree {target}")]
    TooFewVertices { order: usize, target: usize },
}

/// One recorded edit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EditStep {
    Added(Edge),
    Deleted(Edge),
}

impl EditStep {
    pub fn edge(&self) -> Edge {
        match *self {
            EditStep::Added(e) | EditStep::Deleted(e) => e,
        }
    }
}

/// An ordered record of edits. Replaying the steps from the input graph
/// reproduces the output graph, and every intermediate graph is chordal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EditTrace {
    pub steps: Vec<EditStep>,
    pub initial_size: usize,
    pub final_size: usize,
}

impl EditTrace {
    fn new(initial_size: usize) -> Self {
        Self {
            steps: Vec::new(),
            initial_size,
            final_size: initial_size,
        }
    }

    fn record(&mut self, step: EditStep, current_size: usize) {
        self.steps.push(step);
        self.final_size = current_size;
    }

    /// Applies the recorded steps to `g` and returns the resulting graph.
    pub fn replay(&self, g: &Graph) -> Result<Graph, crate::graph::GraphError> {
        let mut out = g.clone();
        for step in &self.steps {
            out = match *step {
                EditStep::Added(e) => out.add_edge(e)?,
                EditStep::Deleted(e) => out.delete_edge(e)?,
            };
        }
        Ok(out)
    }
}

/// Finds a vertex `y` nonadjacent to `x` such that `g + xy` stays chordal.
///
/// The search starts from the chordless path `x, y_1, z_1` where `y_1` is
/// the smallest neighbor of `x` with a neighbor outside `N[x]` and `z_1`
/// is the smallest such outside neighbor. While `g + x z_i` has a
/// chordless cycle, the next candidate is the third vertex of the path
/// obtained from that cycle by deleting the edge `x z_i`. Each round pins
/// another vertex into a growing clique around `x`, so at most `n` rounds
/// run.
///
/// When no neighbor of `x` reaches outside `N[x]`, the component of `x`
/// is the clique `N[x]`, so any nonadjacent vertex lies in another
/// component; the smallest one is returned, and the new edge is a bridge.
pub fn augment_edge(g: &Graph, x: usize) -> Result<usize, EditError> {
    augment_edge_trace(g, x).map(|(y, _)| y)
}

/// Same as [`augment_edge`], but also reports how many candidate vertices
/// were tried before one succeeded.
pub fn augment_edge_trace(g: &Graph, x: usize) -> Result<(usize, usize), EditError> {
    let n = g.order();
    if x >= n {
        return Err(EditError::VertexOutOfRange { vertex: x, order: n });
    }
    if !is_chordal(g).is_chordal() {
        return Err(EditError::NotChordal);
    }
    if g.degree(x) == n - 1 {
        return Err(EditError::DominatingVertex(x));
    }

    let closed = g.neighbor_set(x);
    let outside = |v: usize| v != x && !closed.contains(&v);

    let start = g.neighbors(x).find_map(|y| {
        g.neighbors(y).find(|&z| outside(z)).map(|z| (y, z))
    });
    let Some((_, z1)) = start else {
        // The component of x is a clique; bridge to the smallest vertex
        // outside it.
        let y = (0..n).find(|&v| outside(v)).expect("x is nondominating");
        debug_assert!(is_chordal(&g.add_edge(Edge::new(x, y).unwrap()).unwrap()).is_chordal());
        return Ok((y, 1));
    };

    let mut candidate = z1;
    for round in 1..=n {
        let edge = Edge::new(x, candidate).expect("candidate differs from x");
        let augmented = g.add_edge(edge).expect("candidate is outside N[x]");
        match is_chordal(&augmented) {
            ChordalityVerdict::Chordal(_) => return Ok((candidate, round)),
            ChordalityVerdict::NotChordal(cycle) => {
                candidate = advance_candidate(&cycle, x, candidate);
                debug_assert!(outside(candidate));
            }
        }
    }
    unreachable!("augmentation exceeded the clique-growth bound of n rounds");
}

/// Given a chordless cycle of `g + x·z` through the edge `{x, z}`, walks
/// the cycle from `x` away from `z` and returns the second vertex reached.
fn advance_candidate(cycle: &[usize], x: usize, z: usize) -> usize {
    let m = cycle.len();
    debug_assert!(m >= 4);
    let ix = cycle
        .iter()
        .position(|&v| v == x)
        .expect("witness cycle passes through x");
    let next = cycle[(ix + 1) % m];
    let prev = cycle[(ix + m - 1) % m];
    debug_assert!(next == z || prev == z, "witness cycle uses the new edge");
    if next == z {
        cycle[(ix + m - 2) % m]
    } else {
        cycle[(ix + 2) % m]
    }
}

/// Deletes edge `e` at a simplicial vertex `x`. The result is chordal
/// whenever the input is: a chordless cycle through `x` would need two
/// nonadjacent neighbors of `x`, and the neighborhood of `x` is a clique.
pub fn delete_edge_at_simplicial(g: &Graph, x: usize, e: Edge) -> Result<Graph, EditError> {
    if x >= g.order() {
        return Err(EditError::VertexOutOfRange {
            vertex: x,
            order: g.order(),
        });
    }
    if !e.is_incident_to(x) {
        return Err(EditError::EdgeNotIncident { edge: e, vertex: x });
    }
    if !g.has_edge(e.u(), e.v()) {
        return Err(EditError::EdgeAbsent(e));
    }
    if !is_simplicial(g, x) {
        return Err(EditError::NotSimplicial(x));
    }
    let out = g.delete_edge(e).expect("presence was checked");
    // Short-circuits after one check on the usual chordal-in, chordal-out
    // path; a nonchordal input stays nonchordal, so the disjunction holds
    // exactly when deletion preserved the verdict.
    debug_assert!(
        is_chordal(&out).is_chordal() || !is_chordal(g).is_chordal(),
        "deleting an edge at a simplicial vertex must preserve chordality"
    );
    Ok(out)
}

/// Thins a chordal graph down to minimum degree exactly `p` by repeatedly
/// deleting, at the smallest simplicial vertex, its smallest incident edge.
///
/// Every vertex has degree at least `p + 1` before each deletion, so no
/// degree drops below `p`; the degree sum strictly decreases, so the loop
/// terminates with minimum degree exactly `p`.
pub fn reduce_min_degree(g: &Graph, p: usize) -> Result<(Graph, EditTrace), EditError> {
    if !is_chordal(g).is_chordal() {
        return Err(EditError::NotChordal);
    }
    let delta = g.min_degree();
    if p >= delta {
        return Err(EditError::TargetNotBelow {
            target: p,
            current: delta,
        });
    }
    let mut current = g.clone();
    let mut trace = EditTrace::new(g.size());
    while current.min_degree() > p {
        let v = (0..current.order())
            .find(|&v| current.degree(v) >= 1 && is_simplicial(&current, v))
            .expect("a chordal graph with an edge has a nonisolated simplicial vertex");
        let w = current.neighbors(v).next().expect("degree >= 1");
        let e = Edge::new(v, w).expect("neighbors are distinct");
        current = delete_edge_at_simplicial(&current, v, e)?;
        trace.record(EditStep::Deleted(e), current.size());
    }
    Ok((current, trace))
}

/// Adds edges until every vertex has degree at least `k`, keeping the
/// graph chordal. Deficient vertices are processed in ascending id order;
/// each one is nondominating while its degree is below `k <= n - 1`, so
/// [`augment_edge`] always applies.
pub fn raise_min_degree(g: &Graph, k: usize) -> Result<(Graph, EditTrace), EditError> {
    let n = g.order();
    if n < k + 1 {
        return Err(EditError::TooFewVertices { order: n, target: k });
    }
    if !is_chordal(g).is_chordal() {
        return Err(EditError::NotChordal);
    }
    let mut current = g.clone();
    let mut trace = EditTrace::new(g.size());
    loop {
        let Some(v) = (0..n).find(|&v| current.degree(v) < k) else {
            return Ok((current, trace));
        };
        let y = augment_edge(&current, v)?;
        let e = Edge::new(v, y).expect("augmentation target differs from v");
        current = current.add_edge(e).expect("augmentation target is nonadjacent");
        debug_assert!(is_chordal(&current).is_chordal());
        trace.record(EditStep::Added(e), current.size());
    }
}
