//! Simple undirected graphs over dense vertex ids `0..n-1`.
//!
//! Graphs are immutable values: every edit returns a new graph, so callers
//! can keep intermediate states around freely (enumeration, edit traces,
//! parallel search). Adjacency is stored as sorted sets, which makes every
//! iteration order, and therefore all downstream tie-breaking, deterministic.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Errors from graph construction and edge edits.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order must be at least 1")]
    ZeroOrder,
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("edge {0} already present")]
    EdgeAlreadyPresent(Edge),
    #[error("edge {0} absent")]
    EdgeAbsent(Edge),
}

/// An unordered pair of distinct vertices, normalized so `u() < v()`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Normalizes the pair; rejects loops.
    pub fn new(a: usize, b: usize) -> Result<Self, GraphError> {
        if a == b {
            return Err(GraphError::LoopEdge(a));
        }
        Ok(Self {
            u: a.min(b),
            v: a.max(b),
        })
    }

    /// Smaller endpoint.
    pub fn u(&self) -> usize {
        self.u
    }

    /// Larger endpoint.
    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    /// The endpoint other than `x`; `None` if `x` is not an endpoint.
    pub fn other(&self, x: usize) -> Option<usize> {
        if x == self.u {
            Some(self.v)
        } else if x == self.v {
            Some(self.u)
        } else {
            None
        }
    }

    pub fn is_incident_to(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.u, self.v)
    }
}

/// A simple undirected graph on vertices `0..order-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// The graph with `n` vertices and no edges. Panics if `n == 0`.
    pub fn edgeless(n: usize) -> Self {
        assert!(n >= 1, "graph order must be at least 1");
        Self {
            adj: vec![BTreeSet::new(); n],
        }
    }

    /// The complete graph `K_n`. Panics if `n == 0`.
    pub fn complete(n: usize) -> Self {
        let mut g = Self::edgeless(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// The path `0 - 1 - ... - n-1`. Panics if `n == 0`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::edgeless(n);
        for u in 1..n {
            g.insert_edge(u - 1, u);
        }
        g
    }

    /// The cycle `0 - 1 - ... - n-1 - 0`. Panics if `n < 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Self::path(n);
        g.insert_edge(0, n - 1);
        g
    }

    /// Builds a graph from an explicit edge list, validating everything.
    ///
    /// Rejects out-of-range endpoints, loops, and duplicates (after
    /// normalization) with distinct errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::ZeroOrder);
        }
        let mut g = Self::edgeless(n);
        for (a, b) in edges {
            let e = Edge::new(a, b)?;
            if e.v() >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: e.v(),
                    order: n,
                });
            }
            if g.has_edge(e.u(), e.v()) {
                return Err(GraphError::DuplicateEdge(e));
            }
            g.insert_edge(e.u(), e.v());
        }
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn neighbor_set(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].contains(&v)
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.has_edge(e.u(), e.v())
    }

    /// All edges, normalized and in ascending order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push(Edge { u, v });
                }
            }
        }
        out
    }

    /// Minimum degree; 0 for edgeless graphs.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// True iff `d(x) = n - 1`.
    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.adj.iter().all(|nb| nb.len() == n - 1)
    }

    /// True iff every vertex is reachable from vertex 0. `K_1` is connected.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// The bridges of the graph, in ascending normalized order.
    pub fn cut_edges(&self) -> Vec<Edge> {
        // Iterative DFS with low-link values; an edge (parent, child) is a
        // bridge iff low[child] > disc[parent].
        let n = self.order();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut bridges = Vec::new();
        let mut timer = 0;

        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // Stack holds (vertex, neighbor iterator position).
            let mut stack: Vec<(usize, Vec<usize>, usize)> = Vec::new();
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, self.adj[root].iter().copied().collect(), 0));
            while let Some((u, nbrs, idx)) = stack.last_mut() {
                let u = *u;
                if *idx < nbrs.len() {
                    let w = nbrs[*idx];
                    *idx += 1;
                    if disc[w] == usize::MAX {
                        parent[w] = u;
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, self.adj[w].iter().copied().collect(), 0));
                    } else if w != parent[u] {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&mut (p, _, _)) = stack.last_mut() {
                        low[p] = low[p].min(low[u]);
                        if low[u] > disc[p] {
                            bridges.push(Edge {
                                u: p.min(u),
                                v: p.max(u),
                            });
                        }
                    }
                }
            }
        }
        bridges.sort();
        bridges
    }

    /// Returns a copy with `e` added. Errors if `e` is present or out of range.
    pub fn add_edge(&self, e: Edge) -> Result<Self, GraphError> {
        if e.v() >= self.order() {
            return Err(GraphError::VertexOutOfRange {
                vertex: e.v(),
                order: self.order(),
            });
        }
        if self.contains(e) {
            return Err(GraphError::EdgeAlreadyPresent(e));
        }
        let mut g = self.clone();
        g.insert_edge(e.u(), e.v());
        Ok(g)
    }

    /// Returns a copy with `e` removed. Errors if `e` is absent.
    pub fn delete_edge(&self, e: Edge) -> Result<Self, GraphError> {
        if !self.contains(e) {
            return Err(GraphError::EdgeAbsent(e));
        }
        let mut g = self.clone();
        g.adj[e.u()].remove(&e.v());
        g.adj[e.v()].remove(&e.u());
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are relabeled by offset `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.order();
        let mut adj = self.adj.clone();
        for nbrs in &other.adj {
            adj.push(nbrs.iter().map(|&w| w + offset).collect());
        }
        Graph { adj }
    }

    /// Join: disjoint union plus all cross edges.
    pub fn join(&self, other: &Graph) -> Graph {
        let offset = self.order();
        let mut g = self.disjoint_union(other);
        for u in 0..offset {
            for v in offset..g.order() {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// Subgraph induced on `keep` (ascending relabeling: `keep[i]` becomes `i`).
    ///
    /// Panics if `keep` is empty, unsorted, or out of range.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        assert!(!keep.is_empty(), "induced subgraph needs at least one vertex");
        assert!(
            keep.windows(2).all(|w| w[0] < w[1]),
            "induced subgraph vertex list must be strictly ascending"
        );
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::edgeless(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                if w > v && index[w] != usize::MAX {
                    g.insert_edge(i, index[w]);
                }
            }
        }
        g
    }

    /// Checks the structural invariants: symmetry, irreflexivity, ids in
    /// range, and the degree-sum identity.
    pub fn validate(&self) -> Result<(), GraphError> {
        let n = self.order();
        if n == 0 {
            return Err(GraphError::ZeroOrder);
        }
        let mut degree_sum = 0;
        for (v, nbrs) in self.adj.iter().enumerate() {
            degree_sum += nbrs.len();
            for &w in nbrs {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
                if w == v {
                    return Err(GraphError::LoopEdge(v));
                }
                if !self.adj[w].contains(&v) {
                    // Asymmetry shows up as a missing reverse edge.
                    return Err(GraphError::EdgeAbsent(Edge {
                        u: v.min(w),
                        v: v.max(w),
                    }));
                }
            }
        }
        debug_assert_eq!(degree_sum, 2 * self.size());
        Ok(())
    }

    pub(crate) fn adjacency_matrix(&self) -> AdjMatrix {
        AdjMatrix::from_graph(self)
    }
}

/// Bitset adjacency matrix for O(1) pair queries in hot loops.
pub(crate) struct AdjMatrix {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl AdjMatrix {
    fn from_graph(g: &Graph) -> Self {
        let n = g.order();
        let words_per_row = n.div_ceil(64);
        let mut bits = vec![0u64; n * words_per_row];
        for u in 0..n {
            for &v in &g.adj[u] {
                bits[u * words_per_row + v / 64] |= 1 << (v % 64);
            }
        }
        Self {
            n,
            words_per_row,
            bits,
        }
    }

    #[inline]
    pub(crate) fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.words_per_row + v / 64] >> (v % 64) & 1 != 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::complete(4)
    }

    #[test]
    fn from_edges_builds_path() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 2);
        assert_eq!(g.degree(1), 2);
        g.validate().unwrap();
    }

    #[test]
    fn from_edges_single_vertex() {
        let g = Graph::from_edges(1, []).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.size(), 0);
        assert_eq!(g.min_degree(), 0);
    }

    #[test]
    fn from_edges_complete_k4() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(g, k4());
        assert!((0..4).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::LoopEdge(1)));
        let dup = Edge::new(0, 1).unwrap();
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(dup))
        );
        assert_eq!(Graph::from_edges(0, []), Err(GraphError::ZeroOrder));
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(k4().min_degree(), 3);
        assert_eq!(Graph::path(3).min_degree(), 1);
        let two_triangles = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert_eq!(two_triangles.min_degree(), 2);
    }

    #[test]
    fn connectivity_examples() {
        let two_triangles = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert!(!two_triangles.is_connected());
        assert!(Graph::path(3).is_connected());
        assert!(!Graph::edgeless(2).is_connected());
        assert!(Graph::edgeless(1).is_connected());
    }

    #[test]
    fn cut_edges_examples() {
        let p3 = Graph::path(3);
        assert_eq!(
            p3.cut_edges(),
            vec![Edge::new(0, 1).unwrap(), Edge::new(1, 2).unwrap()]
        );
        assert!(Graph::complete(3).cut_edges().is_empty());

        let bridge = Edge::new(0, 3).unwrap();
        let joined = Graph::complete(3)
            .disjoint_union(&Graph::complete(3))
            .add_edge(bridge)
            .unwrap();
        assert_eq!(joined.cut_edges(), vec![bridge]);
    }

    #[test]
    fn add_and_delete_edges() {
        let p3 = Graph::path(3);
        let e = Edge::new(0, 2).unwrap();
        let triangle = p3.add_edge(e).unwrap();
        assert_eq!(triangle, Graph::complete(3));
        assert_eq!(p3.size(), 2, "value semantics: input unchanged");

        let e01 = Edge::new(0, 1).unwrap();
        let path_again = Graph::complete(3).delete_edge(e01).unwrap();
        assert_eq!(path_again.size(), 2);
        assert_eq!(path_again.degree(0), 1);

        let back = path_again.add_edge(e01).unwrap();
        assert_eq!(back, Graph::complete(3));

        assert_eq!(
            triangle.add_edge(e),
            Err(GraphError::EdgeAlreadyPresent(e))
        );
        assert_eq!(p3.delete_edge(e), Err(GraphError::EdgeAbsent(e)));
    }

    #[test]
    fn union_and_join() {
        // join(K_1, 2K_1) is the path 1 - 0 - 2.
        let star = Graph::edgeless(1).join(&Graph::edgeless(2));
        assert_eq!(star.order(), 3);
        assert_eq!(star.size(), 2);
        assert_eq!(star.degree(0), 2);

        let two_triangles = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert_eq!(two_triangles.order(), 6);
        assert_eq!(two_triangles.size(), 6);

        // K_{2k-n+2} v (K_{n-k-1} + K_{n-k-1}) at n=5, k=2: 5 vertices, 6 edges.
        let wings = Graph::complete(2).disjoint_union(&Graph::complete(2));
        let q52 = Graph::complete(1).join(&wings);
        assert_eq!(q52.order(), 5);
        assert_eq!(q52.size(), 6);
        assert_eq!(q52.degree(0), 4);
    }

    #[test]
    fn join_and_union_size_identity() {
        let g1 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let g2 = Graph::path(3);
        let u = g1.disjoint_union(&g2);
        assert_eq!(u.size(), g1.size() + g2.size());
        let j = g1.join(&g2);
        assert_eq!(j.size(), g1.size() + g2.size() + g1.order() * g2.order());
        u.validate().unwrap();
        j.validate().unwrap();
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = Graph::cycle(5);
        let h = g.induced_subgraph(&[0, 1, 2, 4]);
        assert_eq!(h.order(), 4);
        // Edges 0-1, 1-2, and 4-0 survive; 4 is relabeled to 3.
        assert_eq!(h.size(), 3);
        assert!(h.has_edge(0, 3));
    }

    #[test]
    fn edges_are_sorted_and_normalized() {
        let g = Graph::from_edges(4, [(3, 1), (2, 0), (1, 0)]).unwrap();
        let es = g.edges();
        assert_eq!(
            es,
            vec![
                Edge::new(0, 1).unwrap(),
                Edge::new(0, 2).unwrap(),
                Edge::new(1, 3).unwrap()
            ]
        );
    }

    #[test]
    fn edge_accessors() {
        let e = Edge::new(5, 2).unwrap();
        assert_eq!(e.endpoints(), (2, 5));
        assert_eq!(e.other(2), Some(5));
        assert_eq!(e.other(5), Some(2));
        assert_eq!(e.other(3), None);
        assert!(e.is_incident_to(2));
        assert!(!e.is_incident_to(0));
        assert_eq!(Edge::new(1, 1), Err(GraphError::LoopEdge(1)));
    }
}
