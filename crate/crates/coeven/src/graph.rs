//! Immutable simple undirected graphs over dense vertex ids `0..n`.
//!
//! Adjacency is stored as one `u64` neighbour mask per vertex, which keeps
//! the solver kernels branch-free and caps graphs at [`MAX_VERTICES`]
//! vertices. Everything downstream (graph6 interchange, exhaustive
//! enumeration, the exact solvers) lives comfortably below that limit.

use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// Vertex ids are plain indices into `0..n`, valid only for one graph.
pub type VertexId = usize;

/// Hard cap imposed by the one-word adjacency rows.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    InvalidVertex(usize, usize),
    #[error("graph on {0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("{{{0}, {1}}} is not an edge of the graph")]
    NotAnEdge(usize, usize),
}

/// An unordered pair of distinct vertices, stored with the smaller id first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    a: VertexId,
    b: VertexId,
}

impl Edge {
    pub fn new(u: VertexId, v: VertexId) -> Result<Edge, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(Edge {
            a: u.min(v),
            b: u.max(v),
        })
    }

    /// Endpoints in ascending order.
    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.a, self.b)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.a, self.b)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(2))?;
        seq.serialize_element(&self.a)?;
        seq.serialize_element(&self.b)?;
        seq.end()
    }
}

/// A vertex or an edge of some graph; the unit an audit check applies to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Element {
    Vertex(VertexId),
    Edge(Edge),
}

/// Immutable simple graph. No loops, no parallel edges, label-sensitive
/// equality (same `n`, same edge set).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Build a graph from an edge list. Duplicate edges collapse.
    pub fn new(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::InvalidVertex(u, n));
            }
            if v >= n {
                return Err(GraphError::InvalidVertex(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    /// Edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Result<Graph, GraphError> {
        Graph::new(n, &[])
    }

    /// Decode an upper-triangle bit mask: bit 0 is the pair (0,1), followed
    /// by (0,2), (1,2), (0,3), ... (column-major order). Only meaningful for
    /// n(n-1)/2 <= 64.
    pub fn from_upper_triangle_mask(n: usize, mask: u64) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        debug_assert!(n * n.saturating_sub(1) / 2 <= 64);
        let mut adj = vec![0u64; n];
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> bit & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                bit += 1;
            }
        }
        Ok(Graph { n, adj })
    }

    pub(crate) fn from_rows(adj: Vec<u64>) -> Graph {
        debug_assert!(adj.len() <= MAX_VERTICES);
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(v, &row)| row >> v & 1 == 0 && row & !full_mask(adj.len()) == 0));
        Graph { n: adj.len(), adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.n
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex(v, self.n))
        }
    }

    pub(crate) fn check_edge(&self, e: Edge) -> Result<(), GraphError> {
        let (u, v) = e.endpoints();
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if self.adj[u] >> v & 1 == 1 {
            Ok(())
        } else {
            Err(GraphError::NotAnEdge(u, v))
        }
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(u != v && self.adj[u] >> v & 1 == 1)
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adj[v].count_ones() as usize)
    }

    /// Open (or, with `closed`, closed) neighbourhood of `v`, ascending.
    pub fn neighborhood(&self, v: VertexId, closed: bool) -> Result<Vec<VertexId>, GraphError> {
        self.check_vertex(v)?;
        let mask = if closed {
            self.adj[v] | 1 << v
        } else {
            self.adj[v]
        };
        Ok(bits(mask).collect())
    }

    /// Neighbour mask of `v`; unchecked, crate-internal fast path.
    pub(crate) fn row(&self, v: VertexId) -> u64 {
        self.adj[v]
    }

    pub(crate) fn closed_row(&self, v: VertexId) -> u64 {
        self.adj[v] | 1 << v
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Edges in lexicographic order of (min, max).
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let upper = self.adj[u] & !low_mask(u + 1);
            for v in bits(upper) {
                out.push(Edge { a: u, b: v });
            }
        }
        out
    }

    /// Maximal connected vertex sets, each ascending, ordered by smallest
    /// member. The empty graph has no components.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        self.component_masks().into_iter().map(|m| bits(m).collect()).collect()
    }

    pub(crate) fn component_masks(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << s;
            loop {
                let mut next = comp;
                for v in bits(comp) {
                    next |= self.adj[v];
                }
                if next == comp {
                    break;
                }
                comp = next;
            }
            seen |= comp;
            comps.push(comp);
        }
        comps
    }

    /// Subgraph induced by the vertices of `mask`, relabelled densely in
    /// ascending order, along with the local -> original id table.
    pub(crate) fn induced(&self, mask: u64) -> (Graph, Vec<VertexId>) {
        let verts: Vec<VertexId> = bits(mask).collect();
        let mut adj = vec![0u64; verts.len()];
        for (lu, &u) in verts.iter().enumerate() {
            for (lv, &v) in verts.iter().enumerate() {
                if self.adj[u] >> v & 1 == 1 {
                    adj[lu] |= 1 << lv;
                }
            }
        }
        (Graph::from_rows(adj), verts)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let (u, v) = e.endpoints();
            write!(f, "{u}{v}",)?;
        }
        write!(f, "])")
    }
}

/// Iterate the set bits of a mask in ascending order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Mask with the lowest `n` bits set; `n` may be 64.
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn low_mask(n: usize) -> u64 {
    full_mask(n)
}

pub(crate) fn mask_of(vs: &[VertexId]) -> u64 {
    vs.iter().fold(0u64, |m, &v| m | 1 << v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn degree_basics() {
        let c4 = families::cycle(4);
        assert_eq!(c4.degree(0).unwrap(), 2);
        let k4 = families::complete(4);
        assert_eq!(k4.degree(2).unwrap(), 3);
        let k1 = families::complete(1);
        assert_eq!(k1.degree(0).unwrap(), 0);
        assert_eq!(k1.degree(1), Err(GraphError::InvalidVertex(1, 1)));
    }

    #[test]
    fn neighborhood_open_and_closed() {
        let c4 = families::cycle(4);
        assert_eq!(c4.neighborhood(0, false).unwrap(), vec![1, 3]);
        assert_eq!(c4.neighborhood(0, true).unwrap(), vec![0, 1, 3]);
        let k1 = families::complete(1);
        assert_eq!(k1.neighborhood(0, false).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn components_partition() {
        let c4 = families::cycle(4);
        assert_eq!(c4.connected_components(), vec![vec![0, 1, 2, 3]]);
        let two_k1 = Graph::edgeless(2).unwrap();
        assert_eq!(two_k1.connected_components(), vec![vec![0], vec![1]]);
        let k3_k2 = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (3, 4)]).unwrap();
        assert_eq!(k3_k2.connected_components(), vec![vec![0, 1, 2], vec![3, 4]]);
        let empty = Graph::edgeless(0).unwrap();
        assert!(empty.connected_components().is_empty());
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(
            Graph::new(2, &[(0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
        assert_eq!(
            Graph::new(2, &[(0, 5)]),
            Err(GraphError::InvalidVertex(5, 2))
        );
        assert!(Graph::edgeless(65).is_err());
        assert_eq!(Edge::new(3, 3), Err(GraphError::SelfLoop(3)));
    }

    #[test]
    fn edge_normalizes_order() {
        let e = Edge::new(5, 2).unwrap();
        assert_eq!(e.endpoints(), (2, 5));
        assert_eq!(Edge::new(2, 5).unwrap(), e);
    }

    #[test]
    fn edges_are_lexicographic() {
        let g = Graph::new(4, &[(2, 3), (0, 3), (0, 1)]).unwrap();
        let es: Vec<_> = g.edges().iter().map(|e| e.endpoints()).collect();
        assert_eq!(es, vec![(0, 1), (0, 3), (2, 3)]);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn upper_triangle_mask_order() {
        // bit 0 = (0,1), bit 1 = (0,2), bit 2 = (1,2)
        let g = Graph::from_upper_triangle_mask(3, 0b101).unwrap();
        assert!(g.has_edge(0, 1).unwrap());
        assert!(!g.has_edge(0, 2).unwrap());
        assert!(g.has_edge(1, 2).unwrap());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let k3_k2 = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (3, 4)]).unwrap();
        let (sub, verts) = k3_k2.induced(0b11000);
        assert_eq!(verts, vec![3, 4]);
        assert_eq!(sub, families::complete(2));
    }
}
