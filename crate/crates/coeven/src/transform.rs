//! The four one-element graph modifications: vertex removal, edge removal,
//! vertex contraction (delete and cliquify the open neighbourhood) and edge
//! contraction (merge the endpoints, dropping loops and parallels).
//!
//! Every operation leaves its input untouched and returns a fresh graph
//! together with the old-id -> new-id mapping, because the audit layer needs
//! both sides of the modification at once. Relabelling is fixed: deleted ids
//! shift everything above them down by one, and the merge vertex of an edge
//! contraction lands in the slot of the smaller endpoint.

use crate::graph::{bits, Edge, Graph, GraphError, VertexId};

/// A transformed graph plus the vertex relabelling that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformResult {
    pub graph: Graph,
    /// Indexed by old id; `None` marks a deleted vertex. For edge
    /// contraction both endpoints map to the merge vertex.
    pub mapping: Vec<Option<VertexId>>,
    /// The merge vertex, present only for edge contraction.
    pub merged_into: Option<VertexId>,
}

impl TransformResult {
    /// Push a set of old ids through the mapping, dropping deleted vertices
    /// and collapsing merged ones.
    pub fn map_set(&self, set: &[VertexId]) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = set.iter().filter_map(|&v| self.mapping[v]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Old ids that map onto members of `set` (new labels). The merge vertex
    /// pulls back to both endpoints.
    pub fn preimage(&self, set: &[VertexId]) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self
            .mapping
            .iter()
            .enumerate()
            .filter(|(_, m)| m.is_some_and(|nv| set.contains(&nv)))
            .map(|(old, _)| old)
            .collect();
        out.sort_unstable();
        out
    }
}

/// Delete a row/column and compress ids above `v` down by one.
fn drop_vertex_rows(g: &Graph, v: VertexId) -> Vec<u64> {
    let low = crate::graph::full_mask(v);
    g.vertices()
        .filter(|&u| u != v)
        .map(|u| {
            let row = g.row(u) & !(1 << v);
            (row & low) | (row >> (v + 1)) << v
        })
        .collect()
}

fn shift_mapping(n: usize, removed: VertexId) -> Vec<Option<VertexId>> {
    (0..n)
        .map(|u| {
            if u == removed {
                None
            } else if u > removed {
                Some(u - 1)
            } else {
                Some(u)
            }
        })
        .collect()
}

/// G - v: delete `v` and every edge incident to it.
pub fn remove_vertex(g: &Graph, v: VertexId) -> Result<TransformResult, GraphError> {
    if v >= g.vertex_count() {
        return Err(GraphError::InvalidVertex(v, g.vertex_count()));
    }
    Ok(TransformResult {
        graph: Graph::from_rows(drop_vertex_rows(g, v)),
        mapping: shift_mapping(g.vertex_count(), v),
        merged_into: None,
    })
}

/// G - e: delete one edge, keeping every vertex in place.
pub fn remove_edge(g: &Graph, e: Edge) -> Result<TransformResult, GraphError> {
    g.check_edge(e)?;
    let (u, v) = e.endpoints();
    let mut rows: Vec<u64> = g.rows().to_vec();
    rows[u] &= !(1 << v);
    rows[v] &= !(1 << u);
    Ok(TransformResult {
        graph: Graph::from_rows(rows),
        mapping: (0..g.vertex_count()).map(Some).collect(),
        merged_into: None,
    })
}

/// G / v: delete `v` and put a clique on its open neighbourhood. Neighbours
/// that were already adjacent stay simply adjacent.
pub fn contract_vertex(g: &Graph, v: VertexId) -> Result<TransformResult, GraphError> {
    if v >= g.vertex_count() {
        return Err(GraphError::InvalidVertex(v, g.vertex_count()));
    }
    let nbrs = g.row(v);
    let mut rows: Vec<u64> = g.rows().to_vec();
    for a in bits(nbrs) {
        rows[a] |= nbrs & !(1 << a);
    }
    let widened = Graph::from_rows(rows);
    Ok(TransformResult {
        graph: Graph::from_rows(drop_vertex_rows(&widened, v)),
        mapping: shift_mapping(g.vertex_count(), v),
        merged_into: None,
    })
}

/// G / e: replace the endpoints of `e` by one vertex adjacent to the union
/// of their former neighbourhoods. The merge vertex takes the smaller
/// endpoint's slot.
pub fn contract_edge(g: &Graph, e: Edge) -> Result<TransformResult, GraphError> {
    g.check_edge(e)?;
    let (u, v) = e.endpoints();
    let merged = (g.row(u) | g.row(v)) & !(1 << u) & !(1 << v);
    let mut rows: Vec<u64> = g.rows().to_vec();
    rows[u] = merged;
    for x in 0..g.vertex_count() {
        if x == u || x == v {
            continue;
        }
        if merged >> x & 1 == 1 {
            rows[x] |= 1 << u;
        } else {
            rows[x] &= !(1 << u);
        }
        rows[x] &= !(1 << v);
    }
    rows[v] = 0;
    let dropped = drop_vertex_rows(&Graph::from_rows(rows), v);
    let mut mapping = shift_mapping(g.vertex_count(), v);
    mapping[v] = Some(u); // u < v, so u keeps its slot
    Ok(TransformResult {
        graph: Graph::from_rows(dropped),
        mapping,
        merged_into: Some(u),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn edge(u: usize, v: usize) -> Edge {
        Edge::new(u, v).unwrap()
    }

    #[test]
    fn remove_vertex_cases() {
        let c4 = families::cycle(4);
        let r = remove_vertex(&c4, 3).unwrap();
        assert_eq!(r.graph, families::path(3));
        assert_eq!(r.mapping, vec![Some(0), Some(1), Some(2), None]);

        let k4 = families::complete(4);
        assert_eq!(remove_vertex(&k4, 0).unwrap().graph, families::complete(3));

        let star = families::star(3);
        let r = remove_vertex(&star, 0).unwrap();
        assert_eq!(r.graph, Graph::edgeless(3).unwrap());

        assert!(remove_vertex(&c4, 4).is_err());
    }

    #[test]
    fn remove_edge_cases() {
        let c4 = families::cycle(4);
        let r = remove_edge(&c4, edge(0, 1)).unwrap();
        assert_eq!(r.graph, Graph::new(4, &[(1, 2), (2, 3), (3, 0)]).unwrap());
        assert_eq!(r.mapping, vec![Some(0), Some(1), Some(2), Some(3)]);

        let k3 = families::complete(3);
        assert_eq!(
            remove_edge(&k3, edge(0, 1)).unwrap().graph,
            Graph::new(3, &[(0, 2), (1, 2)]).unwrap()
        );
        assert_eq!(
            remove_edge(&families::complete(2), edge(0, 1)).unwrap().graph,
            Graph::edgeless(2).unwrap()
        );
        assert_eq!(
            remove_edge(&c4, edge(0, 2)),
            Err(GraphError::NotAnEdge(0, 2))
        );
    }

    #[test]
    fn contract_vertex_cases() {
        let p3 = families::path(3);
        assert_eq!(contract_vertex(&p3, 1).unwrap().graph, families::complete(2));

        let c4 = families::cycle(4);
        let r = contract_vertex(&c4, 0).unwrap();
        assert_eq!(r.graph, families::complete(3));
        assert_eq!(r.mapping, vec![None, Some(0), Some(1), Some(2)]);

        let k4 = families::complete(4);
        assert_eq!(contract_vertex(&k4, 0).unwrap().graph, families::complete(3));

        // isolated vertex: nothing to cliquify
        let k1 = families::complete(1);
        assert_eq!(contract_vertex(&k1, 0).unwrap().graph, Graph::edgeless(0).unwrap());
    }

    #[test]
    fn contract_edge_cases() {
        let c4 = families::cycle(4);
        let r = contract_edge(&c4, edge(0, 1)).unwrap();
        assert_eq!(r.graph, families::complete(3));
        assert_eq!(r.mapping, vec![Some(0), Some(0), Some(1), Some(2)]);
        assert_eq!(r.merged_into, Some(0));

        let k3 = families::complete(3);
        assert_eq!(contract_edge(&k3, edge(0, 1)).unwrap().graph, families::complete(2));

        let p3 = families::path(3);
        assert_eq!(contract_edge(&p3, edge(0, 1)).unwrap().graph, families::complete(2));

        let k2 = families::complete(2);
        let r = contract_edge(&k2, edge(0, 1)).unwrap();
        assert_eq!(r.graph, Graph::edgeless(1).unwrap());
        assert_eq!(r.mapping, vec![Some(0), Some(0)]);

        assert_eq!(
            contract_edge(&c4, edge(1, 3)),
            Err(GraphError::NotAnEdge(1, 3))
        );
    }

    #[test]
    fn contract_edge_counts_common_neighbors() {
        // diamond: K4 minus edge {2,3}; contracting {0,1} merges two parallels
        let diamond = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let r = contract_edge(&diamond, edge(0, 1)).unwrap();
        assert_eq!(r.graph.edge_count(), diamond.edge_count() - 1 - 2);
        assert_eq!(r.graph, families::star(2));
    }

    #[test]
    fn map_set_and_preimage() {
        let c4 = families::cycle(4);
        let r = contract_edge(&c4, edge(0, 1)).unwrap();
        assert_eq!(r.map_set(&[0, 1, 3]), vec![0, 2]);
        assert_eq!(r.preimage(&[0]), vec![0, 1]);
    }
}
