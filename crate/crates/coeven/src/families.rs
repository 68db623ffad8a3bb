//! Named graph constructors: standard families plus the hand-built gadgets
//! that realise bound equalities the exhaustive sweeps cannot reach.

use crate::graph::Graph;

/// Path on `n` vertices, edges i-(i+1).
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges).expect("path within vertex limit")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a simple cycle needs at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges).expect("cycle within vertex limit")
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).expect("complete graph within vertex limit")
}

/// Star: centre 0 with `leaves` pendant vertices.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::new(leaves + 1, &edges).expect("star within vertex limit")
}

/// Two adjacent centres 0 and 1 carrying `a` and `b` pendant leaves.
///
/// Contracting the centre edge of `double_star(2, 2)` lowers the co-even
/// domination number by exactly 2, and of `double_star(3, 3)` keeps it
/// unchanged; both extremes of the edge-contraction window are realised.
pub fn double_star(a: usize, b: usize) -> Graph {
    let mut edges = vec![(0, 1)];
    edges.extend((0..a).map(|i| (0, 2 + i)));
    edges.extend((0..b).map(|i| (1, 2 + a + i)));
    Graph::new(2 + a + b, &edges).expect("double star within vertex limit")
}

/// Two triangles {0,1,2} and {3,4,5} joined by the bridge 2-3 and the back
/// edge 0-5. Removing the bridge drops the co-even domination number from
/// 4 to 2, the full width of the edge-removal window.
pub fn bridged_triangles() -> Graph {
    Graph::new(
        6,
        &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3), (0, 5)],
    )
    .expect("static gadget")
}

/// Eight-vertex gadget whose co-even domination number jumps from 2 to 5
/// when the degree-4 vertex 0 is removed, meeting the vertex-removal upper
/// bound with equality.
///
/// Vertex 0 is joined to 1..=4; vertex 2 carries a pendant triangle {2,5,6};
/// vertices 1, 3, 4 share the collector 7.
pub fn vertex_removal_upper_witness() -> Graph {
    Graph::new(
        8,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (2, 5),
            (5, 6),
            (6, 2),
            (1, 7),
            (3, 7),
            (4, 7),
        ],
    )
    .expect("static gadget")
}
