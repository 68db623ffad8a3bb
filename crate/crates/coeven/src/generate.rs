//! Corpus generation: exhaustive labeled enumeration and seeded G(n,p)
//! sampling for the range beyond exhaustive reach.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, GraphError};

/// Exhaustive enumeration is refused above this order (2^21 graphs at 7).
pub const MAX_ENUMERATION_VERTICES: usize = 7;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum GenerateError {
    #[error("exhaustive enumeration of n={0} is out of reach (max {MAX_ENUMERATION_VERTICES}); sample with gnp instead")]
    EnumerationTooLarge(usize),
    #[error("edge probability {0} outside [0, 1]")]
    ProbabilityOutOfRange(f64),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Number of labeled graphs on `n` vertices. Only representable up to
/// n = 11 (55 pair bits).
pub fn labeled_graph_count(n: usize) -> u64 {
    let pairs = n * n.saturating_sub(1) / 2;
    assert!(pairs < 64, "2^{pairs} labeled graphs does not fit in u64");
    1u64 << pairs
}

/// All 2^(n(n-1)/2) labeled graphs on `n` vertices, in ascending order of
/// the upper-triangle bit mask with x(0,1) as the least significant bit.
pub fn enumerate_labeled(n: usize) -> Result<impl Iterator<Item = Graph>, GenerateError> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(GenerateError::EnumerationTooLarge(n));
    }
    Ok((0..labeled_graph_count(n))
        .map(move |mask| Graph::from_upper_triangle_mask(n, mask).expect("n is small")))
}

/// One Erdos-Renyi G(n,p) sample. Pairs (i,j), i < j, are visited in
/// lexicographic order and each edge is kept when the next uniform draw
/// falls below `p`, so a (n, p, seed) triple always produces the same graph.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GenerateError> {
    if !(0.0..=1.0).contains(&p) || p.is_nan() {
        return Err(GenerateError::ProbabilityOutOfRange(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::new(n, &edges)?)
}
