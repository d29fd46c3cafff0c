//! Benchmark inputs shared by the criterion targets in `benches/`.

use distspec::{distance_matrix, Graph, IntSymMatrix};

/// Distance matrix of a generator that is known to succeed.
pub fn dist(g: Graph) -> IntSymMatrix {
    distance_matrix(&g).expect("benchmark graphs are connected")
}
