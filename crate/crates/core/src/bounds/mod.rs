//! Zero forcing, the eigenvalue-count lower bound it gives, and tree checks.

mod forcing;
mod trees;

pub use forcing::{forcing_closure, zero_forcing_number, zf_eigenvalue_bound, ZERO_FORCING_CAP};
pub use trees::{
    check_tree_bounds, enumerate_trees, summarize_order, tree_canonical_code, verify_trees,
    TreeBoundRecord, TreeOrderSummary, MAX_TREE_ORDER, MIN_TREE_ORDER,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundsError {
    #[error("order {n} exceeds the search budget of {cap} vertices")]
    Budget { n: usize, cap: usize },
    #[error("vertex {v} out of range for order {n}")]
    Vertex { v: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("tree order {n} outside {min}..={max}")]
    TreeOrder { n: usize, min: usize, max: usize },
    #[error("linear algebra failure: {0}")]
    Linalg(String),
}
