//! Exact oracles over integer and rational matrices.
//!
//! Everything here is decided in exact arithmetic: determinants by
//! fraction-free elimination, inertia by symmetric congruence, the number of
//! distinct eigenvalues by the degree of the minimal polynomial, and
//! equitability of partitions by exact rational row sums.

mod det;
mod inertia;
mod minpoly;
mod quotient;

pub use det::{det_exact, rank_exact};
pub use inertia::{inertia_exact, Inertia};
pub use minpoly::{distinct_eigenvalue_count, MINPOLY_DIMENSION_CAP};
pub use quotient::{quotient_matrix, Partition, QuotientMatrix, RationalMatrix};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix of order {n} exceeds the supported cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}
