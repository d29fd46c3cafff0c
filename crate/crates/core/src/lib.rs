//! Distance spectra of graphs: generators, exact and floating-point linear
//! algebra, closed-form spectra for distance-regular families, strongly
//! regular parameter analysis, and zero-forcing bounds.
//!
//! The most used types are re-exported at the crate root.

pub mod bounds;
pub mod catalog;
pub mod closed_forms;
pub mod distance;
pub mod exact;
pub mod graph;
pub mod matrix;
pub mod numeric;
pub mod srg;
pub mod verify;

pub use bounds::BoundsError;
pub use catalog::{CatalogError, Family};
pub use closed_forms::{ClosedFormError, ClosedFormSpectrum};
pub use distance::{distance_matrix, DistanceError};
pub use exact::{Inertia, LinalgError, Partition};
pub use graph::{Graph, GraphError};
pub use matrix::IntSymMatrix;
pub use numeric::{EigenError, QuadraticNumber, SpecValue, Spectrum};
pub use srg::{SrgError, SrgParams};
