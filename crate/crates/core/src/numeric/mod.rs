//! Floating-point eigenvalues and spectrum multisets.

mod jacobi;
mod quadratic;
mod spectrum;

pub use jacobi::{sym_eigenvalues, EigenError, DEFAULT_EIG_TOL};
pub use quadratic::{exact_integer_sqrt, QuadraticError, QuadraticNumber};
pub use spectrum::{
    cluster_to_spectrum, format_sig, max_deviation, numeric_eigenvalues, numeric_spectrum,
    numeric_spectrum_with, round_sig, spectra_match, EigJson, SpecValue, Spectrum, SpectrumError,
    SpectrumJson, DEFAULT_CLUSTER_REL,
};
