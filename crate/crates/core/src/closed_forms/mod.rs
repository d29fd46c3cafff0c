//! Closed-form distance spectra, determinants and inertias.
//!
//! Integer and quadratic-irrational values are exact; only cycle spectra
//! involve trigonometric values and are carried as floats.

mod barbell;
mod combinatorics;
mod families;
mod operations;

pub use barbell::{barbell_determinant, barbell_inertia, barbell_partition, lollipop_determinant};
pub use combinatorics::{
    binomial, eberlein, kneser_f, kneser_multiplicity, lemma_identities, s_value, LemmaIdentity,
};
pub use families::{
    cocktail_party_spectrum, complete_spectrum, cycle_spectrum, dodecahedron_spectrum,
    doob_spectrum, double_odd_spectrum, halved_cube_spectrum, hamming_spectrum,
    icosahedron_spectrum, johnson_spectrum, kneser_spectrum, petersen_spectrum,
    shrikhande_power_spectrum, shrikhande_spectrum,
};
pub use operations::{block_lemma_spectrum, product_spectrum, BlockCoefficients};

use thiserror::Error;

use crate::numeric::Spectrum;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("{family}: {constraint}")]
    Parameter {
        family: &'static str,
        constraint: String,
    },
    #[error("the halved cube formula covers d >= 4 only (got d = {0}); use the numeric spectrum instead")]
    HalvedCubeScope(usize),
    #[error("spectrum has dimension {found}, expected {expected}")]
    Dimension { expected: usize, found: usize },
    #[error("{0}: parameters too large")]
    Overflow(&'static str),
}

pub(crate) fn param(family: &'static str, constraint: String) -> ClosedFormError {
    ClosedFormError::Parameter { family, constraint }
}

/// A spectrum produced by a closed formula, tagged with the formula's name.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormSpectrum {
    pub spectrum: Spectrum,
    pub formula: &'static str,
}

impl ClosedFormSpectrum {
    pub fn new(spectrum: Spectrum, formula: &'static str) -> Self {
        ClosedFormSpectrum { spectrum, formula }
    }

    pub fn order(&self) -> usize {
        self.spectrum.dim()
    }
}
