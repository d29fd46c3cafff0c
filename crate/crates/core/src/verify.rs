//! Instance checks that compare closed forms against independent oracles.

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::catalog::Family;
use crate::closed_forms::{
    barbell_determinant, barbell_inertia, lemma_identities, ClosedFormError, LemmaIdentity,
};
use crate::distance::{distance_matrix, DistanceError};
use crate::exact::{det_exact, inertia_exact, Inertia};
use crate::graph::{generalized_barbell, GraphError};
use crate::numeric::{max_deviation, numeric_spectrum, spectra_match, EigenError, Spectrum};

/// Default tolerance for closed-form versus numeric comparisons.
pub const DEFAULT_MATCH_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Distance(#[from] DistanceError),
    #[error(transparent)]
    Eigen(#[from] EigenError),
    #[error(transparent)]
    ClosedForm(#[from] ClosedFormError),
}

/// Closed-form and numeric spectra of one family instance.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumCheck {
    pub family: Family,
    pub order: usize,
    pub closed_form: Option<Spectrum>,
    pub numeric: Spectrum,
    /// `None` when there is no closed form to compare with.
    pub matches: Option<bool>,
    pub max_deviation: Option<f64>,
    /// Why the closed form is missing, if it is.
    pub note: Option<String>,
}

impl SpectrumCheck {
    pub fn passed(&self) -> bool {
        self.matches != Some(false)
    }
}

/// Generates the graph, computes its numeric distance spectrum and compares
/// it with the closed form at tolerance `tol`. A family outside the scope
/// of its formula gets a note instead of an error.
pub fn check_spectrum(family: &Family, tol: f64) -> Result<SpectrumCheck, VerifyError> {
    let g = family.graph()?;
    let numeric = numeric_spectrum(&distance_matrix(&g)?)?;
    let (closed_form, note) = match family.closed_form() {
        None => (None, Some("no closed form for this family".to_string())),
        Some(Ok(c)) => (Some(c.spectrum), None),
        Some(Err(e @ ClosedFormError::HalvedCubeScope(_))) => (None, Some(e.to_string())),
        Some(Err(e)) => return Err(e.into()),
    };
    let matches = closed_form
        .as_ref()
        .map(|c| spectra_match(c, &numeric, tol));
    let max_dev = closed_form
        .as_ref()
        .and_then(|c| max_deviation(c, &numeric));
    Ok(SpectrumCheck {
        family: *family,
        order: g.order(),
        closed_form,
        numeric,
        matches,
        max_deviation: max_dev,
        note,
    })
}

/// Determinant and inertia of one generalized barbell, by formula and by
/// exact elimination.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BarbellCheck {
    pub k: usize,
    pub m: usize,
    pub l: usize,
    pub order: usize,
    #[serde(serialize_with = "ser_bigint")]
    pub det_formula: BigInt,
    #[serde(serialize_with = "ser_bigint")]
    pub det_exact: BigInt,
    #[serde(serialize_with = "ser_display")]
    pub inertia_formula: Inertia,
    #[serde(serialize_with = "ser_display")]
    pub inertia_exact: Inertia,
    pub matches: bool,
}

fn ser_bigint<S: serde::Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn ser_display<S: serde::Serializer>(x: &Inertia, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub fn check_barbell(k: usize, m: usize, l: usize) -> Result<BarbellCheck, VerifyError> {
    let d = distance_matrix(&generalized_barbell(k, m, l)?)?;
    let det_formula = barbell_determinant(k, m, l)?;
    let inertia_formula = barbell_inertia(k, m, l)?;
    let det = det_exact(&d);
    let inertia = inertia_exact(&d);
    Ok(BarbellCheck {
        k,
        m,
        l,
        order: d.dim(),
        matches: det == det_formula && inertia == inertia_formula,
        det_formula,
        det_exact: det,
        inertia_formula,
        inertia_exact: inertia,
    })
}

/// Both sides of one binomial identity instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaCheck {
    pub identity: u8,
    pub x: u32,
    pub b: Option<u32>,
    #[serde(serialize_with = "ser_bigint")]
    pub lhs: BigInt,
    #[serde(serialize_with = "ser_bigint")]
    pub rhs: BigInt,
    pub holds: bool,
}

/// Every identity at every admissible parameter up to `max`; the sixth
/// identity also runs `b` over `0..=max_b`.
pub fn lemma_grid(max: u32, max_b: u32) -> Vec<LemmaCheck> {
    let mut out = Vec::new();
    for selector in 1..=6u8 {
        for x in 0..=max {
            let bs: Vec<Option<u32>> = if selector == 6 {
                (0..=max_b).map(Some).collect()
            } else {
                vec![None]
            };
            for b in bs {
                let Ok(id) = LemmaIdentity::from_selector(selector, x, b.unwrap_or(0)) else {
                    continue;
                };
                let (lhs, rhs) = lemma_identities(id);
                out.push(LemmaCheck {
                    identity: selector,
                    x,
                    b,
                    holds: lhs == rhs,
                    lhs,
                    rhs,
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectrum_checks() {
        let c = check_spectrum(&Family::Doob { m: 1, d: 1 }, DEFAULT_MATCH_TOL).unwrap();
        assert_eq!(c.matches, Some(true));
        assert!(c.max_deviation.unwrap() < 1e-8);
        let h = check_spectrum(&Family::HalvedCube(3), DEFAULT_MATCH_TOL).unwrap();
        assert!(h.closed_form.is_none() && h.note.is_some() && h.passed());
        let p = check_spectrum(&Family::Path(5), DEFAULT_MATCH_TOL).unwrap();
        assert_eq!((p.matches, p.order), (None, 5));
        assert!(check_spectrum(&Family::Johnson { n: 4, r: 5 }, DEFAULT_MATCH_TOL).is_err());
    }

    #[test]
    fn barbell_check() {
        let c = check_barbell(3, 4, 2).unwrap();
        assert!(c.matches);
        assert_eq!(c.order, 9);
        assert!(check_barbell(1, 4, 2).is_err());
    }

    #[test]
    fn lemma_grid_shape() {
        let grid = lemma_grid(4, 2);
        // s: 1..=4 and 2..=4; d: 2..=4 three times; a: 2..=4 with b in 0..=2
        assert_eq!(grid.len(), 4 + 3 + 3 * 3 + 3 * 3);
        let failing: Vec<_> = grid
            .iter()
            .filter(|c| !c.holds)
            .map(|c| (c.identity, c.x))
            .collect();
        assert_eq!(failing, vec![(5, 2)]);
    }
}
