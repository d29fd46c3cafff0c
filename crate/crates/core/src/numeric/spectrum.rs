use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::jacobi::{sym_eigenvalues, EigenError, DEFAULT_EIG_TOL};
use super::quadratic::{QuadraticError, QuadraticNumber};
use crate::matrix::IntSymMatrix;

/// Relative clustering tolerance; the absolute tolerance is this times
/// `max(1, spectral radius)`.
pub const DEFAULT_CLUSTER_REL: f64 = 1e-6;

/// Floating-point values closer than this (relative) are the same eigenvalue
/// when spectra are assembled from approximate closed forms.
const APPROX_MERGE_REL: f64 = 1e-9;

/// One eigenvalue: exact when a closed form is known, otherwise a float.
#[derive(Debug, Clone, PartialEq)]
pub enum SpecValue {
    Exact(QuadraticNumber),
    Approx(f64),
}

impl SpecValue {
    pub fn int(x: i64) -> Self {
        SpecValue::Exact(QuadraticNumber::from_int(x))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            SpecValue::Exact(q) => q.to_f64(),
            SpecValue::Approx(x) => *x,
        }
    }

    pub fn exact(&self) -> Option<&QuadraticNumber> {
        match self {
            SpecValue::Exact(q) => Some(q),
            SpecValue::Approx(_) => None,
        }
    }

    fn cmp_value(&self, other: &Self) -> Ordering {
        match (self, other) {
            (SpecValue::Exact(a), SpecValue::Exact(b)) => a.cmp_value(b),
            _ => self.to_f64().total_cmp(&other.to_f64()),
        }
    }

    fn same_value(&self, other: &Self) -> bool {
        match (self, other) {
            (SpecValue::Exact(a), SpecValue::Exact(b)) => a == b,
            _ => {
                let (x, y) = (self.to_f64(), other.to_f64());
                (x - y).abs() <= APPROX_MERGE_REL * x.abs().max(y.abs()).max(1.0)
            }
        }
    }
}

impl From<QuadraticNumber> for SpecValue {
    fn from(q: QuadraticNumber) -> Self {
        SpecValue::Exact(q)
    }
}

impl fmt::Display for SpecValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecValue::Exact(q) => write!(f, "{q}"),
            SpecValue::Approx(x) => write!(f, "{}", format_sig(*x, 12)),
        }
    }
}

/// Multiset of eigenvalues, stored as distinct values in strictly
/// decreasing order with positive multiplicities.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    entries: Vec<(SpecValue, usize)>,
}

#[derive(Debug, Error)]
pub enum SpectrumError {
    #[error(transparent)]
    Eigen(#[from] EigenError),
    #[error("invalid exact value: {0}")]
    Exact(#[from] QuadraticError),
    #[error("invalid spectrum JSON: {0}")]
    Json(String),
}

impl Spectrum {
    /// Sorts, merges equal values and drops zero multiplicities.
    pub fn new(mut entries: Vec<(SpecValue, usize)>) -> Self {
        entries.retain(|(_, m)| *m > 0);
        entries.sort_by(|a, b| b.0.cmp_value(&a.0));
        let mut out: Vec<(SpecValue, usize)> = Vec::with_capacity(entries.len());
        for (v, m) in entries {
            match out.last_mut() {
                Some((last, lm)) if last.same_value(&v) => {
                    *lm += m;
                    // keep the exact representative when one side has it
                    if matches!(last, SpecValue::Approx(_)) && matches!(v, SpecValue::Exact(_)) {
                        *last = v;
                    }
                }
                _ => out.push((v, m)),
            }
        }
        Spectrum { entries: out }
    }

    pub fn from_ints(entries: &[(i64, usize)]) -> Self {
        Spectrum::new(
            entries
                .iter()
                .map(|&(v, m)| (SpecValue::int(v), m))
                .collect(),
        )
    }

    pub fn entries(&self) -> &[(SpecValue, usize)] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn distinct_count(&self) -> usize {
        self.entries.len()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.entries.iter().map(|(_, m)| *m).collect()
    }

    pub fn largest(&self) -> Option<&(SpecValue, usize)> {
        self.entries.first()
    }

    pub fn smallest(&self) -> Option<&(SpecValue, usize)> {
        self.entries.last()
    }

    /// Multiplicity of the value within `tol` of `x`, or 0.
    pub fn multiplicity_near(&self, x: f64, tol: f64) -> usize {
        self.entries
            .iter()
            .filter(|(v, _)| (v.to_f64() - x).abs() < tol)
            .map(|(_, m)| m)
            .sum()
    }

    /// All eigenvalues with repetition, descending.
    pub fn expanded_f64(&self) -> Vec<f64> {
        self.entries
            .iter()
            .flat_map(|(v, m)| std::iter::repeat(v.to_f64()).take(*m))
            .collect()
    }

    pub fn trace_f64(&self) -> f64 {
        self.entries
            .iter()
            .map(|(v, m)| v.to_f64() * *m as f64)
            .sum()
    }

    /// Exact trace, when every value is exact and the radicands combine.
    pub fn exact_trace(&self) -> Option<QuadraticNumber> {
        let mut acc = QuadraticNumber::from_int(0);
        for (v, m) in &self.entries {
            let term = v
                .exact()?
                .checked_mul(&QuadraticNumber::from_int(*m as i64))
                .ok()?;
            acc = acc.checked_add(&term).ok()?;
        }
        Some(acc)
    }

    pub fn is_exact(&self) -> bool {
        self.entries.iter().all(|(v, _)| v.exact().is_some())
    }

    /// Counts of positive, zero and negative eigenvalues, with values within
    /// `tol` of zero counted as zero.
    pub fn sign_counts(&self, tol: f64) -> (usize, usize, usize) {
        let mut c = (0, 0, 0);
        for (v, m) in &self.entries {
            let x = v.to_f64();
            if x.abs() < tol {
                c.1 += m;
            } else if x > 0.0 {
                c.0 += m;
            } else {
                c.2 += m;
            }
        }
        c
    }

    pub fn to_json(&self) -> SpectrumJson {
        SpectrumJson {
            n: self.dim(),
            eigs: self
                .entries
                .iter()
                .map(|(v, m)| EigJson {
                    value: round_sig(v.to_f64(), 12),
                    exact: v.exact().map(|q| q.to_string()),
                    mult: *m,
                })
                .collect(),
        }
    }

    pub fn from_json(j: &SpectrumJson) -> Result<Self, SpectrumError> {
        let mut entries = Vec::with_capacity(j.eigs.len());
        for e in &j.eigs {
            let v = match &e.exact {
                Some(s) => SpecValue::Exact(s.parse()?),
                None => SpecValue::Approx(e.value),
            };
            entries.push((v, e.mult));
        }
        let s = Spectrum::new(entries);
        if s.dim() != j.n {
            return Err(SpectrumError::Json(format!(
                "multiplicities sum to {} but n = {}",
                s.dim(),
                j.n
            )));
        }
        Ok(s)
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (v, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if *m == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "({v})^{m}")?;
            }
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigJson {
    pub value: f64,
    pub exact: Option<String>,
    pub mult: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub n: usize,
    pub eigs: Vec<EigJson>,
}

/// Rounds to `digits` significant decimal digits.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{:.*e}", digits.saturating_sub(1), x)
        .parse()
        .unwrap_or(x)
}

/// `x` rounded to `digits` significant digits, in positional notation for
/// moderate magnitudes and exponent notation otherwise.
pub fn format_sig(x: f64, digits: usize) -> String {
    let r = round_sig(x, digits);
    if r != 0.0 && r.is_finite() && !(1e-4..1e15).contains(&r.abs()) {
        format!("{r:e}")
    } else {
        format!("{r}")
    }
}

/// Groups a descending list of eigenvalues: consecutive values closer than
/// `cluster_tol` join the same cluster, represented by its mean.
pub fn cluster_to_spectrum(eigs: &[f64], cluster_tol: f64) -> Spectrum {
    let mut entries: Vec<(SpecValue, usize)> = Vec::new();
    let mut sum = 0.0;
    let mut count = 0usize;
    let mut prev = f64::NAN;
    for &x in eigs {
        if count > 0 && (prev - x).abs() >= cluster_tol {
            entries.push((SpecValue::Approx(sum / count as f64), count));
            sum = 0.0;
            count = 0;
        }
        sum += x;
        count += 1;
        prev = x;
    }
    if count > 0 {
        entries.push((SpecValue::Approx(sum / count as f64), count));
    }
    Spectrum { entries }
}

/// Same dimension, same multiplicity sequence, and every pair of
/// corresponding values within `tol`.
pub fn spectra_match(a: &Spectrum, b: &Spectrum, tol: f64) -> bool {
    a.dim() == b.dim()
        && a.entries.len() == b.entries.len()
        && a.entries
            .iter()
            .zip(&b.entries)
            .all(|((x, mx), (y, my))| mx == my && (x.to_f64() - y.to_f64()).abs() < tol)
}

/// Largest eigenvalue deviation between the expanded spectra, or `None`
/// when the dimensions differ.
pub fn max_deviation(a: &Spectrum, b: &Spectrum) -> Option<f64> {
    let (x, y) = (a.expanded_f64(), b.expanded_f64());
    (x.len() == y.len()).then(|| {
        x.iter()
            .zip(&y)
            .map(|(p, q)| (p - q).abs())
            .fold(0.0, f64::max)
    })
}

/// Sorted eigenvalues of an integer symmetric matrix.
pub fn numeric_eigenvalues(m: &IntSymMatrix, tol: f64) -> Result<Vec<f64>, EigenError> {
    sym_eigenvalues(&m.to_f64(), m.dim(), tol)
}

/// Numeric spectrum with explicit convergence tolerance and relative
/// clustering tolerance.
pub fn numeric_spectrum_with(
    m: &IntSymMatrix,
    tol: f64,
    cluster_rel: f64,
) -> Result<Spectrum, EigenError> {
    let eigs = numeric_eigenvalues(m, tol)?;
    let radius = eigs.iter().fold(0.0f64, |r, x| r.max(x.abs()));
    Ok(cluster_to_spectrum(&eigs, cluster_rel * radius.max(1.0)))
}

pub fn numeric_spectrum(m: &IntSymMatrix) -> Result<Spectrum, EigenError> {
    numeric_spectrum_with(m, DEFAULT_EIG_TOL, DEFAULT_CLUSTER_REL)
}
