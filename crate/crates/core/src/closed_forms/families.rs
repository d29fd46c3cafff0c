use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::combinatorics::{binomial, eberlein, kneser_f, kneser_multiplicity, s_value};
use super::{param, ClosedFormError, ClosedFormSpectrum};
use crate::numeric::{QuadraticNumber, SpecValue, Spectrum};

fn mult(x: BigInt, family: &'static str) -> Result<usize, ClosedFormError> {
    x.to_usize().ok_or(ClosedFormError::Overflow(family))
}

fn pow(base: u64, e: u32) -> BigInt {
    BigInt::from(base).pow(e)
}

fn exact(x: BigInt) -> SpecValue {
    SpecValue::Exact(QuadraticNumber::from_bigint(x))
}

fn rational(x: BigRational) -> SpecValue {
    SpecValue::Exact(QuadraticNumber::rational(x))
}

/// Integer-valued spectrum from `(value, multiplicity)` pairs.
fn int_spectrum(
    family: &'static str,
    formula: &'static str,
    parts: Vec<(BigInt, BigInt)>,
) -> Result<ClosedFormSpectrum, ClosedFormError> {
    let mut entries = Vec::with_capacity(parts.len());
    for (v, m) in parts {
        entries.push((exact(v), mult(m, family)?));
    }
    Ok(ClosedFormSpectrum::new(Spectrum::new(entries), formula))
}

/// `C_n`: `(n²−1)/4` and pairs `−¼sec²(πj/n)` for odd `n`; `n²/4`, zeros,
/// pairs `−csc²(π(2j−1)/n)` and a single `−1` when `n/2` is odd, for even `n`.
pub fn cycle_spectrum(n: usize) -> Result<ClosedFormSpectrum, ClosedFormError> {
    if n < 3 {
        return Err(param("cycle", format!("need n >= 3, got {n}")));
    }
    let nf = n as f64;
    let mut entries = Vec::new();
    if n % 2 == 1 {
        let p = (n - 1) / 2;
        entries.push((exact(BigInt::from((n * n - 1) / 4)), 1));
        for j in 1..=p {
            let c = (PI * j as f64 / nf).cos();
            entries.push((SpecValue::Approx(-0.25 / (c * c)), 2));
        }
    } else {
        let p = n / 2;
        entries.push((exact(BigInt::from(n * n / 4)), 1));
        entries.push((exact(BigInt::zero()), p - 1));
        for j in 1..=p / 2 {
            let s = (PI * (2 * j - 1) as f64 / nf).sin();
            entries.push((SpecValue::Approx(-1.0 / (s * s)), 2));
        }
        if p % 2 == 1 {
            entries.push((exact(BigInt::from(-1)), 1));
        }
    }
    Ok(ClosedFormSpectrum::new(Spectrum::new(entries), "cycle"))
}

/// `H(d, n)`: `{d·n^{d−1}(n−1), 0^(n^d−d(n−1)−1), (−n^{d−1})^(d(n−1))}`.
pub fn hamming_spectrum(d: usize, n: usize) -> Result<ClosedFormSpectrum, ClosedFormError> {
    if d < 1 || n < 2 {
        return Err(param(
            "hamming",
            format!("need d >= 1 and n >= 2, got d = {d}, n = {n}"),
        ));
    }
    let e = u32::try_from(d).map_err(|_| ClosedFormError::Overflow("hamming"))?;
    let top = pow(n as u64, e - 1);
    let dn1 = BigInt::from(d * (n - 1));
    int_spectrum(
        "hamming",
        "hamming",
        vec![
            (&top * &dn1, BigInt::one()),
            (BigInt::zero(), pow(n as u64, e) - &dn1 - 1),
            (-top, dn1),
        ],
    )
}

/// Cartesian power of `m` Shrikhande graphs:
/// `{6m·4^{2m−1}, 0^(16^m−6m−1), (−4^{2m−1})^(6m)}`.
pub fn shrikhande_power_spectrum(m: usize) -> Result<ClosedFormSpectrum, ClosedFormError> {
    if m < 1 {
        return Err(param("shrikhande power", "need m >= 1".into()));
    }
    let m32 = u32::try_from(m).map_err(|_| ClosedFormError::Overflow("shrikhande power"))?;
    let t = pow(4, 2 * m32 - 1);
    let six_m = BigInt::from(6 * m);
    int_spectrum(
        "shrikhande power",
        "shrikhande power",
        vec![
            (&six_m * &t, BigInt::one()),
            (BigInt::zero(), pow(16, m32) - &six_m - 1),
            (-t, six_m),
        ],
    )
}

/// Doob graph `D(m, d)`:
/// `{3(2m+d)·4^{2m+d−1}, 0^(4^{2m+d}−6m−3d−1), (−4^{2m+d−1})^(6m+3d)}`.
pub fn doob_spectrum(m: usize, d: usize) -> Result<ClosedFormSpectrum, ClosedFormError> {
    if m < 1 {
        return Err(param("doob", format!("need m >= 1, got {m}")));
    }
    let e = u32::try_from(2 * m + d).map_err(|_| ClosedFormError::Overflow("doob"))?;
    let t = pow(4, e - 1);
    let k = BigInt::from(6 * m + 3 * d);
    int_spectrum(
        "doob",
        "doob",
        vec![
            (BigInt::from(3 * (2 * m + d)) * &t, BigInt::one()),
            (BigInt::zero(), pow(4, e) - &k - 1),
            (-t, k),
        ],
    )
}

/// `J(n, r)`: `{s, 0^(C(n,r)−n), (−s/(n−1))^(n−1)}` with `s = s(n, r)`.
pub fn johnson_spectrum(n: usize, r: usize) -> Result<ClosedFormSpectrum, ClosedFormError> {
    if r < 1 || r >= n {
        return Err(param(
            "johnson",
            format!("need 1 <= r <= n - 1, got n = {n}, r = {r}"),
        ));
    }
    let s = s_value(n, r);
    let order = binomial(n as i64, r as i64);
    let neg = BigRational::new(-s.clone(), BigInt::from(n - 1));
    let entries = vec![
        (exact(s), 1),
        (exact(BigInt::zero()), mult(order - n, "johnson")?),
        (rational(neg), n - 1),
    ];
    Ok(ClosedFormSpectrum::new(Spectrum::new(entries), "johnson"))
}

/// `K(n, r)`: `θ_j = Σ_i f(i)·p_i(j)` with multiplicity `m_j`; coinciding
/// values are merged.
pub fn kneser_spectrum(n: usize, r: usize) -> Result<ClosedFormSpectrum, ClosedFormError> {
    if r < 1 || n <= 2 * r {
        return Err(param(
            "kneser",
            format!("need n > 2r >= 2, got n = {n}, r = {r}"),
        ));
    }
    let mut entries = Vec::with_capacity(r + 1);
    for j in 0..=r {
        let mut theta = BigInt::zero();
        for i in 0..=r {
            theta += BigInt::from(kneser_f(i, n, r)?) * eberlein(i, j, n, r)?;
        }
        entries.push((exact(theta), mult(kneser_multiplicity(j, n, r)?, "kneser")?));
    }
    Ok(ClosedFormSpectrum::new(Spectrum::new(entries), "kneser"))
}

/// Double odd graph `DO(r)` with `C = C(2r+1, r)` and `s = s(2r+1, r)`:
/// `{(2r+1)C, 0^(2C−2r−2), (−2s/r)^(2r), −(2r+1)C+4s}`.
pub fn double_odd_spectrum(r: usize) -> Result<ClosedFormSpectrum, ClosedFormError> {
    if r < 2 {
        return Err(param("double odd", format!("need r >= 2, got {r}")));
    }
    let n = 2 * r + 1;
    let c = binomial(n as i64, r as i64);
    let s = s_value(n, r);
    let top = BigInt::from(n) * &c;
    let entries = vec![
        (exact(top.clone()), 1),
        (
            exact(BigInt::zero()),
            mult(BigInt::from(2) * &c - 2 * r - 2, "double odd")?,
        ),
        (
            rational(BigRational::new(BigInt::from(-2) * &s, BigInt::from(r))),
            2 * r,
        ),
        (exact(-top + BigInt::from(4) * s), 1),
    ];
    Ok(ClosedFormSpectrum::new(
        Spectrum::new(entries),
        "double odd",
    ))
}

/// Halved cube `½Q_d` for `d >= 4`: `{d·2^{d−3}, 0^(2^{d−1}−d−1), (−2^{d−3})^(d)}`.
/// Smaller `d` is outside the formula's scope and is refused.
pub fn halved_cube_spectrum(d: usize) -> Result<ClosedFormSpectrum, ClosedFormError> {
    if d < 4 {
        return Err(ClosedFormError::HalvedCubeScope(d));
    }
    let e = u32::try_from(d).map_err(|_| ClosedFormError::Overflow("halved cube"))?;
    let t = pow(2, e - 3);
    int_spectrum(
        "halved cube",
        "halved cube",
        vec![
            (BigInt::from(d) * &t, BigInt::one()),
            (BigInt::zero(), pow(2, e - 1) - d - 1),
            (-t, BigInt::from(d)),
        ],
    )
}

/// `CP(m)`: `{2m, 0^(m−1), (−2)^(m)}`.
pub fn cocktail_party_spectrum(m: usize) -> Result<ClosedFormSpectrum, ClosedFormError> {
    if m < 1 {
        return Err(param("cocktail party", "need m >= 1".into()));
    }
    let entries = vec![
        (SpecValue::int(2 * m as i64), 1),
        (SpecValue::int(0), m - 1),
        (SpecValue::int(-2), m),
    ];
    Ok(ClosedFormSpectrum::new(
        Spectrum::new(entries),
        "cocktail party",
    ))
}

/// `K_n`: `{n−1, (−1)^(n−1)}`.
pub fn complete_spectrum(n: usize) -> Result<ClosedFormSpectrum, ClosedFormError> {
    if n < 2 {
        return Err(param("complete", format!("need n >= 2, got {n}")));
    }
    let entries = vec![
        (SpecValue::int(n as i64 - 1), 1),
        (SpecValue::int(-1), n - 1),
    ];
    Ok(ClosedFormSpectrum::new(Spectrum::new(entries), "complete"))
}

fn golden(parts: &[(&str, usize)], formula: &'static str) -> ClosedFormSpectrum {
    let entries = parts
        .iter()
        .map(|(v, m)| (SpecValue::Exact(v.parse().expect("golden value")), *m))
        .collect();
    ClosedFormSpectrum::new(Spectrum::new(entries), formula)
}

/// `{18, 0^(5), (−3+√5)^(3), (−3−√5)^(3)}`.
pub fn icosahedron_spectrum() -> ClosedFormSpectrum {
    golden(
        &[
            ("18", 1),
            ("0", 5),
            ("-3+1*sqrt(5)", 3),
            ("-3-1*sqrt(5)", 3),
        ],
        "icosahedron",
    )
}

/// `{50, 0^(9), (−7+3√5)^(3), (−2)^(4), (−7−3√5)^(3)}`.
pub fn dodecahedron_spectrum() -> ClosedFormSpectrum {
    golden(
        &[
            ("50", 1),
            ("0", 9),
            ("-7+3*sqrt(5)", 3),
            ("-2", 4),
            ("-7-3*sqrt(5)", 3),
        ],
        "dodecahedron",
    )
}

/// Shrikhande graph: `{24, 0^(9), (−4)^(6)}`.
pub fn shrikhande_spectrum() -> ClosedFormSpectrum {
    golden(&[("24", 1), ("0", 9), ("-4", 6)], "shrikhande")
}

/// Petersen graph: `{15, 0^(4), (−3)^(5)}`.
pub fn petersen_spectrum() -> ClosedFormSpectrum {
    golden(&[("15", 1), ("0", 4), ("-3", 5)], "petersen")
}
