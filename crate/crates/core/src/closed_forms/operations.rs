use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::ClosedFormError;
use crate::numeric::{QuadraticNumber, SpecValue, Spectrum};

/// `a·v + c`, exact when `v` is.
fn affine(v: &SpecValue, a: &BigRational, c: &BigRational) -> SpecValue {
    match v {
        SpecValue::Exact(q) => SpecValue::Exact(q.scale(a).add_rational(c)),
        SpecValue::Approx(x) => {
            SpecValue::Approx(a.to_f64().unwrap_or(f64::NAN) * x + c.to_f64().unwrap_or(f64::NAN))
        }
    }
}

fn sum(x: &SpecValue, y: &SpecValue) -> SpecValue {
    match (x, y) {
        (SpecValue::Exact(p), SpecValue::Exact(q)) => match p.checked_add(q) {
            Ok(s) => SpecValue::Exact(s),
            Err(_) => SpecValue::Approx(p.to_f64() + q.to_f64()),
        },
        _ => SpecValue::Approx(x.to_f64() + y.to_f64()),
    }
}

fn int(x: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn check_dim(s: &Spectrum, n: usize) -> Result<(), ClosedFormError> {
    if s.dim() != n {
        return Err(ClosedFormError::Dimension {
            expected: n,
            found: s.dim(),
        });
    }
    Ok(())
}

/// Splits off one copy of the largest eigenvalue.
fn split_top(s: &Spectrum) -> (SpecValue, Vec<(SpecValue, usize)>) {
    let mut rest = s.entries().to_vec();
    let top = rest[0].0.clone();
    rest[0].1 -= 1;
    (top, rest)
}

/// Distance spectrum of `G □ H` for transmission-regular `G` and `H` of
/// orders `n_g` and `n_h`:
/// `{n_h·ρ_g + n_g·ρ_h} ∪ {n_h·θ_i} ∪ {n_g·θ'_j} ∪ {0^((n_g−1)(n_h−1))}`.
pub fn product_spectrum(
    spec_g: &Spectrum,
    n_g: usize,
    spec_h: &Spectrum,
    n_h: usize,
) -> Result<Spectrum, ClosedFormError> {
    check_dim(spec_g, n_g)?;
    check_dim(spec_h, n_h)?;
    let zero = BigRational::zero();
    let (rho_g, rest_g) = split_top(spec_g);
    let (rho_h, rest_h) = split_top(spec_h);
    let mut entries = vec![(
        sum(
            &affine(&rho_g, &int(n_h), &zero),
            &affine(&rho_h, &int(n_g), &zero),
        ),
        1,
    )];
    entries.extend(
        rest_g
            .iter()
            .map(|(v, m)| (affine(v, &int(n_h), &zero), *m)),
    );
    entries.extend(
        rest_h
            .iter()
            .map(|(v, m)| (affine(v, &int(n_g), &zero), *m)),
    );
    entries.push((
        SpecValue::Exact(QuadraticNumber::from_int(0)),
        (n_g - 1) * (n_h - 1),
    ));
    Ok(Spectrum::new(entries))
}

/// Coefficients of the symmetric block matrix
/// `[[a_e·D + b_e·J + c_e·I, a_o·D + b_o·J + c_o·I], [.. same off-diagonal .., .. same diagonal ..]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCoefficients {
    pub a_e: BigRational,
    pub b_e: BigRational,
    pub c_e: BigRational,
    pub a_o: BigRational,
    pub b_o: BigRational,
    pub c_o: BigRational,
}

impl BlockCoefficients {
    pub fn from_ints(a_e: i64, b_e: i64, c_e: i64, a_o: i64, b_o: i64, c_o: i64) -> Self {
        let r = |x: i64| BigRational::from_integer(BigInt::from(x));
        BlockCoefficients {
            a_e: r(a_e),
            b_e: r(b_e),
            c_e: r(c_e),
            a_o: r(a_o),
            b_o: r(b_o),
            c_o: r(c_o),
        }
    }
}

/// Spectrum of the block matrix built from an `n × n` matrix `D` that
/// commutes with `J`, given the spectrum of `D` with its row sum `ρ` as the
/// largest eigenvalue:
/// `{(a_e±a_o)ρ + (b_e±b_o)n + (c_e±c_o)} ∪ {(a_e±a_o)θ_i + (c_e±c_o)}`.
pub fn block_lemma_spectrum(
    spec_d: &Spectrum,
    n: usize,
    k: &BlockCoefficients,
) -> Result<Spectrum, ClosedFormError> {
    check_dim(spec_d, n)?;
    let (rho, rest) = split_top(spec_d);
    let nn = int(n);
    let mut entries = Vec::with_capacity(2 * rest.len() + 2);
    for sign in [1, -1] {
        let pick = |e: &BigRational, o: &BigRational| if sign == 1 { e + o } else { e - o };
        let a = pick(&k.a_e, &k.a_o);
        let b = pick(&k.b_e, &k.b_o);
        let c = pick(&k.c_e, &k.c_o);
        entries.push((affine(&rho, &a, &(&b * &nn + &c)), 1));
        entries.extend(rest.iter().map(|(v, m)| (affine(v, &a, &c), *m)));
    }
    Ok(Spectrum::new(entries))
}
