use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Exact number `a + b·√d` with rational `a`, `b` and square-free `d`.
///
/// The representation is canonical: `d` is square-free and `d = 0` exactly
/// when `b = 0`, so structural equality is numeric equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticNumber {
    a: BigRational,
    b: BigRational,
    d: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadraticError {
    #[error("square root of a negative number")]
    NegativeRadicand,
    #[error("radicand {0} is too large to factor")]
    RadicandTooLarge(String),
    #[error("cannot combine sqrt({0}) with sqrt({1})")]
    MixedRadicands(u64, u64),
    #[error("malformed quadratic number {0:?}")]
    Parse(String),
}

/// Splits `x` as `s² · f` with `f` square-free.
fn square_free_split(mut x: u64) -> (u64, u64) {
    let mut s = 1u64;
    let mut f = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p) <= x {
        let mut e = 0;
        while x % p == 0 {
            x /= p;
            e += 1;
        }
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            f *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (s, f * x)
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

impl QuadraticNumber {
    pub fn new(a: BigRational, b: BigRational, d: u64) -> Self {
        if b.is_zero() || d == 0 {
            return QuadraticNumber::rational(a);
        }
        let (s, f) = square_free_split(d);
        let b = b * BigRational::from_integer(BigInt::from(s));
        if f == 1 {
            QuadraticNumber::rational(a + b)
        } else {
            QuadraticNumber { a, b, d: f }
        }
    }

    pub fn rational(a: BigRational) -> Self {
        QuadraticNumber {
            a,
            b: BigRational::zero(),
            d: 0,
        }
    }

    pub fn from_int(x: i64) -> Self {
        QuadraticNumber::rational(int(x))
    }

    pub fn from_bigint(x: BigInt) -> Self {
        QuadraticNumber::rational(BigRational::from_integer(x))
    }

    /// `√r` for a non-negative rational whose reduced numerator times
    /// denominator fits in 64 bits.
    pub fn sqrt_of(r: &BigRational) -> Result<Self, QuadraticError> {
        if r.is_negative() {
            return Err(QuadraticError::NegativeRadicand);
        }
        // √(p/q) = √(pq)/q
        let pq = r.numer() * r.denom();
        let x = pq
            .to_u64()
            .ok_or_else(|| QuadraticError::RadicandTooLarge(pq.to_string()))?;
        let inv_q = BigRational::new(BigInt::one(), r.denom().clone());
        Ok(QuadraticNumber::new(BigRational::zero(), inv_q, x))
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn irrational_coefficient(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.d == 0
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.a)
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    pub fn is_zero(&self) -> bool {
        self.is_rational() && self.a.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        if self.is_rational() {
            a
        } else {
            a + self.b.to_f64().unwrap_or(f64::NAN) * (self.d as f64).sqrt()
        }
    }

    /// Exact sign of the value.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&BigRational::zero());
        let sb = self.b.cmp(&BigRational::zero());
        if sb == Ordering::Equal || sa == sb {
            return if sa == Ordering::Equal { sb } else { sa };
        }
        if sa == Ordering::Equal {
            return sb;
        }
        // opposite signs: the larger of a² and b²d wins
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * int(self.d as i64);
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    fn radicand_with(&self, other: &Self) -> Result<u64, QuadraticError> {
        match (self.d, other.d) {
            (0, d) | (d, 0) => Ok(d),
            (x, y) if x == y => Ok(x),
            (x, y) => Err(QuadraticError::MixedRadicands(x, y)),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, QuadraticError> {
        let d = self.radicand_with(other)?;
        Ok(QuadraticNumber::new(
            &self.a + &other.a,
            &self.b + &other.b,
            d,
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, QuadraticError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, QuadraticError> {
        let d = self.radicand_with(other)?;
        let dd = int(d as i64);
        let a = &self.a * &other.a + &self.b * &other.b * dd;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(QuadraticNumber::new(a, b, d))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        QuadraticNumber::new(&self.a * r, &self.b * r, self.d)
    }

    pub fn add_rational(&self, r: &BigRational) -> Self {
        QuadraticNumber::new(&self.a + r, self.b.clone(), self.d)
    }

    /// Exact comparison when the two values share a radicand (or either is
    /// rational); otherwise by floating point, which cannot tie because
    /// distinct square-free radicands give distinct values.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        match self.checked_sub(other) {
            Ok(diff) => diff.signum(),
            Err(_) => self.to_f64().total_cmp(&other.to_f64()),
        }
    }
}

impl Neg for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        QuadraticNumber {
            a: -&self.a,
            b: -&self.b,
            d: self.d,
        }
    }
}

impl Neg for QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        -&self
    }
}

/// Panics on mixed radicands; use [`QuadraticNumber::checked_add`] when the
/// radicands are not known to agree.
impl Add for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn add(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        self.checked_add(rhs).expect("quadratic addition")
    }
}

impl Sub for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn sub(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        self.checked_sub(rhs).expect("quadratic subtraction")
    }
}

impl Mul for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn mul(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        self.checked_mul(rhs).expect("quadratic multiplication")
    }
}

impl From<i64> for QuadraticNumber {
    fn from(x: i64) -> Self {
        QuadraticNumber::from_int(x)
    }
}

impl From<BigRational> for QuadraticNumber {
    fn from(r: BigRational) -> Self {
        QuadraticNumber::rational(r)
    }
}

/// Rationals print as `p` or `p/q`; irrationals as `a+b*sqrt(d)` or
/// `a-b*sqrt(d)` with `b` printed without its sign.
impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.a);
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}*sqrt({})", self.a, sign, self.b.abs(), self.d)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().ok()?;
    let q: BigInt = q.parse().ok()?;
    if q.sign() != Sign::Plus {
        return None;
    }
    Some(BigRational::new(p, q))
}

impl FromStr for QuadraticNumber {
    type Err = QuadraticError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || QuadraticError::Parse(s.to_string());
        let s = s.trim();
        let Some(star) = s.find("*sqrt(") else {
            return parse_rational(s)
                .map(QuadraticNumber::rational)
                .ok_or_else(bad);
        };
        let radicand = s[star + 6..].strip_suffix(')').ok_or_else(bad)?;
        let d: u64 = radicand.parse().map_err(|_| bad())?;
        let head = &s[..star];
        let split = head
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last()
            .ok_or_else(bad)?;
        let a = parse_rational(&head[..split]).ok_or_else(bad)?;
        let b = parse_rational(&head[split + 1..]).ok_or_else(bad)?;
        // the coefficient is written unsigned after the separator
        if b.is_negative() || d == 0 {
            return Err(bad());
        }
        let b = if head.as_bytes()[split] == b'-' {
            -b
        } else {
            b
        };
        Ok(QuadraticNumber::new(a, b, d))
    }
}

/// Integer square root when `x` is a perfect square.
pub fn exact_integer_sqrt(x: &BigInt) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    let r = x.sqrt();
    (&r * &r == *x).then_some(r)
}
