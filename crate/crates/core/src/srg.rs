//! Strongly regular graph parameters: feasibility, eigenvalues, and the
//! sign pattern of the distance spectrum.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::numeric::{QuadraticNumber, SpecValue, Spectrum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SrgError {
    #[error("({n}, {k}, {lambda}, {mu}) is not a feasible parameter set: {reason}")]
    Infeasible {
        n: u64,
        k: u64,
        lambda: u64,
        mu: u64,
        reason: String,
    },
    #[error("{0}")]
    Parameter(String),
}

/// Validated parameters `(n, k, λ, μ)` of a strongly regular graph that is
/// neither complete nor edgeless.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SrgParams {
    pub n: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

fn rat(x: i128) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

impl SrgParams {
    /// Accepts the parameters when `0 < k < n − 1`, `0 < μ <= k`,
    /// `k(k − λ − 1) = (n − k − 1)μ`, and both eigenvalue multiplicities are
    /// non-negative integers.
    pub fn new(n: u64, k: u64, lambda: u64, mu: u64) -> Result<Self, SrgError> {
        let fail = |reason: &str| SrgError::Infeasible {
            n,
            k,
            lambda,
            mu,
            reason: reason.to_string(),
        };
        if k == 0 || k + 1 >= n {
            return Err(fail("need 0 < k < n - 1"));
        }
        if mu == 0 || mu > k {
            return Err(fail("need 0 < mu <= k"));
        }
        let (ni, ki, li, mi) = (n as i128, k as i128, lambda as i128, mu as i128);
        if ki * (ki - li - 1) != (ni - ki - 1) * mi {
            return Err(fail("k(k - lambda - 1) != (n - k - 1) mu"));
        }
        let p = SrgParams { n, k, lambda, mu };
        let (m_theta, m_tau) = p.multiplicities();
        for m in [&m_theta, &m_tau] {
            match m.as_integer() {
                Some(x) if !x.is_negative() => {}
                _ => {
                    return Err(fail(
                        "eigenvalue multiplicities are not non-negative integers",
                    ))
                }
            }
        }
        Ok(p)
    }

    /// `(λ − μ)² + 4(k − μ)`, positive for feasible parameters.
    fn discriminant(&self) -> BigRational {
        let d = self.lambda as i128 - self.mu as i128;
        rat(d * d + 4 * (self.k as i128 - self.mu as i128))
    }

    /// `m_θ, m_τ = ½(n − 1 ∓ (2k + (n − 1)(λ − μ))/√Δ)`.
    fn multiplicities(&self) -> (QuadraticNumber, QuadraticNumber) {
        let disc = self.discriminant();
        let root = QuadraticNumber::sqrt_of(&disc).expect("discriminant fits");
        let num = rat(
            2 * self.k as i128 + (self.n as i128 - 1) * (self.lambda as i128 - self.mu as i128)
        );
        // num/√Δ = num·√Δ/Δ
        let ratio = root.scale(&(num / disc));
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let n1 = QuadraticNumber::from_int(self.n as i64 - 1);
        let m_theta = (&n1 - &ratio).scale(&half);
        let m_tau = (&n1 + &ratio).scale(&half);
        (m_theta, m_tau)
    }
}

/// Adjacency and distance eigenvalues with their multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SrgEigenData {
    pub theta: QuadraticNumber,
    pub tau: QuadraticNumber,
    pub rho_d: BigInt,
    pub theta_d: QuadraticNumber,
    pub tau_d: QuadraticNumber,
    pub m_theta: u64,
    pub m_tau: u64,
}

impl SrgEigenData {
    /// `{ρ_D, θ_D^(m_θ), τ_D^(m_τ)}`.
    pub fn distance_spectrum(&self) -> Spectrum {
        Spectrum::new(vec![
            (
                SpecValue::Exact(QuadraticNumber::from_bigint(self.rho_d.clone())),
                1,
            ),
            (
                SpecValue::Exact(self.theta_d.clone()),
                self.m_theta as usize,
            ),
            (SpecValue::Exact(self.tau_d.clone()), self.m_tau as usize),
        ])
    }
}

/// `θ, τ = ½(λ − μ ± √Δ)`, `ρ_D = 2(n − 1) − k`, `θ_D = −θ − 2`,
/// `τ_D = −τ − 2`.
pub fn srg_eigen_data(p: &SrgParams) -> SrgEigenData {
    let root = QuadraticNumber::sqrt_of(&p.discriminant()).expect("discriminant fits");
    let lm = QuadraticNumber::from_int(p.lambda as i64 - p.mu as i64);
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let theta = (&lm + &root).scale(&half);
    let tau = (&lm - &root).scale(&half);
    let minus_two = rat(-2);
    let (m_theta, m_tau) = p.multiplicities();
    let to_u64 = |q: QuadraticNumber| {
        q.as_integer()
            .and_then(|x| x.to_u64())
            .expect("validated multiplicity")
    };
    SrgEigenData {
        theta_d: (-&theta).add_rational(&minus_two),
        tau_d: (-&tau).add_rational(&minus_two),
        theta,
        tau,
        rho_d: BigInt::from(2 * (p.n - 1) - p.k),
        m_theta: to_u64(m_theta),
        m_tau: to_u64(m_tau),
    }
}

/// More positive than negative distance eigenvalues, decided from the
/// parameters: `2λ < k + μ − 4` and `λ(n − 1) >= μ(n − 1) − 2k`.
pub fn is_optimistic(p: &SrgParams) -> bool {
    let (n, k, l, mu) = (p.n as i128, p.k as i128, p.lambda as i128, p.mu as i128);
    2 * l < k + mu - 4 && l * (n - 1) >= mu * (n - 1) - 2 * k
}

/// Parameters `(n, (n − 1)/2, (n − 5)/4, (n − 1)/4)`.
pub fn is_conference(p: &SrgParams) -> bool {
    let n = p.n;
    n % 4 == 1 && n >= 5 && p.k == (n - 1) / 2 && p.lambda == (n - 5) / 4 && p.mu == (n - 1) / 4
}

/// `(n, n − k − 1, n − 2 − 2k + μ, n − 2k + λ)`; fails when the complement
/// is not itself a valid parameter set (for instance when it has `μ = 0`).
pub fn complement_params(p: &SrgParams) -> Result<SrgParams, SrgError> {
    let (n, k, l, mu) = (p.n as i128, p.k as i128, p.lambda as i128, p.mu as i128);
    let (kb, lb, mb) = (n - k - 1, n - 2 - 2 * k + mu, n - 2 * k + l);
    if kb < 0 || lb < 0 || mb < 0 {
        return Err(SrgError::Parameter(format!(
            "complement of ({n}, {k}, {l}, {mu}) has a negative parameter"
        )));
    }
    SrgParams::new(p.n, kb as u64, lb as u64, mb as u64)
}

fn checked_pow(q: u64, e: u32) -> Result<u64, SrgError> {
    q.checked_pow(e)
        .ok_or_else(|| SrgError::Parameter(format!("{q}^{e} overflows")))
}

/// Symplectic graph `Sp(2m, q)`:
/// `((q^{2m} − 1)/(q − 1), q^{2m−1}, q^{2m−2}(q − 1), q^{2m−2}(q − 1))`.
/// `q` is not checked to be a prime power.
pub fn symplectic_params(m: u32, q: u64) -> Result<SrgParams, SrgError> {
    if m < 2 || q < 2 {
        return Err(SrgError::Parameter(format!(
            "need m >= 2 and q >= 2, got m = {m}, q = {q}"
        )));
    }
    let top = checked_pow(q, 2 * m)?;
    let lm = checked_pow(q, 2 * m - 2)? * (q - 1);
    SrgParams::new((top - 1) / (q - 1), checked_pow(q, 2 * m - 1)?, lm, lm)
}

/// `O_{2m+1}(3)` on one class of nonisotropic points, `e = ±1`:
/// `(3^m(3^m + e)/2, 3^{m−1}(3^m − e)/2, λ = μ = 3^{m−1}(3^{m−1} − e)/2)`.
pub fn o2m1_params(m: u32, e: i8) -> Result<SrgParams, SrgError> {
    if m < 2 || !(e == 1 || e == -1) {
        return Err(SrgError::Parameter(format!(
            "need m >= 2 and e = +-1, got m = {m}, e = {e}"
        )));
    }
    let e = e as i128;
    let t = checked_pow(3, m)? as i128;
    let s = t / 3;
    let lm = s * (s - e) / 2;
    SrgParams::new(
        (t * (t + e) / 2) as u64,
        (s * (t - e) / 2) as u64,
        lm as u64,
        lm as u64,
    )
}

/// Exactly one positive distance eigenvalue, for SRG parameters or for the
/// complete graph `(n, n − 1, n − 2, ·)`, where `μ` is ignored.
pub fn classify_one_positive(n: u64, k: u64, lambda: u64, mu: u64) -> Result<bool, SrgError> {
    if n >= 2 && k + 1 == n && lambda + 2 == n {
        return Ok(true);
    }
    let p = SrgParams::new(n, k, lambda, mu)?;
    if (n, k, lambda, mu) == (5, 2, 0, 1) {
        return Ok(true);
    }
    Ok(srg_eigen_data(&p).tau == QuadraticNumber::from_int(-2))
}

/// Every feasible parameter set with `n <= max_n`, in lexicographic order.
pub fn feasible_parameters(max_n: u64) -> Vec<SrgParams> {
    let mut out = Vec::new();
    for n in 4..=max_n {
        for k in 1..n - 1 {
            for mu in 1..=k {
                // λ = k − 1 − (n − k − 1)μ/k
                let t = (n - k - 1) * mu;
                if t % k != 0 || t / k > k - 1 {
                    continue;
                }
                if let Ok(p) = SrgParams::new(n, k, k - 1 - t / k, mu) {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Parameters of `g` when it is strongly regular with `μ > 0` and is not
/// complete; counts are taken directly from the adjacency structure.
pub fn srg_parameters(g: &Graph) -> Option<SrgParams> {
    let k = g.regular_degree()?;
    let n = g.order();
    let mut lambda = None;
    let mut mu = None;
    for u in 0..n {
        for v in u + 1..n {
            let common = g.neighbors(u).iter().filter(|&&w| g.has_edge(v, w)).count();
            let slot = if g.has_edge(u, v) {
                &mut lambda
            } else {
                &mut mu
            };
            match *slot {
                None => *slot = Some(common),
                Some(c) if c != common => return None,
                Some(_) => {}
            }
        }
    }
    SrgParams::new(n as u64, k as u64, lambda? as u64, mu? as u64).ok()
}

/// Signs of the distance eigenvalues read off exactly:
/// `(positive, zero, negative)` counts.
pub fn distance_sign_counts(p: &SrgParams) -> (u64, u64, u64) {
    let e = srg_eigen_data(p);
    let mut c = (1, 0, 0);
    for (v, m) in [(&e.theta_d, e.m_theta), (&e.tau_d, e.m_tau)] {
        match v.signum() {
            Ordering::Greater => c.0 += m,
            Ordering::Equal => c.1 += m,
            Ordering::Less => c.2 += m,
        }
    }
    c
}
