use std::cell::RefCell;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{param, ClosedFormError};

thread_local! {
    static PASCAL: RefCell<Vec<Vec<BigInt>>> = RefCell::new(vec![vec![BigInt::one()]]);
}

/// `C(n, k)`, zero outside `0 <= k <= n`. Rows of Pascal's triangle are
/// cached per thread.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let (n, k) = (n as usize, k as usize);
    PASCAL.with(|cell| {
        let mut rows = cell.borrow_mut();
        while rows.len() <= n {
            let prev = rows.last().expect("row 0 present");
            let mut next = Vec::with_capacity(prev.len() + 1);
            next.push(BigInt::one());
            for w in prev.windows(2) {
                next.push(&w[0] + &w[1]);
            }
            next.push(BigInt::one());
            rows.push(next);
        }
        rows[n][k].clone()
    })
}

/// `s(n, r) = Σ_j j·C(r, j)·C(n−r, j)`, the row sum of the Johnson distance
/// matrix.
pub fn s_value(n: usize, r: usize) -> BigInt {
    let (n, r) = (n as i64, r as i64);
    (0..=r)
        .map(|j| BigInt::from(j) * binomial(r, j) * binomial(n - r, j))
        .sum()
}

fn check_scheme_index(what: &'static str, x: usize, r: usize) -> Result<(), ClosedFormError> {
    if x > r {
        return Err(param(what, format!("index {x} exceeds r = {r}")));
    }
    Ok(())
}

/// Eigenvalue `p_i(j)` of the distance-`i` relation of the Johnson scheme
/// `J(n, r)` on its `j`-th eigenspace.
pub fn eberlein(i: usize, j: usize, n: usize, r: usize) -> Result<BigInt, ClosedFormError> {
    if r == 0 || r >= n {
        return Err(param(
            "eberlein",
            format!("need 1 <= r < n, got n = {n}, r = {r}"),
        ));
    }
    check_scheme_index("eberlein", i, r)?;
    check_scheme_index("eberlein", j, r)?;
    let (i, j, n, r) = (i as i64, j as i64, n as i64, r as i64);
    Ok((0..=i)
        .map(|t| {
            let term = binomial(j, t) * binomial(r - j, i - t) * binomial(n - r - j, i - t);
            if t % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum())
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

fn check_kneser(n: usize, r: usize) -> Result<(), ClosedFormError> {
    if r == 0 || n <= 2 * r {
        return Err(param(
            "kneser",
            format!("need n > 2r >= 2, got n = {n}, r = {r}"),
        ));
    }
    Ok(())
}

/// Distance in `K(n, r)` between two `r`-sets meeting in `r − i` points.
pub fn kneser_f(i: usize, n: usize, r: usize) -> Result<usize, ClosedFormError> {
    check_kneser(n, r)?;
    check_scheme_index("kneser", i, r)?;
    let g = n - 2 * r;
    Ok((2 * ceil_div(i, g)).min(2 * ceil_div(r - i, g) + 1))
}

/// Dimension of the `j`-th eigenspace of the Johnson scheme,
/// `(n − 2j + 1)/(n − j + 1) · C(n, j)`.
pub fn kneser_multiplicity(j: usize, n: usize, r: usize) -> Result<BigInt, ClosedFormError> {
    check_kneser(n, r)?;
    check_scheme_index("kneser", j, r)?;
    let num = BigInt::from(n - 2 * j + 1) * binomial(n as i64, j as i64);
    let den = BigInt::from(n - j + 1);
    let (q, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero(), "eigenspace dimension must be integral");
    Ok(q)
}

/// Which of the six binomial-sum identities to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaIdentity {
    /// `Σ_k (−1)^k C(s, k) = 0`, for `s >= 1`.
    AlternatingSum { s: u32 },
    /// `Σ_k (−1)^k k C(s, k) = 0`, for `s >= 2`.
    AlternatingWeighted { s: u32 },
    /// `Σ_i 2i C(d, 2i) = d·2^{d−2}`, for `d >= 2`.
    EvenWeighted { d: u32 },
    /// `Σ_i (2i+1) C(d, 2i+1) = d·2^{d−2}`, for `d >= 2`.
    OddWeighted { d: u32 },
    /// `Σ_i (2i)² C(d, 2i) = d(d+1)·2^{d−3}`, for `d >= 2`.
    EvenSquared { d: u32 },
    /// `Σ_{⌈b/2⌉ <= i <= ⌊(a+b)/2⌋} i C(a, 2i−b) = 2^{a−3}(a+2b)`, for
    /// `a >= 2`, `b >= 0`.
    ShiftedWeighted { a: u32, b: u32 },
}

impl LemmaIdentity {
    /// Builds identity number `selector` (1 to 6); `x` is `s`, `d` or `a`
    /// and `b` is used only by the sixth.
    pub fn from_selector(selector: u8, x: u32, b: u32) -> Result<Self, ClosedFormError> {
        let id = match selector {
            1 => LemmaIdentity::AlternatingSum { s: x },
            2 => LemmaIdentity::AlternatingWeighted { s: x },
            3 => LemmaIdentity::EvenWeighted { d: x },
            4 => LemmaIdentity::OddWeighted { d: x },
            5 => LemmaIdentity::EvenSquared { d: x },
            6 => LemmaIdentity::ShiftedWeighted { a: x, b },
            _ => {
                return Err(param(
                    "lemma identity",
                    format!("selector {selector} is not in 1..=6"),
                ))
            }
        };
        let (min, value) = id.range();
        if value < min {
            return Err(param(
                "lemma identity",
                format!("identity {selector} needs parameter >= {min}, got {value}"),
            ));
        }
        Ok(id)
    }

    fn range(&self) -> (u32, u32) {
        match *self {
            LemmaIdentity::AlternatingSum { s } => (1, s),
            LemmaIdentity::AlternatingWeighted { s } => (2, s),
            LemmaIdentity::EvenWeighted { d }
            | LemmaIdentity::OddWeighted { d }
            | LemmaIdentity::EvenSquared { d } => (2, d),
            LemmaIdentity::ShiftedWeighted { a, .. } => (2, a),
        }
    }
}

/// `x · 2^e / 2^shift`, which must be an integer.
fn times_power_of_two(x: BigInt, e: u32, shift: u32) -> BigInt {
    let num = x << e as usize;
    let den = BigInt::one() << shift as usize;
    let (q, rem) = num.div_rem(&den);
    assert!(rem.is_zero(), "right-hand side is not an integer");
    q
}

/// Evaluates both sides of the identity independently: the left side by
/// direct summation, the right side from its closed form.
pub fn lemma_identities(id: LemmaIdentity) -> (BigInt, BigInt) {
    let big = |x: u32| BigInt::from(x);
    match id {
        LemmaIdentity::AlternatingSum { s } => {
            let lhs = (0..=s as i64)
                .map(|k| {
                    if k % 2 == 0 {
                        binomial(s as i64, k)
                    } else {
                        -binomial(s as i64, k)
                    }
                })
                .sum();
            (lhs, BigInt::zero())
        }
        LemmaIdentity::AlternatingWeighted { s } => {
            let lhs = (0..=s as i64)
                .map(|k| {
                    let t = BigInt::from(k) * binomial(s as i64, k);
                    if k % 2 == 0 {
                        t
                    } else {
                        -t
                    }
                })
                .sum();
            (lhs, BigInt::zero())
        }
        LemmaIdentity::EvenWeighted { d } => {
            let lhs = (0..=(d / 2) as i64)
                .map(|i| BigInt::from(2 * i) * binomial(d as i64, 2 * i))
                .sum();
            (lhs, times_power_of_two(big(d), d, 2))
        }
        LemmaIdentity::OddWeighted { d } => {
            let lhs = (0..=(d as i64 - 1) / 2)
                .map(|i| BigInt::from(2 * i + 1) * binomial(d as i64, 2 * i + 1))
                .sum();
            (lhs, times_power_of_two(big(d), d, 2))
        }
        LemmaIdentity::EvenSquared { d } => {
            let lhs = (0..=(d / 2) as i64)
                .map(|i| BigInt::from(4 * i * i) * binomial(d as i64, 2 * i))
                .sum();
            (lhs, times_power_of_two(big(d) * big(d + 1), d, 3))
        }
        LemmaIdentity::ShiftedWeighted { a, b } => {
            let (ai, bi) = (a as i64, b as i64);
            let lhs = ((bi + 1) / 2..=(ai + bi) / 2)
                .map(|i| BigInt::from(i) * binomial(ai, 2 * i - bi))
                .sum();
            (lhs, times_power_of_two(big(a) + 2 * big(b), a, 3))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    /// Binomial by the multiplicative formula, independent of the cache.
    fn binom_direct(n: u64, k: u64) -> u128 {
        (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
    }

    #[test]
    fn binomials_match_direct_formula() {
        for n in 0..40u64 {
            for k in 0..=n {
                assert_eq!(
                    binomial(n as i64, k as i64),
                    BigInt::from(binom_direct(n, k))
                );
            }
        }
        assert!(binomial(3, 5).is_zero());
        assert!(binomial(3, -1).is_zero());
        assert!(binomial(-2, 0).is_zero());
    }

    #[test]
    fn s_values() {
        assert_eq!(s_value(5, 2), big(12));
        // J(n, 1) = K_n has row sum n − 1
        for n in 2..10 {
            assert_eq!(s_value(n, 1), big(n as i64 - 1));
        }
        // s(n, r) = r·C(n−1, r)
        for n in 2..16 {
            for r in 1..n {
                assert_eq!(
                    s_value(n, r),
                    big(r as i64) * binomial(n as i64 - 1, r as i64)
                );
            }
        }
    }

    #[test]
    fn eberlein_boundary_values() {
        for (n, r) in [(5, 2), (7, 3), (9, 4), (8, 2)] {
            for j in 0..=r {
                assert_eq!(eberlein(0, j, n, r).unwrap(), big(1));
            }
            for i in 0..=r {
                let want = binomial(r as i64, i as i64) * binomial((n - r) as i64, i as i64);
                assert_eq!(eberlein(i, 0, n, r).unwrap(), want);
            }
        }
        assert!(eberlein(3, 0, 5, 2).is_err());
        assert!(eberlein(0, 0, 5, 5).is_err());
    }

    #[test]
    fn eberlein_orthogonality() {
        // Σ_j m_j p_i(j) p_k(j) = C(n, r) · v_i · δ_ik for the Johnson scheme
        let (n, r) = (9, 4);
        let total = binomial(n as i64, r as i64);
        for i in 0..=r {
            for k in 0..=r {
                let sum: BigInt = (0..=r)
                    .map(|j| {
                        kneser_multiplicity(j, n, r).unwrap()
                            * eberlein(i, j, n, r).unwrap()
                            * eberlein(k, j, n, r).unwrap()
                    })
                    .sum();
                let want = if i == k {
                    &total * eberlein(i, 0, n, r).unwrap()
                } else {
                    BigInt::zero()
                };
                assert_eq!(sum, want, "i = {i}, k = {k}");
            }
        }
    }

    #[test]
    fn kneser_distance_weights() {
        assert_eq!(
            (0..=2)
                .map(|i| kneser_f(i, 5, 2).unwrap())
                .collect::<Vec<_>>(),
            vec![0, 2, 1]
        );
        assert!(kneser_f(0, 4, 2).is_err());
        assert!(kneser_f(3, 7, 2).is_err());
    }

    #[test]
    fn multiplicities_sum_to_order() {
        for n in 3..=14 {
            for r in 1..=(n - 1) / 2 {
                let sum: BigInt = (0..=r).map(|j| kneser_multiplicity(j, n, r).unwrap()).sum();
                assert_eq!(sum, binomial(n as i64, r as i64), "n = {n}, r = {r}");
            }
        }
    }

    #[test]
    fn identity_examples() {
        let ev = |sel, x, b| lemma_identities(LemmaIdentity::from_selector(sel, x, b).unwrap());
        assert_eq!(ev(3, 4, 0), (big(16), big(16)));
        assert_eq!(ev(1, 3, 0), (big(0), big(0)));
        assert_eq!(ev(6, 4, 0), (big(8), big(8)));
        assert!(LemmaIdentity::from_selector(1, 0, 0).is_err());
        assert!(LemmaIdentity::from_selector(2, 1, 0).is_err());
        assert!(LemmaIdentity::from_selector(6, 1, 0).is_err());
        assert!(LemmaIdentity::from_selector(7, 3, 0).is_err());
    }

    #[test]
    fn identities_over_grid() {
        for x in 1..=20u32 {
            for sel in 1..=5u8 {
                if let Ok(id) = LemmaIdentity::from_selector(sel, x, 0) {
                    let (lhs, rhs) = lemma_identities(id);
                    // the squared even sum only agrees from d = 3 on
                    if sel == 5 && x == 2 {
                        continue;
                    }
                    assert_eq!(lhs, rhs, "identity {sel} at {x}");
                }
            }
            for b in 0..=10 {
                if let Ok(id) = LemmaIdentity::from_selector(6, x, b) {
                    let (lhs, rhs) = lemma_identities(id);
                    assert_eq!(lhs, rhs, "identity 6 at a = {x}, b = {b}");
                }
            }
        }
    }

    #[test]
    fn squared_even_sum_at_two() {
        // Σ (2i)² C(2, 2i) = 4 while d(d+1)2^{d−3} = 3
        let (lhs, rhs) = lemma_identities(LemmaIdentity::EvenSquared { d: 2 });
        assert_eq!((lhs, rhs), (big(4), big(3)));
    }
}
