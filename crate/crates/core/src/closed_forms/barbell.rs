use num_bigint::BigInt;

use super::{param, ClosedFormError};
use crate::exact::{Inertia, Partition};

fn sign(odd: bool) -> BigInt {
    BigInt::from(if odd { -1 } else { 1 })
}

fn check_barbell(k: usize, m: usize) -> Result<(), ClosedFormError> {
    if k < 2 || m < 2 {
        return Err(param(
            "barbell",
            format!("need k, m >= 2, got k = {k}, m = {m}"),
        ));
    }
    Ok(())
}

/// `det D(B(k; m; ℓ)) = (−1)^{k+m+ℓ−1} · 2^ℓ · (km(ℓ+5) − 2(k+m))`.
pub fn barbell_determinant(k: usize, m: usize, l: usize) -> Result<BigInt, ClosedFormError> {
    check_barbell(k, m)?;
    let core = BigInt::from(k * m * (l + 5)) - BigInt::from(2 * (k + m));
    Ok(sign((k + m + l - 1) % 2 == 1) * (BigInt::from(1) << l) * core)
}

/// `det D(L(k, ℓ)) = (−1)^{k+ℓ−1} · 2^{ℓ−1} · (k(ℓ+2) − 2)` for `ℓ >= 1`,
/// and `(−1)^{k−1}(k−1)` for the bare clique.
pub fn lollipop_determinant(k: usize, l: usize) -> Result<BigInt, ClosedFormError> {
    if k < 2 {
        return Err(param("lollipop", format!("need k >= 2, got {k}")));
    }
    if l == 0 {
        return Ok(sign((k - 1) % 2 == 1) * BigInt::from(k - 1));
    }
    let core = BigInt::from(k * (l + 2)) - 2;
    Ok(sign((k + l - 1) % 2 == 1) * (BigInt::from(1) << (l - 1)) * core)
}

/// Inertia of `D(B(k; m; ℓ))`: one positive eigenvalue, no zero, the rest
/// negative.
pub fn barbell_inertia(k: usize, m: usize, l: usize) -> Result<Inertia, ClosedFormError> {
    check_barbell(k, m)?;
    Ok(Inertia::new(1, 0, k + m + l - 1))
}

/// The `ℓ + 4` cells used to reduce the barbell determinant to a quotient:
/// the first clique minus its attachment vertex, the second clique minus
/// its attachment vertex, the two attachment vertices, then each path
/// vertex on its own.
pub fn barbell_partition(k: usize, m: usize, l: usize) -> Result<Partition, ClosedFormError> {
    check_barbell(k, m)?;
    let mut cells = vec![
        (0..k - 1).collect(),
        (k..k + m - 1).collect(),
        vec![k - 1],
        vec![k + m - 1],
    ];
    cells.extend((k + m..k + m + l).map(|v| vec![v]));
    Partition::new(k + m + l, cells).map_err(|e| param("barbell", e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::distance_matrix;
    use crate::exact::{det_exact, inertia_exact, quotient_matrix, RationalMatrix};
    use crate::graph::*;
    use num_rational::BigRational;
    use num_traits::Zero;

    #[test]
    fn formula_examples() {
        assert_eq!(barbell_determinant(2, 2, 0).unwrap(), BigInt::from(-12));
        let p4 = distance_matrix(&generalized_barbell(2, 2, 0).unwrap()).unwrap();
        assert_eq!(det_exact(&p4), BigInt::from(-12));
        for k in 2..10 {
            assert_eq!(
                lollipop_determinant(k, 0).unwrap(),
                sign(k % 2 == 0) * BigInt::from(k - 1)
            );
            // the clique's distance spectrum is {k−1, (−1)^(k−1)}
            let d = distance_matrix(&complete(k).unwrap()).unwrap();
            assert_eq!(det_exact(&d), lollipop_determinant(k, 0).unwrap());
        }
        assert!(barbell_determinant(1, 3, 0).is_err());
        assert!(lollipop_determinant(1, 3).is_err());
    }

    #[test]
    fn lollipop_is_a_barbell() {
        for k in 2..8 {
            for l in 2..8 {
                assert_eq!(
                    lollipop_determinant(k, l).unwrap(),
                    barbell_determinant(k, 2, l - 2).unwrap()
                );
            }
        }
    }

    #[test]
    fn formulas_match_exact_oracles() {
        for k in 2..=5 {
            for m in 2..=5 {
                for l in 0..=4 {
                    let d = distance_matrix(&generalized_barbell(k, m, l).unwrap()).unwrap();
                    assert_eq!(
                        det_exact(&d),
                        barbell_determinant(k, m, l).unwrap(),
                        "B({k};{m};{l})"
                    );
                    assert_eq!(inertia_exact(&d), barbell_inertia(k, m, l).unwrap());
                }
            }
            for l in 0..=5 {
                let d = distance_matrix(&lollipop(k, l).unwrap()).unwrap();
                assert_eq!(
                    det_exact(&d),
                    lollipop_determinant(k, l).unwrap(),
                    "L({k},{l})"
                );
            }
        }
    }

    /// The quotient matrix written out row by row.
    fn expected_quotient(k: i64, m: i64, l: i64) -> Vec<Vec<i64>> {
        let mut rows = vec![
            vec![k - 2, (l + 3) * (m - 1), 1, l + 2],
            vec![(l + 3) * (k - 1), m - 2, l + 2, 1],
            vec![k - 1, (l + 2) * (m - 1), 0, l + 1],
            vec![(l + 2) * (k - 1), m - 1, l + 1, 0],
        ];
        for s in 1..=l {
            rows[0].push(s + 1);
            rows[1].push(l - s + 2);
            rows[2].push(s);
            rows[3].push(l - s + 1);
        }
        for t in 1..=l {
            let mut row = vec![(t + 1) * (k - 1), (l - t + 2) * (m - 1), t, l - t + 1];
            row.extend((1..=l).map(|s| (t - s).abs()));
            rows.push(row);
        }
        rows
    }

    #[test]
    fn quotient_reduction() {
        for (k, m, l) in [
            (2, 2, 0),
            (3, 4, 0),
            (3, 2, 1),
            (4, 3, 2),
            (5, 5, 4),
            (2, 6, 3),
        ] {
            let d = distance_matrix(&generalized_barbell(k, m, l).unwrap()).unwrap();
            let q = quotient_matrix(&d, &barbell_partition(k, m, l).unwrap()).unwrap();
            assert!(q.is_equitable);
            let want: Vec<BigRational> = expected_quotient(k as i64, m as i64, l as i64)
                .into_iter()
                .flatten()
                .map(|x| BigRational::from_integer(BigInt::from(x)))
                .collect();
            assert_eq!(q.matrix, RationalMatrix::new(l + 4, want), "B({k};{m};{l})");
            // the remaining k + m − 4 eigenvalues all equal −1
            let det_q = q.matrix.det();
            let det_d = BigRational::from_integer(det_exact(&d));
            let flip = if (k + m) % 2 == 0 { det_q } else { -det_q };
            assert_eq!(det_d, flip);
            assert!(!det_d.is_zero());
        }
    }
}
