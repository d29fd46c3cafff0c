use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::matrix::IntSymMatrix;

/// Determinant by Bareiss fraction-free elimination. Every intermediate value
/// is a minor of the input, so all divisions are exact.
pub fn det_exact(m: &IntSymMatrix) -> BigInt {
    let n = m.dim();
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    bareiss(&mut a)
}

pub(crate) fn bareiss(a: &mut [Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in rest.iter_mut() {
            let factor = row[k].clone();
            for j in k + 1..n {
                let v = &row[j] * pivot - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = pivot.clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Divides out the content (gcd of entries) of an integer vector.
pub(crate) fn primitive_part(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// Rank over the rationals, by integer row reduction with content removal.
pub fn rank_exact(m: &IntSymMatrix) -> usize {
    let n = m.dim();
    let rows: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    rank_of_rows(rows, n)
}

pub(crate) fn rank_of_rows(mut rows: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            let pivot = &pivot_row[c];
            for j in c..cols {
                row[j] = &row[j] * pivot - &factor * &pivot_row[j];
            }
            primitive_part(&mut row[c..]);
        }
        rank += 1;
    }
    rank
}
