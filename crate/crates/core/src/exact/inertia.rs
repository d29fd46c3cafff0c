use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::matrix::IntSymMatrix;

/// Counts of positive, zero and negative eigenvalues, in that order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
}

impl Inertia {
    pub fn new(n_plus: usize, n_zero: usize, n_minus: usize) -> Self {
        Inertia {
            n_plus,
            n_zero,
            n_minus,
        }
    }

    pub fn dim(&self) -> usize {
        self.n_plus + self.n_zero + self.n_minus
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n_plus, self.n_zero, self.n_minus)
    }
}

/// Inertia by exact symmetric congruence.
///
/// Repeatedly eliminates either a nonzero diagonal pivot (a 1x1 block whose
/// sign is recorded) or, when the remaining diagonal is all zero, a 2x2 block
/// `[[0, b], [b, 0]]` with `b != 0`, which contributes one positive and one
/// negative eigenvalue. The Schur complement that remains is congruent to the
/// rest of the matrix, so by Sylvester's law the counts add up. When the
/// remainder is identically zero it contributes only zeros.
pub fn inertia_exact(m: &IntSymMatrix) -> Inertia {
    let n = m.dim();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    let mut alive: Vec<usize> = (0..n).collect();
    let mut out = Inertia::new(0, 0, 0);

    while !alive.is_empty() {
        if let Some(pos) = alive.iter().position(|&i| !a[i][i].is_zero()) {
            let p = alive.swap_remove(pos);
            let pivot = a[p][p].clone();
            if pivot.is_positive() {
                out.n_plus += 1;
            } else {
                out.n_minus += 1;
            }
            let col: Vec<BigRational> = alive.iter().map(|&i| &a[i][p] / &pivot).collect();
            for (ii, &i) in alive.iter().enumerate() {
                if col[ii].is_zero() {
                    continue;
                }
                for &j in &alive {
                    if !a[p][j].is_zero() {
                        let delta = &col[ii] * &a[p][j];
                        a[i][j] -= delta;
                    }
                }
            }
            continue;
        }
        let pair = alive.iter().enumerate().find_map(|(ip, &p)| {
            alive[ip + 1..]
                .iter()
                .find(|&&q| !a[p][q].is_zero())
                .map(|&q| (p, q))
        });
        let Some((p, q)) = pair else {
            out.n_zero += alive.len();
            break;
        };
        out.n_plus += 1;
        out.n_minus += 1;
        alive.retain(|&i| i != p && i != q);
        let b = a[p][q].clone();
        // inverse of [[0, b], [b, 0]] is [[0, 1/b], [1/b, 0]]
        let up: Vec<BigRational> = alive.iter().map(|&i| &a[i][p] / &b).collect();
        let uq: Vec<BigRational> = alive.iter().map(|&i| &a[i][q] / &b).collect();
        let rows_p: Vec<BigRational> = alive.iter().map(|&j| a[p][j].clone()).collect();
        let rows_q: Vec<BigRational> = alive.iter().map(|&j| a[q][j].clone()).collect();
        for (ii, &i) in alive.iter().enumerate() {
            for (jj, &j) in alive.iter().enumerate() {
                let delta = &up[ii] * &rows_q[jj] + &uq[ii] * &rows_p[jj];
                if !delta.is_zero() {
                    a[i][j] -= delta;
                }
            }
        }
    }
    out
}
