use thiserror::Error;

pub const DEFAULT_EIG_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EigenError {
    #[error("expected {expected} entries for a square matrix, got {found}")]
    Shape { expected: usize, found: usize },
    #[error("matrix is not symmetric: |a[{i}][{j}] - a[{j}][{i}]| = {diff:e}")]
    Asymmetric { i: usize, j: usize, diff: f64 },
    #[error("matrix has a non-finite entry at ({0}, {1})")]
    NonFinite(usize, usize),
    #[error("tolerance must be positive, got {0}")]
    Tolerance(f64),
    #[error("no convergence after {sweeps} sweeps (off-diagonal norm {off:e})")]
    NotConverged { sweeps: usize, off: f64 },
}

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            s += a[i * n + j] * a[i * n + j];
        }
    }
    (2.0 * s).sqrt()
}

/// All eigenvalues of the row-major symmetric matrix `a` of order `n`,
/// sorted in descending order.
///
/// Cyclic Jacobi: sweep over every `(p, q)` with `p < q` in row order,
/// annihilating `a[p][q]` by a plane rotation, until the off-diagonal
/// Frobenius norm drops below `tol · ‖a‖_F`. Each returned eigenvalue then
/// lies within that norm of a true eigenvalue. Asymmetry larger than
/// `tol · max(1, max|a_ij|)` is rejected.
pub fn sym_eigenvalues(a: &[f64], n: usize, tol: f64) -> Result<Vec<f64>, EigenError> {
    if a.len() != n * n {
        return Err(EigenError::Shape {
            expected: n * n,
            found: a.len(),
        });
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(EigenError::Tolerance(tol));
    }
    if let Some(k) = a.iter().position(|x| !x.is_finite()) {
        return Err(EigenError::NonFinite(k / n, k % n));
    }
    let scale = a.iter().fold(1.0f64, |m, x| m.max(x.abs()));
    let mut worst = (0, 0, 0.0f64);
    for i in 0..n {
        for j in i + 1..n {
            let diff = (a[i * n + j] - a[j * n + i]).abs();
            if diff > worst.2 {
                worst = (i, j, diff);
            }
        }
    }
    if worst.2 > tol * scale {
        return Err(EigenError::Asymmetric {
            i: worst.0,
            j: worst.1,
            diff: worst.2,
        });
    }

    // work on the symmetrized copy
    let mut m = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            m[i * n + j] = 0.5 * (a[i * n + j] + a[j * n + i]);
        }
    }
    let frob = m.iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = tol * frob;

    let mut sweeps = 0;
    loop {
        let off = off_norm(&m, n);
        if off <= threshold || off == 0.0 {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(EigenError::NotConverged { sweeps, off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut m, n, p, q);
            }
        }
    }

    let mut eigs: Vec<f64> = (0..n).map(|i| m[i * n + i]).collect();
    eigs.sort_by(|x, y| y.total_cmp(x));
    Ok(eigs)
}

/// Applies the rotation in the `(p, q)` plane that zeroes `m[p][q]`.
fn rotate(m: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = m[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = m[p * n + p];
    let aqq = m[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    // smaller root of t² + 2θt - 1 = 0
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    m[p * n + p] = app - t * apq;
    m[q * n + q] = aqq + t * apq;
    m[p * n + q] = 0.0;
    m[q * n + p] = 0.0;
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = m[k * n + p];
        let akq = m[k * n + q];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        m[k * n + p] = new_kp;
        m[p * n + k] = new_kp;
        m[k * n + q] = new_kq;
        m[q * n + k] = new_kq;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < tol)
    }

    #[test]
    fn two_by_two() {
        let e = sym_eigenvalues(&[0.0, 1.0, 1.0, 0.0], 2, DEFAULT_EIG_TOL).unwrap();
        assert!(close(&e, &[1.0, -1.0], 1e-14));
        let e = sym_eigenvalues(&[2.0, 1.0, 1.0, 2.0], 2, DEFAULT_EIG_TOL).unwrap();
        assert!(close(&e, &[3.0, 1.0], 1e-14));
    }

    #[test]
    fn diagonal_and_empty() {
        let e = sym_eigenvalues(&[1.0, 0.0, 0.0, 0.0, -5.0, 0.0, 0.0, 0.0, 3.0], 3, 1e-12).unwrap();
        assert_eq!(e, vec![3.0, 1.0, -5.0]);
        assert!(sym_eigenvalues(&[], 0, 1e-12).unwrap().is_empty());
    }

    #[test]
    fn path_adjacency_eigenvalues() {
        // eigenvalues of the path adjacency matrix are 2cos(πj/(n+1))
        let n = 12;
        let mut a = vec![0.0; n * n];
        for i in 0..n - 1 {
            a[i * n + i + 1] = 1.0;
            a[(i + 1) * n + i] = 1.0;
        }
        let mut want: Vec<f64> = (1..=n)
            .map(|j| 2.0 * (std::f64::consts::PI * j as f64 / (n + 1) as f64).cos())
            .collect();
        want.sort_by(|x, y| y.total_cmp(x));
        assert!(close(&sym_eigenvalues(&a, n, 1e-12).unwrap(), &want, 1e-12));
    }

    #[test]
    fn rejections() {
        let err =
            sym_eigenvalues(&[0.0, 1.0, 2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0], 3, 1e-12).unwrap_err();
        assert_eq!(
            err,
            EigenError::Asymmetric {
                i: 0,
                j: 2,
                diff: 2.0
            }
        );
        assert!(matches!(
            sym_eigenvalues(&[1.0; 3], 2, 1e-12),
            Err(EigenError::Shape { .. })
        ));
        assert!(matches!(
            sym_eigenvalues(&[1.0], 1, 0.0),
            Err(EigenError::Tolerance(_))
        ));
        assert!(matches!(
            sym_eigenvalues(&[f64::NAN], 1, 1e-12),
            Err(EigenError::NonFinite(0, 0))
        ));
    }

    #[test]
    fn trace_is_preserved() {
        let n = 9;
        let a: Vec<f64> = (0..n * n)
            .map(|k| {
                let (i, j) = (k / n, k % n);
                ((i * j + i + j) % 7) as f64 - 3.0
            })
            .collect();
        let e = sym_eigenvalues(&a, n, 1e-13).unwrap();
        let trace: f64 = (0..n).map(|i| a[i * n + i]).sum();
        assert!((e.iter().sum::<f64>() - trace).abs() < 1e-10);
        let frob2: f64 = a.iter().map(|x| x * x).sum();
        assert!((e.iter().map(|x| x * x).sum::<f64>() - frob2).abs() < 1e-9);
    }
}
