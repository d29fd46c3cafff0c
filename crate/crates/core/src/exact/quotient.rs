use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::LinalgError;
use crate::matrix::IntSymMatrix;

/// An ordered partition of `0..n` into nonempty cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    n: usize,
    cells: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(n: usize, cells: Vec<Vec<usize>>) -> Result<Self, LinalgError> {
        let mut seen = vec![false; n];
        for (c, cell) in cells.iter().enumerate() {
            if cell.is_empty() {
                return Err(LinalgError::InvalidPartition(format!("cell {c} is empty")));
            }
            for &v in cell {
                if v >= n {
                    return Err(LinalgError::InvalidPartition(format!(
                        "index {v} in cell {c} is out of range for order {n}"
                    )));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(LinalgError::InvalidPartition(format!(
                        "index {v} appears twice"
                    )));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(LinalgError::InvalidPartition(format!(
                "index {v} is not covered"
            )));
        }
        Ok(Partition { n, cells })
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            n,
            cells: (0..n).map(|i| vec![i]).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }
}

/// Dense square matrix of exact rationals (always in lowest terms with
/// positive denominators, as maintained by `BigRational`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn new(n: usize, data: Vec<BigRational>) -> Self {
        assert_eq!(data.len(), n * n, "rational matrix shape");
        RationalMatrix { n, data }
    }

    pub fn from_int(m: &IntSymMatrix) -> Self {
        let data = m
            .entries()
            .iter()
            .map(|x| BigRational::from_integer(x.clone()))
            .collect();
        RationalMatrix { n: m.dim(), data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.n + j]
    }

    /// Determinant by Gaussian elimination over the rationals.
    pub fn det(&self) -> BigRational {
        let n = self.n;
        let mut a: Vec<Vec<BigRational>> = self.data.chunks(n.max(1)).map(<[_]>::to_vec).collect();
        let mut det = BigRational::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return BigRational::zero();
            };
            if p != k {
                a.swap(p, k);
                det = -det;
            }
            det *= &a[k][k];
            let (top, rest) = a.split_at_mut(k + 1);
            let pivot_row = &top[k];
            for row in rest.iter_mut() {
                if row[k].is_zero() {
                    continue;
                }
                let f = &row[k] / &pivot_row[k];
                for j in k..n {
                    let d = &f * &pivot_row[j];
                    row[j] -= d;
                }
            }
        }
        det
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.data
            .iter()
            .map(|x| x.to_f64().unwrap_or(f64::NAN))
            .collect()
    }
}

/// Quotient of a symmetric matrix by a partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMatrix {
    pub matrix: RationalMatrix,
    pub is_equitable: bool,
    cell_sizes: Vec<usize>,
}

impl QuotientMatrix {
    /// `Λ^{1/2} B Λ^{-1/2}` with `Λ` the diagonal of cell sizes. For a
    /// symmetric input this is symmetric and similar to `B`, so the
    /// symmetric eigensolver applies to it.
    pub fn symmetrized_f64(&self) -> Vec<f64> {
        let n = self.matrix.dim();
        let b = self.matrix.to_f64();
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                let (si, sj) = (self.cell_sizes[i] as f64, self.cell_sizes[j] as f64);
                out[i * n + j] = b[i * n + j] * (si / sj).sqrt();
            }
        }
        out
    }
}

/// `B[i][j]` is the average row sum of block `(i, j)`; the partition is
/// equitable when every block has constant row sums.
pub fn quotient_matrix(m: &IntSymMatrix, p: &Partition) -> Result<QuotientMatrix, LinalgError> {
    if p.order() != m.dim() {
        return Err(LinalgError::InvalidPartition(format!(
            "partition covers {} indices but the matrix has order {}",
            p.order(),
            m.dim()
        )));
    }
    let k = p.cells().len();
    let mut data = Vec::with_capacity(k * k);
    let mut equitable = true;
    for row_cell in p.cells() {
        for col_cell in p.cells() {
            let sums: Vec<BigInt> = row_cell
                .iter()
                .map(|&i| col_cell.iter().map(|&j| m.get(i, j)).sum())
                .collect();
            equitable &= sums.windows(2).all(|w| w[0] == w[1]);
            let total: BigInt = sums.iter().sum();
            data.push(BigRational::new(total, BigInt::from(row_cell.len())));
        }
    }
    Ok(QuotientMatrix {
        matrix: RationalMatrix::new(k, data),
        is_equitable: equitable,
        cell_sizes: p.cells().iter().map(Vec::len).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::distance_matrix;
    use crate::graph::*;

    fn r(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(3, vec![vec![0, 2], vec![1]]).is_ok());
        assert!(Partition::new(3, vec![vec![0, 2], vec![]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 2], vec![2, 1]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 2]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 3], vec![1, 2]]).is_err());
    }

    #[test]
    fn path_three_quotient() {
        let d = distance_matrix(&path(3).unwrap()).unwrap();
        let p = Partition::new(3, vec![vec![0, 2], vec![1]]).unwrap();
        let q = quotient_matrix(&d, &p).unwrap();
        assert!(q.is_equitable);
        assert_eq!(
            q.matrix,
            RationalMatrix::new(2, vec![r(2), r(1), r(2), r(0)])
        );
    }

    #[test]
    fn singletons_reproduce_matrix() {
        let d = distance_matrix(&petersen()).unwrap();
        let q = quotient_matrix(&d, &Partition::singletons(10)).unwrap();
        assert!(q.is_equitable);
        assert_eq!(q.matrix, RationalMatrix::from_int(&d));
    }

    #[test]
    fn non_equitable_partition_averages() {
        let d = distance_matrix(&path(3).unwrap()).unwrap();
        let p = Partition::new(3, vec![vec![0, 1], vec![2]]).unwrap();
        let q = quotient_matrix(&d, &p).unwrap();
        assert!(!q.is_equitable);
        // rows 0,1 into cell {0,1}: sums 1 and 1; into {2}: 2 and 1 -> 3/2
        assert_eq!(
            q.matrix.get(0, 1),
            &BigRational::new(BigInt::from(3), BigInt::from(2))
        );
        assert!(quotient_matrix(&d, &Partition::singletons(4)).is_err());
    }

    #[test]
    fn rational_determinant() {
        let m = RationalMatrix::new(2, vec![r(0), r(3), r(2), r(1)]);
        assert_eq!(m.det(), r(-6));
    }
}
