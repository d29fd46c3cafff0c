use num_bigint::BigInt;
use num_traits::Zero;

use super::det::primitive_part;
use super::LinalgError;
use crate::matrix::IntSymMatrix;

/// Largest order accepted by [`distinct_eigenvalue_count`]; powers of the
/// matrix are formed explicitly, so cost grows quickly with the order.
pub const MINPOLY_DIMENSION_CAP: usize = 256;

/// Incrementally maintained echelon basis of integer vectors. Each stored
/// vector vanishes at the pivots of all earlier vectors, so reducing a new
/// vector against the basis in insertion order clears every pivot.
struct Echelon {
    basis: Vec<(usize, Vec<BigInt>)>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { basis: Vec::new() }
    }

    /// Inserts `v` if it is independent of the basis; returns whether it was.
    fn insert(&mut self, mut v: Vec<BigInt>) -> bool {
        for (pivot, b) in &self.basis {
            if v[*pivot].is_zero() {
                continue;
            }
            let (scale_v, scale_b) = (b[*pivot].clone(), v[*pivot].clone());
            for (x, y) in v.iter_mut().zip(b) {
                *x = &*x * &scale_v - &scale_b * y;
            }
            primitive_part(&mut v);
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                self.basis.push((p, v));
                true
            }
            None => false,
        }
    }
}

fn upper_triangle(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = m.len();
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for (i, row) in m.iter().enumerate() {
        out.extend(row[i..].iter().cloned());
    }
    out
}

fn multiply(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for (i, row) in a.iter().enumerate() {
        for (k, x) in row.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (o, y) in out[i].iter_mut().zip(&b[k]) {
                *o += x * y;
            }
        }
    }
    out
}

/// Degree of the minimal polynomial of `m`: the least `d >= 1` for which
/// `I, m, .., m^d` are linearly dependent over the rationals. For symmetric
/// matrices this is the number of distinct eigenvalues.
///
/// Powers of a symmetric matrix are symmetric, so only upper triangles are
/// compared.
pub fn distinct_eigenvalue_count(m: &IntSymMatrix) -> Result<usize, LinalgError> {
    let n = m.dim();
    if n > MINPOLY_DIMENSION_CAP {
        return Err(LinalgError::TooLarge {
            n,
            cap: MINPOLY_DIMENSION_CAP,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let base: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut echelon = Echelon::new();
    let identity: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from((i == j) as u8)).collect())
        .collect();
    echelon.insert(upper_triangle(&identity));
    let mut power = base.clone();
    for degree in 1..=n {
        if !echelon.insert(upper_triangle(&power)) {
            return Ok(degree);
        }
        power = multiply(&power, &base);
    }
    // a matrix of order n satisfies its characteristic polynomial
    unreachable!("minimal polynomial degree exceeds the matrix order")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::distance_matrix;
    use crate::graph::*;

    fn q(g: &Graph) -> usize {
        distinct_eigenvalue_count(&distance_matrix(g).unwrap()).unwrap()
    }

    #[test]
    fn complete_and_hamming() {
        for n in 2..=7 {
            assert_eq!(q(&complete(n).unwrap()), 2);
        }
        assert_eq!(q(&hamming(1, 2).unwrap()), 2);
        assert_eq!(q(&hamming(2, 3).unwrap()), 3);
        assert_eq!(q(&hamming(3, 3).unwrap()), 3);
        assert_eq!(q(&hypercube(4).unwrap()), 3);
    }

    #[test]
    fn hypercube_with_leaf_has_five() {
        assert_eq!(q(&hypercube_with_leaf(4).unwrap()), 5);
    }

    #[test]
    fn paths_are_simple_spectrum() {
        for n in 2..=9 {
            assert_eq!(q(&path(n).unwrap()), n);
        }
        assert_eq!(q(&complete_bipartite(1, 5).unwrap()), 3);
    }

    #[test]
    fn scalar_and_cap() {
        let m = IntSymMatrix::identity(3).shifted(&BigInt::from(4));
        assert_eq!(distinct_eigenvalue_count(&m).unwrap(), 1);
        let big = IntSymMatrix::identity(MINPOLY_DIMENSION_CAP + 1);
        assert!(matches!(
            distinct_eigenvalue_count(&big),
            Err(LinalgError::TooLarge { .. })
        ));
    }
}
