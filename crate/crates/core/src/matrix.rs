//! Dense symmetric matrices with arbitrary-precision integer entries, and the
//! square text dump used to diff matrices between tools.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("expected {expected} entries for a {n}x{n} matrix, got {got}")]
    Shape {
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("matrix is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Row-major `n x n` symmetric integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntSymMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntSymMatrix {
    pub fn new(n: usize, data: Vec<BigInt>) -> Result<Self, MatrixError> {
        if data.len() != n * n {
            return Err(MatrixError::Shape {
                n,
                expected: n * n,
                got: data.len(),
            });
        }
        for i in 0..n {
            for j in i + 1..n {
                if data[i * n + j] != data[j * n + i] {
                    return Err(MatrixError::Asymmetric(i, j));
                }
            }
        }
        Ok(IntSymMatrix { n, data })
    }

    /// Builds the matrix from the upper triangle `f(i, j)`, `i <= j`.
    pub fn from_upper(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                data[j * n + i] = v.clone();
                data[i * n + j] = v;
            }
        }
        IntSymMatrix { n, data }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self, MatrixError> {
        let n = rows.len();
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| BigInt::from(x)))
            .collect();
        Self::new(n, data)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_upper(n, |i, j| BigInt::from((i == j) as u8))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    /// `self + c I`.
    pub fn shifted(&self, c: &BigInt) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            out.data[i * self.n + i] += c;
        }
        out
    }

    /// Entrywise affine map `a * self + b * J + c * I`.
    pub fn affine(&self, a: i64, b: i64, c: i64) -> Self {
        let (a, b, c) = (BigInt::from(a), BigInt::from(b), BigInt::from(c));
        Self::from_upper(self.n, |i, j| {
            let mut v = &a * self.get(i, j) + &b;
            if i == j {
                v += &c;
            }
            v
        })
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        (0..self.n).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn max_entry(&self) -> Option<&BigInt> {
        self.data.iter().max()
    }

    /// Lossy conversion for the floating-point eigensolver.
    pub fn to_f64(&self) -> Vec<f64> {
        self.data
            .iter()
            .map(|x| x.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// Assembles the symmetric block matrix `[[a, b], [b, a]]`.
    pub fn two_by_two_blocks(a: &Self, b: &Self) -> Result<Self, MatrixError> {
        let n = a.n;
        if b.n != n {
            return Err(MatrixError::Shape {
                n,
                expected: n * n,
                got: b.n * b.n,
            });
        }
        Ok(Self::from_upper(2 * n, |i, j| {
            let same_block = (i < n) == (j < n);
            let src = if same_block { a } else { b };
            src.get(i % n, j % n).clone()
        }))
    }

    /// The submatrix on rows and columns in `idx` (in the given order).
    pub fn principal_submatrix(&self, idx: &[usize]) -> Self {
        Self::from_upper(idx.len(), |i, j| self.get(idx[i], idx[j]).clone())
    }
}

/// Writes `n` on the first line, then the full square matrix row by row.
pub fn write_matrix(m: &IntSymMatrix) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", m.dim());
    for i in 0..m.dim() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

pub fn read_matrix(text: &str) -> Result<IntSymMatrix, MatrixError> {
    let parse_err = |line: usize, message: String| MatrixError::Parse { line, message };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (_, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing dimension line".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| parse_err(1, format!("dimension `{header}` is not an integer")))?;
    let mut data = Vec::with_capacity(n * n);
    let mut rows = 0;
    for (line_no, line) in lines {
        if line.is_empty() {
            continue;
        }
        if rows == n {
            return Err(parse_err(
                line_no,
                "more rows than the declared dimension".into(),
            ));
        }
        let before = data.len();
        for tok in line.split_whitespace() {
            let v: BigInt = tok
                .parse()
                .map_err(|_| parse_err(line_no, format!("`{tok}` is not an integer")))?;
            data.push(v);
        }
        if data.len() - before != n {
            return Err(parse_err(
                line_no,
                format!("expected {n} entries, found {}", data.len() - before),
            ));
        }
        rows += 1;
    }
    if rows != n {
        return Err(parse_err(
            text.lines().count(),
            format!("expected {n} rows, found {rows}"),
        ));
    }
    IntSymMatrix::new(n, data)
}
