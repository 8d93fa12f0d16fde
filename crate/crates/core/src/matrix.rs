use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            entries.extend(row.iter().cloned().map(Into::into));
        }
        IntegerMatrix { rows: rows.len(), cols, entries }
    }

    /// A `rows x cols` matrix with zero columns or rows, used for maps from/to the zero group.
    pub fn empty(rows: usize, cols: usize) -> Self {
        Self::zeros(rows, cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigInt) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    /// Matrix product; panics on a shape mismatch.
    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * other.cols + c] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Rows and columns permuted: `out[i][j] = self[row_perm[i]][col_perm[j]]`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        let mut out = Self::zeros(self.rows, self.cols);
        for (i, &r) in row_perm.iter().enumerate() {
            for (j, &c) in col_perm.iter().enumerate() {
                out.set(i, j, self.get(r, c).clone());
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination; panics if not square.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.entries.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                match (k + 1..n).find(|&i| !a[i * n + k].is_zero()) {
                    Some(i) => {
                        for c in 0..n {
                            a.swap(k * n + c, i * n + c);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j]) / &prev;
                    a[i * n + j] = v;
                }
            }
            prev = a[k * n + k].clone();
        }
        sign * &a[n * n - 1]
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_transpose() {
        let a = IntegerMatrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        let b = IntegerMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&b), IntegerMatrix::from_rows(&[vec![2, 1], vec![4, 3]]));
        assert_eq!(a.transpose(), IntegerMatrix::from_rows(&[vec![1, 3], vec![2, 4]]));
    }

    #[test]
    fn determinants() {
        assert_eq!(IntegerMatrix::from_rows(&[vec![1, 2], vec![3, 4]]).determinant(), BigInt::from(-2));
        assert_eq!(IntegerMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).determinant(), BigInt::from(-1));
        let m = IntegerMatrix::from_rows(&[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 2]]);
        assert_eq!(m.determinant(), BigInt::from(6));
        let singular = IntegerMatrix::from_rows(&[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 1]]);
        assert_eq!(singular.determinant(), BigInt::zero());
        assert_eq!(IntegerMatrix::identity(0).determinant(), BigInt::one());
    }
}
