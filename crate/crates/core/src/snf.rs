//! Smith normal form over the integers.
//!
//! Elimination first runs on machine `i64` with checked arithmetic and falls
//! back to arbitrary precision the moment any operation would overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::matrix::IntegerMatrix;

/// Invariant factors `d_1 | d_2 | ... | d_r` (all positive); `r` is the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub invariant_factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> impl Iterator<Item = &BigInt> {
        self.invariant_factors.iter().filter(|d| !d.is_one())
    }
}

/// `left * M * right = diagonal`, with `left` and `right` unimodular.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub left: IntegerMatrix,
    pub diagonal: IntegerMatrix,
    pub right: IntegerMatrix,
    pub form: SmithForm,
}

trait Scalar: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn abs_lt(&self, other: &Self) -> bool;
    fn is_unit(&self) -> bool;
    /// Truncated quotient, `None` on overflow.
    fn quot(&self, d: &Self) -> Option<Self>;
    /// `self - q * x`, `None` on overflow.
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self>;
    fn add(&self, x: &Self) -> Option<Self>;
    fn negate(&self) -> Option<Self>;
    fn divides(&self, x: &Self) -> bool;
    fn is_negative(&self) -> bool;
    fn to_big(&self) -> BigInt;
}

impl Scalar for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn quot(&self, d: &Self) -> Option<Self> {
        self.checked_div(*d)
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*x)?)
    }
    fn add(&self, x: &Self) -> Option<Self> {
        self.checked_add(*x)
    }
    fn negate(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn divides(&self, x: &Self) -> bool {
        x % self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn quot(&self, d: &Self) -> Option<Self> {
        Some(self / d)
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        Some(self - q * x)
    }
    fn add(&self, x: &Self) -> Option<Self> {
        Some(self + x)
    }
    fn negate(&self) -> Option<Self> {
        Some(-self)
    }
    fn divides(&self, x: &Self) -> bool {
        x.is_multiple_of(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

#[derive(Clone)]
struct Dense<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Dense<T> {
    fn identity(n: usize) -> Self {
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = T::one();
        }
        Dense { rows: n, cols: n, data }
    }

    fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[dst] -= q * row[src], over columns `from..`.
    fn row_sub(&mut self, dst: usize, src: usize, q: &T, from: usize) -> Option<()> {
        for c in from..self.cols {
            let s = self.data[src * self.cols + c].clone();
            if !s.is_zero() {
                let d = &mut self.data[dst * self.cols + c];
                *d = d.sub_mul(q, &s)?;
            }
        }
        Some(())
    }

    /// col[dst] -= q * col[src], over rows `from..`.
    fn col_sub(&mut self, dst: usize, src: usize, q: &T, from: usize) -> Option<()> {
        for r in from..self.rows {
            let s = self.data[r * self.cols + src].clone();
            if !s.is_zero() {
                let d = &mut self.data[r * self.cols + dst];
                *d = d.sub_mul(q, &s)?;
            }
        }
        Some(())
    }

    fn row_add(&mut self, dst: usize, src: usize, from: usize) -> Option<()> {
        for c in from..self.cols {
            let s = self.data[src * self.cols + c].clone();
            if !s.is_zero() {
                let d = &mut self.data[dst * self.cols + c];
                *d = d.add(&s)?;
            }
        }
        Some(())
    }

    fn negate_row(&mut self, r: usize) -> Option<()> {
        for c in 0..self.cols {
            let d = &mut self.data[r * self.cols + c];
            *d = d.negate()?;
        }
        Some(())
    }
}

/// Row transform `left` (rows x rows) and column transform `right` (cols x cols).
struct Transforms<T> {
    left: Dense<T>,
    right: Dense<T>,
}

/// Diagonalizes `a` in place. With `transforms`, also enforces the divisibility
/// chain on the diagonal and makes it positive. Returns `None` on overflow.
fn diagonalize<T: Scalar>(a: &mut Dense<T>, mut transforms: Option<&mut Transforms<T>>) -> Option<()> {
    let (rows, cols) = (a.rows, a.cols);
    let enforce = transforms.is_some();
    for t in 0..rows.min(cols) {
        let Some((pr, pc)) = min_entry(a, t) else { break };
        a.swap_rows(t, pr);
        a.swap_cols(t, pc);
        if let Some(tr) = transforms.as_deref_mut() {
            tr.left.swap_rows(t, pr);
            tr.right.swap_cols(t, pc);
        }
        loop {
            let pivot = a.at(t, t).clone();
            let mut leftover = false;
            for r in t + 1..rows {
                if a.at(r, t).is_zero() {
                    continue;
                }
                let q = a.at(r, t).quot(&pivot)?;
                a.row_sub(r, t, &q, t)?;
                if let Some(tr) = transforms.as_deref_mut() {
                    tr.left.row_sub(r, t, &q, 0)?;
                }
                leftover |= !a.at(r, t).is_zero();
            }
            for c in t + 1..cols {
                if a.at(t, c).is_zero() {
                    continue;
                }
                let q = a.at(t, c).quot(&pivot)?;
                a.col_sub(c, t, &q, t)?;
                if let Some(tr) = transforms.as_deref_mut() {
                    tr.right.col_sub(c, t, &q, 0)?;
                }
                leftover |= !a.at(t, c).is_zero();
            }
            if leftover {
                // a remainder smaller than the pivot survived; move it into place
                let (pr, pc) = min_in_cross(a, t);
                a.swap_rows(t, pr);
                a.swap_cols(t, pc);
                if let Some(tr) = transforms.as_deref_mut() {
                    tr.left.swap_rows(t, pr);
                    tr.right.swap_cols(t, pc);
                }
                continue;
            }
            if enforce && !pivot.is_unit() {
                let bad = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| !pivot.divides(a.at(r, c))));
                if let Some(r) = bad {
                    a.row_add(t, r, t)?;
                    if let Some(tr) = transforms.as_deref_mut() {
                        tr.left.row_add(t, r, 0)?;
                    }
                    continue;
                }
            }
            break;
        }
        if enforce && a.at(t, t).is_negative() {
            a.negate_row(t)?;
            if let Some(tr) = transforms.as_deref_mut() {
                tr.left.negate_row(t)?;
            }
        }
    }
    Some(())
}

/// Smallest nonzero entry (by absolute value) in the trailing block starting at `(t, t)`.
fn min_entry<T: Scalar>(a: &Dense<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for r in t..a.rows {
        for c in t..a.cols {
            let v = a.at(r, c);
            if v.is_zero() {
                continue;
            }
            if v.is_unit() {
                return Some((r, c));
            }
            if best.is_none_or(|(br, bc)| v.abs_lt(a.at(br, bc))) {
                best = Some((r, c));
            }
        }
    }
    best
}

/// Smallest nonzero entry in row `t` or column `t` (pivot excluded from the search when zero).
fn min_in_cross<T: Scalar>(a: &Dense<T>, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let candidates = (t + 1..a.rows).map(|r| (r, t)).chain((t + 1..a.cols).map(|c| (t, c)));
    for (r, c) in candidates {
        let v = a.at(r, c);
        if !v.is_zero() && v.abs_lt(a.at(best.0, best.1)) {
            best = (r, c);
        }
    }
    best
}

/// Turns a list of nonzero diagonal entries into the invariant-factor chain.
pub(crate) fn invariant_chain(diagonal: Vec<BigInt>) -> Vec<BigInt> {
    let mut d: Vec<BigInt> = diagonal.into_iter().map(|x| x.abs()).collect();
    let n = d.len();
    for i in 0..n {
        for j in i + 1..n {
            if d[j].is_multiple_of(&d[i]) {
                continue;
            }
            let g = d[i].gcd(&d[j]);
            let l = &d[i] / &g * &d[j];
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

fn diagonal_entries<T: Scalar>(a: &Dense<T>) -> Vec<BigInt> {
    (0..a.rows.min(a.cols)).map(|i| a.at(i, i)).filter(|v| !v.is_zero()).map(Scalar::to_big).collect()
}

fn to_i64(m: &IntegerMatrix) -> Option<Dense<i64>> {
    let data = m.entries().iter().map(ToPrimitive::to_i64).collect::<Option<Vec<_>>>()?;
    Some(Dense { rows: m.rows(), cols: m.cols(), data })
}

fn to_big(m: &IntegerMatrix) -> Dense<BigInt> {
    Dense { rows: m.rows(), cols: m.cols(), data: m.entries().to_vec() }
}

fn to_matrix(d: &Dense<BigInt>) -> IntegerMatrix {
    let mut m = IntegerMatrix::zeros(d.rows, d.cols);
    for r in 0..d.rows {
        for c in 0..d.cols {
            m.set(r, c, d.at(r, c).clone());
        }
    }
    m
}

/// Invariant factors and rank of an integer matrix.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    if let Some(mut small) = to_i64(m) {
        if diagonalize(&mut small, None).is_some() {
            return SmithForm { invariant_factors: invariant_chain(diagonal_entries(&small)) };
        }
    }
    let mut big = to_big(m);
    diagonalize(&mut big, None).expect("arbitrary precision cannot overflow");
    SmithForm { invariant_factors: invariant_chain(diagonal_entries(&big)) }
}

/// Smith normal form together with unimodular transforms.
pub fn smith_decomposition(m: &IntegerMatrix) -> SmithDecomposition {
    let mut a = to_big(m);
    let mut tr = Transforms { left: Dense::identity(m.rows()), right: Dense::identity(m.cols()) };
    diagonalize(&mut a, Some(&mut tr)).expect("arbitrary precision cannot overflow");
    let form = SmithForm { invariant_factors: diagonal_entries(&a) };
    SmithDecomposition { left: to_matrix(&tr.left), diagonal: to_matrix(&a), right: to_matrix(&tr.right), form }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(rows: &[Vec<i64>]) -> Vec<i64> {
        smith_normal_form(&IntegerMatrix::from_rows(rows))
            .invariant_factors
            .iter()
            .map(|d| d.to_i64().unwrap())
            .collect()
    }

    #[test]
    fn small_examples() {
        assert_eq!(factors(&[vec![2, 0], vec![0, 0]]), vec![2]);
        assert_eq!(factors(&[vec![1, 1], vec![1, 1]]), vec![1]);
        assert_eq!(factors(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(factors(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), vec![2, 6, 12]);
        assert_eq!(factors(&[]), Vec::<i64>::new());
    }

    #[test]
    fn triangle_boundary_d1() {
        // edges 12, 13, 23 -> vertices 1, 2, 3; hand reduction gives rank 2, unit factors
        let d1 = vec![vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]];
        assert_eq!(factors(&d1), vec![1, 1]);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 2;
        let rows = vec![vec![big, big - 1], vec![big - 1, big - 3]];
        let got = smith_normal_form(&IntegerMatrix::from_rows(&rows));
        // det = big*(big-3) - (big-1)^2 = -big - 1
        let det = BigInt::from(big) * BigInt::from(big - 3) - BigInt::from(big - 1) * BigInt::from(big - 1);
        let product: BigInt = got.invariant_factors.iter().product();
        assert_eq!(product, det.abs());
    }

    #[test]
    fn decomposition_is_unimodular() {
        let m = IntegerMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let dec = smith_decomposition(&m);
        assert_eq!(dec.left.mul(&m).mul(&dec.right), dec.diagonal);
        assert!(dec.left.determinant().magnitude().is_one());
        assert!(dec.right.determinant().magnitude().is_one());
        let diag: Vec<i64> = dec.form.invariant_factors.iter().map(|d| d.to_i64().unwrap()).collect();
        assert_eq!(diag, vec![2, 6, 12]);
    }
}
