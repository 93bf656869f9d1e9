//! Dense arbitrary-precision integer matrices and the Smith normal form.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let data = rows.iter().flat_map(|r| r.iter().cloned().map(Into::into)).collect();
        Ok(IntMatrix { rows: rows.len(), cols, data })
    }

    /// Builds a matrix with an explicit shape, for the cases (0×n, n×0) that
    /// `from_rows` cannot express.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        Ok(sign * &a[(n - 1, n - 1)])
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row_i += c * row_j
    fn add_row(&mut self, i: usize, j: usize, c: &BigInt) {
        for k in 0..self.cols {
            let v = &self[(j, k)] * c;
            self[(i, k)] += v;
        }
    }

    /// col_j += c * col_i
    fn add_col(&mut self, j: usize, i: usize, c: &BigInt) {
        for r in 0..self.rows {
            let v = &self[(r, i)] * c;
            self[(r, j)] += v;
        }
    }

    fn neg_row(&mut self, i: usize) {
        for k in 0..self.cols {
            let v = -&self[(i, k)];
            self[(i, k)] = v;
        }
    }

    fn neg_col(&mut self, j: usize) {
        for r in 0..self.rows {
            let v = -&self[(r, j)];
            self[(r, j)] = v;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{}x{}", self.rows, self.cols)?;
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

/// `a = u * s * v` with `u`, `v` unimodular and `s` in Smith form. The inverses
/// of both transforms are carried along since callers need them for
/// coordinate changes.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithForm {
    /// Nonzero-or-zero diagonal `d_1 | d_2 | ...`, length `min(rows, cols)`.
    pub fn invariants(&self) -> Vec<BigInt> {
        self.s.diagonal()
    }
}

struct SmithState {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl SmithState {
    fn add_row(&mut self, i: usize, j: usize, c: &BigInt) {
        self.a.add_row(i, j, c);
        self.u_inv.add_row(i, j, c);
        self.u.add_col(j, i, &-c);
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u_inv.swap_rows(i, j);
        self.u.swap_cols(i, j);
    }

    fn neg_row(&mut self, i: usize) {
        self.a.neg_row(i);
        self.u_inv.neg_row(i);
        self.u.neg_col(i);
    }

    fn add_col(&mut self, j: usize, i: usize, c: &BigInt) {
        self.a.add_col(j, i, c);
        self.v_inv.add_col(j, i, c);
        self.v.add_row(i, j, &-c);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v_inv.swap_cols(i, j);
        self.v.swap_rows(i, j);
    }

    /// Moves the smallest nonzero entry of the trailing block to (t, t).
    fn pivot_min(&mut self, t: usize) -> bool {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows {
            for j in t..self.a.cols {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        match best {
            None => false,
            Some((i, j)) => {
                self.swap_rows(t, i);
                self.swap_cols(t, j);
                true
            }
        }
    }

    /// Moves the smallest nonzero entry of row t / column t to (t, t).
    fn pivot_cross(&mut self, t: usize) {
        let mut best = (t, t);
        for i in t + 1..self.a.rows {
            let x = &self.a[(i, t)];
            if !x.is_zero() && x.abs() < self.a[best].abs() {
                best = (i, t);
            }
        }
        for j in t + 1..self.a.cols {
            let x = &self.a[(t, j)];
            if !x.is_zero() && x.abs() < self.a[best].abs() {
                best = (t, j);
            }
        }
        if best.0 != t {
            self.swap_rows(t, best.0);
        } else if best.1 != t {
            self.swap_cols(t, best.1);
        }
    }
}

/// Smith normal form `a = u * s * v` of an arbitrary integer matrix.
///
/// The diagonal of `s` is nonnegative with each entry dividing the next;
/// zeros come last.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (rows, cols) = (a.rows, a.cols);
    let mut st = SmithState {
        a: a.clone(),
        u: IntMatrix::identity(rows),
        u_inv: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };
    for t in 0..rows.min(cols) {
        if !st.pivot_min(t) {
            break;
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if st.a[(i, t)].is_zero() {
                    continue;
                }
                let q = st.a[(i, t)].div_floor(&st.a[(t, t)]);
                st.add_row(i, t, &-q);
                clean &= st.a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if st.a[(t, j)].is_zero() {
                    continue;
                }
                let q = st.a[(t, j)].div_floor(&st.a[(t, t)]);
                st.add_col(j, t, &-q);
                clean &= st.a[(t, j)].is_zero();
            }
            if !clean {
                st.pivot_cross(t);
                continue;
            }
            // Divisibility: fold an offending row into row t and go again.
            let offending = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !st.a[(i, j)].is_multiple_of(&st.a[(t, t)]))
            });
            match offending {
                Some(i) => st.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if st.a[(t, t)].is_negative() {
            st.neg_row(t);
        }
    }
    SmithForm { u: st.u, s: st.a, v: st.v, u_inv: st.u_inv, v_inv: st.v_inv }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    fn check(a: &IntMatrix) -> SmithForm {
        let f = smith_normal_form(a);
        assert_eq!(f.u.mul(&f.s).unwrap().mul(&f.v).unwrap(), *a);
        assert_eq!(f.u.mul(&f.u_inv).unwrap(), IntMatrix::identity(a.rows()));
        assert_eq!(f.v.mul(&f.v_inv).unwrap(), IntMatrix::identity(a.cols()));
        assert!(f.s.is_diagonal());
        f
    }

    #[test]
    fn empty_matrix() {
        let a = IntMatrix::zeros(0, 0);
        let f = check(&a);
        assert_eq!(f.s.rows(), 0);
        assert_eq!(f.u.rows(), 0);
        assert_eq!(f.v.cols(), 0);
    }

    #[test]
    fn identity_is_fixed() {
        let f = check(&IntMatrix::identity(2));
        assert_eq!(f.s, IntMatrix::identity(2));
    }

    #[test]
    fn two_by_two_example() {
        // d1 = gcd of entries = 2 and d1 * d2 = |det| = 8.
        let a = m(&[vec![2, 4], vec![6, 8]]);
        assert_eq!(a.determinant().unwrap(), BigInt::from(-8));
        let f = check(&a);
        assert_eq!(f.invariants(), vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn zeros_go_last() {
        let a = m(&[vec![0, 0, 0], vec![0, 0, 3], vec![0, 0, 0]]);
        let f = check(&a);
        assert_eq!(f.invariants(), vec![BigInt::from(3), BigInt::zero(), BigInt::zero()]);
    }

    #[test]
    fn rectangular() {
        let a = m(&[vec![4, 6], vec![6, 9], vec![2, 3]]);
        let f = check(&a);
        assert_eq!(f.invariants(), vec![BigInt::one(), BigInt::zero()]);
    }

    #[test]
    fn determinant_of_unimodular_transforms() {
        let a = m(&[vec![3, 7, 1], vec![9, -2, 4], vec![5, 5, 5]]);
        let f = check(&a);
        assert_eq!(f.u.determinant().unwrap().abs(), BigInt::one());
        assert_eq!(f.v.determinant().unwrap().abs(), BigInt::one());
        let prod: BigInt = f.invariants().iter().product();
        assert_eq!(prod, a.determinant().unwrap().abs());
    }
}
