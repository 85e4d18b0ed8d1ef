//! Dense square and rectangular matrices over a [`Scalar`] ring.

use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;

/// Row-major matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| T::from_i64(x).expect("fits")).collect())
                .collect(),
        )
        .expect("rectangular input")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * s).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(Scalar::negate).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(
                "addition of differently shaped matrices".into(),
            ));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out[(i, j)].clone() + a.clone() * &other[(k, j)];
                    out[(i, j)] = v;
                }
            }
        }
        Ok(out)
    }

    /// `self * v` for a column vector.
    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b)
            })
            .collect()
    }

    /// `u^T self v`.
    pub fn bilinear(&self, u: &[T], v: &[T]) -> T {
        u.iter()
            .zip(self.apply(v))
            .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b)
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Characteristic polynomial `det(T I - A)` by the Faddeev–LeVerrier recursion.
    ///
    /// Over the integers every division by `k` is exact.
    pub fn char_poly(&self) -> Result<Poly<T>> {
        if !self.is_square() {
            return Err(Error::Dimension(
                "characteristic polynomial of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut c = vec![T::zero(); n + 1];
        c[n] = T::one();
        let mut m = Self::zeros(n, n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let mut next = self * &m;
            for i in 0..n {
                next[(i, i)] = next[(i, i)].clone() + c[n - k + 1].clone();
            }
            m = next;
            let tr = (self * &m).trace();
            let kk = T::from_usize(k).expect("dimension fits");
            c[n - k] = tr.exact_div(&kk).ok_or(Error::InexactDivision)?.negate();
        }
        Ok(Poly::new(c))
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::Dimension(
                "determinant of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut prev = T::one();
        let mut sign = false;
        for k in 0..n {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return Ok(T::zero());
                };
                a.swap_rows(k, p);
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[(i, j)].clone() * &a[(k, k)] - a[(i, k)].clone() * &a[(k, j)];
                    a[(i, j)] = v.exact_div(&prev).ok_or(Error::InexactDivision)?;
                }
            }
            prev = a[(k, k)].clone();
        }
        let d = if n == 0 {
            T::one()
        } else {
            a[(n - 1, n - 1)].clone()
        };
        Ok(if sign { d.negate() } else { d })
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl Matrix<BigRational> {
    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for k in 0..n {
            let p = (k..n)
                .find(|&i| !a[(i, k)].is_zero())
                .ok_or(Error::SingularMatrix)?;
            a.swap_rows(k, p);
            inv.swap_rows(k, p);
            let piv = a[(k, k)].clone();
            for j in 0..n {
                a[(k, j)] = &a[(k, j)] / &piv;
                inv[(k, j)] = &inv[(k, j)] / &piv;
            }
            for i in 0..n {
                if i == k || a[(i, k)].is_zero() {
                    continue;
                }
                let f = a[(i, k)].clone();
                for j in 0..n {
                    a[(i, j)] = &a[(i, j)] - &f * &a[(k, j)];
                    inv[(i, j)] = &inv[(i, j)] - &f * &inv[(k, j)];
                }
            }
        }
        Ok(inv)
    }
}

impl Matrix<BigInt> {
    pub fn to_rat(&self) -> Matrix<BigRational> {
        self.map(|x| BigRational::from_integer(x.clone()))
    }

    /// Inverse of a unimodular matrix, kept integral.
    pub fn inverse_unimodular(&self) -> Result<Self> {
        let inv = self.to_rat().inverse()?;
        if inv.data.iter().any(|x| !x.is_integer()) {
            return Err(Error::InexactDivision);
        }
        Ok(inv.map(|x| x.to_integer()))
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.try_mul(rhs).expect("matrix dimensions agree")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{IntMatrix, IntPoly, RatMatrix};

    #[test]
    fn char_poly_of_companion() {
        // companion of T^3 - 2T + 5
        let a = IntMatrix::from_i64_rows(&[&[0, 0, -5], &[1, 0, 2], &[0, 1, 0]]);
        assert_eq!(a.char_poly().unwrap(), IntPoly::from_i64s(&[5, -2, 0, 1]));
    }

    #[test]
    fn determinant_and_inverse() {
        let a = IntMatrix::from_i64_rows(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(a.det().unwrap(), BigInt::from(18));
        let r = a.to_rat();
        let inv = r.inverse().unwrap();
        assert!((&r * &inv).is_identity());
        let u = IntMatrix::from_i64_rows(&[&[1, 2], &[0, 1]]);
        assert_eq!(
            u.inverse_unimodular().unwrap(),
            IntMatrix::from_i64_rows(&[&[1, -2], &[0, 1]])
        );
        assert!(a.inverse_unimodular().is_err());
    }

    #[test]
    fn singular_inverse_fails() {
        let a = RatMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(a.inverse().unwrap_err(), Error::SingularMatrix);
    }

    #[test]
    fn powers() {
        let r = IntMatrix::from_i64_rows(&[&[0, -1], &[1, 0]]);
        assert!(r.pow(4).is_identity());
        assert!(!r.pow(2).is_identity());
    }

    #[test]
    fn float_matrices() {
        let a = Matrix::<f64>::from_i64_rows(&[&[2, 0], &[0, 3]]);
        let cp = a.char_poly().unwrap();
        assert!((cp.eval(&2.0)).abs() < 1e-12);
    }
}
