//! Dense row-major matrices over exact rings.

use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::quad::QuadExt;
use crate::scalar::{Field, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<Rational>;
pub type QuadMatrix = Matrix<QuadExt>;

impl<T> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch("empty matrix".into()));
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
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

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    pub(crate) fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "expected a square matrix, got {}x{}",
                self.rows, self.cols
            )))
        }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    /// Rows `r0..r1` and columns `c0..c1`.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        let mut data = Vec::with_capacity((r1 - r0) * (c1 - c0));
        for i in r0..r1 {
            data.extend_from_slice(&self.row(i)[c0..c1]);
        }
        Matrix { rows: r1 - r0, cols: c1 - c0, data }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Ring> Matrix<T> {
    pub fn identity_like(n: usize, witness: &T) -> Self {
        let zero = witness.zero_like();
        let one = witness.one_like();
        let data = (0..n * n)
            .map(|k| if k / n == k % n { one.clone() } else { zero.clone() })
            .collect();
        Matrix { rows: n, cols: n, data }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = self[(i, 0)].mul(&rhs[(0, j)]);
                for k in 1..self.cols {
                    acc = acc.add(&self[(i, k)].mul(&rhs[(k, j)]));
                }
                data.push(acc);
            }
        }
        Ok(Matrix { rows: self.rows, cols: rhs.cols, data })
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        *x == x.one_like()
                    } else {
                        x.is_zero_elem()
                    }
                })
            })
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero_elem()))
    }
}

impl<T: Field> Matrix<T> {
    /// Determinant by Gaussian elimination over the field.
    pub fn det(&self) -> Result<T> {
        self.require_square()?;
        let mut m = self.clone();
        let n = self.rows;
        let mut det = self[(0, 0)].one_like();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !m[(r, c)].is_zero_elem()) else {
                return Ok(det.zero_like());
            };
            if p != c {
                m.swap_rows(p, c);
                det = det.neg();
            }
            let pivot = m[(c, c)].clone();
            det = det.mul(&pivot);
            for r in c + 1..n {
                if m[(r, c)].is_zero_elem() {
                    continue;
                }
                let f = m[(r, c)].div(&pivot);
                for k in c..n {
                    let v = m[(r, k)].sub(&f.mul(&m[(c, k)]));
                    m[(r, k)] = v;
                }
            }
        }
        Ok(det)
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = Self::identity_like(n, &self[(0, 0)]);
        for c in 0..n {
            let p = (c..n).find(|&r| !m[(r, c)].is_zero_elem()).ok_or(Error::Singular)?;
            m.swap_rows(p, c);
            inv.swap_rows(p, c);
            let pivot = m[(c, c)].clone();
            for k in 0..n {
                m[(c, k)] = m[(c, k)].div(&pivot);
                inv[(c, k)] = inv[(c, k)].div(&pivot);
            }
            for r in 0..n {
                if r == c || m[(r, c)].is_zero_elem() {
                    continue;
                }
                let f = m[(r, c)].clone();
                for k in 0..n {
                    let v = m[(r, k)].sub(&f.mul(&m[(c, k)]));
                    m[(r, k)] = v;
                    let w = inv[(r, k)].sub(&f.mul(&inv[(c, k)]));
                    inv[(r, k)] = w;
                }
            }
        }
        Ok(inv)
    }
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        Self::identity_like(n, &BigInt::zero())
    }

    pub fn from_i64<const C: usize>(rows: &[[i64; C]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
            .expect("non-empty literal matrix")
    }

    pub fn to_rational(&self) -> RatMatrix {
        self.map(|x| Rational::from_integer(x.clone()))
    }

    pub fn det_int(&self) -> Result<BigInt> {
        Ok(self.to_rational().det()?.to_integer())
    }
}

impl RatMatrix {
    pub fn identity(n: usize) -> Self {
        Self::identity_like(n, &Rational::zero())
    }

    pub fn from_i64<const C: usize>(rows: &[[i64; C]]) -> Self {
        IntMatrix::from_i64(rows).to_rational()
    }

    pub fn is_integral(&self) -> bool {
        self.entries().all(|x| x.denom().is_one())
    }

    pub fn to_integer(&self) -> Option<IntMatrix> {
        self.is_integral().then(|| self.map(|x| x.numer().clone()))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn to_quad(&self, n: u64) -> Result<QuadMatrix> {
        let data = self
            .entries()
            .map(|x| QuadExt::from_rational(x.clone(), n))
            .collect::<Result<Vec<_>>>()?;
        Matrix::new(self.rows, self.cols, data)
    }
}

impl QuadMatrix {
    /// The common radicand of every entry.
    pub fn radicand(&self) -> Result<u64> {
        let n = self.data[0].radicand();
        match self.entries().find(|x| x.radicand() != n) {
            Some(x) => Err(Error::MixedField(n, x.radicand())),
            None => Ok(n),
        }
    }

    pub fn to_rational(&self) -> Option<RatMatrix> {
        self.entries().all(QuadExt::is_rational).then(|| self.map(|x| x.a().clone()))
    }
}
