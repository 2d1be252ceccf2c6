use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Field;

/// Dense row-major matrix over a field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Field> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from row vectors. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| T::from_int(x)).collect()).collect())
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    /// Matrix with the given vectors as columns, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    /// The matrix unit E_{ij} of the given size.
    pub fn unit(rows: usize, cols: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        m.set(i, j, T::one());
        m
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

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column_vectors(&self) -> Vec<Vec<T>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<T> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j { x.is_one() } else { x.is_zero() }
                })
            })
    }

    /// Nonzero entries as (row, col, value).
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &T)> + '_ {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(move |(k, x)| (k / self.cols.max(1), k % self.cols.max(1), x))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &T, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a = a.clone() + c.clone() * b.clone();
            }
        }
    }

    pub fn try_mul(&self, other: &Self) -> Option<Self> {
        if self.cols != other.rows {
            return None;
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                let base = i * out.cols;
                for (j, b) in orow.iter().enumerate() {
                    if !b.is_zero() {
                        let slot = &mut out.data[base + j];
                        *slot = slot.clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Some(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(T::zero(), |acc, (a, b)| {
                    if a.is_zero() || b.is_zero() { acc } else { acc + a.clone() * b.clone() }
                })
            })
            .collect()
    }

    pub fn pow(&self, e: usize) -> Self {
        assert!(self.is_square());
        let mut out = Self::identity(self.rows);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for (i, j, a) in self.nonzeros() {
            for (k, l, b) in other.nonzeros() {
                out.set(i * other.rows + k, j * other.cols + l, a.clone() * b.clone());
            }
        }
        out
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols { self.get(i, j).clone() } else { other.get(i, j - self.cols).clone() }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Commutator `self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }
}

impl<T: Field> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.try_mul(rhs).expect("matrix product dimension mismatch")
    }
}

impl<T: Field> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum dimension mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<T: Field> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference dimension mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }
}

impl<T: Field> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a.clone()).collect() }
    }
}

impl<T: Field> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
