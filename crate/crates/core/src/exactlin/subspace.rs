use super::echelon::{dense_from_sparse, sparse_from_dense, Echelon};
use super::field::Field;
use super::matrix::Matrix;

/// A subspace of `T^ambient_dim`, stored by its reduced row echelon basis so
/// that equality of subspaces is equality of values.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace<T> {
    ambient_dim: usize,
    basis: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: Field> Subspace<T> {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| {
                let mut v = vec![T::zero(); ambient_dim];
                v[i] = T::one();
                v
            })
            .collect();
        Subspace { ambient_dim, basis, pivots: (0..ambient_dim).collect() }
    }

    pub fn span<I>(ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<T>>,
    {
        let mut ech = Echelon::new(ambient_dim);
        for v in vectors {
            assert_eq!(v.len(), ambient_dim, "vector length differs from ambient dimension");
            if ech.is_full() {
                break;
            }
            ech.insert(sparse_from_dense(&v));
        }
        Self::from_echelon(ambient_dim, ech)
    }

    pub(crate) fn from_echelon(ambient_dim: usize, ech: Echelon<T>) -> Self {
        let rows = ech.into_rref();
        let pivots = rows.iter().map(|r| r[0].0).collect();
        let basis = rows.iter().map(|r| dense_from_sparse(ambient_dim, r)).collect();
        Subspace { ambient_dim, basis, pivots }
    }

    pub(crate) fn from_sparse<I>(ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = super::echelon::SparseVec<T>>,
    {
        let mut ech = Echelon::new(ambient_dim);
        for v in vectors {
            ech.insert(v);
        }
        Self::from_echelon(ambient_dim, ech)
    }

    /// Span of the columns of `m`.
    pub fn column_space(m: &Matrix<T>) -> Self {
        Self::span(m.rows(), m.column_vectors())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<T>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns without a pivot, in increasing order.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut mark = vec![true; self.ambient_dim];
        for &p in &self.pivots {
            mark[p] = false;
        }
        (0..self.ambient_dim).filter(|&i| mark[i]).collect()
    }

    /// `v` minus its projection along the echelon basis; zero exactly on members.
    pub fn reduce(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(row) {
                if !x.is_zero() {
                    *o = o.clone() - c.clone() * x.clone();
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Coefficients of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[T]) -> Option<Vec<T>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        Self::span(self.ambient_dim, self.basis.iter().chain(&other.basis).cloned())
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let (a, b) = (self.dim(), other.dim());
        if a == 0 || b == 0 {
            return Self::zero(self.ambient_dim);
        }
        let mut cols: Vec<Vec<T>> = self.basis.clone();
        cols.extend(other.basis.iter().map(|v| v.iter().map(|x| -x.clone()).collect()));
        let m = Matrix::from_columns(self.ambient_dim, &cols);
        let ker = super::kernel(&m);
        Self::span(
            self.ambient_dim,
            ker.basis().iter().map(|c| {
                let mut v = vec![T::zero(); self.ambient_dim];
                for (coef, row) in c[..a].iter().zip(&self.basis) {
                    if coef.is_zero() {
                        continue;
                    }
                    for (o, x) in v.iter_mut().zip(row) {
                        *o = o.clone() + coef.clone() * x.clone();
                    }
                }
                v
            }),
        )
    }

    /// Basis vectors as the columns of an `ambient_dim × dim` matrix.
    pub fn basis_matrix(&self) -> Matrix<T> {
        Matrix::from_columns(self.ambient_dim, &self.basis)
    }
}
