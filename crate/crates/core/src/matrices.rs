//! Nonnegative integer matrices M_n(r) indexing the standard basis e_A of
//! S₀(n,r): row and column sums, openness, the sets B^λ, B_μ and cb(λ), and
//! the row-sum bijection on cb(λ).
//!
//! Indices in this API are zero-based; row `i` here is row `i+1` in the usual
//! one-based notation.

use std::fmt;

use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Deserializer, Serialize};

use crate::compositions::{maximal_set, refinement_indices, weak_compositions, Composition};
use crate::error::{Error, Result};

/// An n×n matrix of nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NNMatrix {
    n: usize,
    entries: Vec<usize>,
}

impl NNMatrix {
    pub fn zero(n: usize) -> Self {
        NNMatrix { n, entries: vec![0; n * n] }
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("matrix rows must all have length n".into()));
        }
        Ok(NNMatrix { n, entries: rows.concat() })
    }

    /// Panicking constructor for literals.
    pub fn of(rows: &[&[usize]]) -> Self {
        Self::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).expect("square literal")
    }

    pub fn from_entries(n: usize, entries: Vec<usize>) -> Self {
        assert_eq!(entries.len(), n * n);
        NNMatrix { n, entries }
    }

    /// diag(λ), written D_λ.
    pub fn diag(lambda: &Composition) -> Self {
        let n = lambda.len();
        let mut m = Self::zero(n);
        for (i, &p) in lambda.parts().iter().enumerate() {
            m.entries[i * n + i] = p;
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.entries.iter().sum()
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: usize) {
        self.entries[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.entries.chunks(self.n.max(1)).map(|c| c.to_vec()).take(self.n).collect()
    }

    /// Row-sum vector ro(A).
    pub fn ro(&self) -> Composition {
        Composition::new((0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j)).sum()).collect())
    }

    /// Column-sum vector co(A).
    pub fn co(&self) -> Composition {
        Composition::new((0..self.n).map(|j| (0..self.n).map(|i| self.get(i, j)).sum()).collect())
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.set(j, i, self.get(i, j));
            }
        }
        m
    }

    /// `self + E_{ab} − E_{cd}`, if the result stays nonnegative.
    pub fn shift(&self, add: (usize, usize), sub: (usize, usize)) -> Option<Self> {
        if self.get(sub.0, sub.1) == 0 {
            return None;
        }
        let mut m = self.clone();
        m.set(sub.0, sub.1, m.get(sub.0, sub.1) - 1);
        m.set(add.0, add.1, m.get(add.0, add.1) + 1);
        Some(m)
    }

    /// No 2×2 submatrix has both diagonal entries positive.
    pub fn is_open(&self) -> bool {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                if self.get(i, j) == 0 {
                    continue;
                }
                for i2 in i + 1..n {
                    for j2 in j + 1..n {
                        if self.get(i2, j2) > 0 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// A(α;v) for `v` zero-based: columns of the v-th window kept, others zeroed.
    pub fn column_slice(&self, alpha: &Composition, v: usize) -> Self {
        let start: usize = alpha.parts()[..v].iter().sum();
        let end = start + alpha.parts()[v];
        let mut m = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                if j < start || j >= end {
                    m.set(i, j, 0);
                }
            }
        }
        m
    }

    fn check_window(&self, alpha: &Composition) -> Result<()> {
        if !alpha.is_strong() || alpha.size() != self.n {
            return Err(Error::Domain(format!("{alpha} is not a strong composition of {}", self.n)));
        }
        Ok(())
    }

    pub fn is_open_on_columns(&self, alpha: &Composition) -> Result<bool> {
        self.check_window(alpha)?;
        Ok((0..alpha.len()).all(|v| self.column_slice(alpha, v).is_open()))
    }

    /// Row windows in place of column windows; equal to the column test on Aᵀ.
    pub fn is_open_on_rows(&self, alpha: &Composition) -> Result<bool> {
        self.transpose().is_open_on_columns(alpha)
    }

    /// If a_{ij} > 0 then a_{rs} = 0 whenever r ≤ i and s > j.
    pub fn is_column_block_diagonal(&self) -> bool {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                if self.get(i, j) == 0 {
                    continue;
                }
                for r in 0..=i {
                    for s in j + 1..n {
                        if self.get(r, s) > 0 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn column_blocks(&self) -> Result<ColumnBlocks> {
        if !self.is_column_block_diagonal() {
            return Err(Error::Domain("matrix is not column block diagonal".into()));
        }
        let co = self.co();
        if !co.is_bullet() {
            return Err(Error::Domain(format!("column sums {co} have an interior zero")));
        }
        let t = co.nonzero_len();
        let mut starts = vec![1];
        for j in 1..t {
            let i = (0..self.n).find(|&i| self.get(i, j) > 0).expect("nonzero column");
            starts.push(i + 1);
        }
        starts.push(self.n + 1);
        let blocks = (0..t).map(|j| (starts[j] - 1..starts[j + 1] - 1).map(|i| self.get(i, j)).collect()).collect();
        Ok(ColumnBlocks { block_starts: starts, blocks })
    }

    /// Rows of entries as strings, e.g. `["200", "010", "000"]`.
    pub fn compact_rows(&self) -> Vec<String> {
        self.rows()
            .iter()
            .map(|r| {
                if r.iter().all(|&x| x < 10) {
                    r.iter().map(|x| x.to_string()).collect::<String>()
                } else {
                    r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                }
            })
            .collect()
    }
}

impl fmt::Display for NNMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.compact_rows().join("|"))
    }
}

impl fmt::Debug for NNMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for NNMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.n))?;
        for row in self.rows() {
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for NNMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<usize>>::deserialize(d)?;
        NNMatrix::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}

/// Block data of a column block diagonal matrix; `block_starts` are one-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColumnBlocks {
    pub block_starts: Vec<usize>,
    pub blocks: Vec<Vec<usize>>,
}

impl ColumnBlocks {
    /// Reassembles the n×n matrix.
    pub fn assemble(&self, n: usize) -> NNMatrix {
        let mut m = NNMatrix::zero(n);
        for (j, b) in self.blocks.iter().enumerate() {
            for (k, &x) in b.iter().enumerate() {
                m.set(self.block_starts[j] - 1 + k, j, x);
            }
        }
        m
    }
}

/// M_n(r) in lexicographic order of row-major entries.
pub fn enumerate_mnr(n: usize, r: usize) -> Vec<NNMatrix> {
    weak_compositions(n * n, r).into_iter().map(|c| NNMatrix::from_entries(n, c.parts().to_vec())).collect()
}

/// All A with co(A) = λ, sorted.
pub fn with_column_sums(lambda: &Composition) -> Vec<NNMatrix> {
    let n = lambda.len();
    let cols: Vec<Vec<Composition>> = lambda.parts().iter().map(|&c| weak_compositions(n, c)).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    if cols.iter().any(|c| c.is_empty()) {
        return out;
    }
    loop {
        let mut m = NNMatrix::zero(n);
        for j in 0..n {
            for (i, &x) in cols[j][idx[j]].parts().iter().enumerate() {
                m.set(i, j, x);
            }
        }
        out.push(m);
        let mut k = n;
        loop {
            if k == 0 {
                out.sort();
                return out;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < cols[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// All A with ro(A) = μ, sorted.
pub fn with_row_sums(mu: &Composition) -> Vec<NNMatrix> {
    let mut out: Vec<NNMatrix> = with_column_sums(mu).iter().map(NNMatrix::transpose).collect();
    out.sort();
    out
}

fn excluded_windows(lambda: &Composition) -> Vec<Composition> {
    let ones = Composition::ones(lambda.len());
    maximal_set(lambda).into_iter().filter(|a| *a != ones).collect()
}

/// B^λ: matrices with co(A) = λ that are open on columns for no α ∈ max(λ) \ {1ⁿ}.
pub fn basis_b_lambda(lambda: &Composition) -> Vec<NNMatrix> {
    let windows = excluded_windows(lambda);
    with_column_sums(lambda)
        .into_iter()
        .filter(|a| !windows.iter().any(|w| a.is_open_on_columns(w).expect("window of size n")))
        .collect()
}

/// B_μ: the row analogue of B^λ.
pub fn basis_b_mu_rows(mu: &Composition) -> Vec<NNMatrix> {
    let windows = excluded_windows(mu);
    with_row_sums(mu)
        .into_iter()
        .filter(|a| !windows.iter().any(|w| a.is_open_on_rows(w).expect("window of size n")))
        .collect()
}

/// cb(λ): column block diagonal matrices with co(A) = λ.
pub fn cb_set(lambda: &Composition) -> Vec<NNMatrix> {
    with_column_sums(lambda).into_iter().filter(NNMatrix::is_column_block_diagonal).collect()
}

/// The unique A ∈ cb(λ) with ro(A) = μ.
pub fn row_bijection_inverse(mu: &Composition, lambda: &Composition) -> Result<NNMatrix> {
    let starts = refinement_indices(mu, lambda)
        .ok_or_else(|| Error::Domain(format!("{mu} is not a refinement of {lambda}")))?;
    let n = lambda.len();
    let mut a = NNMatrix::zero(n);
    for j in 0..starts.len() - 1 {
        for i in starts[j]..starts[j + 1] {
            a.set(i, j, mu.parts()[i]);
        }
    }
    Ok(a)
}
