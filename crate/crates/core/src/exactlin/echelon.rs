//! Sparse incremental row echelon form. Used internally wherever equation
//! systems are large but very sparse; never exposed in public signatures.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use super::field::Field;

pub(crate) type SparseVec<T> = Vec<(usize, T)>;

const NONE: usize = usize::MAX;

pub(crate) struct Echelon<T> {
    dim: usize,
    rows: Vec<SparseVec<T>>,
    pivot_row: Vec<usize>,
}

pub(crate) fn sparse_from_dense<T: Field>(v: &[T]) -> SparseVec<T> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub(crate) fn dense_from_sparse<T: Field>(dim: usize, v: &SparseVec<T>) -> Vec<T> {
    let mut out = vec![T::zero(); dim];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

impl<T: Field> Echelon<T> {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, rows: Vec::new(), pivot_row: vec![NONE; dim] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    /// Residual of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: SparseVec<T>) -> SparseVec<T> {
        let mut work: BTreeMap<usize, T> = v.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        let mut cursor = 0;
        loop {
            let hit = work
                .range(cursor..)
                .find(|(k, _)| self.pivot_row[**k] != NONE)
                .map(|(k, x)| (*k, x.clone()));
            let Some((c, coeff)) = hit else { break };
            for (j, x) in &self.rows[self.pivot_row[c]] {
                let delta = coeff.clone() * x.clone();
                match work.entry(*j) {
                    Entry::Occupied(mut o) => {
                        let nv = o.get().clone() - delta;
                        if nv.is_zero() {
                            o.remove();
                        } else {
                            *o.get_mut() = nv;
                        }
                    }
                    Entry::Vacant(slot) => {
                        slot.insert(-delta);
                    }
                }
            }
            cursor = c + 1;
        }
        work.into_iter().collect()
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec<T>) -> bool {
        let res = self.reduce(v);
        if res.is_empty() {
            return false;
        }
        let lead = res[0].1.clone();
        let p = res[0].0;
        let row: SparseVec<T> = if lead.is_one() {
            res
        } else {
            res.into_iter().map(|(j, x)| (j, x / lead.clone())).collect()
        };
        self.pivot_row[p] = self.rows.len();
        self.rows.push(row);
        true
    }

    /// Fully reduced rows sorted by pivot column.
    pub fn into_rref(self) -> Vec<SparseVec<T>> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&k| std::cmp::Reverse(self.rows[k][0].0));
        let mut done_row = vec![NONE; self.dim];
        let mut done: Vec<SparseVec<T>> = Vec::with_capacity(self.rows.len());
        let mut rows = self.rows;
        for k in order {
            let row = std::mem::take(&mut rows[k]);
            let p = row[0].0;
            let hits: Vec<(usize, T)> =
                row.iter().skip(1).filter(|(j, _)| done_row[*j] != NONE).cloned().collect();
            let row = if hits.is_empty() {
                row
            } else {
                let mut work: BTreeMap<usize, T> = row.into_iter().collect();
                for (j, coeff) in hits {
                    for (l, x) in &done[done_row[j]] {
                        let delta = coeff.clone() * x.clone();
                        let e = work.entry(*l).or_insert_with(T::zero);
                        *e = e.clone() - delta;
                    }
                }
                work.into_iter().filter(|(_, x)| !x.is_zero()).collect()
            };
            done_row[p] = done.len();
            done.push(row);
        }
        done.sort_by_key(|r| r[0].0);
        done
    }

    /// Basis of the solution space of `row · x = 0` for all rows, each vector
    /// carrying a 1 in one free column.
    pub fn null_space(self) -> Vec<SparseVec<T>> {
        let dim = self.dim;
        let rref = self.into_rref();
        let mut is_pivot = vec![false; dim];
        for r in &rref {
            is_pivot[r[0].0] = true;
        }
        let mut per_free: BTreeMap<usize, SparseVec<T>> = BTreeMap::new();
        for (f, _) in is_pivot.iter().enumerate().filter(|(_, p)| !**p) {
            per_free.insert(f, vec![(f, T::one())]);
        }
        for r in &rref {
            let p = r[0].0;
            for (j, c) in r.iter().skip(1) {
                per_free.get_mut(j).expect("non-pivot column").push((p, -c.clone()));
            }
        }
        per_free
            .into_values()
            .map(|mut v| {
                v.sort_by_key(|e| e.0);
                v
            })
            .collect()
    }
}
