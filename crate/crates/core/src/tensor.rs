//! The tensor space V₀^{⊗r}: the right H_r(0)-action on words, the standard
//! basis e_A realized as H_r(0)-endomorphisms through double cosets, the
//! descendant sets E_i, F_i, and the images ψ(e_i), ψ(f_i), ψ(k_i).

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::compositions::{weak_compositions, Composition};
use crate::error::{guard, Error, Result};
use crate::hecke::{HeckeElt, Perm};
use crate::matrices::{with_row_sums, NNMatrix};
use crate::relations::{schur_relations, u0_relations, RelationReport};
use crate::{exactlin, rat, Rat, RatMatrix};

/// Largest `n^r` for which dense matrices on the word basis are built.
pub const TENSOR_MAX_DIM: usize = 1024;

/// A word `[i_1, …, i_r]` over `{1, …, n}`.
pub type Word = Vec<usize>;

pub fn content(w: &[usize], n: usize) -> Composition {
    let mut c = vec![0; n];
    for &x in w {
        c[x - 1] += 1;
    }
    Composition::new(c)
}

/// `i_λ = [1^{λ_1}, 2^{λ_2}, …, n^{λ_n}]`.
pub fn phi0_word(lambda: &Composition) -> Word {
    lambda.parts().iter().enumerate().flat_map(|(k, &p)| std::iter::repeat(k + 1).take(p)).collect()
}

/// `v · π̄_i` (one-based `i`): the swapped word if the letters increase at
/// `i`, zero if they agree, `−v` if they decrease.
pub fn right_hecke_action(v: &[usize], i: usize) -> Option<(Rat, Word)> {
    let (a, b) = (v[i - 1], v[i]);
    if a < b {
        let mut w = v.to_vec();
        w.swap(i - 1, i);
        Some((rat(1), w))
    } else if a == b {
        None
    } else {
        Some((rat(-1), v.to_vec()))
    }
}

/// `E_i(w)`: words obtained by turning one `i+1` into `i`, provided no `i`
/// occurs to its right.
pub fn descendants_e(i: usize, w: &[usize]) -> Vec<Word> {
    (0..w.len())
        .filter(|&k| w[k] == i + 1 && w[k + 1..].iter().all(|&x| x != i))
        .map(|k| {
            let mut j = w.to_vec();
            j[k] = i;
            j
        })
        .collect()
}

/// `F_i(w)`: words obtained by turning one `i` into `i+1`, provided no `i+1`
/// occurs to its left.
pub fn descendants_f(i: usize, w: &[usize]) -> Vec<Word> {
    (0..w.len())
        .filter(|&k| w[k] == i && w[..k].iter().all(|&x| x != i + 1))
        .map(|k| {
            let mut j = w.to_vec();
            j[k] = i + 1;
            j
        })
        .collect()
}

/// A generator of U₀(gl_n), one-based index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "index", rename_all = "lowercase")]
pub enum U0Gen {
    E(usize),
    F(usize),
    K(usize),
}

impl U0Gen {
    /// All generators in module order `e_1.., f_1.., k_1..k_n`.
    pub fn all(n: usize) -> Vec<U0Gen> {
        (1..n).map(U0Gen::E).chain((1..n).map(U0Gen::F)).chain((1..=n).map(U0Gen::K)).collect()
    }
}

type SparseVec = BTreeMap<usize, Rat>;

fn sparse_add(v: &mut SparseVec, k: usize, c: Rat) {
    if c.is_zero() {
        return;
    }
    let e = v.entry(k).or_insert_with(Rat::zero);
    *e += c;
    if e.is_zero() {
        v.remove(&k);
    }
}

/// `V₀^{⊗r}` with its words in lexicographic order.
#[derive(Clone, Debug)]
pub struct TensorSpace {
    pub n: usize,
    pub r: usize,
    words: Vec<Word>,
}

impl TensorSpace {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        guard(n >= 1, || "tensor space needs n ≥ 1".into())?;
        let dim = n.checked_pow(r as u32).filter(|&d| d <= TENSOR_MAX_DIM);
        let Some(dim) = dim else {
            return Err(Error::Guard(format!("n^r = {n}^{r} exceeds {TENSOR_MAX_DIM}")));
        };
        let words = (0..dim)
            .map(|mut k| {
                let mut w = vec![0; r];
                for slot in w.iter_mut().rev() {
                    *slot = k % n + 1;
                    k /= n;
                }
                w
            })
            .collect();
        Ok(TensorSpace { n, r, words })
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn index(&self, w: &[usize]) -> usize {
        w.iter().fold(0, |acc, &x| acc * self.n + (x - 1))
    }

    pub fn labels(&self) -> Vec<String> {
        self.words.iter().map(|w| w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).collect()
    }

    pub fn content_of(&self, k: usize) -> Composition {
        content(&self.words[k], self.n)
    }

    fn act_gen(&self, v: &SparseVec, i: usize) -> SparseVec {
        let mut out = SparseVec::new();
        for (&k, c) in v {
            if let Some((s, w)) = right_hecke_action(&self.words[k], i) {
                sparse_add(&mut out, self.index(&w), s * c);
            }
        }
        out
    }

    /// `v · h` for an element of H_r(0).
    fn act_elt(&self, v: &SparseVec, h: &HeckeElt) -> SparseVec {
        let mut out = SparseVec::new();
        for (w, c) in h.terms() {
            let mut x = v.clone();
            for &i in &w.reduced_word() {
                x = self.act_gen(&x, i);
            }
            for (k, y) in x {
                sparse_add(&mut out, k, y * c);
            }
        }
        out
    }

    /// Matrix of `v ↦ v·π̄_i` on the word basis.
    pub fn right_action_matrix(&self, i: usize) -> RatMatrix {
        let d = self.dim();
        let mut m = RatMatrix::zeros(d, d);
        for (k, w) in self.words.iter().enumerate() {
            if let Some((s, u)) = right_hecke_action(w, i) {
                m.set(self.index(&u), k, s);
            }
        }
        m
    }

    pub fn right_action_matrices(&self) -> Vec<RatMatrix> {
        (1..self.r).map(|i| self.right_action_matrix(i)).collect()
    }

    fn to_matrix(&self, cols: impl IntoIterator<Item = (usize, SparseVec)>) -> RatMatrix {
        let d = self.dim();
        let mut m = RatMatrix::zeros(d, d);
        for (col, v) in cols {
            for (row, c) in v {
                m.set(row, col, c);
            }
        }
        m
    }

    /// Extends `ξ_{i_μ} ↦ v0` to the right H_r(0)-linear map on content μ,
    /// zero on every other weight space.
    fn transport(&self, mu: &Composition, v0: SparseVec) -> RatMatrix {
        let src = phi0_word(mu);
        let mut values: HashMap<Word, SparseVec> = HashMap::from([(src.clone(), v0)]);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for p in 1..self.r {
                if u[p - 1] < u[p] {
                    let mut w = u.clone();
                    w.swap(p - 1, p);
                    if !values.contains_key(&w) {
                        let next = self.act_gen(&values[&u], p);
                        values.insert(w.clone(), next);
                        queue.push_back(w);
                    }
                }
            }
        }
        self.to_matrix(values.into_iter().map(|(w, v)| (self.index(&w), v)))
    }

    fn check_shape(&self, a: &NNMatrix) -> Result<()> {
        if a.n() != self.n || a.r() != self.r {
            return Err(Error::Dimension(format!("{a} is not in M_{}({})", self.n, self.r)));
        }
        Ok(())
    }

    /// `φ^{d_A}_{λ,μ}`: `ξ_{i_μ}·h ↦ ξ_{i_λ}·x̄_{S_λ d_A S_μ}·h`.
    pub fn double_coset_map(&self, a: &NNMatrix) -> Result<RatMatrix> {
        self.check_shape(a)?;
        let dc = double_coset_datum(a);
        let start = SparseVec::from([(self.index(&phi0_word(&dc.lambda)), rat(1))]);
        let coset_sum = HeckeElt::from_terms(self.r, dc.coset_elements.iter().map(|x| (x.clone(), rat(1))));
        Ok(self.transport(&dc.mu, self.act_elt(&start, &coset_sum)))
    }

    /// `e_A`: `ξ_{i_μ}·h ↦ ξ_{i_λ}·π_{w₊}·h` with `w₊` the longest element of
    /// `S_λ d_A S_μ`, i.e. the double-coset maps summed over the Bruhat
    /// closure of the double coset.
    pub fn e_a_endomorphism(&self, a: &NNMatrix) -> Result<RatMatrix> {
        self.check_shape(a)?;
        let dc = double_coset_datum(a);
        let mut v = SparseVec::from([(self.index(&phi0_word(&dc.lambda)), rat(1))]);
        for &i in &dc.w_plus.reduced_word() {
            let mut next = self.act_gen(&v, i);
            for (k, c) in v {
                sparse_add(&mut next, k, c);
            }
            v = next;
        }
        Ok(self.transport(&dc.mu, v))
    }

    /// `k_λ = e_{D_λ}` read directly as the projection onto content λ.
    pub fn weight_projection(&self, lambda: &Composition) -> RatMatrix {
        let d = self.dim();
        RatMatrix::from_fn(d, d, |a, b| if a == b && &self.content_of(a) == lambda { rat(1) } else { rat(0) })
    }

    /// `ψ(g)` as `Σ_λ e_{i,λ}`, `Σ_λ f_{i,λ}` or `Σ_{μ_i = 0} k_μ`, each term
    /// an `e_A` endomorphism.
    pub fn psi_image(&self, g: U0Gen) -> Result<RatMatrix> {
        let n = self.n;
        let d = self.dim();
        let mut out = RatMatrix::zeros(d, d);
        for l in weak_compositions(n, self.r) {
            let a = match g {
                U0Gen::E(i) => {
                    check_index(i, n - 1)?;
                    if l.parts()[i] == 0 {
                        continue;
                    }
                    NNMatrix::diag(&l).shift((i - 1, i), (i, i))
                }
                U0Gen::F(i) => {
                    check_index(i, n - 1)?;
                    if l.parts()[i - 1] == 0 {
                        continue;
                    }
                    NNMatrix::diag(&l).shift((i, i - 1), (i - 1, i - 1))
                }
                U0Gen::K(i) => {
                    check_index(i, n)?;
                    if l.parts()[i - 1] != 0 {
                        continue;
                    }
                    Some(NNMatrix::diag(&l))
                }
            };
            let a = a.ok_or_else(|| Error::Internal("shifted diagonal left M_n(r)".into()))?;
            out = &out + &self.e_a_endomorphism(&a)?;
        }
        Ok(out)
    }

    /// Action of a generator through the descendant sets and the `k_i` test.
    pub fn descendant_action(&self, g: U0Gen) -> Result<RatMatrix> {
        let cols = self.words.iter().enumerate().map(|(k, w)| {
            let targets: Vec<Word> = match g {
                U0Gen::E(i) => descendants_e(i, w),
                U0Gen::F(i) => descendants_f(i, w),
                U0Gen::K(i) => {
                    if w.contains(&i) {
                        vec![]
                    } else {
                        vec![w.clone()]
                    }
                }
            };
            let mut v = SparseVec::new();
            for t in targets {
                sparse_add(&mut v, self.index(&t), rat(1));
            }
            (k, v)
        });
        match g {
            U0Gen::E(i) | U0Gen::F(i) => check_index(i, self.n - 1)?,
            U0Gen::K(i) => check_index(i, self.n)?,
        }
        Ok(self.to_matrix(cols))
    }

    /// The iterated-coproduct action
    /// `Δ(e_i) = Σ_t 1^{⊗(t−1)} ⊗ e_i ⊗ k_i^{⊗(r−t)}`,
    /// `Δ(f_i) = Σ_t k_{i+1}^{⊗(t−1)} ⊗ f_i ⊗ 1^{⊗(r−t)}`, `Δ(k_i) = k_i^{⊗r}`,
    /// built from Kronecker products of the natural representation.
    pub fn u0_action_on_tensor(&self, g: U0Gen) -> Result<RatMatrix> {
        let n = self.n;
        let r = self.r;
        let id = RatMatrix::identity(n);
        let (head, mid, tail) = match g {
            U0Gen::E(i) => {
                check_index(i, n - 1)?;
                (id.clone(), rho_v(n, g), rho_v(n, U0Gen::K(i)))
            }
            U0Gen::F(i) => {
                check_index(i, n - 1)?;
                (rho_v(n, U0Gen::K(i + 1)), rho_v(n, g), id.clone())
            }
            U0Gen::K(i) => {
                check_index(i, n)?;
                let k = rho_v(n, g);
                return Ok((0..r).fold(RatMatrix::identity(1), |acc, _| acc.kron(&k)));
            }
        };
        let d = self.dim();
        let mut out = RatMatrix::zeros(d, d);
        for t in 0..r {
            let mut term = RatMatrix::identity(1);
            for s in 0..r {
                term = term.kron(if s < t {
                    &head
                } else if s == t {
                    &mid
                } else {
                    &tail
                });
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// The defining relations of S₀(n,r) evaluated on `ψ(e_i)`, `ψ(f_i)` and
    /// `k_λ = e_{D_λ}`.
    pub fn verify_presentation(&self) -> Result<RelationReport> {
        let n = self.n;
        let e: Vec<RatMatrix> = (1..n).map(|i| self.psi_image(U0Gen::E(i))).collect::<Result<_>>()?;
        let f: Vec<RatMatrix> = (1..n).map(|i| self.psi_image(U0Gen::F(i))).collect::<Result<_>>()?;
        let mut cache: HashMap<Composition, RatMatrix> = HashMap::new();
        for l in weak_compositions(n, self.r) {
            let m = self.e_a_endomorphism(&NNMatrix::diag(&l))?;
            cache.insert(l, m);
        }
        let k = |l: &Composition| cache[l].clone();
        Ok(schur_relations(n, self.r, &e, &f, &k))
    }

    /// U₀(gl_n) relations on a family of generator matrices.
    pub fn u0_report(&self, action: impl Fn(U0Gen) -> Result<RatMatrix>) -> Result<RelationReport> {
        let n = self.n;
        let e: Vec<RatMatrix> = (1..n).map(|i| action(U0Gen::E(i))).collect::<Result<_>>()?;
        let f: Vec<RatMatrix> = (1..n).map(|i| action(U0Gen::F(i))).collect::<Result<_>>()?;
        let k: Vec<RatMatrix> = (1..=n).map(|i| action(U0Gen::K(i))).collect::<Result<_>>()?;
        Ok(u0_relations(n, &e, &f, &k))
    }

    /// Checks that `x̄_λ π̄_w ↦ ξ_{i_λ} π̄_w` is a well-defined isomorphism
    /// `x̄_λ H_r(0) → (V₀^{⊗r})_λ`: the two spanning families have the same
    /// linear relations and the right dimension.
    pub fn phi0_is_isomorphism(&self, lambda: &Composition) -> bool {
        let perms = Perm::all(self.r);
        let pindex: HashMap<&Perm, usize> = perms.iter().enumerate().map(|(k, w)| (w, k)).collect();
        let xl = crate::hecke::x_bar(lambda);
        let start = SparseVec::from([(self.index(&phi0_word(lambda)), rat(1))]);
        let (hd, vd) = (perms.len(), self.dim());
        let rows: Vec<Vec<Rat>> = perms
            .iter()
            .map(|w| {
                let b = HeckeElt::basis(w.clone());
                let mut row = vec![Rat::zero(); hd + vd];
                for (u, c) in xl.mul(&b).terms() {
                    row[pindex[u]] = c.clone();
                }
                for (k, c) in self.act_elt(&start, &b) {
                    row[hd + k] = c;
                }
                row
            })
            .collect();
        let joint = RatMatrix::from_rows(rows.clone());
        let left = RatMatrix::from_fn(perms.len(), hd, |a, b| rows[a][b].clone());
        let right = RatMatrix::from_fn(perms.len(), vd, |a, b| rows[a][hd + b].clone());
        let m = crate::compositions::multinomial(lambda);
        let (rj, rl, rr) = (exactlin::rank(&joint), exactlin::rank(&left), exactlin::rank(&right));
        rj == rl && rl == rr && rr as u128 == m
    }
}

fn check_index(i: usize, max: usize) -> Result<()> {
    guard((1..=max).contains(&i), || format!("generator index {i} outside 1..={max}"))
}

/// The natural representation: `e_i = E_{i,i+1}`, `f_i = E_{i+1,i}`,
/// `k_i = Σ_{j≠i} E_{j,j}`.
pub fn rho_v(n: usize, g: U0Gen) -> RatMatrix {
    match g {
        U0Gen::E(i) => RatMatrix::unit(n, n, i - 1, i),
        U0Gen::F(i) => RatMatrix::unit(n, n, i, i - 1),
        U0Gen::K(i) => RatMatrix::from_fn(n, n, |a, b| if a == b && a != i - 1 { rat(1) } else { rat(0) }),
    }
}

/// `R_i^λ` as a zero-based range of positions.
fn row_block(lambda: &Composition, i: usize) -> std::ops::Range<usize> {
    let start: usize = lambda.parts()[..i].iter().sum();
    start..start + lambda.parts()[i]
}

/// `w_A`, `d_A` and the double coset `S_λ w_A S_μ` for `λ = ro(A)`, `μ = co(A)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleCosetDatum {
    pub a: NNMatrix,
    pub lambda: Composition,
    pub mu: Composition,
    pub w_a: Perm,
    pub d_a: Perm,
    pub w_plus: Perm,
    pub coset_elements: Vec<Perm>,
}

/// Young subgroup generators `s_j` with `j`, `j+1` in one block of λ.
fn young_generators(lambda: &Composition) -> Vec<usize> {
    let set = lambda.descent_set();
    (1..lambda.size()).filter(|&j| !set.contains(j)).collect()
}

pub fn double_coset_datum(a: &NNMatrix) -> DoubleCosetDatum {
    let n = a.n();
    let r = a.r();
    let (lambda, mu) = (a.ro(), a.co());
    let mut w = vec![0usize; r];
    let mut next_col: Vec<usize> = (0..n).map(|j| row_block(&mu, j).start).collect();
    let mut next_row: Vec<usize> = (0..n).map(|i| row_block(&lambda, i).start).collect();
    for i in 0..n {
        for j in 0..n {
            for _ in 0..a.get(i, j) {
                w[next_col[j]] = next_row[i] + 1;
                next_col[j] += 1;
                next_row[i] += 1;
            }
        }
    }
    let w_a = Perm::from_one_line(w).expect("row filling is a bijection");
    let (left, right) = (young_generators(&lambda), young_generators(&mu));
    let mut seen: HashSet<Perm> = HashSet::from([w_a.clone()]);
    let mut queue = VecDeque::from([w_a.clone()]);
    while let Some(x) = queue.pop_front() {
        let nbrs = left.iter().map(|&j| x.left_simple(j)).chain(right.iter().map(|&j| x.right_simple(j)));
        for y in nbrs.collect::<Vec<_>>() {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut coset_elements: Vec<Perm> = seen.into_iter().collect();
    coset_elements.sort();
    let d_a = coset_elements.iter().min_by_key(|x| (x.length(), (*x).clone())).cloned().expect("nonempty coset");
    let w_plus = coset_elements.iter().max_by_key(|x| (x.length(), (*x).clone())).cloned().expect("nonempty coset");
    DoubleCosetDatum { a: a.clone(), lambda, mu, w_a, d_a, w_plus, coset_elements }
}

/// For `co(A) = ro(B)`, the unique `C` with `e_A e_B = e_C`, found by matching
/// endomorphism matrices; `None` when `co(A) ≠ ro(B)` and the product vanishes.
pub fn product_law(v: &TensorSpace, a: &NNMatrix, b: &NNMatrix) -> Result<Option<NNMatrix>> {
    let prod = &v.e_a_endomorphism(a)? * &v.e_a_endomorphism(b)?;
    if a.co() != b.ro() {
        return if prod.is_zero() {
            Ok(None)
        } else {
            Err(Error::Internal(format!("e_A e_B ≠ 0 for {a}, {b} with co(A) ≠ ro(B)")))
        };
    }
    let mut hits = Vec::new();
    for c in with_row_sums(&a.ro()).into_iter().filter(|c| c.co() == b.co()) {
        if v.e_a_endomorphism(&c)? == prod {
            hits.push(c);
        }
    }
    match hits.len() {
        1 => Ok(hits.pop()),
        k => Err(Error::Internal(format!("e_A e_B matches {k} basis elements for {a}, {b}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::comp;
    use crate::matrices::enumerate_mnr;
    use crate::schur::e_on_basis;

    #[test]
    fn word_action_examples() {
        assert_eq!(right_hecke_action(&[1, 2], 1), Some((rat(1), vec![2, 1])));
        assert_eq!(right_hecke_action(&[1, 1], 1), None);
        assert_eq!(right_hecke_action(&[2, 1], 1), Some((rat(-1), vec![2, 1])));
        assert_eq!(phi0_word(&comp(&[2, 0, 1])), vec![1, 1, 3]);
        assert_eq!(phi0_word(&comp(&[1, 1, 1])), vec![1, 2, 3]);
    }

    #[test]
    fn descendant_examples() {
        let w = [1, 3, 4, 3, 1, 4, 2, 4];
        assert_eq!(descendants_e(3, &w), vec![vec![1, 3, 4, 3, 1, 3, 2, 4], vec![1, 3, 4, 3, 1, 4, 2, 3]]);
        assert_eq!(descendants_f(3, &w), vec![vec![1, 4, 4, 3, 1, 4, 2, 4]]);
        assert!(descendants_e(1, &[1]).is_empty());
    }

    #[test]
    fn double_cosets() {
        let l = comp(&[2, 1, 1]);
        let d = double_coset_datum(&NNMatrix::diag(&l));
        assert_eq!(d.w_a, Perm::identity(4));
        assert_eq!(d.d_a, Perm::identity(4));
        let d = double_coset_datum(&NNMatrix::of(&[&[0, 1], &[1, 0]]));
        assert_eq!(d.w_a, Perm::simple(2, 1));
        assert_eq!(d.coset_elements, vec![Perm::simple(2, 1)]);
        let l = comp(&[1, 3]);
        let a = NNMatrix::diag(&l).shift((0, 1), (1, 1)).unwrap();
        let d = double_coset_datum(&a);
        assert_eq!(d.d_a, Perm::identity(4));
        for a in enumerate_mnr(3, 3) {
            let d = double_coset_datum(&a);
            for i in 0..3 {
                for j in 0..3 {
                    let rj: Vec<usize> = row_block(&d.mu, j).map(|x| d.w_a.apply(x + 1) - 1).collect();
                    let hits = row_block(&d.lambda, i).filter(|x| rj.contains(x)).count();
                    assert_eq!(hits, a.get(i, j));
                }
            }
        }
    }

    #[test]
    fn endomorphisms_are_bimodule_maps() {
        for (n, r) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
            let v = TensorSpace::new(n, r).unwrap();
            let h = v.right_action_matrices();
            assert!(crate::relations::hecke_relations(&h).ok());
            let mut sum = RatMatrix::zeros(v.dim(), v.dim());
            for a in enumerate_mnr(n, r) {
                let m = v.e_a_endomorphism(&a).unwrap();
                let d = v.double_coset_map(&a).unwrap();
                for g in &h {
                    assert_eq!(&m * g, g * &m, "{a}");
                    assert_eq!(&d * g, g * &d, "{a}");
                }
                if a.ro() == a.co() && a == NNMatrix::diag(&a.ro()) {
                    assert_eq!(m, v.weight_projection(&a.ro()));
                    sum = &sum + &m;
                }
            }
            assert!(sum.is_identity());
            for l in weak_compositions(n, r) {
                assert!(v.phi0_is_isomorphism(&l), "{l}");
            }
        }
    }

    #[test]
    fn closure_sum_versus_double_coset_map() {
        let v = TensorSpace::new(3, 3).unwrap();
        for a in enumerate_mnr(3, 3) {
            let dc = double_coset_datum(&a);
            let closed = crate::hecke::HeckeElt::pi(&dc.w_plus);
            let lower: Vec<&Perm> = closed.terms().map(|(w, _)| w).collect();
            let cosets: HashSet<Perm> = lower
                .iter()
                .map(|x| {
                    let b = with_row_sums(&dc.lambda)
                        .into_iter()
                        .find(|b| b.co() == dc.mu && double_coset_datum(b).coset_elements.contains(x))
                        .unwrap();
                    double_coset_datum(&b).d_a
                })
                .collect();
            let sum = with_row_sums(&dc.lambda)
                .into_iter()
                .filter(|b| b.co() == dc.mu && cosets.contains(&double_coset_datum(b).d_a))
                .map(|b| v.double_coset_map(&b).unwrap())
                .fold(RatMatrix::zeros(27, 27), |acc, m| &acc + &m);
            assert_eq!(sum, v.e_a_endomorphism(&a).unwrap(), "{a}");
        }
        let v = TensorSpace::new(2, 2).unwrap();
        let b = NNMatrix::of(&[&[0, 1], &[1, 0]]);
        let e1 = NNMatrix::of(&[&[1, 1], &[0, 0]]);
        let literal = &v.double_coset_map(&e1).unwrap() * &v.double_coset_map(&b).unwrap();
        assert!(literal.is_zero());
        assert_eq!(product_law(&v, &e1, &b).unwrap(), Some(e1.clone()));
        assert_eq!(e_on_basis(1, &b), Some(e1));
    }

    #[test]
    fn products_and_generator_rule() {
        let v = TensorSpace::new(2, 2).unwrap();
        let all = enumerate_mnr(2, 2);
        for a in &all {
            for b in &all {
                product_law(&v, a, b).unwrap();
            }
        }
        let v = TensorSpace::new(3, 3).unwrap();
        for a in enumerate_mnr(3, 3) {
            let l = a.ro();
            for i in 1..3 {
                if l.parts()[i] > 0 {
                    let g = NNMatrix::diag(&l).shift((i - 1, i), (i, i)).unwrap();
                    assert_eq!(product_law(&v, &g, &a).unwrap(), e_on_basis(i, &a), "e{i} {a}");
                }
                if l.parts()[i - 1] > 0 {
                    let g = NNMatrix::diag(&l).shift((i, i - 1), (i - 1, i - 1)).unwrap();
                    assert_eq!(product_law(&v, &g, &a).unwrap(), crate::schur::f_on_basis(i, &a), "f{i} {a}");
                }
            }
        }
    }

    #[test]
    fn psi_images_match_coproduct() {
        for (n, r) in [(2, 2), (2, 3), (3, 3)] {
            let v = TensorSpace::new(n, r).unwrap();
            for g in U0Gen::all(n) {
                let psi = v.psi_image(g).unwrap();
                assert_eq!(psi, v.u0_action_on_tensor(g).unwrap(), "{g:?}");
                assert_eq!(psi, v.descendant_action(g).unwrap(), "{g:?}");
            }
            let rep = v.u0_report(|g| v.u0_action_on_tensor(g)).unwrap();
            assert!(rep.ok(), "{:?}", rep.failures);
            assert!(v.verify_presentation().unwrap().ok());
        }
        let v = TensorSpace::new(3, 2).unwrap();
        let (e1, e2) = (v.psi_image(U0Gen::E(1)).unwrap(), v.psi_image(U0Gen::E(2)).unwrap());
        let x = v.index(&[2, 3]);
        let (lhs, rhs) = (&(&e2 * &e1) * &e1, &(&e1 * &e2) * &e1);
        assert!(lhs.column(x).iter().all(Zero::is_zero));
        assert_eq!(rhs.column(x)[v.index(&[1, 1])], rat(1));
        let v = TensorSpace::new(3, 1).unwrap();
        assert_eq!(v.u0_action_on_tensor(U0Gen::E(1)).unwrap(), RatMatrix::unit(3, 3, 0, 1));
        assert_eq!(v.u0_action_on_tensor(U0Gen::K(2)).unwrap(), rho_v(3, U0Gen::K(2)));
        assert!(TensorSpace::new(4, 6).is_err());
    }
}
