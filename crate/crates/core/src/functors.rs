//! The functors `G = V₀^{⊗r} ⊗_{H} −` into S₀(n,r)-modules and
//! `F = V₀^{⊗r} ⊗_{H} −` into U₀(gl_n)-modules, the pullback Ψ along ψ, its
//! section ξ on weight modules, and composition multiplicities.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::compositions::{weak_compositions, Composition};
use crate::crystal::build_d;
use crate::error::{guard, Error, Result};
use crate::exactlin::{self, sparse_from_dense, SparseVec};
use crate::matrices::row_bijection_inverse;
use crate::module::{AlgModule, AlgebraTag};
use crate::schur::{build_s, matrix_label, schur_multiplicities};
use crate::tensor::{TensorSpace, U0Gen};
use crate::{rat, Rat, RatMatrix, RatSubspace};

/// One weight block `V_λ ⊗ M` of the tensor product and its relation space.
#[derive(Clone, Debug)]
struct Block {
    lambda: Composition,
    words: Vec<usize>,
    relations: RatSubspace,
    keep: Vec<usize>,
    offset: usize,
}

/// `V₀^{⊗r} ⊗_{H_r(0)} M` as the quotient of `V₀^{⊗r} ⊗ M` by the span of
/// `(v·π̄_i) ⊗ m − v ⊗ (π̄_i·m)`, one weight space at a time.
#[derive(Clone, Debug)]
pub struct BimoduleTensor {
    pub space: TensorSpace,
    pub module_dim: usize,
    pub labels: Vec<String>,
    pub weights: Vec<Composition>,
    blocks: Vec<Block>,
    block_of_word: Vec<(usize, usize)>,
}

impl BimoduleTensor {
    pub fn new(n: usize, m: &AlgModule) -> Result<Self> {
        let AlgebraTag::Hecke { r } = m.tag else {
            return Err(Error::Domain("the tensor product needs an H_r(0)-module".into()));
        };
        let space = TensorSpace::new(n, r)?;
        let dm = m.dim();
        let mut by_weight: BTreeMap<Composition, Vec<usize>> = BTreeMap::new();
        for k in 0..space.dim() {
            by_weight.entry(space.content_of(k)).or_default().push(k);
        }
        let mut block_of_word = vec![(0, 0); space.dim()];
        let mut blocks = Vec::new();
        let mut labels = Vec::new();
        let mut weights = Vec::new();
        let word_labels = space.labels();
        for (lambda, words) in by_weight {
            let b = blocks.len();
            let local: HashMap<usize, usize> = words.iter().enumerate().map(|(a, &w)| (w, a)).collect();
            for (a, &w) in words.iter().enumerate() {
                block_of_word[w] = (b, a);
            }
            let ambient = words.len() * dm;
            let mut rels: Vec<SparseVec<Rat>> = Vec::new();
            for i in 1..r {
                let act = space.right_action_matrix(i);
                let g = m.gen(i - 1);
                for (a, &w) in words.iter().enumerate() {
                    for q in 0..dm {
                        let mut v = vec![Rat::zero(); ambient];
                        for (row, _, c) in act.nonzeros().filter(|&(_, col, _)| col == w) {
                            v[local[&row] * dm + q] += c.clone();
                        }
                        for p in 0..dm {
                            v[a * dm + p] -= g.get(p, q).clone();
                        }
                        rels.push(sparse_from_dense(&v));
                    }
                }
            }
            let relations = RatSubspace::from_sparse(ambient, rels);
            let keep = relations.non_pivots();
            let offset = labels.len();
            for &q in &keep {
                labels.push(format!("{}⊗{}", word_labels[words[q / dm]], m.labels[q % dm]));
                weights.push(lambda.clone());
            }
            blocks.push(Block { lambda, words, relations, keep, offset });
        }
        Ok(BimoduleTensor { space, module_dim: dm, labels, weights, blocks, block_of_word })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Quotient coordinates of a vector of `V₀^{⊗r} ⊗ M` supported in block
    /// `b`, given in that block's local coordinates.
    fn project_local(&self, b: usize, v: &[Rat], out: &mut [Rat]) {
        let blk = &self.blocks[b];
        let red = blk.relations.reduce(v);
        for (t, &q) in blk.keep.iter().enumerate() {
            out[blk.offset + t] = red[q].clone();
        }
    }

    /// The projection `V₀^{⊗r} ⊗ M → V₀^{⊗r} ⊗_H M`, with vectors of the
    /// tensor product indexed `word · dim M + m`.
    pub fn projection(&self) -> RatMatrix {
        let dm = self.module_dim;
        let total = self.space.dim() * dm;
        let mut out = RatMatrix::zeros(self.dim(), total);
        for w in 0..self.space.dim() {
            let (b, a) = self.block_of_word[w];
            let ambient = self.blocks[b].words.len() * dm;
            for q in 0..dm {
                let mut v = vec![Rat::zero(); ambient];
                v[a * dm + q] = Rat::one();
                let mut col = vec![Rat::zero(); self.dim()];
                self.project_local(b, &v, &mut col);
                for (row, c) in col.into_iter().enumerate() {
                    if !c.is_zero() {
                        out.set(row, w * dm + q, c);
                    }
                }
            }
        }
        out
    }

    /// Image of `x ⊗ 1` applied to a block-local vector, split by target block.
    fn apply_left(&self, x: &RatMatrix, b: usize, v: &[Rat]) -> BTreeMap<usize, Vec<Rat>> {
        let dm = self.module_dim;
        let blk = &self.blocks[b];
        let mut out: BTreeMap<usize, Vec<Rat>> = BTreeMap::new();
        for (a, &w) in blk.words.iter().enumerate() {
            let slice = &v[a * dm..(a + 1) * dm];
            if slice.iter().all(Zero::is_zero) {
                continue;
            }
            for u in 0..self.space.dim() {
                let c = x.get(u, w);
                if c.is_zero() {
                    continue;
                }
                let (tb, ta) = self.block_of_word[u];
                let len = self.blocks[tb].words.len() * dm;
                let target = out.entry(tb).or_insert_with(|| vec![Rat::zero(); len]);
                for (p, s) in slice.iter().enumerate() {
                    if !s.is_zero() {
                        target[ta * dm + p] += c.clone() * s.clone();
                    }
                }
            }
        }
        out
    }

    /// The map induced by `x ⊗ 1` on the quotient; fails if `x ⊗ 1` does not
    /// preserve the relation space.
    pub fn induced(&self, x: &RatMatrix) -> Result<RatMatrix> {
        let d = self.dim();
        let mut out = RatMatrix::zeros(d, d);
        for (b, blk) in self.blocks.iter().enumerate() {
            for rel in blk.relations.basis() {
                for (tb, v) in self.apply_left(x, b, rel) {
                    if !self.blocks[tb].relations.contains(&v) {
                        return Err(Error::Internal(format!("left action does not descend at weight {}", blk.lambda)));
                    }
                }
            }
            let ambient = blk.words.len() * self.module_dim;
            for (t, &q) in blk.keep.iter().enumerate() {
                let mut e = vec![Rat::zero(); ambient];
                e[q] = Rat::one();
                let mut col = vec![Rat::zero(); d];
                for (tb, v) in self.apply_left(x, b, &e) {
                    self.project_local(tb, &v, &mut col);
                }
                for (row, c) in col.into_iter().enumerate() {
                    if !c.is_zero() {
                        out.set(row, blk.offset + t, c);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// `G_{n,r}(M)`: S₀(n,r) acting through `ψ(e_i)`, `ψ(f_i)` on the left factor.
pub fn functor_g(m: &AlgModule, n: usize) -> Result<AlgModule> {
    let t = BimoduleTensor::new(n, m)?;
    let gens = (1..n)
        .map(U0Gen::E)
        .chain((1..n).map(U0Gen::F))
        .map(|g| t.induced(&t.space.psi_image(g)?))
        .collect::<Result<_>>()?;
    let tag = AlgebraTag::Schur { n, r: t.space.r };
    AlgModule::new(tag, t.labels.clone(), gens, Some(t.weights.clone()))
}

/// `F_{n,r}(M)` with the coproduct action on the left factor.
pub fn functor_f(m: &AlgModule, n: usize) -> Result<AlgModule> {
    let t = BimoduleTensor::new(n, m)?;
    let gens =
        U0Gen::all(n).into_iter().map(|g| t.induced(&t.space.u0_action_on_tensor(g)?)).collect::<Result<_>>()?;
    AlgModule::new(AlgebraTag::U0 { n }, t.labels.clone(), gens, Some(t.weights.clone()))
}

/// `k_i = Σ_{λ_i = 0} k_λ` from basis weights.
fn k_from_weights(weights: &[Composition], i: usize) -> RatMatrix {
    let d = weights.len();
    RatMatrix::from_fn(d, d, |a, b| if a == b && weights[a].parts()[i - 1] == 0 { rat(1) } else { rat(0) })
}

/// `Ψ_{n,r}(M)`: the pullback along ψ.
pub fn psi(m: &AlgModule) -> Result<AlgModule> {
    let AlgebraTag::Schur { n, .. } = m.tag else {
        return Err(Error::Domain("Ψ needs an S₀(n,r)-module".into()));
    };
    let w = m.weights.clone().ok_or_else(|| Error::Domain("S₀-module without weights".into()))?;
    let mut gens = m.gens.clone();
    gens.extend((1..=n).map(|i| k_from_weights(&w, i)));
    AlgModule::new(AlgebraTag::U0 { n }, m.labels.clone(), gens, Some(w))
}

/// `ξ_{n,r}(M)` for a polynomial U₀(gl_n)-module of degree `r` with known
/// weights: `k_λ` acts by the λ-weight projection.
pub fn xi(m: &AlgModule, r: usize) -> Result<AlgModule> {
    let AlgebraTag::U0 { n } = m.tag else {
        return Err(Error::Domain("ξ needs a U₀(gl_n)-module".into()));
    };
    let w = m.weights.clone().ok_or_else(|| Error::Domain("module carries no weight decomposition".into()))?;
    guard(w.iter().all(|l| l.size() == r && l.len() == n), || format!("weights are not in Λ({n},{r})"))?;
    for i in 1..=n {
        if m.k(i) != &k_from_weights(&w, i) {
            return Err(Error::Domain(format!("k{i} does not act by the weight rule")));
        }
    }
    let gens = m.gens[..2 * (n - 1)].to_vec();
    AlgModule::new(AlgebraTag::Schur { n, r }, m.labels.clone(), gens, Some(w))
}

/// The bijection `Γ: QRT(n, λ⁺) → cb(λ)`, `T ↦ row_bijection_inverse(wt(T), λ)`,
/// as a matrix from the basis of `D_{λ⁺}` to that of `S_λ`.
pub fn gamma(lambda: &Composition) -> Result<RatMatrix> {
    let n = lambda.len();
    let d = build_d(&lambda.plus()?, n)?;
    let s = build_s(lambda)?;
    let index: HashMap<&String, usize> = s.labels.iter().enumerate().map(|(k, l)| (l, k)).collect();
    let weights = d.weights.as_ref().ok_or_else(|| Error::Internal("D_α without weights".into()))?;
    let mut g = RatMatrix::zeros(s.dim(), d.dim());
    for (col, mu) in weights.iter().enumerate() {
        let a = row_bijection_inverse(mu, lambda)?;
        let row = *index.get(&matrix_label(&a)).ok_or_else(|| Error::Internal(format!("{a} not in cb({lambda})")))?;
        g.set(row, col, rat(1));
    }
    Ok(g)
}

/// Multiplicity of each 1-dimensional simple `F_α` in a semisimple
/// H_r(0)-module, by joint eigenvalue pattern (π̄_i acts by −1 exactly for
/// `i ∈ set(α)`).
fn hecke_simple_counts(m: &AlgModule, r: usize) -> Result<Vec<(Composition, usize)>> {
    let d = m.dim();
    let mut out = Vec::new();
    let mut total = 0;
    for set in crate::compositions::DescentSet::all(r) {
        let mats: Vec<RatMatrix> = (1..r)
            .map(|i| if set.contains(i) { m.gen(i - 1) + &RatMatrix::identity(d) } else { m.gen(i - 1).clone() })
            .collect();
        let k = exactlin::common_kernel(d, &mats).dim();
        if k > 0 {
            out.push((Composition::from_descents(&set), k));
            total += k;
        }
    }
    if total != d {
        return Err(Error::Guard(format!("semisimple layer of dim {d} splits into only {total} eigenvectors")));
    }
    Ok(out)
}

/// `[M : F_α]` from the radical layers of an H_r(0)-module.
pub fn hecke_multiplicities(m: &AlgModule) -> Result<Vec<(Composition, usize)>> {
    let AlgebraTag::Hecke { r } = m.tag else {
        return Err(Error::Domain("expected an H_r(0)-module".into()));
    };
    let series = m.radical_series()?;
    let mut acc: BTreeMap<Composition, usize> = BTreeMap::new();
    for pair in series.windows(2) {
        let upper = m.submodule(&pair[0])?;
        let inner: Vec<Vec<Rat>> = pair[1]
            .basis()
            .iter()
            .map(|v| pair[0].coordinates(v).ok_or_else(|| Error::Internal("radical series not nested".into())))
            .collect::<Result<_>>()?;
        let layer = upper.quotient(&RatSubspace::span(upper.dim(), inner))?;
        for (a, k) in hecke_simple_counts(&layer, r)? {
            *acc.entry(a).or_default() += k;
        }
    }
    Ok(acc.into_iter().collect())
}

/// `[M : D_α]` for a polynomial U₀(gl_n)-module by peeling simple characters
/// (each `D_α` has the weights Λ(n,r)_{⪯α•}, each once).
pub fn u0_multiplicities(m: &AlgModule) -> Result<Vec<(Composition, usize)>> {
    guard(matches!(m.tag, AlgebraTag::U0 { .. }), || "expected a U₀(gl_n)-module".into())?;
    let mut out: Vec<(Composition, usize)> =
        schur_multiplicities(m)?.into_iter().map(|(l, c)| (l.strip_zeros(), c)).collect();
    out.sort();
    Ok(out)
}

/// `d_α = |{λ ∈ Λ(n,r) : set(α) ⊆ set(λ⁺)}|`.
pub fn d_alpha_formula(alpha: &Composition, n: usize) -> usize {
    let s = alpha.descent_set();
    weak_compositions(n, alpha.size()).iter().filter(|l| s.is_subset(&l.strip_zeros().descent_set())).count()
}

/// Multiplicity of each indecomposable projective in the right H_r(0)-module
/// `V₀^{⊗r}`, read off from the top of each weight space.
pub fn tensor_projective_multiplicities(n: usize, r: usize) -> Result<Vec<(Composition, usize)>> {
    let v = TensorSpace::new(n, r)?;
    let acts = v.right_action_matrices();
    let mut acc: BTreeMap<Composition, usize> = BTreeMap::new();
    for lambda in weak_compositions(n, r) {
        let idx: Vec<usize> = (0..v.dim()).filter(|&k| v.content_of(k) == lambda).collect();
        let gens = acts.iter().map(|g| g.select(&idx, &idx)).collect();
        let labels = idx.iter().map(|&k| v.labels()[k].clone()).collect();
        let block = AlgModule::new(AlgebraTag::Hecke { r }, labels, gens, None)?;
        let top = block.quotient(&block.radical()?)?;
        for (a, k) in hecke_simple_counts(&top, r)? {
            *acc.entry(a).or_default() += k;
        }
    }
    Ok(acc.into_iter().collect())
}

/// Serializable summary of a functor image.
#[derive(Clone, Debug, Serialize)]
pub struct FunctorImage {
    pub dim: usize,
    pub weights: Vec<Composition>,
}

impl From<&AlgModule> for FunctorImage {
    fn from(m: &AlgModule) -> Self {
        FunctorImage { dim: m.dim(), weights: m.weight_multiset().unwrap_or_default() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::{comp, strong_compositions};
    use crate::hecke::{projective_r, regular_representation, simple_f};
    use crate::schur::build_p;

    #[test]
    fn g_examples() {
        let g = functor_g(&simple_f(&comp(&[2, 1])).unwrap(), 3).unwrap();
        assert_eq!(g.dim(), 4);
        assert!(g.is_isomorphic(&build_s(&comp(&[2, 1, 0])).unwrap(), 0).unwrap());
        let g = functor_g(&projective_r(&comp(&[2, 1])).unwrap(), 3).unwrap();
        assert_eq!(g.dim(), 8);
        assert!(g.is_isomorphic(&build_p(&comp(&[2, 1, 0])).unwrap(), 0).unwrap());
        assert_eq!(functor_g(&simple_f(&comp(&[1, 1, 1])).unwrap(), 2).unwrap().dim(), 0);
        assert!(g.check_relations().ok());
    }

    #[test]
    fn f_equals_psi_g() {
        for a in strong_compositions(3) {
            for m in [simple_f(&a).unwrap(), projective_r(&a).unwrap()] {
                for n in 1..=3 {
                    let g = functor_g(&m, n).unwrap();
                    let f = functor_f(&m, n).unwrap();
                    assert_eq!(psi(&g).unwrap(), f, "{a} n={n}");
                    assert_eq!(xi(&f, 3).unwrap(), g);
                }
            }
        }
        let reg = regular_representation(3).unwrap();
        assert_eq!(functor_g(&reg, 3).unwrap().dim(), 27);
    }

    #[test]
    fn psi_of_simples_and_gamma() {
        for lambda in crate::compositions::lambda_bullet_set(3, 3) {
            let s = build_s(&lambda).unwrap();
            let d = build_d(&lambda.plus().unwrap(), 3).unwrap();
            let p = psi(&s).unwrap();
            let g = gamma(&lambda).unwrap();
            assert!(exactlin::is_invertible(&g));
            for k in 0..p.gens.len() {
                assert_eq!(&g * d.gen(k), p.gen(k) * &g, "{lambda} generator {k}");
            }
        }
    }

    #[test]
    fn multiplicities() {
        let r21 = projective_r(&comp(&[2, 1])).unwrap();
        let h = hecke_multiplicities(&r21).unwrap();
        let want = projective_r(&comp(&[1, 2])).unwrap().hom_dim(&r21).unwrap();
        let got = h.iter().find(|(a, _)| *a == comp(&[1, 2])).map_or(0, |x| x.1);
        assert_eq!(got, want);
        for a in strong_compositions(3) {
            let r = projective_r(&a).unwrap();
            let h = hecke_multiplicities(&r).unwrap();
            let n_alpha = functor_f(&r, 2).unwrap();
            let u = u0_multiplicities(&n_alpha).unwrap();
            let expect: Vec<(Composition, usize)> = h.into_iter().filter(|(b, _)| b.len() <= 2).collect();
            assert_eq!(u, expect, "{a}");
        }
        assert_eq!(schur_multiplicities(&build_s(&comp(&[2, 1, 0])).unwrap()).unwrap(), vec![(comp(&[2, 1, 0]), 1)]);
    }

    #[test]
    fn projective_summands_of_tensor_space() {
        for (n, r) in [(2, 2), (2, 3), (3, 3), (2, 4)] {
            let got = tensor_projective_multiplicities(n, r).unwrap();
            let want: Vec<(Composition, usize)> = strong_compositions(r)
                .into_iter()
                .map(|a| {
                    let d = d_alpha_formula(&a, n);
                    (a, d)
                })
                .filter(|x| x.1 > 0)
                .collect();
            let mut got_sorted = got.clone();
            got_sorted.sort();
            let mut want_sorted = want;
            want_sorted.sort();
            assert_eq!(got_sorted, want_sorted, "n={n} r={r}");
        }
    }
}
