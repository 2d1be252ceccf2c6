//! Finite-dimensional modules presented by generator action matrices, with
//! the generic constructions shared by H_r(0)-, S₀(n,r)- and U₀(gl_n)-modules.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::compositions::{weak_compositions, Composition};
use crate::error::{Error, Result};
use crate::exactlin::{self, Subspace};
use crate::{rat, Rat, RatMatrix, RatSubspace};

/// Which algebra acts, and the generator order of `gens`.
///
/// * `Hecke { r }`: `π̄_1, …, π̄_{r−1}`.
/// * `Schur { n, r }`: `e_1, …, e_{n−1}, f_1, …, f_{n−1}`; the idempotents
///   `k_λ` act through the per-basis weights.
/// * `U0 { n }`: `e_1, …, e_{n−1}, f_1, …, f_{n−1}, k_1, …, k_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "algebra", rename_all = "lowercase")]
pub enum AlgebraTag {
    Hecke { r: usize },
    Schur { n: usize, r: usize },
    U0 { n: usize },
}

impl AlgebraTag {
    pub fn generator_count(&self) -> usize {
        match *self {
            AlgebraTag::Hecke { r } => r.saturating_sub(1),
            AlgebraTag::Schur { n, .. } => 2 * n.saturating_sub(1),
            AlgebraTag::U0 { n } => 2 * n.saturating_sub(1) + n,
        }
    }

    pub fn generator_names(&self) -> Vec<String> {
        match *self {
            AlgebraTag::Hecke { r } => (1..r).map(|i| format!("pibar{i}")).collect(),
            AlgebraTag::Schur { n, .. } => {
                (1..n).map(|i| format!("e{i}")).chain((1..n).map(|i| format!("f{i}"))).collect()
            }
            AlgebraTag::U0 { n } => (1..n)
                .map(|i| format!("e{i}"))
                .chain((1..n).map(|i| format!("f{i}")))
                .chain((1..=n).map(|i| format!("k{i}")))
                .collect(),
        }
    }
}

/// A module: labeled basis, one action matrix per generator, and optionally a
/// weight for every basis vector (required for S₀(n,r)).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgModule {
    pub tag: AlgebraTag,
    pub labels: Vec<String>,
    #[serde(rename = "generators", serialize_with = "ser_matrices")]
    pub gens: Vec<RatMatrix>,
    pub weights: Option<Vec<Composition>>,
}

fn ser_matrices<S: serde::Serializer>(m: &[RatMatrix], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(m.len()))?;
    for x in m {
        seq.serialize_element(&crate::export::matrix_strings(x))?;
    }
    seq.end()
}

fn weight_projection(weights: &[Composition], lambda: &Composition) -> RatMatrix {
    let d = weights.len();
    RatMatrix::from_fn(d, d, |i, j| if i == j && &weights[i] == lambda { rat(1) } else { rat(0) })
}

impl AlgModule {
    pub fn new(
        tag: AlgebraTag,
        labels: Vec<String>,
        gens: Vec<RatMatrix>,
        weights: Option<Vec<Composition>>,
    ) -> Result<Self> {
        let d = labels.len();
        if gens.len() != tag.generator_count() {
            return Err(Error::Dimension(format!(
                "{:?} expects {} generators, got {}",
                tag,
                tag.generator_count(),
                gens.len()
            )));
        }
        if gens.iter().any(|g| g.rows() != d || g.cols() != d) {
            return Err(Error::Dimension("generator matrix size differs from basis size".into()));
        }
        if let Some(w) = &weights {
            if w.len() != d {
                return Err(Error::Dimension("weight list length differs from basis size".into()));
            }
        }
        if matches!(tag, AlgebraTag::Schur { .. }) && weights.is_none() {
            return Err(Error::Domain("S₀(n,r)-modules need basis weights".into()));
        }
        Ok(AlgModule { tag, labels, gens, weights })
    }

    pub fn zero(tag: AlgebraTag) -> Self {
        let gens = vec![RatMatrix::zeros(0, 0); tag.generator_count()];
        let weights = match tag {
            AlgebraTag::Schur { .. } => Some(Vec::new()),
            _ => None,
        };
        AlgModule { tag, labels: Vec::new(), gens, weights }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn gen(&self, k: usize) -> &RatMatrix {
        &self.gens[k]
    }

    /// Schur or U₀ generator `e_i` (one-based `i`).
    pub fn e(&self, i: usize) -> &RatMatrix {
        &self.gens[i - 1]
    }

    /// Schur or U₀ generator `f_i` (one-based `i`).
    pub fn f(&self, i: usize) -> &RatMatrix {
        let n = self.rank_n();
        &self.gens[n - 1 + i - 1]
    }

    /// U₀ generator `k_i` (one-based `i`).
    pub fn k(&self, i: usize) -> &RatMatrix {
        let n = self.rank_n();
        &self.gens[2 * (n - 1) + i - 1]
    }

    fn rank_n(&self) -> usize {
        match self.tag {
            AlgebraTag::Schur { n, .. } | AlgebraTag::U0 { n } => n,
            AlgebraTag::Hecke { .. } => panic!("H_r(0)-modules have no e/f/k generators"),
        }
    }

    /// Projection onto the λ-weight space (`k_λ` for S₀-modules).
    pub fn k_lambda(&self, lambda: &Composition) -> RatMatrix {
        weight_projection(self.weights.as_deref().expect("module carries weights"), lambda)
    }

    /// Generators of the acting algebra's image: the generator matrices, plus
    /// every `k_λ`, λ ∈ Λ(n,r), for S₀-modules.
    pub fn action_matrices(&self) -> Vec<RatMatrix> {
        let mut out = self.gens.clone();
        if let AlgebraTag::Schur { n, r } = self.tag {
            let w = self.weights.as_deref().expect("weights");
            for l in weak_compositions(n, r) {
                out.push(weight_projection(w, &l));
            }
        }
        out
    }

    /// Weight multiset as a sorted list.
    pub fn weight_multiset(&self) -> Option<Vec<Composition>> {
        self.weights.as_ref().map(|w| {
            let mut v = w.clone();
            v.sort();
            v
        })
    }

    fn expect_ambient(&self, s: &RatSubspace) -> Result<()> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::Dimension(format!("subspace of dim {} in module of dim {}", s.ambient_dim(), self.dim())));
        }
        Ok(())
    }

    fn weights_of_vectors(&self, vectors: &[Vec<Rat>]) -> Result<Option<Vec<Composition>>> {
        let Some(w) = &self.weights else { return Ok(None) };
        vectors
            .iter()
            .map(|v| {
                let mut it = v.iter().zip(w).filter(|(x, _)| !num_traits::Zero::is_zero(*x)).map(|(_, l)| l);
                let first = it.next().cloned().unwrap_or_default();
                if it.all(|l| *l == first) {
                    Ok(first)
                } else {
                    Err(Error::Internal("subspace basis vector is not a weight vector".into()))
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Some)
    }

    /// Whether `s` is stable under every action matrix.
    pub fn is_submodule(&self, s: &RatSubspace) -> bool {
        self.action_matrices().iter().all(|g| s.basis().iter().all(|v| s.contains(&g.mul_vec(v))))
    }

    /// The submodule on the echelon basis of `s`.
    pub fn submodule(&self, s: &RatSubspace) -> Result<AlgModule> {
        self.expect_ambient(s)?;
        let basis = s.basis();
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let cols: Vec<Vec<Rat>> = basis
                .iter()
                .map(|v| s.coordinates(&g.mul_vec(v)).ok_or_else(|| Error::Internal("subspace is not a submodule".into())))
                .collect::<Result<_>>()?;
            gens.push(RatMatrix::from_columns(basis.len(), &cols));
        }
        let weights = self.weights_of_vectors(basis)?;
        if weights.is_some()
            && self.action_matrices().iter().skip(self.gens.len()).any(|k| basis.iter().any(|v| !s.contains(&k.mul_vec(v))))
        {
            return Err(Error::Internal("subspace is not weight-stable".into()));
        }
        let labels = (0..basis.len()).map(|i| format!("v{i}")).collect();
        AlgModule::new(self.tag, labels, gens, weights)
    }

    /// The quotient by `s`, on the classes of the standard basis vectors in
    /// non-pivot positions.
    pub fn quotient(&self, s: &RatSubspace) -> Result<AlgModule> {
        self.expect_ambient(s)?;
        if !self.is_submodule(s) {
            return Err(Error::Internal("quotient by a non-submodule".into()));
        }
        let keep = s.non_pivots();
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let mut m = RatMatrix::zeros(keep.len(), keep.len());
            for (b, &q) in keep.iter().enumerate() {
                let red = s.reduce(&g.column(q));
                for (a, &p) in keep.iter().enumerate() {
                    m.set(a, b, red[p].clone());
                }
            }
            gens.push(m);
        }
        let labels = keep.iter().map(|&q| self.labels[q].clone()).collect();
        let weights = self.weights.as_ref().map(|w| keep.iter().map(|&q| w[q].clone()).collect());
        AlgModule::new(self.tag, labels, gens, weights)
    }

    /// Smallest submodule containing the given vectors.
    pub fn generated_submodule(&self, vectors: &[Vec<Rat>]) -> RatSubspace {
        let acts = self.action_matrices();
        let mut span = Subspace::span(self.dim(), vectors.iter().cloned());
        loop {
            let mut more: Vec<Vec<Rat>> = span.basis().to_vec();
            for g in &acts {
                for v in span.basis() {
                    more.push(g.mul_vec(v));
                }
            }
            let next = Subspace::span(self.dim(), more);
            if next.dim() == span.dim() {
                return span;
            }
            span = next;
        }
    }

    /// Radical matrices of the represented algebra.
    pub fn radical_elements(&self) -> Result<Vec<RatMatrix>> {
        let basis = exactlin::algebra_closure_sized(self.dim(), &self.action_matrices())?;
        let rad = exactlin::radical_trace_form(&basis)?;
        Ok(exactlin::combine(&basis, rad.basis()))
    }

    /// rad(M) = J·M.
    pub fn radical(&self) -> Result<RatSubspace> {
        let j = self.radical_elements()?;
        Ok(Subspace::span(self.dim(), j.iter().flat_map(|x| x.column_vectors())))
    }

    /// soc(M) = {v : J·v = 0}.
    pub fn socle(&self) -> Result<RatSubspace> {
        let j = self.radical_elements()?;
        Ok(exactlin::common_kernel(self.dim(), &j))
    }

    /// Radical layers `M ⊇ JM ⊇ J²M ⊇ … ⊇ 0`.
    pub fn radical_series(&self) -> Result<Vec<RatSubspace>> {
        let j = self.radical_elements()?;
        let mut out = vec![Subspace::full(self.dim())];
        loop {
            let last = out.last().expect("nonempty");
            if last.is_zero() {
                return Ok(out);
            }
            let next = Subspace::span(self.dim(), j.iter().flat_map(|x| last.basis().iter().map(move |v| x.mul_vec(v))));
            if next.dim() == last.dim() {
                return Err(Error::Internal("radical series does not terminate".into()));
            }
            out.push(next);
        }
    }

    pub fn hom_space(&self, other: &AlgModule) -> Result<RatSubspace> {
        if self.tag != other.tag {
            return Err(Error::Domain(format!("modules over {:?} and {:?}", self.tag, other.tag)));
        }
        exactlin::solve_intertwiner_sized(self.dim(), other.dim(), &self.action_matrices(), &other.action_matrices())
    }

    pub fn hom_dim(&self, other: &AlgModule) -> Result<usize> {
        Ok(self.hom_space(other)?.dim())
    }

    /// An invertible intertwiner `self → other`, if one is found.
    pub fn find_isomorphism(&self, other: &AlgModule, seed: u64) -> Result<Option<RatMatrix>> {
        if self.dim() != other.dim() {
            return Ok(None);
        }
        if self.dim() == 0 {
            return Ok(Some(RatMatrix::zeros(0, 0)));
        }
        let hom = self.hom_space(other)?;
        if hom.is_zero() {
            return Ok(None);
        }
        let (rows, cols) = (other.dim(), self.dim());
        let mats: Vec<RatMatrix> = hom.basis().iter().map(|v| exactlin::unvec(v, rows, cols)).collect();
        if mats.len() == 1 {
            return Ok(exactlin::is_invertible(&mats[0]).then(|| mats[0].clone()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..24 {
            let mut t = RatMatrix::zeros(rows, cols);
            for m in &mats {
                t.add_scaled(&rat(rng.gen_range(-7..=7)), m);
            }
            if exactlin::is_invertible(&t) {
                return Ok(Some(t));
            }
        }
        Ok(mats.into_iter().find(exactlin::is_invertible))
    }

    pub fn is_isomorphic(&self, other: &AlgModule, seed: u64) -> Result<bool> {
        Ok(self.find_isomorphism(other, seed)?.is_some())
    }

    /// Pullback along a relabeling of generators: `gens[k]` of the result is
    /// `images[k]`, all acting on this module's space.
    pub fn with_actions(&self, tag: AlgebraTag, gens: Vec<RatMatrix>, weights: Option<Vec<Composition>>) -> Result<AlgModule> {
        AlgModule::new(tag, self.labels.clone(), gens, weights)
    }
}
