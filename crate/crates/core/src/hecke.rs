//! The 0-Hecke algebra H_r(0) on the π̄ basis: permutations, multiplication,
//! the functional ε, the (anti-)involutions φ, θ, χ, and the modules F_α,
//! R_α and the regular representation.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::compositions::{Composition, DescentSet};
use crate::error::{guard, Error, Result};
use crate::exactlin::{sparse_from_dense, Echelon, Subspace};
use crate::module::{AlgModule, AlgebraTag};
use crate::{rat, Rat, RatMatrix};

pub const REGULAR_MAX_R: usize = 7;

/// A permutation of `{1, …, r}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(r: usize) -> Perm {
        Perm((1..=r).collect())
    }

    pub fn from_one_line(w: Vec<usize>) -> Result<Perm> {
        let mut seen = vec![false; w.len()];
        for &x in &w {
            if x == 0 || x > w.len() || std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::Domain(format!("{w:?} is not a permutation word")));
            }
        }
        Ok(Perm(w))
    }

    /// The simple transposition `s_i` of `S_r`.
    pub fn simple(r: usize, i: usize) -> Perm {
        let mut p = Perm::identity(r);
        p.0.swap(i - 1, i);
        p
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// `w(i)`, one-based.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x - 1]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.r()];
        for (k, &x) in self.0.iter().enumerate() {
            inv[x - 1] = k + 1;
        }
        Perm(inv)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len()).map(|a| (a + 1..w.len()).filter(|&b| w[a] > w[b]).count()).sum()
    }

    /// `Des(w) = {i : w(i) > w(i+1)}`.
    pub fn descents(&self) -> DescentSet {
        let r = self.r();
        DescentSet { r, elements: (1..r).filter(|&i| self.0[i - 1] > self.0[i]).collect() }
    }

    pub fn has_descent(&self, i: usize) -> bool {
        self.0[i - 1] > self.0[i]
    }

    /// Whether `ℓ(s_i w) < ℓ(w)`, i.e. `i+1` appears before `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |v: usize| self.0.iter().position(|&x| x == v).expect("value present");
        pos(i + 1) < pos(i)
    }

    /// `s_i w`: the values `i` and `i+1` trade places.
    pub fn left_simple(&self, i: usize) -> Perm {
        Perm(self.0.iter().map(|&x| if x == i { i + 1 } else if x == i + 1 { i } else { x }).collect())
    }

    /// `w s_i`: the entries in positions `i` and `i+1` trade places.
    pub fn right_simple(&self, i: usize) -> Perm {
        let mut p = self.clone();
        p.0.swap(i - 1, i);
        p
    }

    /// A reduced word `[a_1, …, a_k]` with `w = s_{a_1} ⋯ s_{a_k}`, built by
    /// repeatedly removing the smallest right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(i) = (1..w.r()).find(|&i| w.has_descent(i)) {
            word.push(i);
            w = w.right_simple(i);
        }
        word.reverse();
        word
    }

    /// `S_r` in lexicographic order of one-line words.
    pub fn all(r: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=r).collect();
        loop {
            out.push(Perm(cur.clone()));
            let Some(k) = (0..r.saturating_sub(1)).rev().find(|&k| cur[k] < cur[k + 1]) else { break };
            let l = (k + 1..r).rev().find(|&l| cur[k] < cur[l]).expect("successor exists");
            cur.swap(k, l);
            cur[k + 1..].reverse();
        }
        out
    }

    pub fn label(&self) -> String {
        self.0.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(if self.r() > 9 { "," } else { "" })
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// `w₀(S)`: the longest element of the parabolic subgroup generated by
/// `s_i`, `i ∈ S`. Each maximal run `a, a+1, …, b` in `S` reverses the
/// positions `a..=b+1`.
pub fn longest_element(s: &DescentSet) -> Perm {
    let mut w: Vec<usize> = (1..=s.r).collect();
    let mut i = 1;
    while i < s.r {
        if s.contains(i) {
            let start = i;
            while i < s.r && s.contains(i) {
                i += 1;
            }
            w[start - 1..i].reverse();
        } else {
            i += 1;
        }
    }
    Perm(w)
}

/// `w₁(T) = w₀ · w₀(Tᶜ)`: the longest permutation whose descent set lies in `T`.
pub fn longest_coset_rep(t: &DescentSet) -> Perm {
    longest_element(&DescentSet::all_of(t.r)).compose(&longest_element(&t.complement()))
}

/// `u ≤ w` in the left weak order: `ℓ(w u⁻¹) + ℓ(u) = ℓ(w)`.
pub fn left_weak_le(u: &Perm, w: &Perm) -> bool {
    w.compose(&u.inverse()).length() + u.length() == w.length()
}

/// `{w ∈ S_r : S ⊆ Des(w) ⊆ T}`, in lexicographic order, after checking that
/// it coincides with the left weak interval `[w₀(S), w₁(T)]`.
pub fn weak_interval(s: &DescentSet, t: &DescentSet) -> Result<Vec<Perm>> {
    if s.r != t.r || !s.is_subset(t) {
        return Err(Error::Domain(format!("S = {:?} is not a subset of T = {:?}", s.elements, t.elements)));
    }
    let all = Perm::all(s.r);
    let by_descents: Vec<Perm> = all
        .iter()
        .filter(|w| {
            let d = w.descents();
            s.is_subset(&d) && d.is_subset(t)
        })
        .cloned()
        .collect();
    let (lo, hi) = (longest_element(s), longest_coset_rep(t));
    let by_order: Vec<Perm> = all.into_iter().filter(|w| left_weak_le(&lo, w) && left_weak_le(w, &hi)).collect();
    if by_descents != by_order {
        return Err(Error::Internal(format!(
            "descent class {:?} ≠ weak interval {:?}",
            by_descents, by_order
        )));
    }
    Ok(by_descents)
}

/// An element of H_r(0) in the π̄ basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HeckeElt {
    r: usize,
    coeffs: BTreeMap<Perm, Rat>,
}

impl HeckeElt {
    pub fn zero(r: usize) -> Self {
        HeckeElt { r, coeffs: BTreeMap::new() }
    }

    pub fn one(r: usize) -> Self {
        Self::basis(Perm::identity(r))
    }

    /// `π̄_w`.
    pub fn basis(w: Perm) -> Self {
        let r = w.r();
        HeckeElt { r, coeffs: BTreeMap::from([(w, rat(1))]) }
    }

    /// `π̄_i`.
    pub fn gen(r: usize, i: usize) -> Self {
        Self::basis(Perm::simple(r, i))
    }

    /// `π_i = π̄_i + 1`.
    pub fn pi_gen(r: usize, i: usize) -> Self {
        Self::gen(r, i).add(&Self::one(r))
    }

    /// `π_w = π_{a_1} ⋯ π_{a_k}` along a reduced word.
    pub fn pi(w: &Perm) -> Self {
        let r = w.r();
        let mut x = Self::one(r);
        for &i in w.reduced_word().iter().rev() {
            x = Self::pi_gen(r, i).mul(&x);
        }
        x
    }

    pub fn from_terms(r: usize, terms: impl IntoIterator<Item = (Perm, Rat)>) -> Self {
        let mut x = Self::zero(r);
        for (w, c) in terms {
            x.add_term(w, c);
        }
        x
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &Rat)> {
        self.coeffs.iter()
    }

    pub fn coefficient(&self, w: &Perm) -> Rat {
        self.coeffs.get(w).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, w: Perm, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.r, other.r, "rank mismatch");
        let mut x = self.clone();
        for (w, c) in &other.coeffs {
            x.add_term(w.clone(), c.clone());
        }
        x
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.r);
        }
        HeckeElt { r: self.r, coeffs: self.coeffs.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    /// `π̄_i · self`.
    pub fn left_gen_mul(&self, i: usize) -> Self {
        let mut out = Self::zero(self.r);
        for (w, c) in &self.coeffs {
            if w.has_left_descent(i) {
                out.add_term(w.clone(), -c.clone());
            } else {
                out.add_term(w.left_simple(i), c.clone());
            }
        }
        out
    }

    /// `self · π̄_i`.
    pub fn right_gen_mul(&self, i: usize) -> Self {
        let mut out = Self::zero(self.r);
        for (w, c) in &self.coeffs {
            if w.has_descent(i) {
                out.add_term(w.clone(), -c.clone());
            } else {
                out.add_term(w.right_simple(i), c.clone());
            }
        }
        out
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.r != other.r {
            return Err(Error::Dimension(format!("H_{}(0) times H_{}(0)", self.r, other.r)));
        }
        let mut out = Self::zero(self.r);
        for (u, c) in &self.coeffs {
            let mut y = other.clone();
            for &i in u.reduced_word().iter().rev() {
                y = y.left_gen_mul(i);
            }
            out = out.add(&y.scale(c));
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("equal ranks")
    }

    /// Coordinates in `π_w` basis, by peeling the longest support element:
    /// `π_w = π̄_w + Σ_{u < w} π̄_u`.
    pub fn to_pi_basis(&self) -> BTreeMap<Perm, Rat> {
        let mut rest = self.clone();
        let mut cache: HashMap<Perm, HeckeElt> = HashMap::new();
        let mut out = BTreeMap::new();
        while let Some((w, c)) = rest.coeffs.iter().max_by_key(|(w, _)| (w.length(), (*w).clone())).map(|(w, c)| (w.clone(), c.clone())) {
            let pw = cache.entry(w.clone()).or_insert_with(|| HeckeElt::pi(&w)).clone();
            rest = rest.sub(&pw.scale(&c));
            out.insert(w, c);
        }
        out
    }

    /// Image under the algebra (anti-)morphism sending `π̄_i` to `images[i−1]`.
    pub fn apply_morphism(&self, images: &[HeckeElt], anti: bool) -> Self {
        let mut out = Self::zero(self.r);
        for (w, c) in &self.coeffs {
            let word = w.reduced_word();
            let mut y = Self::one(self.r);
            if anti {
                for &i in &word {
                    y = images[i - 1].mul(&y);
                }
            } else {
                for &i in word.iter().rev() {
                    y = images[i - 1].mul(&y);
                }
            }
            out = out.add(&y.scale(c));
        }
        out
    }
}

impl fmt::Display for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|(w, c)| format!("{c}*pibar[{w}]")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The Young subgroup sum `x̄_λ = Σ_{w ∈ S_λ} π̄_w`.
pub fn x_bar(lambda: &Composition) -> HeckeElt {
    let r = lambda.size();
    let block: Vec<usize> = lambda.parts().iter().enumerate().flat_map(|(b, &p)| std::iter::repeat(b).take(p)).collect();
    HeckeElt::from_terms(
        r,
        Perm::all(r)
            .into_iter()
            .filter(|w| (1..=r).all(|k| block[w.apply(k) - 1] == block[k - 1]))
            .map(|w| (w, rat(1))),
    )
}

/// `π_{w₀(J)}` for `J = [r−1] \ set(λ⁺)`, the generators of `S_λ`.
pub fn x_bar_via_pi(lambda: &Composition) -> HeckeElt {
    HeckeElt::pi(&longest_element(&lambda.descent_set().complement()))
}

/// The (anti-)involutions of H_r(0).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Involution {
    /// `π_i ↦ π_{r−i}`.
    Phi,
    /// `π_i ↦ −π̄_i`.
    Theta,
    /// Anti-involution `π_i ↦ π_i`.
    Chi,
}

impl Involution {
    pub fn is_anti(self) -> bool {
        self == Involution::Chi
    }

    /// Image of `π̄_i`.
    pub fn gen_image(self, r: usize, i: usize) -> HeckeElt {
        match self {
            Involution::Phi => HeckeElt::gen(r, r - i),
            Involution::Theta => HeckeElt::pi_gen(r, i).scale(&rat(-1)),
            Involution::Chi => HeckeElt::gen(r, i),
        }
    }

    pub fn apply(self, h: &HeckeElt) -> HeckeElt {
        let r = h.r();
        let images: Vec<HeckeElt> = (1..r).map(|i| self.gen_image(r, i)).collect();
        h.apply_morphism(&images, self.is_anti())
    }
}

pub fn involution_phi(h: &HeckeElt) -> HeckeElt {
    Involution::Phi.apply(h)
}

pub fn involution_theta(h: &HeckeElt) -> HeckeElt {
    Involution::Theta.apply(h)
}

pub fn antiinvolution_chi(h: &HeckeElt) -> HeckeElt {
    Involution::Chi.apply(h)
}

/// `ε(h)`: the coefficient of `π_{w₀}` in the π-basis expansion of `h`.
/// Because the change of basis is unitriangular for the Bruhat order, this
/// is also the `π̄_{w₀}` coefficient.
pub fn frobenius_eps(h: &HeckeElt) -> Rat {
    h.coefficient(&longest_element(&DescentSet::all_of(h.r())))
}

/// ε computed through the full π-basis expansion.
pub fn frobenius_eps_expanded(h: &HeckeElt) -> Rat {
    let w0 = longest_element(&DescentSet::all_of(h.r()));
    h.to_pi_basis().remove(&w0).unwrap_or_else(Rat::zero)
}

fn hecke_tag(r: usize) -> AlgebraTag {
    AlgebraTag::Hecke { r }
}

/// Left multiplication on the π̄ basis of H_r(0), basis in lexicographic order.
pub fn regular_representation(r: usize) -> Result<AlgModule> {
    guard(r <= REGULAR_MAX_R, || format!("regular representation needs r ≤ {REGULAR_MAX_R}, got {r}"))?;
    let perms = Perm::all(r);
    let index: HashMap<&Perm, usize> = perms.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let d = perms.len();
    let gens = (1..r)
        .map(|i| {
            let mut m = RatMatrix::zeros(d, d);
            for (col, w) in perms.iter().enumerate() {
                if w.has_left_descent(i) {
                    m.set(col, col, rat(-1));
                } else {
                    m.set(index[&w.left_simple(i)], col, rat(1));
                }
            }
            m
        })
        .collect();
    AlgModule::new(hecke_tag(r), perms.iter().map(|w| w.label()).collect(), gens, None)
}

pub fn simple_f(alpha: &Composition) -> Result<AlgModule> {
    guard(alpha.is_strong(), || format!("{alpha} is not a strong composition"))?;
    let set = alpha.descent_set();
    let gens = (1..set.r).map(|i| RatMatrix::from_int_rows(&[vec![if set.contains(i) { -1 } else { 0 }]])).collect();
    AlgModule::new(hecke_tag(set.r), vec![format!("v[{}]", alpha.label())], gens, None)
}

/// The generating element `π̄_{w₀(S)} π_{w₀(Sᶜ)}` of R_α, `S = set(α)`.
pub fn projective_generator(alpha: &Composition) -> HeckeElt {
    let s = alpha.descent_set();
    HeckeElt::basis(longest_element(&s)).mul(&HeckeElt::pi(&longest_element(&s.complement())))
}

/// The left ideal `H_r(0)·g` with the induced action, basis in reduced echelon
/// form over π̄-coordinates; labels name the pivot permutations.
pub fn cyclic_module(g: &HeckeElt) -> Result<AlgModule> {
    let r = g.r();
    guard(r <= REGULAR_MAX_R, || format!("cyclic submodules need r ≤ {REGULAR_MAX_R}, got {r}"))?;
    let perms = Perm::all(r);
    let index: HashMap<Perm, usize> = perms.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
    let d = perms.len();
    let dense = |h: &HeckeElt| -> Vec<Rat> {
        let mut v = vec![Rat::zero(); d];
        for (w, c) in h.terms() {
            v[index[w]] = c.clone();
        }
        v
    };
    let mut ech = Echelon::new(d);
    let mut frontier = Vec::new();
    if ech.insert(sparse_from_dense(&dense(g))) {
        frontier.push(g.clone());
    }
    while let Some(x) = frontier.pop() {
        for i in 1..r {
            let y = x.left_gen_mul(i);
            if ech.insert(sparse_from_dense(&dense(&y))) {
                frontier.push(y);
            }
        }
    }
    let sub = Subspace::from_echelon(d, ech);
    let elems: Vec<HeckeElt> = sub
        .basis()
        .iter()
        .map(|v| HeckeElt::from_terms(r, v.iter().enumerate().map(|(k, c)| (perms[k].clone(), c.clone()))))
        .collect();
    let mut gens = Vec::with_capacity(r.saturating_sub(1));
    for i in 1..r {
        let cols: Vec<Vec<Rat>> = elems
            .iter()
            .map(|b| sub.coordinates(&dense(&b.left_gen_mul(i))).ok_or_else(|| Error::Internal("left ideal not closed".into())))
            .collect::<Result<_>>()?;
        gens.push(RatMatrix::from_columns(elems.len(), &cols));
    }
    let labels = sub.pivots().iter().map(|&p| perms[p].label()).collect();
    AlgModule::new(hecke_tag(r), labels, gens, None)
}

/// `R_α = H_r(0) π̄_{w₀(set(α))} π_{w₀(set(α)ᶜ)}`.
pub fn projective_r(alpha: &Composition) -> Result<AlgModule> {
    guard(alpha.is_strong(), || format!("{alpha} is not a strong composition"))?;
    cyclic_module(&projective_generator(alpha))
}

/// Action matrix of an arbitrary element on an H_r(0)-module.
pub fn hecke_action(m: &AlgModule, h: &HeckeElt) -> Result<RatMatrix> {
    let AlgebraTag::Hecke { r } = m.tag else {
        return Err(Error::Domain("not an H_r(0)-module".into()));
    };
    guard(r == h.r(), || format!("element of H_{}(0) on an H_{r}(0)-module", h.r()))?;
    let d = m.dim();
    let mut out = RatMatrix::zeros(d, d);
    for (w, c) in h.terms() {
        let mut x = RatMatrix::identity(d);
        for &i in &w.reduced_word() {
            x = &x * m.gen(i - 1);
        }
        out.add_scaled(c, &x);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variance {
    Covariant,
    Contravariant,
}

/// `T⁺_f(M)` (same space, `b ·_f v = f(b)·v`) or `T⁻_g(M)` (dual space,
/// `(b ·^g δ)(v) = δ(g(b)·v)`, i.e. transposed matrices).
pub fn twist_module(m: &AlgModule, f: Involution, variance: Variance) -> Result<AlgModule> {
    let AlgebraTag::Hecke { r } = m.tag else {
        return Err(Error::Domain("twists act on H_r(0)-modules".into()));
    };
    match (variance, f.is_anti()) {
        (Variance::Covariant, true) => return Err(Error::Domain("χ is an anti-involution; use the contravariant twist".into())),
        (Variance::Contravariant, false) => {
            return Err(Error::Domain(format!("{f:?} is an automorphism; use the covariant twist")))
        }
        _ => {}
    }
    let mut gens = Vec::with_capacity(r.saturating_sub(1));
    for i in 1..r {
        let a = hecke_action(m, &f.gen_image(r, i))?;
        gens.push(if variance == Variance::Contravariant { a.transpose() } else { a });
    }
    let labels = match variance {
        Variance::Covariant => m.labels.clone(),
        Variance::Contravariant => m.labels.iter().map(|l| format!("{l}*")).collect(),
    };
    AlgModule::new(m.tag, labels, gens, None)
}

/// Gram matrix `(ε(π̄_u π̄_v))_{u,v}` over the lexicographic π̄ basis.
pub fn frobenius_gram(r: usize) -> RatMatrix {
    let perms = Perm::all(r);
    let basis: Vec<HeckeElt> = perms.iter().cloned().map(HeckeElt::basis).collect();
    let d = basis.len();
    RatMatrix::from_fn(d, d, |a, b| frobenius_eps(&basis[a].mul(&basis[b])))
}

impl DescentSet {
    /// `[r−1]`.
    pub fn all_of(r: usize) -> DescentSet {
        DescentSet { r, elements: (1..r).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::{comp, strong_compositions};
    use crate::exactlin;

    fn p(w: &[usize]) -> Perm {
        Perm::from_one_line(w.to_vec()).unwrap()
    }

    fn ds(r: usize, e: &[usize]) -> DescentSet {
        DescentSet::new(r, e.to_vec()).unwrap()
    }

    #[test]
    fn perm_basics() {
        assert_eq!(Perm::all(3).len(), 6);
        assert_eq!(Perm::all(4).len(), 24);
        let w = p(&[3, 1, 2]);
        assert_eq!(w.length(), 2);
        assert_eq!(w.descents().elements, vec![1]);
        assert!(Perm::from_one_line(vec![1, 1]).is_err());
        for r in 1..=5 {
            for w in Perm::all(r) {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.length());
                let mut x = Perm::identity(r);
                for &i in &word {
                    x = x.compose(&Perm::simple(r, i));
                }
                assert_eq!(x, w);
                assert_eq!(w.compose(&w.inverse()), Perm::identity(r));
            }
        }
    }

    #[test]
    fn longest_elements() {
        assert_eq!(longest_element(&ds(3, &[1, 2])), p(&[3, 2, 1]));
        assert_eq!(longest_element(&ds(3, &[])), Perm::identity(3));
        assert_eq!(longest_coset_rep(&ds(3, &[2])), p(&[2, 3, 1]));
        for r in 1..=5 {
            for t in DescentSet::all(r) {
                let brute = Perm::all(r)
                    .into_iter()
                    .filter(|w| w.descents().is_subset(&t))
                    .max_by_key(|w| w.length())
                    .unwrap();
                assert_eq!(longest_coset_rep(&t), brute);
            }
        }
    }

    #[test]
    fn weak_intervals() {
        assert_eq!(weak_interval(&ds(3, &[]), &ds(3, &[])).unwrap(), vec![Perm::identity(3)]);
        assert_eq!(weak_interval(&ds(3, &[]), &ds(3, &[1, 2])).unwrap().len(), 6);
        assert_eq!(
            weak_interval(&ds(3, &[1]), &ds(3, &[1, 2])).unwrap(),
            vec![p(&[2, 1, 3]), p(&[3, 1, 2]), p(&[3, 2, 1])]
        );
        assert!(weak_interval(&ds(3, &[1]), &ds(3, &[2])).is_err());
    }

    #[test]
    fn multiplication_rules() {
        let g1 = HeckeElt::gen(3, 1);
        let g2 = HeckeElt::gen(3, 2);
        assert_eq!(g1.mul(&g1), g1.scale(&rat(-1)));
        assert_eq!(g1.mul(&g2), HeckeElt::basis(Perm::simple(3, 1).compose(&Perm::simple(3, 2))));
        let pi1 = HeckeElt::pi_gen(3, 1);
        assert_eq!(pi1.mul(&pi1), pi1);
        assert_eq!(g1.mul(&g2).mul(&g1), g2.mul(&g1).mul(&g2));
        let w = p(&[2, 3, 1]);
        assert_eq!(HeckeElt::basis(w.clone()).right_gen_mul(1), HeckeElt::basis(w).mul(&g1));
    }

    #[test]
    fn x_bar_examples() {
        assert_eq!(x_bar(&comp(&[1, 1, 1])), HeckeElt::one(3));
        assert_eq!(x_bar(&comp(&[3])), HeckeElt::from_terms(3, Perm::all(3).into_iter().map(|w| (w, rat(1)))));
        let x = x_bar(&comp(&[2, 1]));
        assert_eq!(x, HeckeElt::one(3).add(&HeckeElt::gen(3, 1)));
        assert_eq!(x, HeckeElt::pi(&Perm::simple(3, 1)));
        for l in crate::compositions::weak_compositions(3, 4) {
            assert_eq!(x_bar(&l), x_bar_via_pi(&l), "{l}");
        }
    }

    #[test]
    fn involutions() {
        let r = 3;
        assert_eq!(involution_phi(&HeckeElt::pi_gen(r, 1)), HeckeElt::pi_gen(r, 2));
        assert_eq!(
            involution_theta(&HeckeElt::pi_gen(r, 1)),
            HeckeElt::one(r).sub(&HeckeElt::pi_gen(r, 1))
        );
        let s12 = HeckeElt::pi_gen(r, 1).mul(&HeckeElt::pi_gen(r, 2));
        let s21 = HeckeElt::pi_gen(r, 2).mul(&HeckeElt::pi_gen(r, 1));
        assert_eq!(antiinvolution_chi(&s12), s21);
        let invs = [Involution::Phi, Involution::Theta, Involution::Chi];
        for r in 2..=4 {
            for w in Perm::all(r) {
                let h = HeckeElt::basis(w);
                for f in invs {
                    assert_eq!(f.apply(&f.apply(&h)), h);
                    for g in invs {
                        assert_eq!(f.apply(&g.apply(&h)), g.apply(&f.apply(&h)));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_functional() {
        let w0 = longest_element(&DescentSet::all_of(3));
        assert_eq!(frobenius_eps(&HeckeElt::pi(&w0)), rat(1));
        assert_eq!(frobenius_eps(&HeckeElt::one(3)), rat(0));
        assert_eq!(frobenius_eps_expanded(&HeckeElt::basis(w0.clone())), rat(1));
        for r in 1..=4 {
            for w in Perm::all(r) {
                let h = HeckeElt::basis(w.clone()).add(&HeckeElt::pi(&w));
                assert_eq!(frobenius_eps(&h), frobenius_eps_expanded(&h));
            }
            assert!(exactlin::is_invertible(&frobenius_gram(r)));
        }
    }

    #[test]
    fn modules() {
        let reg = regular_representation(3).unwrap();
        assert_eq!(reg.dim(), 6);
        assert!(reg.check_relations().ok());
        assert_eq!(reg.radical().unwrap().dim(), 2);
        assert_eq!(regular_representation(1).unwrap().dim(), 1);
        assert!(regular_representation(8).is_err());

        let f = simple_f(&comp(&[2, 1])).unwrap();
        assert_eq!(f.gens[0], RatMatrix::from_int_rows(&[vec![0]]));
        assert_eq!(f.gens[1], RatMatrix::from_int_rows(&[vec![-1]]));

        assert_eq!(projective_r(&comp(&[3])).unwrap().dim(), 1);
        assert_eq!(projective_r(&comp(&[2, 1])).unwrap().dim(), 2);
        for r in 1..=4 {
            let total: usize = strong_compositions(r).iter().map(|a| projective_r(a).unwrap().dim()).sum();
            assert_eq!(total, (1..=r).product::<usize>());
        }
    }

    #[test]
    fn top_and_socle_of_r() {
        for a in strong_compositions(4) {
            let ra = projective_r(&a).unwrap();
            assert!(ra.check_relations().ok());
            let top = ra.quotient(&ra.radical().unwrap()).unwrap();
            assert!(top.is_isomorphic(&simple_f(&a).unwrap(), 0).unwrap(), "top R_{a}");
            let soc = ra.submodule(&ra.socle().unwrap()).unwrap();
            assert!(soc.is_isomorphic(&simple_f(&a.reverse()).unwrap(), 0).unwrap(), "soc R_{a}");
        }
    }

    #[test]
    fn twist_table_r3() {
        for a in strong_compositions(3) {
            let f = simple_f(&a).unwrap();
            let r = projective_r(&a).unwrap();
            let iso = |m: &AlgModule, n: &AlgModule| m.is_isomorphic(n, 0).unwrap();
            assert!(iso(&twist_module(&f, Involution::Phi, Variance::Covariant).unwrap(), &simple_f(&a.reverse()).unwrap()));
            assert!(iso(&twist_module(&f, Involution::Theta, Variance::Covariant).unwrap(), &simple_f(&a.complement()).unwrap()));
            assert!(iso(&twist_module(&f, Involution::Chi, Variance::Contravariant).unwrap(), &f));
            assert!(iso(&twist_module(&r, Involution::Phi, Variance::Covariant).unwrap(), &projective_r(&a.reverse()).unwrap()));
            assert!(iso(&twist_module(&r, Involution::Theta, Variance::Covariant).unwrap(), &projective_r(&a.complement()).unwrap()));
            assert!(iso(&twist_module(&r, Involution::Chi, Variance::Contravariant).unwrap(), &projective_r(&a.reverse()).unwrap()));
        }
        let f = simple_f(&comp(&[2, 1])).unwrap();
        assert!(twist_module(&f, Involution::Chi, Variance::Covariant).is_err());
        assert!(twist_module(&f, Involution::Phi, Variance::Contravariant).is_err());
    }
}
