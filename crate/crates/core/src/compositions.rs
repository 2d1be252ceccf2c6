//! Weak and strong compositions, descent sets, the reverse/complement/
//! conjugate involutions, refinement and the sets max(λ).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence of nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

/// A subset of `{1, …, r−1}` together with `r`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct DescentSet {
    pub r: usize,
    pub elements: Vec<usize>,
}

impl DescentSet {
    pub fn new(r: usize, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.iter().any(|&i| i == 0 || i >= r) {
            return Err(Error::Domain(format!("descent set {elements:?} not inside [1, {})", r)));
        }
        Ok(DescentSet { r, elements })
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elements.binary_search(&i).is_ok()
    }

    pub fn is_subset(&self, other: &DescentSet) -> bool {
        self.elements.iter().all(|&i| other.contains(i))
    }

    /// `[r−1]` minus this set.
    pub fn complement(&self) -> DescentSet {
        DescentSet { r: self.r, elements: (1..self.r).filter(|&i| !self.contains(i)).collect() }
    }

    /// All subsets of `[r−1]`, ordered by their bit patterns.
    pub fn all(r: usize) -> Vec<DescentSet> {
        let m = r.saturating_sub(1);
        (0u64..(1u64 << m))
            .map(|bits| DescentSet { r, elements: (1..r).filter(|&i| bits >> (i - 1) & 1 == 1).collect() })
            .collect()
    }
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// `1^n`.
    pub fn ones(n: usize) -> Self {
        Composition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_strong(&self) -> bool {
        self.0.iter().all(|&p| p > 0)
    }

    /// All zero parts are trailing.
    pub fn is_bullet(&self) -> bool {
        let k = self.0.iter().take_while(|&&p| p > 0).count();
        self.0[k..].iter().all(|&p| p == 0)
    }

    /// Number of nonzero parts.
    pub fn nonzero_len(&self) -> usize {
        self.0.iter().filter(|&&p| p > 0).count()
    }

    /// The strong composition obtained by deleting zeros, for λ with only trailing zeros.
    pub fn plus(&self) -> Result<Composition> {
        if !self.is_bullet() {
            return Err(Error::Domain(format!("{self} has a zero part before a nonzero part")));
        }
        Ok(self.strip_zeros())
    }

    /// Deletes every zero part.
    pub fn strip_zeros(&self) -> Composition {
        Composition(self.0.iter().copied().filter(|&p| p > 0).collect())
    }

    /// Pads with zeros to length `n`, or returns ∅ when longer than `n`.
    pub fn bullet(&self, n: usize) -> Composition {
        if self.len() > n {
            return Composition::empty();
        }
        let mut v = self.0.clone();
        v.resize(n, 0);
        Composition(v)
    }

    /// `((λ⁺)ʳ)•`: the nonzero parts reversed, padded back to the same length.
    pub fn reverse_bullet(&self) -> Composition {
        self.strip_zeros().reverse().bullet(self.len())
    }

    /// Partial sums `{α₁, α₁+α₂, …}` below the total size, of the zero-stripped parts.
    pub fn descent_set(&self) -> DescentSet {
        let r = self.size();
        let mut acc = 0;
        let mut el = Vec::new();
        for &p in self.0.iter().filter(|&&p| p > 0) {
            acc += p;
            if acc < r {
                el.push(acc);
            }
        }
        DescentSet { r, elements: el }
    }

    pub fn from_descents(set: &DescentSet) -> Composition {
        if set.r == 0 {
            return Composition::empty();
        }
        let mut parts = Vec::with_capacity(set.elements.len() + 1);
        let mut prev = 0;
        for &i in &set.elements {
            parts.push(i - prev);
            prev = i;
        }
        parts.push(set.r - prev);
        Composition(parts)
    }

    pub fn reverse(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// The strong composition whose descent set is the complement of this one's.
    pub fn complement(&self) -> Composition {
        Composition::from_descents(&self.descent_set().complement())
    }

    /// `(αʳ)ᶜ`.
    pub fn conjugate(&self) -> Composition {
        self.reverse().complement()
    }

    /// `(αᶜ)ʳ`, equal to [`Composition::conjugate`].
    pub fn conjugate_alt(&self) -> Composition {
        self.complement().reverse()
    }

    /// Dot-separated label, `empty` for ∅.
    pub fn label(&self) -> String {
        if self.0.is_empty() {
            "empty".to_string()
        } else {
            self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(".")
        }
    }

    /// Whether μ = `self` refines λ in Λ(n,r) for λ ∈ Λ•(n,r).
    pub fn refines(&self, lambda: &Composition) -> bool {
        refines(self, lambda)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "empty" || s.is_empty() {
            return Ok(Composition::empty());
        }
        s.split('.')
            .map(|t| t.parse::<usize>().map_err(|_| Error::Domain(format!("bad composition part {t:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(Composition)
    }
}

impl From<Vec<usize>> for Composition {
    fn from(v: Vec<usize>) -> Self {
        Composition(v)
    }
}

impl From<&[usize]> for Composition {
    fn from(v: &[usize]) -> Self {
        Composition(v.to_vec())
    }
}

/// Convenience constructor.
pub fn comp(parts: &[usize]) -> Composition {
    Composition(parts.to_vec())
}

/// Λ(n,r) in lexicographic order.
pub fn weak_compositions(n: usize, r: usize) -> Vec<Composition> {
    fn rec(n: usize, r: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 {
            if r == 0 {
                out.push(Composition(prefix.clone()));
            }
            return;
        }
        if n == 1 {
            prefix.push(r);
            out.push(Composition(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in 0..=r {
            prefix.push(first);
            rec(n - 1, r - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, r, &mut Vec::new(), &mut out);
    out
}

/// Λ⁺(r) in lexicographic order.
pub fn strong_compositions(r: usize) -> Vec<Composition> {
    let mut out: Vec<Composition> = DescentSet::all(r).iter().map(Composition::from_descents).collect();
    out.sort();
    out
}

/// Strong compositions of `r` with at most `n` parts.
pub fn strong_compositions_max_len(r: usize, n: usize) -> Vec<Composition> {
    strong_compositions(r).into_iter().filter(|a| a.len() <= n).collect()
}

/// Λ•(n,r) in lexicographic order.
pub fn lambda_bullet_set(n: usize, r: usize) -> Vec<Composition> {
    let mut out: Vec<Composition> =
        strong_compositions(r).into_iter().filter(|a| a.len() <= n).map(|a| a.bullet(n)).collect();
    out.sort();
    out
}

/// Refinement μ ⪯ λ for λ ∈ Λ•(n,r): the parts of λ are successive block sums
/// of μ, where every block after the first starts at a positive part of μ.
pub fn refines(mu: &Composition, lambda: &Composition) -> bool {
    refinement_indices(mu, lambda).is_some()
}

/// Zero-based block starts `i₁ = 0 < … < i_t` followed by `n`, witnessing μ ⪯ λ.
pub fn refinement_indices(mu: &Composition, lambda: &Composition) -> Option<Vec<usize>> {
    if mu.len() != lambda.len() || mu.size() != lambda.size() || !lambda.is_bullet() {
        return None;
    }
    let n = mu.len();
    let t = lambda.nonzero_len();
    if t == 0 {
        return if mu.size() == 0 && n == 0 { Some(vec![0]) } else if mu.size() == 0 { Some(vec![0, n]) } else { None };
    }
    let m = mu.parts();
    let l = lambda.parts();
    let mut starts = Vec::with_capacity(t + 1);
    let mut i = 0;
    for k in 0..t {
        if k > 0 && (i >= n || m[i] == 0) {
            return None;
        }
        starts.push(i);
        if k == t - 1 {
            if m[i..].iter().sum::<usize>() != l[k] {
                return None;
            }
            starts.push(n);
            return Some(starts);
        }
        let mut acc = 0;
        while i < n && acc < l[k] {
            acc += m[i];
            i += 1;
        }
        if acc != l[k] {
            return None;
        }
        while i < n && m[i] == 0 {
            i += 1;
        }
    }
    unreachable!("loop returns at the last block")
}

/// Λ(n,r)_{⪯λ} with n = ℓ(λ), lexicographic order.
pub fn refinements(lambda: &Composition) -> Vec<Composition> {
    weak_compositions(lambda.len(), lambda.size()).into_iter().filter(|mu| refines(mu, lambda)).collect()
}

/// max(λ): strong compositions α of n = ℓ(λ) cutting λ into consecutive
/// segments each equal to (0) or with nonzero first and last entries.
pub fn maximal_set(lambda: &Composition) -> Vec<Composition> {
    let n = lambda.len();
    let l = lambda.parts();
    strong_compositions(n)
        .into_iter()
        .filter(|alpha| {
            let mut start = 0;
            alpha.parts().iter().all(|&a| {
                let seg = &l[start..start + a];
                start += a;
                seg == [0] || (seg[0] > 0 && seg[a - 1] > 0)
            })
        })
        .collect()
}

/// `{β · 1^{n−ℓ(λ⁺)} : β ∈ Λ⁺(ℓ(λ⁺))}`; agrees with [`maximal_set`] on Λ•(n,r).
pub fn maximal_set_formula(lambda: &Composition) -> Vec<Composition> {
    let n = lambda.len();
    let t = lambda.nonzero_len();
    let mut out: Vec<Composition> = strong_compositions(t)
        .into_iter()
        .map(|b| {
            let mut v = b.0;
            v.extend(std::iter::repeat(1).take(n - t));
            Composition(v)
        })
        .collect();
    out.sort();
    out
}

/// Binomial coefficient as u128.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// `|λ|! / ∏ λ_i!`, the number of words of content λ.
pub fn multinomial(lambda: &Composition) -> u128 {
    let mut left = 0u64;
    let mut acc = 1u128;
    for &p in lambda.parts() {
        left += p as u64;
        acc *= binomial(left, p as u64);
    }
    acc
}
