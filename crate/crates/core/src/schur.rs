//! S₀(n,r)-modules on standard basis elements: the generator rule on e_A,
//! the projective indecomposables P_λ, their radicals N_λ, the simples S_λ,
//! lowering words, and identification of simples by weight.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::compositions::{binomial, lambda_bullet_set, refinements, Composition};
use crate::error::{guard, Error, Result};
use crate::matrices::{basis_b_lambda, cb_set, NNMatrix};
use crate::module::{AlgModule, AlgebraTag};
use crate::{rat, RatMatrix, RatSubspace};

pub const MODULE_MAX_DIM: usize = 600;

/// `e_i · e_A` in S₀(n,r) (one-based `i`): a unit moves from row `i+1` to row
/// `i` in the rightmost column where row `i+1` is nonzero. `None` when row
/// `i+1` vanishes.
pub fn e_on_basis(i: usize, a: &NNMatrix) -> Option<NNMatrix> {
    let n = a.n();
    assert!(1 <= i && i < n, "e_{i} outside 1..{n}");
    let p = (0..n).rev().find(|&j| a.get(i, j) > 0)?;
    let mut b = a.clone();
    b.set(i - 1, p, a.get(i - 1, p) + 1);
    b.set(i, p, a.get(i, p) - 1);
    Some(b)
}

/// `f_i · e_A` (one-based `i`): a unit moves from row `i` to row `i+1` in the
/// leftmost column where row `i` is nonzero. `None` when row `i` vanishes.
pub fn f_on_basis(i: usize, a: &NNMatrix) -> Option<NNMatrix> {
    let n = a.n();
    assert!(1 <= i && i < n, "f_{i} outside 1..{n}");
    let q = (0..n).find(|&j| a.get(i - 1, j) > 0)?;
    let mut b = a.clone();
    b.set(i - 1, q, a.get(i - 1, q) - 1);
    b.set(i, q, a.get(i, q) + 1);
    Some(b)
}

pub fn matrix_label(a: &NNMatrix) -> String {
    a.compact_rows().join("|")
}

fn check_bullet(lambda: &Composition) -> Result<(usize, usize)> {
    guard(lambda.is_bullet(), || format!("{lambda} is not in Λ•(n,r)"))?;
    Ok((lambda.len(), lambda.size()))
}

/// Module on `basis` where `b·e_A = e_B` if `B ∈ keep` and 0 otherwise.
/// `basis` must be contained in `keep`, or images outside `basis` that land
/// in `keep` are reported as an error.
fn truncated_module(n: usize, r: usize, basis: &[NNMatrix], keep: &HashSet<&NNMatrix>) -> Result<AlgModule> {
    guard(basis.len() <= MODULE_MAX_DIM, || format!("module dimension {} exceeds {MODULE_MAX_DIM}", basis.len()))?;
    let index: HashMap<&NNMatrix, usize> = basis.iter().enumerate().map(|(k, a)| (a, k)).collect();
    let d = basis.len();
    let mut gens = Vec::with_capacity(2 * n.saturating_sub(1));
    let ops: [fn(usize, &NNMatrix) -> Option<NNMatrix>; 2] = [e_on_basis, f_on_basis];
    for op in ops {
        for i in 1..n {
            let mut m = RatMatrix::zeros(d, d);
            for (col, a) in basis.iter().enumerate() {
                let Some(b) = op(i, a) else { continue };
                if !keep.contains(&b) {
                    continue;
                }
                let row = *index.get(&b).ok_or_else(|| {
                    Error::Internal(format!("{} maps {} outside the basis", i, matrix_label(a)))
                })?;
                m.set(row, col, rat(1));
            }
            gens.push(m);
        }
    }
    AlgModule::new(
        AlgebraTag::Schur { n, r },
        basis.iter().map(matrix_label).collect(),
        gens,
        Some(basis.iter().map(NNMatrix::ro).collect()),
    )
}

/// P_λ on B^λ.
pub fn build_p(lambda: &Composition) -> Result<AlgModule> {
    let (n, r) = check_bullet(lambda)?;
    let b = basis_b_lambda(lambda);
    truncated_module(n, r, &b, &b.iter().collect())
}

/// N_λ on B^λ \ β^λ with the restricted action.
pub fn build_n(lambda: &Composition) -> Result<AlgModule> {
    let (n, r) = check_bullet(lambda)?;
    let b = basis_b_lambda(lambda);
    let cb: HashSet<NNMatrix> = cb_set(lambda).into_iter().collect();
    let rest: Vec<NNMatrix> = b.iter().filter(|a| !cb.contains(*a)).cloned().collect();
    truncated_module(n, r, &rest, &b.iter().collect())
}

/// S_λ = P_λ / N_λ on the classes of cb(λ).
pub fn build_s(lambda: &Composition) -> Result<AlgModule> {
    let (n, r) = check_bullet(lambda)?;
    let cb = cb_set(lambda);
    truncated_module(n, r, &cb, &cb.iter().collect())
}

/// Coordinates `c` of `λ − ro(A) = Σ c_i a_i`, `a_i = ε_i − ε_{i+1}`: the
/// number of times each `f_i` occurs in a lowering word.
pub fn lowering_multiset(lambda: &Composition, a: &NNMatrix) -> Result<Vec<usize>> {
    let ro = a.ro();
    let n = lambda.len();
    let mut acc: i64 = 0;
    let mut out = Vec::with_capacity(n.saturating_sub(1));
    for k in 0..n.saturating_sub(1) {
        acc += lambda.parts()[k] as i64 - ro.parts()[k] as i64;
        if acc < 0 {
            return Err(Error::Domain(format!("{} is not below {lambda}", matrix_label(a))));
        }
        out.push(acc as usize);
    }
    Ok(out)
}

/// A word `[i_1, …, i_l]` with `ē_A = f_{i_l} ⋯ f_{i_1} · k̄_λ` in S_λ, found by
/// breadth-first search from `diag(λ)`.
pub fn lowering_word(lambda: &Composition, a: &NNMatrix) -> Result<Vec<usize>> {
    check_bullet(lambda)?;
    let cb: HashSet<NNMatrix> = cb_set(lambda).into_iter().collect();
    if !cb.contains(a) {
        return Err(Error::Domain(format!("{} is not in cb({lambda})", matrix_label(a))));
    }
    let n = lambda.len();
    let start = NNMatrix::diag(lambda);
    let mut prev: HashMap<NNMatrix, Option<(NNMatrix, usize)>> = HashMap::from([(start.clone(), None)]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        if &x == a {
            break;
        }
        for i in 1..n {
            if let Some(y) = f_on_basis(i, &x).filter(|y| cb.contains(y)) {
                if !prev.contains_key(&y) {
                    prev.insert(y.clone(), Some((x.clone(), i)));
                    queue.push_back(y);
                }
            }
        }
    }
    let mut word = Vec::new();
    let mut cur = a.clone();
    loop {
        match prev.get(&cur) {
            Some(Some((p, i))) => {
                word.push(*i);
                cur = p.clone();
            }
            Some(None) => break,
            None => return Err(Error::Internal(format!("{} unreachable from diag({lambda})", matrix_label(a)))),
        }
    }
    word.reverse();
    Ok(word)
}

pub fn lowering_length(lambda: &Composition, a: &NNMatrix) -> Result<usize> {
    Ok(lowering_word(lambda, a)?.len())
}

pub fn radical_of_module(m: &AlgModule) -> Result<RatSubspace> {
    guard(m.dim() <= MODULE_MAX_DIM, || format!("radical of a {}-dimensional module", m.dim()))?;
    m.radical()
}

pub fn socle_of_module(m: &AlgModule) -> Result<RatSubspace> {
    guard(m.dim() <= MODULE_MAX_DIM, || format!("socle of a {}-dimensional module", m.dim()))?;
    m.socle()
}

/// The λ with `M ≅ S_λ`: the lexicographically largest weight occurring in
/// `M` (its weight support is the refinements of λ), confirmed by an
/// explicit isomorphism.
pub fn identify_simple(m: &AlgModule, seed: u64) -> Result<Composition> {
    let weights = m.weights.as_ref().ok_or_else(|| Error::Domain("module has no weights".into()))?;
    let lambda = weights.iter().max().cloned().ok_or_else(|| Error::Domain("zero module is not simple".into()))?;
    if !lambda.is_bullet() {
        return Err(Error::Domain(format!("top weight {lambda} is not in Λ•(n,r)")));
    }
    if m.is_isomorphic(&build_s(&lambda)?, seed)? {
        Ok(lambda)
    } else {
        Err(Error::Domain(format!("module is not isomorphic to S_{lambda}")))
    }
}

/// Composition multiplicities `[M : S_λ]` of an S₀(n,r)-module, read off its
/// weight multiset: the lexicographically largest remaining weight λ is the
/// top weight of a composition factor S_λ, whose weights (the refinements of
/// λ, each once) are then removed.
pub fn schur_multiplicities(m: &AlgModule) -> Result<Vec<(Composition, usize)>> {
    let weights = m.weights.as_ref().ok_or_else(|| Error::Domain("module has no weights".into()))?;
    let mut count: HashMap<Composition, usize> = HashMap::new();
    for w in weights {
        *count.entry(w.clone()).or_default() += 1;
    }
    let mut out: Vec<(Composition, usize)> = Vec::new();
    while let Some(top) = count.iter().filter(|(_, &c)| c > 0).map(|(w, _)| w.clone()).max() {
        let c = count[&top];
        for mu in refinements(&top) {
            let e = count.get_mut(&mu).filter(|e| **e >= c).ok_or_else(|| {
                Error::Internal(format!("weight multiset is not a sum of simple characters at {mu}"))
            })?;
            *e -= c;
        }
        out.push((top, c));
    }
    out.sort();
    Ok(out)
}

/// `(Σ_λ dim P_λ · dim S_λ, |M_n(r)|)`.
pub fn dimension_bookkeeping(n: usize, r: usize) -> Result<(u128, u128)> {
    let mut total = 0u128;
    for l in lambda_bullet_set(n, r) {
        total += (build_p(&l)?.dim() * build_s(&l)?.dim()) as u128;
    }
    Ok((total, binomial((n * n + r - 1) as u64, r as u64)))
}

pub fn graph_dot(m: &AlgModule, name: &str) -> String {
    crate::export::action_dot(m, name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::comp;
    use crate::exactlin::Subspace;

    fn mx(rows: &[&[usize]]) -> NNMatrix {
        NNMatrix::of(rows)
    }

    #[test]
    fn generator_rule_examples() {
        assert_eq!(e_on_basis(2, &mx(&[&[2, 0, 0], &[0, 0, 0], &[0, 1, 0]])), Some(NNMatrix::diag(&comp(&[2, 1, 0]))));
        assert_eq!(f_on_basis(1, &NNMatrix::diag(&comp(&[2, 1, 0]))), Some(mx(&[&[1, 0, 0], &[1, 1, 0], &[0, 0, 0]])));
        assert_eq!(e_on_basis(1, &mx(&[&[2, 0, 0], &[0, 0, 0], &[0, 1, 0]])), None);
    }

    fn edge_set(m: &AlgModule) -> Vec<(String, String, String)> {
        crate::export::action_edges(m).into_iter().map(|(a, g, b, c)| {
            assert_eq!(c, "1");
            (a, g, b)
        }).collect()
    }

    fn expected(edges: &[(&str, &str, &str)]) -> Vec<(String, String, String)> {
        let mut v: Vec<_> = edges.iter().map(|(a, g, b)| (a.to_string(), g.to_string(), b.to_string())).collect();
        v.sort();
        v
    }

    #[test]
    fn p_210_action_graph() {
        let p = build_p(&comp(&[2, 1, 0])).unwrap();
        assert_eq!(p.dim(), 8);
        let (a, b, c, d) = ("200|010|000", "100|110|000", "200|000|010", "100|010|100");
        let (e, f, g, h) = ("100|100|010", "100|000|110", "000|200|010", "000|100|110");
        let want = expected(&[
            (a, "f1", b),
            (e, "f2", f),
            (g, "f2", h),
            (e, "e2", b),
            (a, "f2", c),
            (c, "e2", a),
            (c, "f1", e),
            (e, "e1", c),
            (e, "f1", g),
            (g, "e1", e),
            (b, "f2", d),
            (d, "e2", b),
            (d, "f2", f),
            (f, "e2", d),
            (f, "f1", h),
            (h, "e1", f),
        ]);
        assert_eq!(edge_set(&p), want);
        assert!(p.check_relations().ok());
    }

    #[test]
    fn s_210_chain() {
        let s = build_s(&comp(&[2, 1, 0])).unwrap();
        let (a, c, e, g) = ("200|010|000", "200|000|010", "100|100|010", "000|200|010");
        let want = expected(&[(a, "f2", c), (c, "e2", a), (c, "f1", e), (e, "e1", c), (e, "f1", g), (g, "e1", e)]);
        assert_eq!(edge_set(&s), want);
        assert_eq!(build_n(&comp(&[2, 1, 0])).unwrap().dim(), 4);
    }

    #[test]
    fn small_cases() {
        let p = build_p(&comp(&[3, 0, 0])).unwrap();
        assert_eq!(p.weights.as_ref().unwrap().iter().filter(|w| **w == comp(&[3, 0, 0])).count(), 1);
        assert_eq!(build_p(&comp(&[4])).unwrap().dim(), 1);
        assert!(build_p(&comp(&[0, 2])).is_err());
    }

    #[test]
    fn lowering_words() {
        let l = comp(&[2, 1, 0]);
        assert_eq!(lowering_word(&l, &NNMatrix::diag(&l)).unwrap(), Vec::<usize>::new());
        assert_eq!(lowering_word(&l, &mx(&[&[2, 0, 0], &[0, 0, 0], &[0, 1, 0]])).unwrap(), vec![2]);
        let a = mx(&[&[0, 0, 0], &[2, 0, 0], &[0, 1, 0]]);
        let mut w = lowering_word(&l, &a).unwrap();
        assert_eq!(w.len(), 3);
        w.sort();
        assert_eq!(w, vec![1, 1, 2]);
        assert_eq!(lowering_multiset(&l, &a).unwrap(), vec![2, 1]);
        assert!(lowering_word(&l, &mx(&[&[1, 0, 0], &[1, 1, 0], &[0, 0, 0]])).is_err());
    }

    #[test]
    fn simples_radicals_socles_33() {
        for l in lambda_bullet_set(3, 3) {
            let s = build_s(&l).unwrap();
            assert_eq!(s.dim(), refinements(&l).len());
            assert!(radical_of_module(&s).unwrap().is_zero());
            let p = build_p(&l).unwrap();
            assert!(p.check_relations().ok());
            let rad = radical_of_module(&p).unwrap();
            let cb: HashSet<String> = cb_set(&l).iter().map(matrix_label).collect();
            let n_span = Subspace::span(
                p.dim(),
                p.labels.iter().enumerate().filter(|(_, lab)| !cb.contains(*lab)).map(|(k, _)| {
                    let mut v = vec![rat(0); p.dim()];
                    v[k] = rat(1);
                    v
                }),
            );
            assert_eq!(rad, n_span, "rad P_{l}");
            let q = p.quotient(&rad).unwrap();
            assert!(q.is_isomorphic(&s, 0).unwrap());
            let soc = p.submodule(&socle_of_module(&p).unwrap()).unwrap();
            assert_eq!(identify_simple(&soc, 0).unwrap(), l.reverse_bullet());
        }
        assert_eq!(identify_simple(&build_s(&comp(&[2, 1, 0])).unwrap(), 0).unwrap(), comp(&[2, 1, 0]));
    }

    #[test]
    fn bookkeeping() {
        assert_eq!(dimension_bookkeeping(3, 3).unwrap(), (165, 165));
        assert_eq!(dimension_bookkeeping(2, 2).unwrap(), (10, 10));
        assert_eq!(dimension_bookkeeping(2, 3).unwrap(), (20, 20));
    }

    #[test]
    fn multiplicities_of_projectives() {
        let p = build_p(&comp(&[2, 1, 0])).unwrap();
        let m = schur_multiplicities(&p).unwrap();
        let total: usize = m.iter().map(|(l, c)| c * refinements(l).len()).sum();
        assert_eq!(total, 8);
        assert!(m.contains(&(comp(&[2, 1, 0]), 1)));
    }
}
