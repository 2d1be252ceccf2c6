//! Quasi-ribbon tableaux and words, Kashiwara operators, and the simple
//! U₀(gl_n)-modules D_α.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::compositions::{strong_compositions, weak_compositions, Composition};
use crate::error::{guard, Error, Result};
use crate::module::{AlgModule, AlgebraTag};
use crate::tensor::{content, phi0_word, TensorSpace, Word};
use crate::{rat, RatMatrix};

pub use crate::tensor::U0Gen;

/// A filling of the ribbon of shape α; row `k+1` starts under the last cell
/// of row `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QRTableau {
    pub shape: Composition,
    pub rows: Vec<Vec<usize>>,
}

/// `(row, column)` of every cell in reading order: columns left to right,
/// each from bottom to top.
fn reading_cells(shape: &Composition) -> Vec<(usize, usize)> {
    let mut cells = Vec::with_capacity(shape.size());
    let mut start = 0;
    for (row, &len) in shape.parts().iter().enumerate() {
        cells.extend((0..len).map(|t| (row, start + t)));
        start += len.saturating_sub(1);
    }
    cells.sort_by_key(|&(row, col)| (col, std::cmp::Reverse(row)));
    cells
}

impl QRTableau {
    /// Rows weakly increase; each overlap column strictly increases downward.
    pub fn is_valid(&self, n: usize) -> bool {
        let lens_ok = self.rows.iter().map(Vec::len).eq(self.shape.parts().iter().copied());
        lens_ok
            && self.shape.is_strong()
            && self.rows.iter().flatten().all(|&x| (1..=n).contains(&x))
            && self.rows.iter().all(|row| row.windows(2).all(|p| p[0] <= p[1]))
            && self.rows.windows(2).all(|p| p[0].last() < p[1].first())
    }

    pub fn read(&self) -> Word {
        reading_cells(&self.shape).into_iter().map(|(row, col)| self.rows[row][col - self.row_start(row)]).collect()
    }

    fn row_start(&self, row: usize) -> usize {
        self.shape.parts()[..row].iter().map(|&l| l - 1).sum()
    }

    /// Content `(#1, …, #n)`.
    pub fn wt(&self, n: usize) -> Composition {
        content(&self.read(), n)
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "shape": self.shape.parts(), "rows": self.rows })
    }
}

/// `read(T)`.
pub fn read(t: &QRTableau) -> Word {
    t.read()
}

/// Places `w` into the ribbon column by column, bottom to top, without
/// checking monotonicity.
fn place(w: &[usize], alpha: &Composition) -> Option<QRTableau> {
    if w.len() != alpha.size() || !alpha.is_strong() {
        return None;
    }
    let mut rows: Vec<Vec<usize>> = alpha.parts().iter().map(|&l| vec![0; l]).collect();
    let mut start = vec![0; alpha.len()];
    for k in 1..alpha.len() {
        start[k] = start[k - 1] + alpha.parts()[k - 1] - 1;
    }
    for (&x, (row, col)) in w.iter().zip(reading_cells(alpha)) {
        rows[row][col - start[row]] = x;
    }
    Some(QRTableau { shape: alpha.clone(), rows })
}

/// Whether `w = read(T)` for a quasi-ribbon tableau `T` of shape α.
pub fn is_qr_word(w: &[usize], alpha: &Composition) -> bool {
    let n = w.iter().copied().max().unwrap_or(1);
    place(w, alpha).is_some_and(|t| t.is_valid(n))
}

/// All strong shapes α for which `w` is a quasi-ribbon word.
pub fn qr_shapes(w: &[usize]) -> Vec<Composition> {
    strong_compositions(w.len()).into_iter().filter(|a| is_qr_word(w, a)).collect()
}

/// `tab(w)`, the inverse of `read`.
pub fn tab(w: &[usize], alpha: &Composition) -> Result<QRTableau> {
    if !is_qr_word(w, alpha) {
        return Err(Error::Domain(format!("{w:?} is not a quasi-ribbon word of shape {alpha}")));
    }
    place(w, alpha).ok_or_else(|| Error::Internal("placement failed after validation".into()))
}

/// Fills the rows of α with consecutive segments of `1^{μ_1} 2^{μ_2} ⋯`.
pub fn wt_inverse(mu: &Composition, alpha: &Composition) -> Result<QRTableau> {
    guard(alpha.is_strong() && mu.size() == alpha.size(), || format!("{mu} and {alpha} have different sizes"))?;
    let s = phi0_word(mu);
    let mut rows = Vec::with_capacity(alpha.len());
    let mut at = 0;
    for &len in alpha.parts() {
        rows.push(s[at..at + len].to_vec());
        at += len;
    }
    let t = QRTableau { shape: alpha.clone(), rows };
    if !t.is_valid(mu.len()) {
        return Err(Error::Domain(format!("{mu} does not lie in the refinement range of {alpha}")));
    }
    Ok(t)
}

/// QRT(n, α) in lexicographic order of weights.
pub fn qrt_enumerate(n: usize, alpha: &Composition) -> Vec<QRTableau> {
    if alpha.len() > n || !alpha.is_strong() {
        return Vec::new();
    }
    weak_compositions(n, alpha.size()).iter().filter_map(|mu| wt_inverse(mu, alpha).ok()).collect()
}

/// Positions in `w` of the letters `i` and `i+1` left unmatched once every
/// `(i+1) … i` pair is cancelled.
fn unmatched(i: usize, w: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut lows = Vec::new();
    let mut highs: Vec<usize> = Vec::new();
    for (k, &x) in w.iter().enumerate() {
        if x == i + 1 {
            highs.push(k);
        } else if x == i && highs.pop().is_none() {
            lows.push(k);
        }
    }
    (lows, highs)
}

/// `ẽ_i(w)`: the leftmost unmatched `i+1` becomes `i`.
pub fn crystal_e(i: usize, w: &[usize]) -> Option<Word> {
    let (_, highs) = unmatched(i, w);
    highs.first().map(|&k| {
        let mut v = w.to_vec();
        v[k] = i;
        v
    })
}

/// `f̃_i(w)`: the rightmost unmatched `i` becomes `i+1`.
pub fn crystal_f(i: usize, w: &[usize]) -> Option<Word> {
    let (lows, _) = unmatched(i, w);
    lows.last().map(|&k| {
        let mut v = w.to_vec();
        v[k] = i + 1;
        v
    })
}

/// `D_α` on QRT(n, α): `e_i`, `f_i` through the crystal operators kept only
/// when the result is again a quasi-ribbon word of shape α, and `k_i` by the
/// absence of the entry `i`.
pub fn build_d(alpha: &Composition, n: usize) -> Result<AlgModule> {
    guard(alpha.is_strong(), || format!("{alpha} is not a strong composition"))?;
    guard(n >= 1, || "n must be positive".into())?;
    let tabs = qrt_enumerate(n, alpha);
    let words: Vec<Word> = tabs.iter().map(QRTableau::read).collect();
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let d = tabs.len();
    let gens = U0Gen::all(n)
        .into_iter()
        .map(|g| {
            let mut m = RatMatrix::zeros(d, d);
            for (col, w) in words.iter().enumerate() {
                let image = match g {
                    U0Gen::E(i) => crystal_e(i, w),
                    U0Gen::F(i) => crystal_f(i, w),
                    U0Gen::K(i) => (!w.contains(&i)).then(|| w.clone()),
                };
                if let Some(row) = image.filter(|v| is_qr_word(v, alpha)).and_then(|v| index.get(&v).copied()) {
                    m.set(row, col, rat(1));
                }
            }
            m
        })
        .collect();
    let labels = words.iter().map(|w| w.iter().map(|x| x.to_string()).collect()).collect();
    AlgModule::new(AlgebraTag::U0 { n }, labels, gens, Some(tabs.iter().map(|t| t.wt(n)).collect()))
}

/// V₀^{⊗r} as a U₀(gl_n)-module through the iterated coproduct.
pub fn tensor_u0_module(n: usize, r: usize) -> Result<AlgModule> {
    let v = TensorSpace::new(n, r)?;
    let gens = U0Gen::all(n).into_iter().map(|g| v.u0_action_on_tensor(g)).collect::<Result<_>>()?;
    let weights = (0..v.dim()).map(|k| v.content_of(k)).collect();
    AlgModule::new(AlgebraTag::U0 { n }, v.labels(), gens, Some(weights))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::{comp, refinements};
    use proptest::prelude::*;

    #[test]
    fn reading_examples() {
        let a = comp(&[2, 1, 1, 3, 2]);
        let w = [1, 5, 3, 2, 1, 6, 7, 6, 7];
        assert!(is_qr_word(&w, &a));
        let t = tab(&w, &a).unwrap();
        assert_eq!(t.rows, vec![vec![1, 1], vec![2], vec![3], vec![5, 6, 6], vec![7, 7]]);
        assert_eq!(t.read(), w.to_vec());
        assert!(qr_shapes(&[1, 1, 2, 2, 1, 3, 3, 1, 2]).is_empty());
        assert_eq!(qr_shapes(&[4]), vec![comp(&[1])]);
        assert!(tab(&[2, 1], &comp(&[2])).is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert!(qrt_enumerate(2, &comp(&[1, 1, 1])).is_empty());
        let one = qrt_enumerate(3, &comp(&[1, 1, 1]));
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].rows, vec![vec![1], vec![2], vec![3]]);
        assert_eq!(one[0].wt(3), comp(&[1, 1, 1]));
        let t = qrt_enumerate(3, &comp(&[2, 1]));
        let mut wts: Vec<Composition> = t.iter().map(|t| t.wt(3)).collect();
        wts.sort();
        assert_eq!(wts, refinements(&comp(&[2, 1, 0])));
        for mu in &wts {
            assert_eq!(wt_inverse(mu, &comp(&[2, 1])).unwrap().wt(3), *mu);
        }
        assert!(wt_inverse(&comp(&[1, 2, 0]), &comp(&[2, 1])).is_err());
    }

    #[test]
    fn enumeration_matches_brute_force_and_refinements() {
        for r in 1..=5 {
            for n in 1usize..=4 {
                let space: Vec<Word> = (0..n.pow(r as u32))
                    .map(|mut k| {
                        let mut w = vec![0; r];
                        for slot in w.iter_mut().rev() {
                            *slot = k % n + 1;
                            k /= n;
                        }
                        w
                    })
                    .collect();
                for a in strong_compositions(r) {
                    let got: Vec<Word> = qrt_enumerate(n, &a).iter().map(QRTableau::read).collect();
                    let mut brute: Vec<Word> = space.iter().filter(|w| is_qr_word(w, &a)).cloned().collect();
                    let mut sorted = got.clone();
                    sorted.sort();
                    brute.sort();
                    assert_eq!(sorted, brute, "n={n} {a}");
                    let target = if a.len() <= n { refinements(&a.bullet(n)).len() } else { 0 };
                    assert_eq!(got.len(), target, "n={n} {a}");
                }
            }
        }
    }

    #[test]
    fn crystal_examples() {
        assert_eq!(crystal_e(1, &[2, 1]), None);
        assert_eq!(crystal_f(1, &[2, 1]), None);
        assert_eq!(crystal_f(1, &[1, 1]), Some(vec![1, 2]));
        assert_eq!(crystal_e(1, &[1, 2]), Some(vec![1, 1]));
        assert_eq!(crystal_f(1, &[1, 2, 1]), Some(vec![2, 2, 1]));
    }

    #[test]
    fn d_modules() {
        let d = build_d(&comp(&[1, 1, 1]), 3).unwrap();
        assert_eq!(d.dim(), 1);
        assert!((1..3).all(|i| d.e(i).is_zero() && d.f(i).is_zero()));
        assert_eq!(build_d(&comp(&[2, 1]), 3).unwrap().dim(), 4);
        assert_eq!(build_d(&comp(&[1, 1, 1]), 2).unwrap().dim(), 0);
        for r in 1..=4 {
            for a in strong_compositions(r) {
                let d = build_d(&a, 3).unwrap();
                assert!(d.check_relations().ok(), "{a}");
                if d.dim() > 0 {
                    assert!(d.radical().unwrap().dim() == 0, "{a}");
                    assert_eq!(d.hom_dim(&d).unwrap(), 1, "{a}");
                }
            }
        }
        let v = tensor_u0_module(2, 3).unwrap();
        assert!(v.check_relations().ok());
    }

    fn word(n: usize, len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(1..=n, 0..len)
    }

    proptest! {
        #[test]
        fn crystal_partial_inverse(w in word(4, 10), i in 1usize..4) {
            if let Some(v) = crystal_f(i, &w) {
                prop_assert_eq!(crystal_e(i, &v), Some(w.clone()));
                let (a, b) = (content(&w, 4), content(&v, 4));
                prop_assert_eq!(a.parts()[i - 1], b.parts()[i - 1] + 1);
                prop_assert_eq!(a.parts()[i] + 1, b.parts()[i]);
            }
            if let Some(v) = crystal_e(i, &w) {
                prop_assert_eq!(crystal_f(i, &v), Some(w.clone()));
            }
        }

        #[test]
        fn read_tab_round_trip(w in word(4, 8)) {
            for a in qr_shapes(&w) {
                prop_assert_eq!(tab(&w, &a).unwrap().read(), w.clone());
            }
        }
    }
}
