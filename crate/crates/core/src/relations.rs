//! Defining relations of H_r(0), S₀(n,r) and U₀(gl_n), evaluated on action
//! matrices.

use serde::Serialize;

use crate::compositions::{weak_compositions, Composition};
use crate::module::{AlgModule, AlgebraTag};
use crate::RatMatrix;

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct RelationReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl RelationReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, name: impl FnOnce() -> String, zero: bool) {
        self.checked += 1;
        if !zero {
            self.failures.push(name());
        }
    }

    fn same(&mut self, name: impl FnOnce() -> String, a: &RatMatrix, b: &RatMatrix) {
        self.check(name, a == b);
    }

    pub fn merge(&mut self, other: RelationReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

fn mul3(a: &RatMatrix, b: &RatMatrix, c: &RatMatrix) -> RatMatrix {
    &(a * b) * c
}

/// `π̄_i² = −π̄_i`, braid relations and far commutation.
pub fn hecke_relations(gens: &[RatMatrix]) -> RelationReport {
    let mut rep = RelationReport::default();
    let m = gens.len();
    for i in 0..m {
        let g = &gens[i];
        rep.same(|| format!("pibar{0}^2 = -pibar{0}", i + 1), &(g * g), &-g);
        if i + 1 < m {
            let h = &gens[i + 1];
            rep.same(|| format!("braid {} {}", i + 1, i + 2), &mul3(g, h, g), &mul3(h, g, h));
        }
        for j in i + 2..m {
            rep.same(|| format!("commute {} {}", i + 1, j + 1), &(g * &gens[j]), &(&gens[j] * g));
        }
    }
    rep
}

/// The `P_{ij}`, `N_{ij}`, `C_{ij}` families sandwiched between weight
/// idempotents, together with the idempotent and weight-shift identities.
/// `k(λ)` must return the `k_λ` matrix for λ ∈ Λ(n,r).
pub fn schur_relations(
    n: usize,
    r: usize,
    e: &[RatMatrix],
    f: &[RatMatrix],
    k: &dyn Fn(&Composition) -> RatMatrix,
) -> RelationReport {
    let mut rep = RelationReport::default();
    let d = e.first().or(f.first()).map(|m| m.rows()).unwrap_or_else(|| k(&weak_compositions(n, r)[0]).rows());
    let zero = RatMatrix::zeros(d, d);
    let lams = weak_compositions(n, r);
    let kv = |v: &[i64]| -> RatMatrix {
        if v.iter().any(|&x| x < 0) {
            zero.clone()
        } else {
            k(&Composition::new(v.iter().map(|&x| x as usize).collect()))
        }
    };
    let as_vec = |l: &Composition| -> Vec<i64> { l.parts().iter().map(|&x| x as i64).collect() };
    let a = |i: usize| -> Vec<i64> {
        let mut v = vec![0i64; n];
        v[i] += 1;
        v[i + 1] -= 1;
        v
    };
    let add = |x: &[i64], y: &[i64], s: i64| -> Vec<i64> { x.iter().zip(y).map(|(p, q)| p + s * q).collect() };

    let ks: Vec<RatMatrix> = lams.iter().map(|l| k(l)).collect();
    let mut sum = zero.clone();
    for (x, kx) in ks.iter().enumerate() {
        sum = &sum + kx;
        for (y, ky) in ks.iter().enumerate() {
            let want = if x == y { kx.clone() } else { zero.clone() };
            rep.same(|| format!("k{} k{} idempotents", lams[x], lams[y]), &(kx * ky), &want);
        }
    }
    rep.same(|| "sum of k_lambda is 1".into(), &sum, &RatMatrix::identity(d));

    let m = n.saturating_sub(1);
    for i in 0..m {
        for (l, kl) in lams.iter().zip(&ks) {
            let lv = as_vec(l);
            rep.same(|| format!("e{} k{l} = k(l+a) e", i + 1), &(&e[i] * kl), &(&kv(&add(&lv, &a(i), 1)) * &e[i]));
            rep.same(|| format!("f{} k{l} = k(l-a) f", i + 1), &(&f[i] * kl), &(&kv(&add(&lv, &a(i), -1)) * &f[i]));
        }
    }

    for i in 0..m {
        for j in 0..m {
            let p: Vec<i64> = if i + 1 == j || j + 1 == i {
                add(&add(&a(i), &a(i), 1), &a(j), 1)
            } else {
                add(&a(i), &a(j), 1)
            };
            let (pm, nm) = if i + 1 == j {
                (
                    &mul3(&e[i], &e[i], &e[j]) - &mul3(&e[i], &e[j], &e[i]),
                    &mul3(&f[j], &f[i], &f[i]) - &mul3(&f[i], &f[j], &f[i]),
                )
            } else if j + 1 == i {
                (
                    &mul3(&e[j], &e[i], &e[i]) - &mul3(&e[i], &e[j], &e[i]),
                    &mul3(&f[i], &f[i], &f[j]) - &mul3(&f[i], &f[j], &f[i]),
                )
            } else {
                (e[i].commutator(&e[j]), f[i].commutator(&f[j]))
            };
            let mut cm = &(&e[i] * &f[j]) - &(&f[j] * &e[i]);
            if i == j {
                for (l, kl) in lams.iter().zip(&ks) {
                    if l.parts()[i + 1] == 0 {
                        cm = &cm - kl;
                    }
                    if l.parts()[i] == 0 {
                        cm = &cm + kl;
                    }
                }
            }
            let shift_c = add(&a(i), &a(j), -1);
            for (l, kl) in lams.iter().zip(&ks) {
                let lv = as_vec(l);
                rep.check(|| format!("P{},{} at {l}", i + 1, j + 1), mul3(&kv(&add(&lv, &p, 1)), &pm, kl).is_zero());
                rep.check(|| format!("N{},{} at {l}", i + 1, j + 1), mul3(&kv(&add(&lv, &p, -1)), &nm, kl).is_zero());
                rep.check(|| format!("C{},{} at {l}", i + 1, j + 1), mul3(&kv(&add(&lv, &shift_c, 1)), &cm, kl).is_zero());
            }
        }
    }
    rep
}

/// The sixteen relation families of U₀(gl_n); generator slices are indexed
/// from zero (`e[0]` is e₁, `k[0]` is k₁).
pub fn u0_relations(n: usize, e: &[RatMatrix], f: &[RatMatrix], k: &[RatMatrix]) -> RelationReport {
    let mut rep = RelationReport::default();
    let d = k.first().map(|m| m.rows()).unwrap_or(0);
    let zero = RatMatrix::zeros(d, d);
    let m = n.saturating_sub(1);
    for i in 0..n {
        for j in 0..n {
            rep.same(|| format!("k{} k{} commute", i + 1, j + 1), &(&k[i] * &k[j]), &(&k[j] * &k[i]));
        }
    }
    // One-based i in 2..=n-1 for the vanishing products with e_{i-1}, f_{i-1}.
    for i in 2..n {
        rep.same(|| format!("e{} k{} = 0", i - 1, i), &(&e[i - 2] * &k[i - 1]), &zero);
        rep.same(|| format!("k{} f{} = 0", i, i - 1), &(&k[i - 1] * &f[i - 2]), &zero);
    }
    for i in 0..m {
        rep.same(|| format!("k{0} e{0} = 0", i + 1), &(&k[i] * &e[i]), &zero);
        rep.same(|| format!("f{0} k{0} = 0", i + 1), &(&f[i] * &k[i]), &zero);
    }
    for i in 0..n {
        for j in 0..m {
            // j ≠ i−1, i in one-based terms, i.e. j+1 ≠ i and j ≠ i zero-based.
            if j + 1 == i || j == i {
                continue;
            }
            rep.same(|| format!("k{} e{} commute", i + 1, j + 1), &(&k[i] * &e[j]), &(&e[j] * &k[i]));
            rep.same(|| format!("k{} f{} commute", i + 1, j + 1), &(&k[i] * &f[j]), &(&f[j] * &k[i]));
        }
    }
    for i in 0..m {
        for j in 0..m {
            let want = if i == j { &k[i + 1] - &k[i] } else { zero.clone() };
            rep.same(|| format!("[e{}, f{}]", i + 1, j + 1), &e[i].commutator(&f[j]), &want);
        }
    }
    for i in 0..m.saturating_sub(1) {
        let (ei, ej, fi, fj) = (&e[i], &e[i + 1], &f[i], &f[i + 1]);
        rep.same(|| format!("e{0}^2 e{1} = e{0} e{1} e{0}", i + 1, i + 2), &mul3(ei, ei, ej), &mul3(ei, ej, ei));
        rep.same(|| format!("e{1} e{0} e{1} = e{0} e{1}^2", i + 1, i + 2), &mul3(ej, ei, ej), &mul3(ei, ej, ej));
        rep.same(|| format!("f{1} f{0}^2 = f{0} f{1} f{0}", i + 1, i + 2), &mul3(fj, fi, fi), &mul3(fi, fj, fi));
        rep.same(|| format!("f{1}^2 f{0} = f{1} f{0} f{1}", i + 1, i + 2), &mul3(fj, fj, fi), &mul3(fj, fi, fj));
        rep.same(
            || format!("e{0} e{1} k{2} = k{0} e{0} e{1}", i + 1, i + 2, i + 3),
            &mul3(ei, ej, &k[i + 2]),
            &mul3(&k[i], ei, ej),
        );
        rep.same(
            || format!("f{1} f{0} k{0} = k{2} f{1} f{0}", i + 1, i + 2, i + 3),
            &mul3(fj, fi, &k[i]),
            &mul3(&k[i + 2], fj, fi),
        );
    }
    for i in 0..m {
        for j in i + 2..m {
            rep.same(|| format!("[e{}, e{}]", i + 1, j + 1), &e[i].commutator(&e[j]), &zero);
            rep.same(|| format!("[f{}, f{}]", i + 1, j + 1), &f[i].commutator(&f[j]), &zero);
        }
    }
    rep
}

impl AlgModule {
    /// Evaluates the defining relations of the tagged algebra.
    pub fn check_relations(&self) -> RelationReport {
        match self.tag {
            AlgebraTag::Hecke { .. } => hecke_relations(&self.gens),
            AlgebraTag::Schur { n, r } => {
                let m = n - 1;
                let k = |l: &Composition| self.k_lambda(l);
                if self.dim() == 0 {
                    return RelationReport::default();
                }
                schur_relations(n, r, &self.gens[..m], &self.gens[m..], &k)
            }
            AlgebraTag::U0 { n } => {
                let m = n - 1;
                u0_relations(n, &self.gens[..m], &self.gens[m..2 * m], &self.gens[2 * m..])
            }
        }
    }
}
