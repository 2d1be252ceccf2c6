//! Cartan matrices of S₀(n,r) and H_r(0) and the ⟨ex, c, η⟩ action on pairs
//! of strong compositions.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::compositions::{lambda_bullet_set, strong_compositions, Composition};
use crate::error::{guard, Error, Result};
use crate::functors::hecke_multiplicities;
use crate::hecke::projective_r;
use crate::matrices::{basis_b_lambda, basis_b_mu_rows};
use crate::schur::build_p;

/// Largest `r` for the Hecke Cartan matrix through hom spaces.
pub const HECKE_CARTAN_MAX_R: usize = 6;
/// Largest `r` for the radical-filtration route.
pub const HECKE_FILTRATION_MAX_R: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanMatrix {
    pub index: Vec<Composition>,
    pub entries: Vec<Vec<usize>>,
}

impl CartanMatrix {
    fn build(index: Vec<Composition>, entry: impl Fn(usize, usize) -> Result<usize> + Sync) -> Result<Self> {
        let k = index.len();
        let flat: Vec<usize> = (0..k * k).into_par_iter().map(|x| entry(x / k, x % k)).collect::<Result<_>>()?;
        let entries = flat.chunks(k.max(1)).map(<[usize]>::to_vec).take(k).collect();
        Ok(CartanMatrix { index, entries })
    }

    pub fn position(&self, c: &Composition) -> Option<usize> {
        self.index.iter().position(|x| x == c)
    }

    pub fn get(&self, a: &Composition, b: &Composition) -> Option<usize> {
        Some(self.entries[self.position(a)?][self.position(b)?])
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for c in &self.index {
            out.push(',');
            out.push_str(&c.label());
        }
        out.push('\n');
        for (c, row) in self.index.iter().zip(&self.entries) {
            out.push_str(&c.label());
            for x in row {
                out.push(',');
                out.push_str(&x.to_string());
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "index": self.index.iter().map(Composition::label).collect::<Vec<_>>(),
            "entries": self.entries,
        })
    }
}

/// `c_{λ,μ} = |B^λ ∩ B_μ|` over Λ•(n,r).
pub fn cartan_schur(n: usize, r: usize) -> Result<CartanMatrix> {
    guard(n >= 1, || "n must be positive".into())?;
    let index = lambda_bullet_set(n, r);
    let upper: Vec<BTreeSet<_>> = index.iter().map(|l| basis_b_lambda(l).into_iter().collect()).collect();
    let lower: Vec<BTreeSet<_>> = index.iter().map(|m| basis_b_mu_rows(m).into_iter().collect()).collect();
    CartanMatrix::build(index, |a, b| Ok(upper[a].intersection(&lower[b]).count()))
}

/// `c_{λ,μ} = dim Hom(P_λ, P_μ)` from the constructed modules.
pub fn cartan_schur_hom(n: usize, r: usize) -> Result<CartanMatrix> {
    guard(n <= 3 && r <= 3, || format!("hom route is limited to n, r ≤ 3, got ({n},{r})"))?;
    let index = lambda_bullet_set(n, r);
    let mods = index.iter().map(build_p).collect::<Result<Vec<_>>>()?;
    CartanMatrix::build(index, |a, b| mods[a].hom_dim(&mods[b]))
}

/// `d_{α,β} = dim Hom(R_α, R_β)` over Λ⁺(r).
pub fn cartan_hecke(r: usize) -> Result<CartanMatrix> {
    guard(r <= HECKE_CARTAN_MAX_R, || format!("Hecke Cartan matrix needs r ≤ {HECKE_CARTAN_MAX_R}, got {r}"))?;
    let index = strong_compositions(r);
    let mods = index.iter().map(projective_r).collect::<Result<Vec<_>>>()?;
    CartanMatrix::build(index, |a, b| mods[a].hom_dim(&mods[b]))
}

/// `d_{α,β} = [R_α : F_{βʳ}]` from radical layers.
pub fn cartan_hecke_filtration(r: usize) -> Result<CartanMatrix> {
    guard(r <= HECKE_FILTRATION_MAX_R, || format!("filtration route needs r ≤ {HECKE_FILTRATION_MAX_R}, got {r}"))?;
    let index = strong_compositions(r);
    let mults = index
        .par_iter()
        .map(|a| Ok(hecke_multiplicities(&projective_r(a)?)?.into_iter().collect::<HashMap<_, _>>()))
        .collect::<Result<Vec<_>>>()?;
    let rev: Vec<Composition> = index.iter().map(Composition::reverse).collect();
    CartanMatrix::build(index, |a, b| Ok(mults[a].get(&rev[b]).copied().unwrap_or(0)))
}

pub type Pair = (Composition, Composition);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PairMap {
    Ex,
    C,
    Eta,
}

impl PairMap {
    pub fn apply(self, p: &Pair) -> Pair {
        let (a, b) = p;
        match self {
            PairMap::Ex => (b.clone(), a.clone()),
            PairMap::C => (a.complement(), b.complement()),
            PairMap::Eta => (b.reverse(), a.clone()),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PairMap::Ex => "ex",
            PairMap::C => "c",
            PairMap::Eta => "eta",
        }
    }
}

pub fn pair_ex(p: &Pair) -> Pair {
    PairMap::Ex.apply(p)
}

pub fn pair_c(p: &Pair) -> Pair {
    PairMap::C.apply(p)
}

pub fn pair_eta(p: &Pair) -> Pair {
    PairMap::Eta.apply(p)
}

fn iterate(m: PairMap, k: usize, p: &Pair) -> Pair {
    (0..k).fold(p.clone(), |x, _| m.apply(&x))
}

/// Every relation among ex, c, η asserted for the action, checked at `p`.
pub fn group_relations_hold(p: &Pair) -> bool {
    let (ex, c, eta) = (PairMap::Ex, PairMap::C, PairMap::Eta);
    eta.apply(&ex.apply(p)) == ex.apply(&iterate(eta, 3, p))
        && ex.apply(&c.apply(p)) == c.apply(&ex.apply(p))
        && eta.apply(&c.apply(p)) == c.apply(&eta.apply(p))
        && iterate(ex, 2, p) == *p
        && iterate(c, 2, p) == *p
        && iterate(eta, 4, p) == *p
        && iterate(eta, 2, p) == (p.0.reverse(), p.1.reverse())
}

/// An orbit with, for each member, a word in the maps (applied left to right)
/// leading to it from the root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairOrbit {
    pub root: Pair,
    pub members: Vec<Pair>,
    pub trace: Vec<Vec<PairMap>>,
}

impl PairOrbit {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, p: &Pair) -> bool {
        self.members.contains(p)
    }
}

fn bfs_orbit(root: &Pair, maps: &[PairMap]) -> PairOrbit {
    let mut seen: BTreeMap<Pair, Vec<PairMap>> = BTreeMap::from([(root.clone(), Vec::new())]);
    let mut order = vec![root.clone()];
    let mut queue = VecDeque::from([root.clone()]);
    while let Some(p) = queue.pop_front() {
        for &m in maps {
            let q = m.apply(&p);
            if !seen.contains_key(&q) {
                let mut w = seen[&p].clone();
                w.push(m);
                seen.insert(q.clone(), w);
                order.push(q.clone());
                queue.push_back(q);
            }
        }
    }
    let trace = order.iter().map(|p| seen[p].clone()).collect();
    PairOrbit { root: root.clone(), members: order, trace }
}

/// The ⟨ex, c, η⟩-orbit of a pair of strong compositions.
pub fn orbit_of(p: &Pair) -> Result<PairOrbit> {
    if !(p.0.is_strong() && p.1.is_strong() && p.0.size() == p.1.size()) {
        return Err(Error::Domain(format!("({}, {}) is not a pair in Λ⁺(r)²", p.0, p.1)));
    }
    Ok(bfs_orbit(p, &[PairMap::Ex, PairMap::C, PairMap::Eta]))
}

/// The orbit partition of Λ⁺(r)², roots taken in lexicographic order.
pub fn orbits(r: usize) -> Vec<PairOrbit> {
    let comps = strong_compositions(r);
    let mut done: BTreeSet<Pair> = BTreeSet::new();
    let mut out = Vec::new();
    for a in &comps {
        for b in &comps {
            let p = (a.clone(), b.clone());
            if done.contains(&p) {
                continue;
            }
            let o = bfs_orbit(&p, &[PairMap::Ex, PairMap::C, PairMap::Eta]);
            done.extend(o.members.iter().cloned());
            out.push(o);
        }
    }
    out
}

/// `{orbit size → number of orbits}`.
pub fn orbit_census(orbits: &[PairOrbit]) -> BTreeMap<usize, usize> {
    let mut census = BTreeMap::new();
    for o in orbits {
        *census.entry(o.size()).or_default() += 1;
    }
    census
}

/// The ⟨ex, η⟩-orbit inside Λ•(n,r)², with members written as strong
/// compositions.
pub fn eta_orbit_restricted(n: usize, r: usize, p: &Pair) -> Result<PairOrbit> {
    let ok = |a: &Composition| a.is_strong() && a.size() == r && a.len() <= n;
    if !(ok(&p.0) && ok(&p.1)) {
        return Err(Error::Domain(format!("({}, {}) is not a pair over Λ•({n},{r})", p.0, p.1)));
    }
    Ok(bfs_orbit(p, &[PairMap::Ex, PairMap::Eta]))
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitConstancy {
    pub r: usize,
    pub census: BTreeMap<usize, usize>,
    /// `(root, size, common value or None when entries differ)`.
    pub orbits: Vec<(Pair, usize, Option<usize>)>,
    pub pass: bool,
}

/// Whether `d_{α,β}` is constant on every orbit.
pub fn verify_orbit_constancy(r: usize) -> Result<OrbitConstancy> {
    guard(r <= HECKE_FILTRATION_MAX_R, || format!("orbit constancy is checked for r ≤ {HECKE_FILTRATION_MAX_R}"))?;
    let d = cartan_hecke(r)?;
    let os = orbits(r);
    let mut rows = Vec::new();
    for o in &os {
        let vals: BTreeSet<usize> = o
            .members
            .iter()
            .map(|(a, b)| d.get(a, b).ok_or_else(|| Error::Internal(format!("({a}, {b}) missing"))))
            .collect::<Result<_>>()?;
        let common = (vals.len() == 1).then(|| *vals.iter().next().expect("one value"));
        rows.push((o.root.clone(), o.size(), common));
    }
    let pass = rows.iter().all(|x| x.2.is_some());
    Ok(OrbitConstancy { r, census: orbit_census(&os), orbits: rows, pass })
}

#[derive(Clone, Debug, Serialize)]
pub struct RestrictionReport {
    pub n: usize,
    pub r: usize,
    pub mismatches: Vec<(Composition, Composition, usize, usize)>,
    pub coincide: Option<bool>,
    pub pass: bool,
}

/// `c_{λ,μ} = d_{λ⁺,μ⁺}` for λ, μ ∈ Λ•(n,r); at `n = r` also the equality of
/// the two matrices after relabeling.
pub fn verify_restriction(n: usize, r: usize) -> Result<RestrictionReport> {
    guard(n <= r && r <= 4, || format!("restriction is checked for n ≤ r ≤ 4, got ({n},{r})"))?;
    let c = cartan_schur(n, r)?;
    let d = cartan_hecke(r)?;
    let mut mismatches = Vec::new();
    for (a, l) in c.index.iter().enumerate() {
        for (b, m) in c.index.iter().enumerate() {
            let want = d.get(&l.strip_zeros(), &m.strip_zeros()).ok_or_else(|| Error::Internal("index".into()))?;
            if c.entries[a][b] != want {
                mismatches.push((l.clone(), m.clone(), c.entries[a][b], want));
            }
        }
    }
    let coincide = (n == r).then(|| c.index.len() == d.index.len() && mismatches.is_empty());
    let pass = mismatches.is_empty() && coincide != Some(false);
    Ok(RestrictionReport { n, r, mismatches, coincide, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::comp;

    fn pair(a: &[usize], b: &[usize]) -> Pair {
        (comp(a), comp(b))
    }

    #[test]
    fn small_cartans() {
        assert_eq!(cartan_schur(1, 3).unwrap().entries, vec![vec![1]]);
        let c = cartan_schur(2, 2).unwrap();
        assert_eq!(c.entries, vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(cartan_hecke(2).unwrap().entries, vec![vec![1, 0], vec![0, 1]]);
        for (n, r) in [(2, 2), (2, 3), (3, 3)] {
            let c = cartan_schur(n, r).unwrap();
            assert_eq!(c, cartan_schur_hom(n, r).unwrap(), "({n},{r})");
            assert!((0..c.index.len()).all(|k| c.entries[k][k] >= 1));
        }
        assert!(cartan_schur(3, 3).unwrap().get(&comp(&[2, 1, 0]), &comp(&[2, 1, 0])).unwrap() >= 1);
        assert!(cartan_schur_hom(4, 4).is_err());
        let csv = cartan_schur(2, 2).unwrap().to_csv();
        assert_eq!(csv, ",1.1,2.0\n1.1,1,0\n2.0,0,1\n");
    }

    #[test]
    fn hecke_cartan_symmetries() {
        for r in 1..=5 {
            let d = cartan_hecke(r).unwrap();
            assert_eq!(d, cartan_hecke_filtration(r).unwrap(), "r={r}");
            for a in &d.index {
                for b in &d.index {
                    let v = d.get(a, b).unwrap();
                    assert_eq!(v, d.get(&a.reverse(), &b.reverse()).unwrap());
                    assert_eq!(v, d.get(&b.reverse(), &a.reverse()).unwrap());
                    assert_eq!(v, d.get(b, a).unwrap());
                    assert_eq!(v, d.get(&a.complement(), &b.complement()).unwrap());
                    assert_eq!(v, d.get(&b.reverse(), a).unwrap());
                }
                let dim = projective_r(a).unwrap().dim();
                let total: usize = hecke_multiplicities(&projective_r(a).unwrap()).unwrap().iter().map(|x| x.1).sum();
                assert_eq!(total, dim);
            }
        }
        let d3 = cartan_hecke(3).unwrap();
        assert_eq!(d3.get(&comp(&[2, 1]), &comp(&[1, 2])), d3.get(&comp(&[1, 2]), &comp(&[2, 1])));
    }

    #[test]
    fn orbit_examples() {
        let os = orbits(4);
        assert_eq!(os.iter().map(PairOrbit::size).sum::<usize>(), 64);
        let all: BTreeSet<Pair> = os.iter().flat_map(|o| o.members.iter().cloned()).collect();
        assert_eq!(all.len(), 64);
        assert!(all.iter().all(group_relations_hold));
        assert!(os.iter().all(|o| 16 % o.size() == 0));
        let fixed = pair(&[2, 2], &[2, 2]);
        assert_eq!(orbit_of(&fixed).unwrap().members, vec![fixed.clone(), pair(&[1, 2, 1], &[1, 2, 1])]);
        assert_eq!(bfs_orbit(&fixed, &[PairMap::Ex, PairMap::Eta]).size(), 1);
        assert!(os.iter().all(|o| o.size() % 2 == 0));
        let chain_root = pair(&[3, 1], &[1, 1, 2]);
        let o = orbit_of(&chain_root).unwrap();
        assert_eq!(o.size(), 8);
        let mut p = chain_root;
        let steps = [PairMap::Eta, PairMap::Eta, PairMap::Eta, PairMap::Ex, PairMap::Eta, PairMap::Eta, PairMap::Eta];
        let shown = [
            pair(&[2, 1, 1], &[3, 1]),
            pair(&[1, 3], &[2, 1, 1]),
            pair(&[1, 1, 2], &[1, 3]),
            pair(&[1, 3], &[1, 1, 2]),
            pair(&[2, 1, 1], &[1, 3]),
            pair(&[3, 1], &[2, 1, 1]),
            pair(&[1, 1, 2], &[3, 1]),
        ];
        for (m, want) in steps.iter().zip(&shown) {
            p = m.apply(&p);
            assert_eq!(&p, want);
            assert!(o.contains(&p));
        }
        assert_eq!(orbit_of(&pair(&[1, 2, 3], &[1, 3, 2])).unwrap().size(), 16);
        let root = pair(&[2, 1], &[3]);
        let e = eta_orbit_restricted(2, 3, &root).unwrap();
        let cycle = [root.clone(), pair(&[3], &[2, 1]), pair(&[1, 2], &[3]), pair(&[3], &[1, 2])];
        for k in 0..4 {
            assert_eq!(pair_eta(&cycle[k]), cycle[(k + 1) % 4]);
        }
        assert_eq!(e.members.iter().cloned().collect::<BTreeSet<_>>(), cycle.iter().cloned().collect());
        let full = orbit_of(&root).unwrap();
        assert_eq!(full.size(), 8);
        assert!(full.contains(&pair(&[1, 2], &[1, 1, 1])) && full.contains(&pair(&[1, 1, 1], &[2, 1])));
        assert_eq!(pair_c(&cycle[3]), pair(&[1, 1, 1], &[2, 1]));
        assert_eq!(eta_orbit_restricted(2, 3, &pair(&[3], &[3])).unwrap().size(), 1);
        assert!(eta_orbit_restricted(2, 3, &pair(&[1, 1, 1], &[3])).is_err());
    }

    #[test]
    fn constancy_and_restriction() {
        for r in 2..=4 {
            assert!(verify_orbit_constancy(r).unwrap().pass, "r={r}");
        }
        for (n, r) in [(1, 3), (2, 3), (3, 3), (2, 4), (3, 4), (4, 4)] {
            let rep = verify_restriction(n, r).unwrap();
            assert!(rep.pass, "({n},{r}) {:?}", rep.mismatches);
        }
        assert_eq!(verify_restriction(3, 3).unwrap().coincide, Some(true));
    }
}
