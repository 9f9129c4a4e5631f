//! Realizations of Coxeter systems and Demazure operators.
//!
//! A realization fixes roots `α_s` (linear forms in the variables) and
//! coroots `α_s^∨` (functionals on the span of the variables). A simple
//! reflection acts by `v ↦ v - α_s^∨(v) α_s` on variables and extends to the
//! polynomial ring as a ring automorphism.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, RwLock};


use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coxeter::{CoxeterConfig, CoxeterError, CoxeterSystem, GroupElement, Subset};
use crate::linalg::{Echelon, SparseVec};
use crate::poly::{monomial_basis, LinearMap, Monomial, PolyError, Polynomial};
use crate::scalar::Coeff;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizationError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error("invalid realization: {0}")]
    Invalid(String),
    #[error("polynomial is not invariant under {0}")]
    NotInvariant(String),
    #[error("solve failed: {0}")]
    SolveFailed(String),
}

/// JSON description of a realization with exact coefficients written as
/// strings (`"1"`, `"-1/2"`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationConfig {
    pub system: CoxeterConfig,
    pub variables: Vec<String>,
    pub roots: Vec<Vec<String>>,
    pub coroots: Vec<Vec<String>>,
}

pub struct Realization<C: Coeff> {
    system: Arc<CoxeterSystem>,
    names: Vec<String>,
    label: String,
    roots: Vec<Vec<C>>,
    coroots: Vec<Vec<C>>,
    root_polys: Vec<Polynomial<C>>,
    reflections: Vec<LinearMap<C>>,
    swaps: Vec<Option<(usize, usize)>>,
    maps: RwLock<HashMap<GroupElement, Arc<LinearMap<C>>>>,
    invariants: RwLock<HashMap<(Subset, u32), Arc<Vec<Polynomial<C>>>>>,
}

impl<C: Coeff> Clone for Realization<C> {
    fn clone(&self) -> Self {
        Self::build(self.system.clone(), self.names.clone(), self.roots.clone(), self.coroots.clone(), self.label.clone())
            .expect("cloned realization is valid")
    }
}

impl<C: Coeff> fmt::Debug for Realization<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Realization")
            .field("label", &self.label)
            .field("domain", &C::domain_tag())
            .field("variables", &self.names)
            .finish()
    }
}

fn detect_swap<C: Coeff>(root: &[C], refl: &LinearMap<C>) -> Option<(usize, usize)> {
    let perm = refl.as_permutation()?;
    let moved: Vec<usize> = (0..perm.len()).filter(|&i| perm[i] != i).collect();
    let [i, j] = moved[..] else { return None };
    let one = C::one();
    let fits = root.iter().enumerate().all(|(k, c)| {
        if k == i {
            *c == one
        } else if k == j {
            *c == -one.clone()
        } else {
            c.is_zero()
        }
    });
    fits.then_some((i, j))
}

impl<C: Coeff> Realization<C> {
    /// Build from explicit roots and coroots; checks shapes and `α_s^∨(α_s) = 2`.
    pub fn new(
        system: Arc<CoxeterSystem>,
        names: Vec<String>,
        roots: Vec<Vec<C>>,
        coroots: Vec<Vec<C>>,
    ) -> Result<Self, RealizationError> {
        Self::build(system, names, roots, coroots, "custom".into())
    }

    fn build(
        system: Arc<CoxeterSystem>,
        names: Vec<String>,
        roots: Vec<Vec<C>>,
        coroots: Vec<Vec<C>>,
        label: String,
    ) -> Result<Self, RealizationError> {
        let n = names.len();
        let r = system.rank();
        if n == 0 || n > crate::poly::MAX_VARS {
            return Err(RealizationError::Invalid(format!("{n} variables; need 1..={}", crate::poly::MAX_VARS)));
        }
        if roots.len() != r || coroots.len() != r {
            return Err(RealizationError::Invalid("need one root and one coroot per generator".into()));
        }
        if roots.iter().chain(&coroots).any(|v| v.len() != n) {
            return Err(RealizationError::Invalid("root/coroot length must equal the variable count".into()));
        }
        let two = C::from_i64(2);
        let mut reflections = Vec::with_capacity(r);
        let mut swaps = Vec::with_capacity(r);
        for s in 0..r {
            let pairing = pair(&coroots[s], &roots[s]);
            if pairing != two {
                return Err(RealizationError::Invalid(format!(
                    "coroot of {} pairs to {pairing} with its root, expected 2",
                    system.names()[s]
                )));
            }
            let images = (0..n)
                .map(|j| {
                    (0..n)
                        .map(|k| {
                            let d = if j == k { C::one() } else { C::zero() };
                            d - coroots[s][j].clone() * roots[s][k].clone()
                        })
                        .collect()
                })
                .collect();
            let refl = LinearMap::new(images)?;
            swaps.push(detect_swap(&roots[s], &refl));
            reflections.push(refl);
        }
        let root_polys = roots.iter().map(|v| Polynomial::linear(v)).collect();
        Ok(Realization {
            system,
            names,
            label,
            roots,
            coroots,
            root_polys,
            reflections,
            swaps,
            maps: RwLock::new(HashMap::new()),
            invariants: RwLock::new(HashMap::new()),
        })
    }

    /// Permutation realization of `S_n`: `α_i = x_i - x_{i+1}`, `α_i^∨ = x_i^* - x_{i+1}^*`.
    pub fn permutation(n: usize) -> Result<Self, RealizationError> {
        Self::permutation_with_cap(n, crate::coxeter::DEFAULT_CAP)
    }

    pub fn permutation_with_cap(n: usize, cap: usize) -> Result<Self, RealizationError> {
        let system = Arc::new(CoxeterSystem::symmetric(n)?.with_cap(cap));
        let names = (1..=n).map(|i| format!("x{i}")).collect();
        let vecs: Vec<Vec<C>> = (0..n - 1)
            .map(|i| (0..n).map(|k| C::from_i64(if k == i { 1 } else if k == i + 1 { -1 } else { 0 })).collect())
            .collect();
        Self::build(system, names, vecs.clone(), vecs, format!("permutation({n})"))
    }

    /// Root realization: variables are the simple roots, coroots pair by the Cartan matrix.
    pub fn root_realization(system: Arc<CoxeterSystem>) -> Result<Self, RealizationError> {
        let r = system.rank();
        let names = (1..=r).map(|i| format!("a{i}")).collect();
        let roots = (0..r).map(|s| (0..r).map(|k| C::from_i64(i64::from(s == k))).collect()).collect();
        let coroots = (0..r).map(|s| (0..r).map(|k| C::from_i64(system.cartan(s, k))).collect()).collect();
        Self::build(system, names, roots, coroots, "root".into())
    }

    /// Affine permutation realization of `Ã_{n-1}`: variables `x1..xn, delta`,
    /// `α_i = x_i - x_{i+1} + delta`, `α_i^∨ = x_i^* - x_{i+1}^*`, indices mod `n`.
    pub fn affine_permutation(n: usize) -> Result<Self, RealizationError> {
        let system = Arc::new(CoxeterSystem::affine_a(n)?);
        let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        names.push("delta".into());
        let mut roots = Vec::new();
        let mut coroots = Vec::new();
        for i in 0..n {
            let j = (i + 1) % n;
            let mut co = vec![C::zero(); n + 1];
            co[i] = C::one();
            co[j] = -C::one();
            let mut ro = co.clone();
            ro[n] = C::one();
            roots.push(ro);
            coroots.push(co);
        }
        Self::build(system, names, roots, coroots, format!("affine_permutation({n})"))
    }

    pub fn from_config(cfg: &RealizationConfig) -> Result<Self, RealizationError> {
        Self::from_config_with_cap(cfg, crate::coxeter::DEFAULT_CAP)
    }

    pub fn from_config_with_cap(cfg: &RealizationConfig, cap: usize) -> Result<Self, RealizationError> {
        let system = Arc::new(CoxeterSystem::from_config(&cfg.system)?.with_cap(cap));
        let parse = |rows: &[Vec<String>]| -> Result<Vec<Vec<C>>, RealizationError> {
            rows.iter()
                .map(|row| {
                    row.iter()
                        .map(|s| C::parse_coeff(s).ok_or_else(|| RealizationError::Invalid(format!("bad coefficient {s:?}"))))
                        .collect()
                })
                .collect()
        };
        Self::build(system, cfg.variables.clone(), parse(&cfg.roots)?, parse(&cfg.coroots)?, "config".into())
    }

    pub fn config(&self) -> RealizationConfig {
        let show = |rows: &[Vec<C>]| rows.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect();
        RealizationConfig {
            system: self.system.config(),
            variables: self.names.clone(),
            roots: show(&self.roots),
            coroots: show(&self.coroots),
        }
    }

    pub fn system(&self) -> &Arc<CoxeterSystem> {
        &self.system
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn root(&self, s: usize) -> &Polynomial<C> {
        &self.root_polys[s]
    }

    pub fn root_vector(&self, s: usize) -> &[C] {
        &self.roots[s]
    }

    /// Values `α_s^∨(x_j)`.
    pub fn coroot_vector(&self, s: usize) -> &[C] {
        &self.coroots[s]
    }

    /// `α_s^∨` applied to a linear form.
    pub fn coroot_pairing(&self, s: usize, v: &[C]) -> C {
        pair(&self.coroots[s], v)
    }

    pub fn zero(&self) -> Polynomial<C> {
        Polynomial::zero(self.nvars())
    }

    pub fn one(&self) -> Polynomial<C> {
        Polynomial::one(self.nvars())
    }

    pub fn var(&self, j: usize) -> Polynomial<C> {
        Polynomial::var(self.nvars(), j)
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial<C>, RealizationError> {
        Ok(crate::poly::parse_polynomial(text, &self.names)?)
    }

    pub fn show(&self, f: &Polynomial<C>) -> String {
        f.to_text(&self.names)
    }

    pub fn check_ring(&self, f: &Polynomial<C>) -> Result<(), RealizationError> {
        if f.nvars() == self.nvars() {
            Ok(())
        } else {
            Err(PolyError::RingMismatch { left: self.nvars(), right: f.nvars() }.into())
        }
    }

    pub fn reflection_map(&self, s: usize) -> &LinearMap<C> {
        &self.reflections[s]
    }

    /// The substitution by which a word acts (leftmost letter applied last).
    pub fn word_map(&self, word: &[usize]) -> LinearMap<C> {
        word.iter()
            .fold(LinearMap::identity(self.nvars()), |m, &s| m.compose(&self.reflections[s]))
    }

    /// The substitution by which `w` acts, computed along its least reduced word.
    pub fn element_map(&self, w: &GroupElement) -> Arc<LinearMap<C>> {
        if let Some(m) = self.maps.read().expect("map cache").get(w) {
            return m.clone();
        }
        let m = Arc::new(self.word_map(&self.system.reduced_word(w)));
        self.maps.write().expect("map cache").insert(w.clone(), m.clone());
        m
    }

    pub fn act_gen(&self, s: usize, f: &Polynomial<C>) -> Polynomial<C> {
        match self.swaps[s] {
            Some((i, j)) => {
                let mut perm: Vec<usize> = (0..self.nvars()).collect();
                perm.swap(i, j);
                f.permute_vars(&perm)
            }
            None => self.reflections[s].apply(f).expect("ring checked by caller"),
        }
    }

    pub fn act_word(&self, word: &[usize], f: &Polynomial<C>) -> Result<Polynomial<C>, RealizationError> {
        self.check_ring(f)?;
        Ok(word.iter().rev().fold(f.clone(), |g, &s| self.act_gen(s, &g)))
    }

    pub fn act(&self, w: &GroupElement, f: &Polynomial<C>) -> Result<Polynomial<C>, RealizationError> {
        self.check_ring(f)?;
        Ok(self.element_map(w).apply(f)?)
    }

    /// `∂_s(f) = (f - s f) / α_s`.
    pub fn demazure(&self, s: usize, f: &Polynomial<C>) -> Result<Polynomial<C>, RealizationError> {
        self.check_ring(f)?;
        match self.swaps[s] {
            Some((i, j)) => Ok(swap_divided_difference(f, i, j)),
            None => self.demazure_generic(s, f),
        }
    }

    /// The quotient `(f - s f) / α_s` by polynomial division, bypassing the
    /// divided-difference shortcut.
    pub fn demazure_generic(&self, s: usize, f: &Polynomial<C>) -> Result<Polynomial<C>, RealizationError> {
        self.check_ring(f)?;
        let diff = f - &self.reflections[s].apply(f)?;
        Ok(diff.exact_divide(&self.root_polys[s])?)
    }

    /// `∂_{s1} ∘ ... ∘ ∂_{sk}` for the word `[s1, ..., sk]` (rightmost applied first).
    pub fn demazure_word(&self, word: &[usize], f: &Polynomial<C>) -> Result<Polynomial<C>, RealizationError> {
        self.check_ring(f)?;
        let mut g = f.clone();
        for &s in word.iter().rev() {
            if g.is_zero() {
                break;
            }
            g = self.demazure(s, &g)?;
        }
        Ok(g)
    }

    /// `∂_w` along the least reduced word of `w`.
    pub fn demazure_element(&self, w: &GroupElement, f: &Polynomial<C>) -> Result<Polynomial<C>, RealizationError> {
        self.demazure_word(&self.system.reduced_word(w), f)
    }

    /// `∂_{w_I}`.
    pub fn frobenius_trace(&self, subset: Subset, f: &Polynomial<C>) -> Result<Polynomial<C>, RealizationError> {
        let w = self.system.longest_element(subset)?;
        self.demazure_element(&w, f)
    }

    pub fn is_invariant(&self, f: &Polynomial<C>, subset: Subset) -> bool {
        f.nvars() == self.nvars() && subset.iter().all(|s| self.act_gen(s, f) == *f)
    }

    pub fn require_invariant(&self, f: &Polynomial<C>, subset: Subset) -> Result<(), RealizationError> {
        self.check_ring(f)?;
        if self.is_invariant(f, subset) {
            Ok(())
        } else {
            Err(RealizationError::NotInvariant(format!("{:?}", self.system.subset_names(subset))))
        }
    }

    fn permutes_variables(&self, subset: Subset) -> bool {
        subset.iter().all(|s| self.swaps[s].is_some())
    }

    /// A basis of the degree-`d` part of `R^K`.
    ///
    /// When `K` permutes the variables the basis consists of orbit sums of
    /// monomials (a basis over the coefficient ring); otherwise it is a
    /// kernel computation over the fraction field with denominators cleared.
    pub fn invariant_basis(&self, subset: Subset, d: u32) -> Arc<Vec<Polynomial<C>>> {
        if let Some(b) = self.invariants.read().expect("invariant cache").get(&(subset, d)) {
            return b.clone();
        }
        let basis = if self.permutes_variables(subset) {
            self.orbit_sums(subset, d)
        } else {
            self.invariant_kernel(subset, d)
        };
        let basis = Arc::new(basis);
        self.invariants.write().expect("invariant cache").insert((subset, d), basis.clone());
        basis
    }

    fn orbit_sums(&self, subset: Subset, d: u32) -> Vec<Polynomial<C>> {
        let n = self.nvars();
        let pairs: Vec<(usize, usize)> = subset.iter().filter_map(|s| self.swaps[s]).collect();
        let mut seen: HashSet<Monomial> = HashSet::new();
        let mut out = Vec::new();
        for m in monomial_basis(n, d, None) {
            if seen.contains(&m) {
                continue;
            }
            let mut orbit = vec![m];
            let mut queue = VecDeque::from([m]);
            seen.insert(m);
            while let Some(x) = queue.pop_front() {
                for &(i, j) in &pairs {
                    let mut y = x;
                    y.set(i, x.exp(j));
                    y.set(j, x.exp(i));
                    if seen.insert(y) {
                        orbit.push(y);
                        queue.push_back(y);
                    }
                }
            }
            out.push(Polynomial::from_terms(n, orbit.into_iter().map(|m| (m, C::one()))));
        }
        out
    }

    fn invariant_kernel(&self, subset: Subset, d: u32) -> Vec<Polynomial<C>> {
        let n = self.nvars();
        let monos = monomial_basis(n, d, None);
        let index: HashMap<Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let gens: Vec<usize> = subset.iter().collect();
        let mut ech: Echelon<C::Field> = Echelon::new();
        for m in &monos {
            let p = Polynomial::<C>::monomial(n, *m, C::one());
            let mut col: SparseVec<C::Field> = SparseVec::new();
            for (g, &s) in gens.iter().enumerate() {
                let diff = &self.act_gen(s, &p) - &p;
                for (mm, c) in diff.terms() {
                    col.insert(g * monos.len() + index[mm], c.to_field());
                }
            }
            ech.push_column(col);
        }
        let sol = ech.solve(&SparseVec::new());
        sol.kernel
            .into_iter()
            .map(|v| {
                let ints = C::clear_denominators(&v);
                Polynomial::from_terms(n, monos.iter().zip(ints).map(|(m, c)| (*m, c)))
            })
            .collect()
    }

    /// Verify `α_s^∨(α_s) = 2` for every generator.
    pub fn check_pairings(&self) -> Result<(), RealizationError> {
        let two = C::from_i64(2);
        for s in 0..self.system.rank() {
            if pair(&self.coroots[s], &self.roots[s]) != two {
                return Err(RealizationError::Invalid(format!("pairing of {} is not 2", self.system.names()[s])));
            }
        }
        Ok(())
    }

    /// Verify that `(st)^{m_st}` acts trivially on the variables for every
    /// pair with finite `m_st`.
    pub fn check_braid_relations(&self) -> Result<(), RealizationError> {
        let r = self.system.rank();
        for s in 0..r {
            for t in (s + 1)..r {
                let Some(m) = self.system.m(s, t) else { continue };
                let st = self.reflections[s].compose(&self.reflections[t]);
                let mut acc = LinearMap::identity(self.nvars());
                for _ in 0..m {
                    acc = acc.compose(&st);
                }
                if acc != LinearMap::identity(self.nvars()) {
                    let names = self.system.names();
                    return Err(RealizationError::Invalid(format!(
                        "({} {})^{m} does not act trivially",
                        names[s], names[t]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Base change along a coefficient map.
    pub fn specialize<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Result<Realization<D>, RealizationError> {
        let map = |rows: &[Vec<C>]| rows.iter().map(|r| r.iter().map(&f).collect()).collect();
        Realization::build(
            self.system.clone(),
            self.names.clone(),
            map(&self.roots),
            map(&self.coroots),
            format!("{} over {}", self.label, D::domain_tag()),
        )
    }

    /// Add variables fixed by `W`: roots are unchanged, coroots vanish on them.
    pub fn enlarge(&self, extra: &[&str]) -> Result<Realization<C>, RealizationError> {
        let mut names = self.names.clone();
        for e in extra {
            if names.iter().any(|n| n == e) {
                return Err(RealizationError::Invalid(format!("variable {e:?} already exists")));
            }
            names.push((*e).to_string());
        }
        let pad = |rows: &[Vec<C>]| {
            rows.iter()
                .map(|r| r.iter().cloned().chain(extra.iter().map(|_| C::zero())).collect())
                .collect()
        };
        Realization::build(
            self.system.clone(),
            names,
            pad(&self.roots),
            pad(&self.coroots),
            format!("{} + {}", self.label, extra.join(",")),
        )
    }

    /// Quotient by the span of `W`-fixed variables `killed`.
    ///
    /// Every coroot must vanish on the killed variables, and each image root
    /// must have coefficients generating the unit ideal.
    pub fn quotient(&self, killed: &[usize]) -> Result<Realization<C>, RealizationError> {
        let n = self.nvars();
        if killed.iter().any(|&k| k >= n) {
            return Err(RealizationError::Invalid("killed variable out of range".into()));
        }
        for s in 0..self.system.rank() {
            if killed.iter().any(|&k| !self.coroots[s][k].is_zero()) {
                return Err(RealizationError::Invalid(format!(
                    "coroot of {} does not vanish on the killed variables",
                    self.system.names()[s]
                )));
            }
        }
        let keep: Vec<usize> = (0..n).filter(|v| !killed.contains(v)).collect();
        let restrict = |rows: &[Vec<C>]| -> Vec<Vec<C>> {
            rows.iter().map(|r| keep.iter().map(|&k| r[k].clone()).collect()).collect()
        };
        let roots = restrict(&self.roots);
        for (s, r) in roots.iter().enumerate() {
            if !C::generate_unit_ideal(r) {
                return Err(RealizationError::Invalid(format!(
                    "image of the root of {} is not surjective",
                    self.system.names()[s]
                )));
            }
        }
        Realization::build(
            self.system.clone(),
            keep.iter().map(|&k| self.names[k].clone()).collect(),
            roots,
            restrict(&self.coroots),
            format!("{} / {}", self.label, killed.iter().map(|&k| self.names[k].as_str()).collect::<Vec<_>>().join(",")),
        )
    }

    /// The same roots and coroots for a sub-Coxeter system given by the
    /// generators in `subset` (in increasing order).
    pub fn restrict(&self, subset: Subset) -> Result<Realization<C>, RealizationError> {
        let gens: Vec<usize> = subset.iter().collect();
        let names: Vec<String> = gens.iter().map(|&s| self.system.names()[s].clone()).collect();
        let m = gens.iter().map(|&s| gens.iter().map(|&t| self.system.m(s, t)).collect()).collect();
        let system = Arc::new(CoxeterSystem::new(names, m)?.with_cap(self.system.cap()));
        Realization::build(
            system,
            self.names.clone(),
            gens.iter().map(|&s| self.roots[s].clone()).collect(),
            gens.iter().map(|&s| self.coroots[s].clone()).collect(),
            format!("{} restricted", self.label),
        )
    }
}

fn pair<C: Coeff>(a: &[C], b: &[C]) -> C {
    a.iter().zip(b).fold(C::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// `(f - f|_{x_i <-> x_j}) / (x_i - x_j)`, computed monomial by monomial.
fn swap_divided_difference<C: Coeff>(f: &Polynomial<C>, i: usize, j: usize) -> Polynomial<C> {
    let mut out = Polynomial::zero(f.nvars());
    for (m, c) in f.terms() {
        let a = m.exp(i);
        let b = m.exp(j);
        if a == b {
            continue;
        }
        let (hi_var, lo_var, hi, lo, coeff) = if a > b { (i, j, a, b, c.clone()) } else { (j, i, b, a, -c.clone()) };
        let mut mono = *m;
        for k in 0..(hi - lo) {
            mono.set(hi_var, hi - 1 - k);
            mono.set(lo_var, lo + k);
            out.add_term(mono, coeff.clone());
        }
    }
    out
}

impl<C: Coeff> Realization<C> {
    /// Whether the coroots kill `v`, i.e. the linear form is `W`-invariant.
    pub fn is_fixed_vector(&self, v: &[C]) -> bool {
        (0..self.system.rank()).all(|s| pair(&self.coroots[s], v).is_zero())
    }

    pub fn unit_vector(&self, j: usize) -> Vec<C> {
        (0..self.nvars()).map(|k| if k == j { C::one() } else { C::zero() }).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Zero;

    type R = Realization<BigInt>;

    fn p(r: &R, s: &str) -> Polynomial<BigInt> {
        r.parse(s).unwrap()
    }

    #[test]
    fn permutation_realization_data() {
        let r = R::permutation(2).unwrap();
        assert_eq!(r.show(r.root(0)), "x1 - x2");
        assert_eq!(r.coroot_vector(0), &[BigInt::from(1), BigInt::from(-1)]);
        r.check_pairings().unwrap();
        r.check_braid_relations().unwrap();
        let r3 = R::permutation(3).unwrap();
        assert_eq!(r3.act_gen(0, &p(&r3, "x1 - x2")), p(&r3, "x2 - x1"));
    }

    #[test]
    fn root_realization_pairings() {
        let sys = Arc::new(CoxeterSystem::type_a(2).unwrap());
        let r = R::root_realization(sys).unwrap();
        assert_eq!(r.coroot_pairing(0, r.root_vector(1)), BigInt::from(-1));
        r.check_braid_relations().unwrap();
        for sys in [CoxeterSystem::type_bc(3), CoxeterSystem::type_d(4), CoxeterSystem::dihedral(Some(6))] {
            let r = R::root_realization(Arc::new(sys.unwrap())).unwrap();
            r.check_pairings().unwrap();
            r.check_braid_relations().unwrap();
        }
    }

    #[test]
    fn demazure_basics() {
        let r = R::permutation(4).unwrap();
        assert_eq!(r.demazure(0, &p(&r, "x1")).unwrap(), r.one());
        assert!(r.demazure(0, &p(&r, "x1 + x2")).unwrap().is_zero());
        let h = |vars: &str, i: u32| crate::symmetric::complete_symmetric_in(&r, &parse_vars(vars), i);
        for i in 1..5 {
            assert_eq!(r.demazure(2, &h("123", i)).unwrap(), h("1234", i - 1));
        }
        assert!(r.demazure_word(&[0, 0], &p(&r, "x1^3*x2")).unwrap().is_zero());
    }

    fn parse_vars(s: &str) -> Vec<usize> {
        s.chars().map(|c| c.to_digit(10).unwrap() as usize - 1).collect()
    }

    #[test]
    fn fast_and_generic_demazure_agree() {
        let r = R::permutation(4).unwrap();
        let f = p(&r, "3*x1^4*x2 - x2^2*x3^3 + 7*x1*x4^2 - x3 + 5");
        for s in 0..3 {
            assert_eq!(r.demazure(s, &f).unwrap(), r.demazure_generic(s, &f).unwrap());
        }
    }

    #[test]
    fn action_is_a_homomorphism() {
        let r = R::permutation(4).unwrap();
        let sys = r.system().clone();
        let f = p(&r, "x1^2*x2 - 3*x3*x4 + x4^3");
        let a = sys.from_word(&[0, 1, 2]);
        let b = sys.from_word(&[1, 0]);
        let ab = sys.multiply(&a, &b);
        assert_eq!(r.act(&ab, &f).unwrap(), r.act(&a, &r.act(&b, &f).unwrap()).unwrap());
        assert_eq!(r.act(&ab, &f).unwrap(), r.act_word(&[0, 1, 2, 1, 0], &f).unwrap());
        assert_eq!(r.act(&a, &r.one()).unwrap(), r.one());
    }

    #[test]
    fn frobenius_trace_small() {
        let r = R::permutation(2).unwrap();
        assert_eq!(r.frobenius_trace(Subset::singleton(0), &p(&r, "x1")).unwrap(), r.one());
    }

    #[test]
    fn invariants() {
        let r = R::permutation(2).unwrap();
        assert!(r.is_invariant(&p(&r, "x1 + x2"), Subset::singleton(0)));
        assert!(!r.is_invariant(&p(&r, "x1"), Subset::singleton(0)));
        let r4 = R::permutation(4).unwrap();
        let k = Subset::from_indices([0, 2]);
        let b = r4.invariant_basis(k, 2);
        // orbits of degree-2 monomials in 4 variables under <(12),(34)>
        assert_eq!(b.len(), 5);
        assert!(b.iter().all(|f| r4.is_invariant(f, k)));
    }

    #[test]
    fn generic_invariant_basis_matches_orbits() {
        let r = R::permutation(4).unwrap();
        // an alternative realization of S4 in which s1 does not permute variables
        let roots = (0..3).map(|s| r.root_vector(s).to_vec()).collect();
        let mut coroots: Vec<Vec<BigInt>> = (0..3).map(|s| r.coroot_vector(s).to_vec()).collect();
        coroots[0] = vec![1.into(), (-1).into(), 0.into(), 0.into()];
        let alt = R::new(r.system().clone(), r.names().to_vec(), roots, coroots).unwrap();
        let k = Subset::from_indices([0, 1]);
        for d in 0..4 {
            assert_eq!(alt.invariant_kernel(k, d).len(), r.invariant_basis(k, d).len());
        }
    }

    #[test]
    fn transforms() {
        let r = R::permutation(2).unwrap();
        let big = r.enlarge(&["delta"]).unwrap();
        assert_eq!(big.show(big.root(0)), "x1 - x2");
        assert!(big.coroot_vector(0)[2].is_zero());
        let back = big.quotient(&[2]).unwrap();
        assert_eq!(back.root_vector(0), r.root_vector(0));
        assert!(r.quotient(&[0]).is_err());
        let f5 = r.specialize(crate::scalar::ModP::<5>::from_bigint).unwrap();
        f5.check_pairings().unwrap();
    }

    #[test]
    fn affine_quotient_recovers_permutation() {
        let aff = R::affine_permutation(3).unwrap();
        aff.check_pairings().unwrap();
        aff.check_braid_relations().unwrap();
        let q = aff.quotient(&[3]).unwrap();
        let perm = R::permutation(3).unwrap();
        for s in 0..2 {
            assert_eq!(q.root_vector(s), perm.root_vector(s));
            assert_eq!(q.coroot_vector(s), perm.coroot_vector(s));
        }
    }

    #[test]
    fn config_round_trip() {
        let r = R::affine_permutation(3).unwrap();
        let json = serde_json::to_string(&r.config()).unwrap();
        let back = R::from_config(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back.root_vector(2), r.root_vector(2));
        assert_eq!(back.names(), r.names());
    }
}
