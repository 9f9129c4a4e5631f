//! Frobenius extensions `R^M ⊂ R^J`: Demazure-surjectivity witnesses, dual
//! bases, canonical forms in `R^I ⊗_{R^M} R^J`, and divisibility witnesses.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::coxeter::{CoxeterError, GroupElement, Subset};
use crate::linalg::{Echelon, SparseVec};
use crate::poly::{monomial_basis, Monomial, Polynomial};
use crate::realization::{Realization, RealizationError};
use crate::scalar::Coeff;
use crate::symmetric::{partitions_in_box, schur};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrobeniusError {
    #[error(transparent)]
    Realization(#[from] RealizationError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error("solve failed: {0}")]
    SolveFailed(String),
    #[error("{0}")]
    Invalid(String),
}

impl From<crate::poly::PolyError> for FrobeniusError {
    fn from(e: crate::poly::PolyError) -> Self {
        FrobeniusError::Realization(e.into())
    }
}

/// Variables moved by a chain of transpositions `(v0 v1), (v1 v2), ...`
/// realizing the generators of `comp` in order, if such a chain exists.
fn swap_chain<C: Coeff>(r: &Realization<C>, comp: Subset) -> Option<(Vec<usize>, Vec<usize>)> {
    let pairs: Vec<(usize, (usize, usize))> = comp.iter().map(|s| Some((s, swap_of(r, s)?))).collect::<Option<_>>()?;
    let n = pairs.len();
    let mut degree: BTreeMap<usize, usize> = BTreeMap::new();
    for (_, (i, j)) in &pairs {
        *degree.entry(*i).or_default() += 1;
        *degree.entry(*j).or_default() += 1;
    }
    if degree.len() != n + 1 || degree.values().any(|&d| d > 2) {
        return None;
    }
    let start = *degree.iter().find(|(_, &d)| d == 1)?.0;
    let mut vars = vec![start];
    let mut gens = Vec::new();
    let mut used = vec![false; n];
    while gens.len() < n {
        let cur = *vars.last().expect("nonempty");
        let k = (0..n).find(|&k| !used[k] && (pairs[k].1 .0 == cur || pairs[k].1 .1 == cur))?;
        used[k] = true;
        let (i, j) = pairs[k].1;
        vars.push(if i == cur { j } else { i });
        gens.push(pairs[k].0);
    }
    Some((vars, gens))
}

fn swap_of<C: Coeff>(r: &Realization<C>, s: usize) -> Option<(usize, usize)> {
    let perm = r.reflection_map(s).as_permutation()?;
    let moved: Vec<usize> = (0..perm.len()).filter(|&i| perm[i] != i).collect();
    let [i, j] = moved[..] else { return None };
    Some((i, j))
}

/// A polynomial `P` with `∂_{w_M}(P) = 1`.
///
/// Components of `M` acting by a chain of transpositions get the staircase
/// monomial; otherwise monomials of degree `ℓ(w_M)` are combined by Bézout
/// until their traces generate the unit ideal.
pub fn frobenius_witness<C: Coeff>(r: &Realization<C>, m: Subset) -> Result<Polynomial<C>, FrobeniusError> {
    let sys = r.system();
    let w_m = sys.longest_element(m)?;
    let mut staircase = Some(r.one());
    for comp in sys.components(m) {
        match (staircase.as_mut(), swap_chain(r, comp)) {
            (Some(p), Some((vars, _))) => {
                let k = vars.len() as u32;
                let mut mono = Monomial::ONE;
                for (idx, &v) in vars.iter().enumerate() {
                    mono.set(v, k - 1 - idx as u32);
                }
                *p = p.mul_monomial(&mono);
            }
            _ => staircase = None,
        }
    }
    if let Some(p) = staircase {
        if r.demazure_element(&w_m, &p)?.is_one() {
            return Ok(p);
        }
    }
    let n = w_m.length();
    let mut acc: Option<(C, Polynomial<C>)> = None;
    for mono in monomial_basis(r.nvars(), n, None) {
        let p = Polynomial::monomial(r.nvars(), mono, C::one());
        let c = r.demazure_element(&w_m, &p)?.constant_term();
        if c.is_zero() {
            continue;
        }
        let (g, wit) = match acc.take() {
            None => (c, p),
            Some((g0, w0)) => {
                let (g, x, y) = C::bezout(&g0, &c);
                (g, &w0.scale(&x) + &p.scale(&y))
            }
        };
        if g.is_unit() {
            let inv = C::one().exact_div(&g).expect("unit");
            let wit = wit.scale(&inv);
            debug_assert!(r.demazure_element(&w_m, &wit)?.is_one());
            return Ok(wit);
        }
        acc = Some((g, wit));
    }
    Err(FrobeniusError::SolveFailed("no Demazure-surjectivity witness in degree ℓ(w_M)".into()))
}

/// How the `c_i` of a dual basis are chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualBasisMethod {
    /// Grassmannian when applicable, generic otherwise.
    Auto,
    /// `c_w = ∂_{w⁻¹ w_M}(P_M)` for minimal coset representatives `w ∈ W_M^J`.
    Generic,
    /// Schur polynomials `s_λ(x_1..x_a)` for `λ` in the `a × b` box.
    Grassmannian,
}

/// Dual bases `(c_i, d_i)` of `R^J` over `R^M` for the trace `∂^J_M = ∂_{w_M w_J}`.
///
/// The `c_i` are built eagerly; the `d_i` are computed on first use.
pub struct DualBases<C: Coeff> {
    realization: Arc<Realization<C>>,
    m: Subset,
    j: Subset,
    trace_element: GroupElement,
    trace_word: Vec<usize>,
    c: Vec<Polynomial<C>>,
    method: DualBasisMethod,
    d: OnceLock<Result<Vec<Polynomial<C>>, FrobeniusError>>,
}

impl<C: Coeff> std::fmt::Debug for DualBases<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DualBases").field("m", &self.m).field("j", &self.j).field("len", &self.c.len()).finish()
    }
}

impl<C: Coeff> DualBases<C> {
    pub fn new(r: Arc<Realization<C>>, m: Subset, j: Subset, method: DualBasisMethod) -> Result<Self, FrobeniusError> {
        if !j.is_subset_of(m) {
            return Err(FrobeniusError::Invalid("J must be a subset of M".into()));
        }
        let sys = r.system().clone();
        let w_m = sys.longest_element(m)?;
        let w_j = sys.longest_element(j)?;
        let trace_element = sys.multiply(&w_m, &w_j);
        let trace_word = sys.reduced_word(&trace_element);
        let mut db = DualBases {
            realization: r,
            m,
            j,
            trace_element,
            trace_word,
            c: Vec::new(),
            method,
            d: OnceLock::new(),
        };
        let grass = match method {
            DualBasisMethod::Generic => None,
            _ => db.grassmannian_c()?,
        };
        match grass {
            Some(c) => {
                db.c = c;
                db.method = DualBasisMethod::Grassmannian;
            }
            None if method == DualBasisMethod::Grassmannian => {
                return Err(FrobeniusError::Invalid("not a Grassmannian pair of the permutation action".into()))
            }
            None => {
                db.c = db.generic_c()?;
                db.method = DualBasisMethod::Generic;
            }
        }
        Ok(db)
    }

    pub fn realization(&self) -> &Arc<Realization<C>> {
        &self.realization
    }

    pub fn m(&self) -> Subset {
        self.m
    }

    pub fn j(&self) -> Subset {
        self.j
    }

    pub fn method(&self) -> DualBasisMethod {
        self.method
    }

    /// `w_M w_J⁻¹`.
    pub fn trace_element(&self) -> &GroupElement {
        &self.trace_element
    }

    /// `ℓ(w_M) - ℓ(w_J)`, the degree drop of the trace.
    pub fn trace_degree(&self) -> u32 {
        self.trace_element.length()
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    pub fn c(&self) -> &[Polynomial<C>] {
        &self.c
    }

    /// `∂^J_M(f)`.
    pub fn trace(&self, f: &Polynomial<C>) -> Result<Polynomial<C>, FrobeniusError> {
        Ok(self.realization.demazure_word(&self.trace_word, f)?)
    }

    fn generic_c(&self) -> Result<Vec<Polynomial<C>>, FrobeniusError> {
        let r = &self.realization;
        let sys = r.system();
        let p = frobenius_witness(r, self.m)?;
        let w_m = sys.longest_element(self.m)?;
        let mut reps: Vec<GroupElement> = sys
            .enumerate_parabolic(self.m)?
            .iter()
            .filter(|w| self.j.iter().all(|s| !w.has_right_descent(s)))
            .cloned()
            .collect();
        reps.sort();
        reps.iter()
            .map(|w| {
                let x = sys.multiply(&w.inverse(), &w_m);
                Ok(r.demazure_element(&x, &p)?)
            })
            .collect()
    }

    /// Schur polynomials in the first `a` variables of the chain when
    /// `M` is a single transposition chain and `J = M∖{s_a}`.
    fn grassmannian_c(&self) -> Result<Option<Vec<Polynomial<C>>>, FrobeniusError> {
        let r = &self.realization;
        let sys = r.system();
        if sys.components(self.m).len() != 1 || self.m.minus(self.j).len() != 1 {
            return Ok(None);
        }
        let Some((vars, gens)) = swap_chain(r, self.m) else { return Ok(None) };
        let removed = self.m.minus(self.j).iter().next().expect("one generator");
        let a = gens.iter().position(|&g| g == removed).expect("in chain") + 1;
        let b = vars.len() - a;
        let x = &vars[..a];
        let c: Vec<Polynomial<C>> =
            partitions_in_box(a, b as u32).iter().map(|l| schur(r.nvars(), x, l)).collect();
        let expected = sys.enumerate_parabolic(self.m)?.len() / sys.enumerate_parabolic(self.j)?.len();
        if c.len() != expected || !self.constant_pairing_invertible(&c)? {
            return Ok(None);
        }
        Ok(Some(c))
    }

    fn constant_pairing_invertible(&self, c: &[Polynomial<C>]) -> Result<bool, FrobeniusError> {
        Ok(self.constant_inverse(c)?.is_some())
    }

    /// For each `j`, coefficients `X_{kj}` over complementary-degree `c_k`
    /// with `Σ_k ∂(c_i c_k) X_{kj} = δ_ij` on the degree block of `c_j`.
    fn constant_inverse(&self, c: &[Polynomial<C>]) -> Result<Option<Vec<Vec<(usize, C)>>>, FrobeniusError> {
        let n = self.trace_degree();
        let deg: Vec<u32> = c.iter().map(|p| p.degree().unwrap_or(0)).collect();
        let mut out = vec![Vec::new(); c.len()];
        let mut blocks: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (i, &d) in deg.iter().enumerate() {
            blocks.entry(d).or_default().push(i);
        }
        for (&d, rows) in &blocks {
            if d > n {
                return Ok(None);
            }
            let Some(cols) = blocks.get(&(n - d)) else { return Ok(None) };
            if cols.len() != rows.len() {
                return Ok(None);
            }
            let mut ech: Echelon<C::Field> = Echelon::new();
            for &k in cols {
                let mut col = SparseVec::new();
                for (ri, &i) in rows.iter().enumerate() {
                    let v = self.trace(&(&c[i] * &c[k]))?.constant_term();
                    if !v.is_zero() {
                        col.insert(ri, v.to_field());
                    }
                }
                ech.push_column(col);
            }
            for (rj, &j) in rows.iter().enumerate() {
                let mut target = SparseVec::new();
                target.insert(rj, <C::Field as One>::one());
                let sol = ech.solve(&target);
                let Some(x) = sol.solution.filter(|_| sol.kernel.is_empty()) else { return Ok(None) };
                let mut entries = Vec::new();
                for (ci, v) in x.iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    let Some(z) = C::from_field(v) else { return Ok(None) };
                    entries.push((cols[ci], z));
                }
                out[j] = entries;
            }
        }
        Ok(Some(out))
    }

    /// The dual elements `d_i`, computed by correcting constant-pairing duals.
    pub fn d(&self) -> Result<&[Polynomial<C>], FrobeniusError> {
        self.d.get_or_init(|| self.compute_d()).as_ref().map(|v| v.as_slice()).map_err(Clone::clone)
    }

    fn compute_d(&self) -> Result<Vec<Polynomial<C>>, FrobeniusError> {
        let c = &self.c;
        let inv = self
            .constant_inverse(c)?
            .ok_or_else(|| FrobeniusError::SolveFailed("constant pairing is not invertible over the coefficient ring".into()))?;
        let nv = self.realization.nvars();
        let deg: Vec<u32> = c.iter().map(|p| p.degree().unwrap_or(0)).collect();
        let mut order: Vec<usize> = (0..c.len()).collect();
        order.sort_by_key(|&j| std::cmp::Reverse(deg[j]));
        let mut d: Vec<Option<Polynomial<C>>> = vec![None; c.len()];
        for &j in &order {
            let mut dj = Polynomial::zero(nv);
            for (k, x) in &inv[j] {
                dj += &c[*k].scale(x);
            }
            let mut correction = Polynomial::zero(nv);
            for i in 0..c.len() {
                if deg[i] <= deg[j] {
                    continue;
                }
                let e = self.trace(&(&c[i] * &dj))?;
                if !e.is_zero() {
                    let di = d[i].as_ref().expect("higher-degree duals are done first");
                    correction += &(&e * di);
                }
            }
            d[j] = Some(&dj - &correction);
        }
        let d: Vec<Polynomial<C>> = d.into_iter().map(|x| x.expect("all filled")).collect();
        Ok(d)
    }

    /// The matrix `∂^J_M(c_i d_j)`; equals the identity for valid dual bases.
    pub fn delta_matrix(&self) -> Result<Vec<Vec<Polynomial<C>>>, FrobeniusError> {
        let d = self.d()?;
        self.c
            .iter()
            .map(|ci| d.iter().map(|dj| self.trace(&(ci * dj))).collect())
            .collect()
    }

    pub fn verify_delta(&self) -> Result<bool, FrobeniusError> {
        let m = self.delta_matrix()?;
        Ok(m.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, p)| if i == j { p.is_one() } else { p.is_zero() })
        }))
    }

    /// `f == Σ ∂^J_M(f c_i) d_i`.
    pub fn reproducing_check(&self, f: &Polynomial<C>) -> Result<bool, FrobeniusError> {
        let d = self.d()?;
        let mut acc = Polynomial::zero(self.realization.nvars());
        for (ci, di) in self.c.iter().zip(d) {
            acc += &(&self.trace(&(f * ci))? * di);
        }
        Ok(acc == *f)
    }

    /// Check `deg c_i + deg d_i = ℓ(w_M) - ℓ(w_J)` for every pair.
    pub fn degrees_balanced(&self) -> Result<bool, FrobeniusError> {
        let d = self.d()?;
        let n = self.trace_degree();
        Ok(self.c.iter().zip(d).all(|(c, d)| match (c.degree(), d.degree()) {
            (Some(a), Some(b)) => a + b == n,
            _ => false,
        }))
    }
}

/// An element `Σ_i f_i ⊗ d_i` of `R^I ⊗_{R^M} R^J`, stored by its
/// coefficients `f_i ∈ R^I` against a fixed dual basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleElement<C: Coeff> {
    pub coeffs: Vec<Polynomial<C>>,
}

impl<C: Coeff> BimoduleElement<C> {
    pub fn zero(db: &DualBases<C>) -> Self {
        BimoduleElement { coeffs: vec![Polynomial::zero(db.realization.nvars()); db.len()] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        BimoduleElement { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        BimoduleElement { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() }
    }

    /// Left multiplication by `u ∈ R^I`.
    pub fn left_mul(&self, u: &Polynomial<C>) -> Self {
        BimoduleElement { coeffs: self.coeffs.iter().map(|f| u * f).collect() }
    }

    /// Right multiplication by `g ∈ R^J`, re-expanded through the reproducing property.
    pub fn right_mul(&self, db: &DualBases<C>, i: Subset, g: &Polynomial<C>) -> Result<Self, FrobeniusError> {
        let d = db.d()?;
        let pairs: Vec<(Polynomial<C>, Polynomial<C>)> =
            self.coeffs.iter().zip(d).map(|(f, di)| (f.clone(), di * g)).collect();
        canonical_form(db, i, &pairs)
    }
}

/// Canonical coefficients `f_i = Σ_j u_j ∂^J_M(v_j c_i)` of `Σ_j u_j ⊗ v_j`.
pub fn canonical_form<C: Coeff>(
    db: &DualBases<C>,
    i: Subset,
    pairs: &[(Polynomial<C>, Polynomial<C>)],
) -> Result<BimoduleElement<C>, FrobeniusError> {
    let r = &db.realization;
    let mut out = BimoduleElement::zero(db);
    for (u, v) in pairs {
        r.require_invariant(u, i)?;
        r.require_invariant(v, db.j)?;
        for (k, ck) in db.c.iter().enumerate() {
            let t = db.trace(&(v * ck))?;
            if !t.is_zero() {
                out.coeffs[k] += &(u * &t);
            }
        }
    }
    Ok(out)
}

/// Outcome of the divisibility-witness construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivisibilityWitness<C: Coeff> {
    /// `g ∈ R^J` with `n ∤ ∂_{w_M w_J}(b g)`, built from the Bruhat-minimal `y`.
    Witness { g: Polynomial<C>, y: GroupElement, value: Polynomial<C> },
    /// `n` divides every coefficient of `b`.
    NoWitness,
}

fn divisible<C: Coeff>(p: &Polynomial<C>, n: &BigInt) -> bool {
    p.terms().all(|(_, c)| c.divisible_by(n))
}

/// For `b` with `n ∤ b`, find `g ∈ R^J` with `n ∤ ∂_{w_M w_J}(b g)`.
///
/// Expands `∂_w(b g) = Σ_x T'_x(b) ∂_x(g)`, picks a Bruhat-minimal
/// `y ∈ W_M^J` with `n ∤ T'_y(b)`, and sets `g = ∂_{y⁻¹ w_M}(P_M)`.
pub fn divisibility_witness<C: Coeff>(
    r: &Realization<C>,
    b: &Polynomial<C>,
    n: &BigInt,
    m: Subset,
    j: Subset,
) -> Result<DivisibilityWitness<C>, FrobeniusError> {
    if divisible(b, n) {
        return Ok(DivisibilityWitness::NoWitness);
    }
    let sys = r.system();
    let w_m = sys.longest_element(m)?;
    let w_j = sys.longest_element(j)?;
    let w = sys.multiply(&w_m, &w_j);
    let word = sys.reduced_word(&w);
    let expansion = crate::leibniz::iterated_leibniz(r, &word, b).map_err(|e| FrobeniusError::Invalid(e.to_string()))?;
    let mut candidates: Vec<&GroupElement> = expansion
        .keys()
        .filter(|x| j.iter().all(|s| !x.has_right_descent(s)))
        .filter(|x| !divisible(&expansion[*x], n))
        .collect();
    candidates.sort();
    let y = candidates
        .iter()
        .find(|y| !candidates.iter().any(|x| x != *y && sys.bruhat_leq(x, y)))
        .ok_or_else(|| FrobeniusError::SolveFailed("no indivisible coefficient".into()))?;
    let p = frobenius_witness(r, m)?;
    let z = sys.multiply(&y.inverse(), &w_m);
    let g = r.demazure_element(&z, &p)?;
    let value = r.demazure_word(&word, &(b * &g))?;
    if divisible(&value, n) {
        return Err(FrobeniusError::SolveFailed("constructed witness is divisible".into()));
    }
    Ok(DivisibilityWitness::Witness { g, y: (*y).clone(), value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterSystem;

    type Z = BigInt;

    fn perm(n: usize) -> Arc<Realization<Z>> {
        Arc::new(Realization::permutation(n).unwrap())
    }

    #[test]
    fn staircase_witnesses() {
        let r = perm(3);
        let p = frobenius_witness(&r, r.system().all()).unwrap();
        assert_eq!(r.show(&p), "x1^2*x2");
        let r2 = perm(2);
        assert_eq!(r2.show(&frobenius_witness(&r2, Subset::singleton(0)).unwrap()), "x1");
        let r5 = perm(5);
        let m = Subset::from_indices([0, 2, 3]);
        let p = frobenius_witness(&r5, m).unwrap();
        assert!(r5.demazure_element(&r5.system().longest_element(m).unwrap(), &p).unwrap().is_one());
    }

    #[test]
    fn generic_witness_root_realizations() {
        for sys in [CoxeterSystem::type_a(2), CoxeterSystem::type_bc(2), CoxeterSystem::dihedral(Some(6))] {
            let sys = Arc::new(sys.unwrap());
            let r = Realization::<num_rational::BigRational>::root_realization(sys.clone()).unwrap();
            let p = frobenius_witness(&r, sys.all()).unwrap();
            assert!(r.demazure_element(&sys.longest_element(sys.all()).unwrap(), &p).unwrap().is_one());
        }
        // over Z the rank-one root realization has ∂(a1) = 2
        let sys = Arc::new(CoxeterSystem::type_a(1).unwrap());
        let r = Realization::<Z>::root_realization(sys.clone()).unwrap();
        assert!(matches!(frobenius_witness(&r, sys.all()), Err(FrobeniusError::SolveFailed(_))));
    }

    #[test]
    fn rank_one_dual_bases() {
        let r = perm(2);
        let db = DualBases::new(r.clone(), Subset::singleton(0), Subset::EMPTY, DualBasisMethod::Generic).unwrap();
        assert_eq!(db.len(), 2);
        assert!(db.verify_delta().unwrap());
        for f in ["x1", "x2^3", "x1*x2 - 4"] {
            assert!(db.reproducing_check(&r.parse(f).unwrap()).unwrap());
        }
        let trivial = DualBases::new(r, Subset::singleton(0), Subset::singleton(0), DualBasisMethod::Auto).unwrap();
        assert_eq!(trivial.c(), &[Polynomial::one(2)]);
        assert_eq!(trivial.d().unwrap(), &[Polynomial::one(2)]);
    }

    #[test]
    fn grassmannian_and_generic_agree_on_size() {
        let r = perm(4);
        let m = r.system().all();
        let j = Subset::from_indices([0, 2]);
        let g = DualBases::new(r.clone(), m, j, DualBasisMethod::Grassmannian).unwrap();
        let h = DualBases::new(r.clone(), m, j, DualBasisMethod::Generic).unwrap();
        assert_eq!(g.len(), 6);
        assert_eq!(h.len(), 6);
        assert!(g.verify_delta().unwrap());
        assert!(h.verify_delta().unwrap());
        assert!(g.degrees_balanced().unwrap());
    }

    #[test]
    fn canonical_form_tensor_relation() {
        let r = perm(3);
        let m = r.system().all();
        let j = Subset::singleton(0);
        let i = Subset::singleton(1);
        let db = DualBases::new(r.clone(), m, j, DualBasisMethod::Auto).unwrap();
        let e2 = r.parse("x1*x2 + x1*x3 + x2*x3").unwrap();
        let v = r.parse("x1 + x2").unwrap();
        let u = r.parse("x1").unwrap();
        let a = canonical_form(&db, i, &[(&u * &e2, v.clone())]).unwrap();
        let b = canonical_form(&db, i, &[(u.clone(), &e2 * &v)]).unwrap();
        assert_eq!(a, b);
        let zero = canonical_form(&db, i, &[(e2.clone(), r.one()), (-r.one(), e2.clone())]).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn divisibility_small() {
        let r = perm(2);
        let m = Subset::singleton(0);
        let b = r.parse("x1").unwrap();
        match divisibility_witness(&r, &b, &BigInt::from(3), m, Subset::EMPTY).unwrap() {
            DivisibilityWitness::Witness { value, .. } => assert!(!divisible(&value, &BigInt::from(3))),
            DivisibilityWitness::NoWitness => panic!("x1 is not divisible by 3"),
        }
        let b = r.parse("3*x1").unwrap();
        assert_eq!(divisibility_witness(&r, &b, &BigInt::from(3), m, Subset::EMPTY).unwrap(), DivisibilityWitness::NoWitness);
    }
}
