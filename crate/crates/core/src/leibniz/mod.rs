//! Atomic Leibniz rules.
//!
//! For an atomic coset `a` the rightward rule reads
//! `∂_a(fg) = a̲(f) ∂_a(g) + Σ_{q<a} ∂_{y_q}(T_q(f) g)` for `f, g ∈ R^J`,
//! and the leftward rule replaces each summand by
//! `∂_{w_I w_L}(T'_q(f) ∂_{q̲}(g))` with `L = leftred(q)`. Both sides are
//! `R^M`-linear in `g`, so it suffices to impose the identity for `g = c_i`
//! running over a dual basis. The unknown operators are then found by exact
//! linear algebra, one graded component of `f` at a time.

mod closed_form;
mod forcing;
mod iterated;
mod probe;
mod transport;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, RwLock};

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::cosets::{enumerate_cosets, AtomicCoset, DoubleCoset};
use crate::coxeter::{CoxeterError, GroupElement, Subset};
use crate::frobenius::{DualBasisMethod, DualBases, FrobeniusError};
use crate::linalg::{Echelon, RowIndex, SparseVec};
use crate::poly::{Monomial, Polynomial};
use crate::realization::{Realization, RealizationError};
use crate::scalar::Coeff;

pub use closed_form::{closed_form_type_a, ClosedFormReport};
pub use forcing::{pf_membership, target_element, verify_forcing, ForcingCertificate, ForcingOutcome};
pub use iterated::{expand_with, iterated_leibniz};
pub use probe::{naive_rule_probe, ProbeOutcome};
pub use transport::{connected_reduction, transport_certificate};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LeibnizError {
    #[error(transparent)]
    Realization(#[from] RealizationError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Frobenius(#[from] FrobeniusError),
    #[error("word {0} is not reduced")]
    NonReduced(String),
    #[error("{0}")]
    Invalid(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl From<crate::poly::PolyError> for LeibnizError {
    fn from(e: crate::poly::PolyError) -> Self {
        LeibnizError::Realization(e.into())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Rightward,
    Leftward,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Rightward => "rightward",
            Direction::Leftward => "leftward",
        })
    }
}

/// Which family of columns a linear system uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Kind {
    Right,
    Left,
    /// Rightward columns evaluated through `∂_{w_I w_L} ∘ ∂_{q̲}`.
    Forcing,
    /// Rightward columns with unconstrained unknowns.
    Naive,
}

impl From<Direction> for Kind {
    fn from(d: Direction) -> Self {
        match d {
            Direction::Rightward => Kind::Right,
            Direction::Leftward => Kind::Left,
        }
    }
}

/// A coset below the leading one, with the words its operators use.
#[derive(Clone, Debug)]
pub struct LowerCoset {
    pub coset: DoubleCoset,
    y_word: Vec<usize>,
    min_word: Vec<usize>,
    left_word: Vec<usize>,
}

impl LowerCoset {
    pub fn y_word(&self) -> &[usize] {
        &self.y_word
    }

    pub fn min_word(&self) -> &[usize] {
        &self.min_word
    }

    /// Reduced word of `w_I w_L` with `L = leftred(q)`.
    pub fn left_word(&self) -> &[usize] {
        &self.left_word
    }
}

struct Block<C: Coeff> {
    q: usize,
    basis: Arc<Vec<Polynomial<C>>>,
}

struct LinearSystem<C: Coeff> {
    blocks: Vec<Block<C>>,
    echelon: Echelon<C::Field>,
}

/// Everything needed to solve for the operators of one leading coset `p`
/// inside `W_M`: the lower cosets, the dual bases of `R^J` over `R^M`, and
/// cached column systems per degree.
pub struct LeibnizContext<C: Coeff> {
    r: Arc<Realization<C>>,
    lead: DoubleCoset,
    atom: Option<AtomicCoset>,
    m: Subset,
    lead_y: GroupElement,
    lead_word: Vec<usize>,
    lead_dc: Vec<Polynomial<C>>,
    lower: Vec<LowerCoset>,
    db: Arc<DualBases<C>>,
    rows: Mutex<RowIndex<(usize, Monomial)>>,
    systems: RwLock<HashMap<(Kind, u32), Arc<LinearSystem<C>>>>,
}

impl<C: Coeff> fmt::Debug for LeibnizContext<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LeibnizContext").field("lead", &self.lead).field("m", &self.m).field("lower", &self.lower.len()).finish()
    }
}

impl<C: Coeff> LeibnizContext<C> {
    /// Context of an atomic coset.
    pub fn atomic(r: Arc<Realization<C>>, atom: AtomicCoset) -> Result<Self, LeibnizError> {
        let db = Arc::new(DualBases::new(r.clone(), atom.m, atom.j(), DualBasisMethod::Auto)?);
        Self::build(r, atom.coset.clone(), atom.m, Some(atom), db)
    }

    /// Context of the atom `[[M∖s ⊂ M ⊃ M∖t]]`.
    pub fn atom(r: Arc<Realization<C>>, m: Subset, s: usize) -> Result<Self, LeibnizError> {
        let atom = AtomicCoset::new(r.system(), m, s)?;
        Self::atomic(r, atom)
    }

    /// Context of an arbitrary `(I, J)`-coset `p ⊂ W_M`, atomic or not.
    pub fn for_coset(r: Arc<Realization<C>>, p: DoubleCoset, m: Subset) -> Result<Self, LeibnizError> {
        let db = Arc::new(DualBases::new(r.clone(), m, p.right(), DualBasisMethod::Auto)?);
        let atom = AtomicCoset::from_coset(r.system(), &p).filter(|a| a.m == m);
        Self::build(r, p, m, atom, db)
    }

    /// Reuse precomputed dual bases for `(M, J)`.
    pub fn with_dual_bases(r: Arc<Realization<C>>, p: DoubleCoset, db: Arc<DualBases<C>>) -> Result<Self, LeibnizError> {
        let m = db.m();
        if db.j() != p.right() {
            return Err(LeibnizError::Invalid("dual bases are for a different J".into()));
        }
        let atom = AtomicCoset::from_coset(r.system(), &p).filter(|a| a.m == m);
        Self::build(r, p, m, atom, db)
    }

    fn build(
        r: Arc<Realization<C>>,
        lead: DoubleCoset,
        m: Subset,
        atom: Option<AtomicCoset>,
        db: Arc<DualBases<C>>,
    ) -> Result<Self, LeibnizError> {
        let sys = r.system().clone();
        let (i, j) = (lead.left(), lead.right());
        let w_i = sys.longest_element(i)?;
        let lower = enumerate_cosets(&sys, i, j, m)?
            .into_iter()
            .filter(|q| q != &lead && sys.bruhat_leq(q.min(), lead.min()))
            .map(|q| {
                let w_l = sys.longest_element(q.leftred())?;
                Ok(LowerCoset {
                    y_word: sys.reduced_word(q.y()),
                    min_word: sys.reduced_word(q.min()),
                    left_word: sys.reduced_word(&sys.multiply(&w_i, &w_l)),
                    coset: q,
                })
            })
            .collect::<Result<Vec<_>, CoxeterError>>()?;
        let lead_y = lead.y().clone();
        let lead_word = sys.reduced_word(&lead_y);
        let lead_dc = db.c().iter().map(|c| r.demazure_word(&lead_word, c)).collect::<Result<Vec<_>, _>>()?;
        Ok(LeibnizContext {
            r,
            lead,
            atom,
            m,
            lead_y,
            lead_word,
            lead_dc,
            lower,
            db,
            rows: Mutex::new(RowIndex::new()),
            systems: RwLock::new(HashMap::new()),
        })
    }

    pub fn realization(&self) -> &Arc<Realization<C>> {
        &self.r
    }

    pub fn lead(&self) -> &DoubleCoset {
        &self.lead
    }

    pub fn atom_data(&self) -> Option<&AtomicCoset> {
        self.atom.as_ref()
    }

    pub fn m(&self) -> Subset {
        self.m
    }

    pub fn i(&self) -> Subset {
        self.lead.left()
    }

    pub fn j(&self) -> Subset {
        self.lead.right()
    }

    pub fn lower(&self) -> &[LowerCoset] {
        &self.lower
    }

    pub fn dual_bases(&self) -> &Arc<DualBases<C>> {
        &self.db
    }

    /// `y_p`, so that `∂_p = ∂_{y_p}`; for an atom this is `a̲ = w_M w_J`.
    pub fn lead_y(&self) -> &GroupElement {
        &self.lead_y
    }

    pub fn lead_word(&self) -> &[usize] {
        &self.lead_word
    }

    /// Degree of `T_q(f)` for homogeneous `f` of degree `d`, if nonnegative.
    pub fn term_degree(&self, q: usize, d: u32) -> Option<u32> {
        let e = d as i64 - self.lead_y.length() as i64 + self.lower[q].coset.y().length() as i64;
        u32::try_from(e).ok()
    }

    fn invariance(&self, kind: Kind, q: usize) -> Subset {
        match kind {
            Kind::Right | Kind::Forcing => self.lower[q].coset.rightred(),
            Kind::Left => self.lower[q].coset.leftred(),
            Kind::Naive => Subset::EMPTY,
        }
    }

    /// `∂_p(fg) - y_p(f) ∂_p(g)`.
    fn defect(&self, f: &Polynomial<C>, yf: &Polynomial<C>, g: &Polynomial<C>, dg: &Polynomial<C>) -> Result<Polynomial<C>, LeibnizError> {
        Ok(&self.r.demazure_word(&self.lead_word, &(f * g))? - &(yf * dg))
    }

    /// The lower-term contribution of `T` through coset `q` evaluated at `g`.
    fn column(&self, kind: Kind, q: usize, t: &Polynomial<C>, g: &Polynomial<C>) -> Result<Polynomial<C>, LeibnizError> {
        let lq = &self.lower[q];
        let r = &self.r;
        match kind {
            Kind::Right | Kind::Naive => {
                let tg = t * g;
                if tg.degree().is_none_or(|d| d < lq.y_word.len() as u32) {
                    return Ok(r.zero());
                }
                Ok(r.demazure_word(&lq.y_word, &tg)?)
            }
            Kind::Forcing => {
                let inner = r.demazure_word(&lq.min_word, &(t * g))?;
                Ok(r.demazure_word(&lq.left_word, &inner)?)
            }
            Kind::Left => {
                let inner = r.demazure_word(&lq.min_word, g)?;
                if inner.is_zero() {
                    return Ok(inner);
                }
                Ok(r.demazure_word(&lq.left_word, &(t * &inner))?)
            }
        }
    }

    fn to_sparse(&self, polys: &[Polynomial<C>]) -> SparseVec<C::Field> {
        let mut rows = self.rows.lock().expect("row index");
        let mut v = SparseVec::new();
        for (i, p) in polys.iter().enumerate() {
            for (m, c) in p.terms() {
                v.insert(rows.index(&(i, *m)), c.to_field());
            }
        }
        v
    }

    fn system(&self, kind: Kind, d: u32) -> Result<Arc<LinearSystem<C>>, LeibnizError> {
        if let Some(s) = self.systems.read().expect("system cache").get(&(kind, d)) {
            return Ok(s.clone());
        }
        let s = Arc::new(self.build_system(kind, d, self.db.c())?);
        self.systems.write().expect("system cache").insert((kind, d), s.clone());
        Ok(s)
    }

    fn build_system(&self, kind: Kind, d: u32, gs: &[Polynomial<C>]) -> Result<LinearSystem<C>, LeibnizError> {
        let mut blocks = Vec::new();
        let mut echelon = Echelon::new();
        for q in 0..self.lower.len() {
            let Some(e) = self.term_degree(q, d) else { continue };
            let basis = self.r.invariant_basis(self.invariance(kind, q), e);
            for b in basis.iter() {
                let col = gs.iter().map(|g| self.column(kind, q, b, g)).collect::<Result<Vec<_>, _>>()?;
                echelon.push_column(self.to_sparse(&col));
            }
            blocks.push(Block { q, basis });
        }
        Ok(LinearSystem { blocks, echelon })
    }

    /// Solve for the operators on `f`, imposing the rule for every `g` in
    /// `gs` (the dual basis when `None`).
    pub(crate) fn solve_kind(
        &self,
        f: &Polynomial<C>,
        kind: Kind,
        gs: Option<&[Polynomial<C>]>,
    ) -> Result<Result<Solution<C>, Infeasibility<C>>, LeibnizError> {
        self.r.check_ring(f)?;
        if kind != Kind::Naive {
            self.r.require_invariant(f, self.j())?;
        }
        let g_list: &[Polynomial<C>] = gs.unwrap_or(self.db.c());
        let dg: Vec<Polynomial<C>> = match gs {
            None => self.lead_dc.clone(),
            Some(gs) => gs.iter().map(|g| self.r.demazure_word(&self.lead_word, g)).collect::<Result<_, _>>()?,
        };
        let nv = self.r.nvars();
        let mut terms = vec![Polynomial::<C::Field>::zero(nv); self.lower.len()];
        let mut unique = true;
        for (d, fd) in f.homogeneous_components() {
            let yf = self.r.act(&self.lead_y, &fd)?;
            let target = g_list
                .iter()
                .zip(&dg)
                .map(|(g, dg)| self.defect(&fd, &yf, g, dg))
                .collect::<Result<Vec<_>, _>>()?;
            let sys = match gs {
                None => self.system(kind, d)?,
                Some(gs) => Arc::new(self.build_system(kind, d, gs)?),
            };
            let sol = sys.echelon.solve(&self.to_sparse(&target));
            let Some(x) = sol.solution else {
                return Ok(Err(Infeasibility { f: f.clone(), degree: d, reason: InfeasibleReason::NoSolution }));
            };
            unique &= sol.kernel.is_empty();
            let mut k = 0;
            for block in &sys.blocks {
                for b in block.basis.iter() {
                    if !x[k].is_zero() {
                        terms[block.q] += &b.to_field().scale(&x[k]);
                    }
                    k += 1;
                }
            }
        }
        let mut out = Vec::with_capacity(terms.len());
        for (q, t) in terms.iter().enumerate() {
            match Polynomial::<C>::from_field(t) {
                Some(p) => out.push(p),
                None => {
                    let degree = f.degree().unwrap_or(0);
                    let _ = q;
                    return Ok(Err(Infeasibility { f: f.clone(), degree, reason: InfeasibleReason::NonIntegral }));
                }
            }
        }
        Ok(Ok(Solution { terms: out, unique }))
    }

    /// Solve for `T_q(f)` (rightward) or `T'_q(f)` (leftward) and verify the
    /// result exactly against every dual-basis element.
    pub fn solve(&self, f: &Polynomial<C>, direction: Direction) -> Result<SolveOutcome<C>, LeibnizError> {
        match self.solve_kind(f, direction.into(), None)? {
            Err(inf) => Ok(Outcome::Infeasible(inf)),
            Ok(sol) => {
                let cert = self.certificate(direction, f.clone(), sol.terms, sol.unique);
                if !self.verify(&cert)? {
                    return Err(LeibnizError::Verification(format!("solution for {} does not satisfy the rule", self.r.show(f))));
                }
                Ok(Outcome::Feasible(cert))
            }
        }
    }

    /// Assemble a certificate from explicit terms, one per lower coset.
    pub fn certificate(&self, direction: Direction, f: Polynomial<C>, values: Vec<Polynomial<C>>, unique: bool) -> LeibnizCertificate<C> {
        let kind = Kind::from(direction);
        let terms = values
            .into_iter()
            .enumerate()
            .map(|(q, value)| Term { coset: self.lower[q].coset.clone(), invariance: self.invariance(kind, q), value })
            .collect();
        LeibnizCertificate { direction, f, terms, verified_on: self.db.len(), unique }
    }

    /// Check invariance of every term and the rule for every dual-basis `c_i`.
    pub fn verify(&self, cert: &LeibnizCertificate<C>) -> Result<bool, LeibnizError> {
        self.verify_on(cert, self.db.c())
    }

    /// Check invariance of every term and the rule for each `g ∈ gs ⊂ R^J`.
    pub fn verify_on(&self, cert: &LeibnizCertificate<C>, gs: &[Polynomial<C>]) -> Result<bool, LeibnizError> {
        if cert.terms.len() != self.lower.len() {
            return Ok(false);
        }
        for (q, t) in cert.terms.iter().enumerate() {
            if t.coset != self.lower[q].coset || !self.r.is_invariant(&t.value, t.invariance) {
                return Ok(false);
            }
        }
        let kind = Kind::from(cert.direction);
        let yf = self.r.act(&self.lead_y, &cert.f)?;
        for g in gs {
            self.r.require_invariant(g, self.j())?;
            let dg = self.r.demazure_word(&self.lead_word, g)?;
            let mut rhs = self.r.zero();
            for (q, t) in cert.terms.iter().enumerate() {
                if !t.value.is_zero() {
                    rhs += &self.column(kind, q, &t.value, g)?;
                }
            }
            if self.defect(&cert.f, &yf, g, &dg)? != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// JSON description of the leading coset.
    pub fn atom_record(&self) -> AtomRecord {
        let sys = self.r.system();
        AtomRecord {
            i: sys.subset_names(self.i()),
            j: sys.subset_names(self.j()),
            m: sys.subset_names(self.m),
            s: self.atom.as_ref().map(|a| sys.names()[a.s].clone()),
            t: self.atom.as_ref().map(|a| sys.names()[a.t].clone()),
            min_word: sys.word_text(&sys.reduced_word(self.lead.min())),
        }
    }

    pub fn record(&self, cert: &LeibnizCertificate<C>) -> CertificateRecord {
        let sys = self.r.system();
        CertificateRecord {
            atom: self.atom_record(),
            direction: cert.direction,
            f: self.r.show(&cert.f),
            terms: cert
                .terms
                .iter()
                .map(|t| TermRecord {
                    coset_min_word: sys.word_text(&sys.reduced_word(t.coset.min())),
                    t: self.r.show(&t.value),
                    invariance: sys.subset_names(t.invariance),
                })
                .collect(),
            verified_on: cert.verified_on,
            unique: cert.unique,
        }
    }
}

pub(crate) struct Solution<C: Coeff> {
    pub terms: Vec<Polynomial<C>>,
    pub unique: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InfeasibleReason {
    /// The linear system has no solution over the fraction field.
    NoSolution,
    /// The only solutions have non-integral coefficients.
    NonIntegral,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Infeasibility<C: Coeff> {
    pub f: Polynomial<C>,
    pub degree: u32,
    pub reason: InfeasibleReason,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T, C: Coeff> {
    Feasible(T),
    Infeasible(Infeasibility<C>),
}

impl<T, C: Coeff> Outcome<T, C> {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Outcome::Feasible(_))
    }

    pub fn feasible(&self) -> Option<&T> {
        match self {
            Outcome::Feasible(t) => Some(t),
            Outcome::Infeasible(_) => None,
        }
    }

    pub fn into_feasible(self) -> Option<T> {
        match self {
            Outcome::Feasible(t) => Some(t),
            Outcome::Infeasible(_) => None,
        }
    }
}

pub type SolveOutcome<C> = Outcome<LeibnizCertificate<C>, C>;

/// One operator value `T_q(f)` together with the subgroup it is invariant under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term<C: Coeff> {
    pub coset: DoubleCoset,
    pub value: Polynomial<C>,
    pub invariance: Subset,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizCertificate<C: Coeff> {
    pub direction: Direction,
    pub f: Polynomial<C>,
    /// One entry per lower coset, in the context's order.
    pub terms: Vec<Term<C>>,
    /// Number of `g` the rule was checked against.
    pub verified_on: usize,
    /// Whether the homogeneous system had trivial kernel in every degree.
    pub unique: bool,
}

impl<C: Coeff> LeibnizCertificate<C> {
    pub fn values(&self) -> Vec<&Polynomial<C>> {
        self.terms.iter().map(|t| &t.value).collect()
    }

    /// Termwise sum of two certificates for the same context and direction.
    pub fn add(&self, other: &Self) -> Self {
        LeibnizCertificate {
            direction: self.direction,
            f: &self.f + &other.f,
            terms: self
                .terms
                .iter()
                .zip(&other.terms)
                .map(|(a, b)| Term { coset: a.coset.clone(), value: &a.value + &b.value, invariance: a.invariance })
                .collect(),
            verified_on: self.verified_on.min(other.verified_on),
            unique: self.unique && other.unique,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AtomRecord {
    #[serde(rename = "I")]
    pub i: Vec<String>,
    #[serde(rename = "J")]
    pub j: Vec<String>,
    #[serde(rename = "M")]
    pub m: Vec<String>,
    pub s: Option<String>,
    pub t: Option<String>,
    pub min_word: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermRecord {
    pub coset_min_word: String,
    #[serde(rename = "T")]
    pub t: String,
    pub invariance: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateRecord {
    pub atom: AtomRecord,
    pub direction: Direction,
    pub f: String,
    pub terms: Vec<TermRecord>,
    pub verified_on: usize,
    pub unique: bool,
}

#[cfg(test)]
mod tests;
