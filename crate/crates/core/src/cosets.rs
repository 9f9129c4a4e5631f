//! Parabolic double cosets `W_I \ W / W_J`: extremes, redundancies, cores,
//! atomic cosets, core-factored reduced expressions and the type-A
//! Grassmannian catalog.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::coxeter::{CoxeterError, CoxeterSystem, GroupElement, Subset};
use crate::poly::Polynomial;
use crate::realization::{Realization, RealizationError};
use crate::scalar::Coeff;

/// An `(I, J)`-double coset, identified by `(I, J, min)`.
#[derive(Clone)]
pub struct DoubleCoset {
    i: Subset,
    j: Subset,
    min: GroupElement,
    max: GroupElement,
    leftred: Subset,
    rightred: Subset,
    y: GroupElement,
}

impl PartialEq for DoubleCoset {
    fn eq(&self, o: &Self) -> bool {
        self.i == o.i && self.j == o.j && self.min == o.min
    }
}

impl Eq for DoubleCoset {}

impl fmt::Debug for DoubleCoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DoubleCoset(I={:?}, J={:?}, min={:?})", self.i, self.j, self.min)
    }
}

impl DoubleCoset {
    fn from_extremes(sys: &CoxeterSystem, i: Subset, j: Subset, min: GroupElement, max: GroupElement) -> Result<Self, CoxeterError> {
        let leftred = i.intersect(sys.conjugate_preimage(&min.inverse(), j));
        let rightred = j.intersect(sys.conjugate_preimage(&min, i));
        let wj = sys.longest_element(j)?;
        let y = sys.multiply(&max, &wj);
        Ok(DoubleCoset { i, j, min, max, leftred, rightred, y })
    }

    pub fn left(&self) -> Subset {
        self.i
    }

    pub fn right(&self) -> Subset {
        self.j
    }

    /// Bruhat-minimal element `p̲`.
    pub fn min(&self) -> &GroupElement {
        &self.min
    }

    /// Bruhat-maximal element `p̄`.
    pub fn max(&self) -> &GroupElement {
        &self.max
    }

    /// `I ∩ p̲ J p̲⁻¹`.
    pub fn leftred(&self) -> Subset {
        self.leftred
    }

    /// `p̲⁻¹ I p̲ ∩ J`.
    pub fn rightred(&self) -> Subset {
        self.rightred
    }

    /// `y_p = p̄ w_J⁻¹`; the coset Demazure operator is `∂_{y_p}`.
    pub fn y(&self) -> &GroupElement {
        &self.y
    }

    pub fn is_core(&self) -> bool {
        self.leftred == self.i && self.rightred == self.j
    }

    /// The `(leftred, rightred)`-coset of `p̲`.
    pub fn core(&self, sys: &CoxeterSystem) -> Result<DoubleCoset, CoxeterError> {
        if self.is_core() {
            return Ok(self.clone());
        }
        coset_of(sys, self.leftred, &self.min, self.rightred)
    }

    /// Whether the coset is the identity coset of `I = J`.
    pub fn is_identity_coset(&self) -> bool {
        self.min.is_identity() && self.i == self.j
    }

    /// `Some((M, s, t))` when the coset is atomic.
    pub fn atomic_data(&self, sys: &CoxeterSystem) -> Option<(Subset, usize, usize)> {
        let support = word_support(&sys.reduced_word(&self.min));
        let m = self.i.union(self.j).union(support);
        let s_set = m.minus(self.i);
        let t_set = m.minus(self.j);
        if s_set.len() != 1 || t_set.len() != 1 {
            return None;
        }
        let s = s_set.iter().next()?;
        let t = t_set.iter().next()?;
        let wm = sys.longest_element(m).ok()?;
        if self.max != wm {
            return None;
        }
        let conj = sys.multiply(&sys.multiply(&wm, &sys.generator(s)), &wm);
        (conj == sys.generator(t)).then_some((m, s, t))
    }

    pub fn is_atomic(&self, sys: &CoxeterSystem) -> bool {
        self.atomic_data(sys).is_some()
    }

    /// Elements of the coset, sorted.
    pub fn elements(&self, sys: &CoxeterSystem) -> Result<Vec<GroupElement>, CoxeterError> {
        sys.double_coset_elements(self.i, &self.min, self.j)
    }

    pub fn describe(&self, sys: &CoxeterSystem) -> Result<CosetRecord, CoxeterError> {
        let core = self.core(sys)?;
        Ok(CosetRecord {
            min_word: sys.word_text(&sys.reduced_word(&self.min)),
            max_word: sys.word_text(&sys.reduced_word(&self.max)),
            leftred: sys.subset_names(self.leftred),
            rightred: sys.subset_names(self.rightred),
            core_min_word: sys.word_text(&sys.reduced_word(&core.min)),
            atomic: self.is_atomic(sys),
            y_word: sys.word_text(&sys.reduced_word(&self.y)),
        })
    }
}

/// JSON record for one coset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetRecord {
    pub min_word: String,
    pub max_word: String,
    pub leftred: Vec<String>,
    pub rightred: Vec<String>,
    pub core_min_word: String,
    pub atomic: bool,
    pub y_word: String,
}

pub fn word_support(word: &[usize]) -> Subset {
    Subset::from_indices(word.iter().copied())
}

/// The `(I, J)`-coset containing `w`.
pub fn coset_of(sys: &CoxeterSystem, i: Subset, w: &GroupElement, j: Subset) -> Result<DoubleCoset, CoxeterError> {
    let min = sys.coset_min(i, w, j);
    let max = sys.coset_max(i, w, j)?;
    DoubleCoset::from_extremes(sys, i, j, min, max)
}

/// All `(I, J)`-cosets inside `W_M`, each with extremes found by exhaustion,
/// sorted by decreasing length of the minimal element.
pub fn enumerate_cosets(sys: &CoxeterSystem, i: Subset, j: Subset, m: Subset) -> Result<Vec<DoubleCoset>, CoxeterError> {
    if !i.union(j).is_subset_of(m) {
        return Err(CoxeterError::Config("I and J must lie inside M".into()));
    }
    let all = sys.enumerate_parabolic(m)?;
    let mut seen: HashSet<GroupElement> = HashSet::new();
    let mut out = Vec::new();
    for w in all.iter() {
        if seen.contains(w) {
            continue;
        }
        let elems = sys.double_coset_elements(i, w, j)?;
        let min = elems.iter().min_by_key(|x| x.length()).expect("nonempty").clone();
        let max = elems.iter().max_by_key(|x| x.length()).expect("nonempty").clone();
        seen.extend(elems);
        out.push(DoubleCoset::from_extremes(sys, i, j, min, max)?);
    }
    out.sort_by(|a, b| b.min.cmp(&a.min));
    Ok(out)
}

/// `q ≤ p` in the Bruhat order on `(I, J)`-cosets.
pub fn bruhat_leq_cosets(sys: &CoxeterSystem, q: &DoubleCoset, p: &DoubleCoset) -> bool {
    sys.bruhat_leq(&q.min, &p.min)
}

/// An atomic coset together with `M`, `s` and `t = w_M s w_M`.
#[derive(Clone, Debug)]
pub struct AtomicCoset {
    pub coset: DoubleCoset,
    pub m: Subset,
    pub s: usize,
    pub t: usize,
    w_m: GroupElement,
    w_j: GroupElement,
}

impl AtomicCoset {
    /// The atom `[[M∖s ⊂ M ⊃ M∖t]]`.
    pub fn new(sys: &CoxeterSystem, m: Subset, s: usize) -> Result<Self, CoxeterError> {
        if !m.contains(s) {
            return Err(CoxeterError::Config("s must lie in M".into()));
        }
        let w_m = sys.longest_element(m)?;
        let conj = sys.multiply(&sys.multiply(&w_m, &sys.generator(s)), &w_m);
        let t = (0..sys.rank()).find(|&t| sys.generator(t) == conj).expect("w_M s w_M is simple in M");
        let i = m.remove(s);
        let j = m.remove(t);
        let coset = coset_of(sys, i, &w_m, j)?;
        let w_j = sys.longest_element(j)?;
        Ok(AtomicCoset { coset, m, s, t, w_m, w_j })
    }

    pub fn from_coset(sys: &CoxeterSystem, coset: &DoubleCoset) -> Option<Self> {
        let (m, s, _) = coset.atomic_data(sys)?;
        Self::new(sys, m, s).ok()
    }

    pub fn i(&self) -> Subset {
        self.coset.i
    }

    pub fn j(&self) -> Subset {
        self.coset.j
    }

    /// `a̲ = w_M w_J`, which is also `y_a`.
    pub fn min(&self) -> &GroupElement {
        &self.coset.min
    }

    pub fn w_m(&self) -> &GroupElement {
        &self.w_m
    }

    pub fn w_j(&self) -> &GroupElement {
        &self.w_j
    }

    /// The `(I, J)`-cosets strictly below the atom inside `W_M`, in
    /// decreasing order.
    pub fn lower_cosets(&self, sys: &CoxeterSystem) -> Result<Vec<DoubleCoset>, CoxeterError> {
        Ok(enumerate_cosets(sys, self.i(), self.j(), self.m)?
            .into_iter()
            .filter(|q| q != &self.coset)
            .collect())
    }
}

/// A multistep expression `[[X0 ? X1 ? ... ? Xk]]` where consecutive subsets
/// are nested one way or the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultistepExpression {
    pub steps: Vec<Subset>,
}

impl MultistepExpression {
    fn push(&mut self, x: Subset) {
        if self.steps.last() != Some(&x) {
            self.steps.push(x);
        }
    }

    /// The product element: start at `w_{X0}`; each step `K ⊂ M` multiplies
    /// on the right by `w_K⁻¹ w_M`, and each step `M ⊃ K` leaves it unchanged.
    pub fn element(&self, sys: &CoxeterSystem) -> Result<GroupElement, CoxeterError> {
        let mut x = sys.longest_element(self.steps[0])?;
        for w in self.steps.windows(2) {
            if w[0].is_subset_of(w[1]) {
                let wk = sys.longest_element(w[0])?;
                let wm = sys.longest_element(w[1])?;
                x = sys.multiply(&sys.multiply(&x, &wk), &wm);
            }
        }
        Ok(x)
    }

    /// Length predicted by the reduced-expression calculus.
    pub fn expected_length(&self, sys: &CoxeterSystem) -> Result<u32, CoxeterError> {
        let mut len = sys.longest_element(self.steps[0])?.length();
        for w in self.steps.windows(2) {
            if w[0].is_subset_of(w[1]) {
                len += sys.longest_element(w[1])?.length() - sys.longest_element(w[0])?.length();
            }
        }
        Ok(len)
    }

    pub fn is_reduced(&self, sys: &CoxeterSystem) -> Result<bool, CoxeterError> {
        Ok(self.element(sys)?.length() == self.expected_length(sys)?)
    }

    pub fn text(&self, sys: &CoxeterSystem) -> String {
        let mut out = String::from("[[");
        for (k, x) in self.steps.iter().enumerate() {
            if k > 0 {
                let prev = self.steps[k - 1];
                out.push_str(if prev.is_subset_of(*x) { " ⊂ " } else { " ⊃ " });
            }
            let names = sys.subset_names(*x);
            out.push('{');
            out.push_str(&names.join(","));
            out.push('}');
        }
        out.push_str("]]");
        out
    }
}

/// `[[I ⊃ leftred]] . rex(core) . [[rightred ⊂ J]]`, where the core is
/// written as a chain of atoms found by search.
pub fn core_factored_rex(sys: &CoxeterSystem, q: &DoubleCoset) -> Result<MultistepExpression, CoxeterError> {
    let core = q.core(sys)?;
    let mut expr = MultistepExpression { steps: vec![q.i] };
    expr.push(q.leftred);
    for x in atomic_chain(sys, &core)? {
        expr.push(x);
    }
    expr.push(q.rightred);
    expr.push(q.j);
    Ok(expr)
}

/// A reduced chain `[[K0 ⊂ M1 ⊃ K1 ⊂ ... ⊃ Kk]]` of atoms expressing a core coset.
fn atomic_chain(sys: &CoxeterSystem, core: &DoubleCoset) -> Result<Vec<Subset>, CoxeterError> {
    if core.min.is_identity() {
        return Ok(vec![core.i]);
    }
    if let Some((m, _, _)) = core.atomic_data(sys) {
        return Ok(vec![core.i, m, core.j]);
    }
    let start = sys.longest_element(core.i)?;
    let target_len = core.max.length();
    let mut path = vec![core.i];
    if search_chain(sys, core, &start, start.length(), target_len, &mut path)? {
        Ok(path)
    } else {
        Err(CoxeterError::Unsupported("no atomic factorization found".into()))
    }
}

fn search_chain(
    sys: &CoxeterSystem,
    core: &DoubleCoset,
    x: &GroupElement,
    len: u32,
    target_len: u32,
    path: &mut Vec<Subset>,
) -> Result<bool, CoxeterError> {
    let k = *path.last().expect("nonempty path");
    if k == core.j && *x == core.max {
        return Ok(true);
    }
    if len >= target_len {
        return Ok(false);
    }
    let wk = sys.longest_element(k)?;
    for s in 0..sys.rank() {
        if k.contains(s) {
            continue;
        }
        let m = k.insert(s);
        let Ok(wm) = sys.longest_element(m) else { continue };
        let new_len = len + wm.length() - wk.length();
        if new_len > target_len {
            continue;
        }
        let nx = sys.multiply(&sys.multiply(x, &wk), &wm);
        if nx.length() != new_len {
            continue;
        }
        let conj = sys.multiply(&sys.multiply(&wm, &sys.generator(s)), &wm);
        let t = (0..sys.rank()).find(|&t| sys.generator(t) == conj).expect("conjugate is simple");
        path.push(m);
        path.push(m.remove(t));
        if search_chain(sys, core, &nx, new_len, target_len, path)? {
            return Ok(true);
        }
        path.pop();
        path.pop();
    }
    Ok(false)
}

/// `∂_q` on `R^J`, i.e. `∂_{y_q}` after checking `J`-invariance.
pub fn coset_demazure<C: Coeff>(r: &Realization<C>, q: &DoubleCoset, f: &Polynomial<C>) -> Result<Polynomial<C>, RealizationError> {
    r.require_invariant(f, q.j)?;
    r.demazure_element(&q.y, f)
}

/// One entry of the Grassmannian catalog.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub k: usize,
    pub coset: DoubleCoset,
    pub rex: MultistepExpression,
}

/// The Grassmannian atom for `(a, b)` in `S_{a+b}`: `t = s_a`, `s = s_b`,
/// `I = M∖s_b`, `J = M∖s_a`.
pub fn grassmannian_atom(sys: &CoxeterSystem, a: usize, b: usize) -> Result<AtomicCoset, CoxeterError> {
    if a == 0 || b == 0 || sys.rank() + 1 != a + b {
        return Err(CoxeterError::Config(format!("need S_(a+b) for a={a}, b={b}")));
    }
    AtomicCoset::new(sys, sys.all(), b - 1)
}

/// `q_0 > q_1 > ... > q_min(a,b)`: all `(I, J)`-cosets of the Grassmannian atom.
pub fn grassmannian_catalog(sys: &CoxeterSystem, a: usize, b: usize) -> Result<Vec<CatalogEntry>, CoxeterError> {
    let atom = grassmannian_atom(sys, a, b)?;
    let cosets = enumerate_cosets(sys, atom.i(), atom.j(), atom.m)?;
    cosets
        .into_iter()
        .enumerate()
        .map(|(k, coset)| {
            let rex = core_factored_rex(sys, &coset)?;
            Ok(CatalogEntry { k, coset, rex })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4() -> CoxeterSystem {
        CoxeterSystem::symmetric(4).unwrap()
    }

    const S: usize = 0;
    const T: usize = 1;
    const U: usize = 2;

    #[test]
    fn s4_example_counts() {
        let sys = s4();
        let su = Subset::from_indices([S, U]);
        let cos = enumerate_cosets(&sys, su, su, sys.all()).unwrap();
        assert_eq!(cos.len(), 3);
        assert!(cos[0].is_atomic(&sys));
        assert_eq!(sys.reduced_word(cos[1].min()), vec![T]);
        assert_eq!(sys.reduced_word(cos[1].y()), vec![S, U, T]);
        assert!(cos[2].min().is_identity());
        let cos = enumerate_cosets(&sys, Subset::from_indices([T, U]), Subset::from_indices([S, T]), sys.all()).unwrap();
        assert_eq!(cos.len(), 2);
        assert!(cos[0].is_atomic(&sys));
        assert!(!cos[1].is_atomic(&sys));
        assert_eq!(sys.reduced_word(cos[0].min()), vec![S, T, U]);
        assert_eq!(sys.reduced_word(cos[1].y()), vec![T, U]);
        assert_eq!(cos[1].rightred(), Subset::singleton(T));
    }

    #[test]
    fn trivial_subsets_give_elements() {
        let sys = s4();
        let cos = enumerate_cosets(&sys, Subset::EMPTY, Subset::EMPTY, sys.all()).unwrap();
        assert_eq!(cos.len(), 24);
        assert!(cos.iter().all(|c| c.min() == c.max() && c.is_core()));
    }

    #[test]
    fn extremes_agree_with_greedy() {
        let sys = s4();
        for i in sys.all().subsets() {
            for j in sys.all().subsets() {
                for c in enumerate_cosets(&sys, i, j, sys.all()).unwrap() {
                    let g = coset_of(&sys, i, c.max(), j).unwrap();
                    assert_eq!(g.min(), c.min());
                    assert_eq!(g.max(), c.max());
                    assert!(sys.bruhat_leq(c.min(), c.max()));
                    assert_eq!(c.max().length(), c.y().length() + sys.longest_element(j).unwrap().length());
                }
            }
        }
    }

    #[test]
    fn atom_data() {
        let sys = s4();
        let a = AtomicCoset::new(&sys, sys.all(), T).unwrap();
        assert_eq!(a.t, T);
        assert_eq!(a.coset.core(&sys).unwrap(), a.coset);
        let rex = core_factored_rex(&sys, &a.coset).unwrap();
        assert_eq!(rex.steps, vec![a.i(), a.m, a.j()]);
        let a = AtomicCoset::new(&sys, sys.all(), S).unwrap();
        assert_eq!(a.t, U);
        assert_eq!(a.min(), a.coset.y());
    }

    #[test]
    fn grassmannian_catalog_shapes() {
        let sys = CoxeterSystem::symmetric(8).unwrap().with_cap(40320);
        let cat = grassmannian_catalog(&sys, 3, 5).unwrap();
        assert_eq!(cat.len(), 4);
        for e in &cat {
            assert!(e.rex.is_reduced(&sys).unwrap());
            assert_eq!(e.rex.element(&sys).unwrap(), *e.coset.max());
            assert_eq!(e.coset.y().length() as usize, 15 - e.k * e.k);
        }
        let sys = CoxeterSystem::symmetric(4).unwrap();
        let cat = grassmannian_catalog(&sys, 2, 2).unwrap();
        assert!(cat[2].coset.y().is_identity());
        assert!(cat[2].coset.is_core());
        assert_eq!(cat[2].rex.steps, vec![cat[2].coset.left()]);
    }

    #[test]
    fn non_atomic_core_search() {
        // the core of the (∅, ∅)-coset of s1 s2 is itself, found as a chain of two atoms
        let sys = CoxeterSystem::symmetric(3).unwrap();
        let w = sys.from_word(&[0, 1]);
        let q = coset_of(&sys, Subset::EMPTY, &w, Subset::EMPTY).unwrap();
        let rex = core_factored_rex(&sys, &q).unwrap();
        assert!(rex.is_reduced(&sys).unwrap());
        assert_eq!(rex.element(&sys).unwrap(), w);
        assert_eq!(rex.steps.len(), 5);
    }
}
