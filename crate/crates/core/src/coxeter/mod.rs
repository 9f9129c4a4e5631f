//! Coxeter systems and exact group arithmetic.
//!
//! Elements act on the root lattice through the Cartan matrix of the system.
//! Only crystallographic Coxeter matrices (`m_st` in {2, 3, 4, 6, ∞}) have an
//! integral Cartan matrix; other entries are rejected as unsupported.

mod element;
mod subset;

pub use element::{GroupElement, Word};
pub use subset::Subset;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use element::matmul;

/// Default bound on the size of enumerated parabolic subgroups and cosets.
pub const DEFAULT_CAP: usize = 10080;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error("enumeration exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

/// Serializable description: generator names plus Coxeter matrix
/// (`0` or `null` stands for ∞).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoxeterConfig {
    pub names: Vec<String>,
    pub matrix: Vec<Vec<Option<u32>>>,
}

pub struct CoxeterSystem {
    names: Vec<String>,
    m: Vec<Vec<Option<u32>>>,
    cartan: Vec<Vec<i64>>,
    gens: Vec<GroupElement>,
    cap: usize,
    cache: RwLock<HashMap<Subset, Arc<Vec<GroupElement>>>>,
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterSystem").field("names", &self.names).field("m", &self.m).finish()
    }
}

impl Clone for CoxeterSystem {
    fn clone(&self) -> Self {
        Self::build(self.names.clone(), self.m.clone(), self.cartan.clone(), self.cap)
    }
}

impl PartialEq for CoxeterSystem {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.m == other.m
    }
}

impl Eq for CoxeterSystem {}

fn cartan_pair(m: Option<u32>) -> Result<(i64, i64), CoxeterError> {
    match m {
        Some(2) => Ok((0, 0)),
        Some(3) => Ok((-1, -1)),
        Some(4) => Ok((-1, -2)),
        Some(6) => Ok((-1, -3)),
        None => Ok((-2, -2)),
        Some(k) => Err(CoxeterError::Unsupported(format!(
            "m = {k} has no integral Cartan matrix; only 2, 3, 4, 6 and ∞ are supported"
        ))),
    }
}

impl CoxeterSystem {
    /// Build from generator names and a Coxeter matrix (`None` = ∞).
    pub fn new(names: Vec<String>, m: Vec<Vec<Option<u32>>>) -> Result<Self, CoxeterError> {
        let n = names.len();
        if n == 0 || n > 64 {
            return Err(CoxeterError::InvalidMatrix(format!("rank {n} outside 1..=64")));
        }
        if m.len() != n || m.iter().any(|r| r.len() != n) {
            return Err(CoxeterError::InvalidMatrix("matrix must be square of size rank".into()));
        }
        let mut cartan = vec![vec![0i64; n]; n];
        for s in 0..n {
            if m[s][s] != Some(1) {
                return Err(CoxeterError::InvalidMatrix(format!("m[{s}][{s}] must be 1")));
            }
            cartan[s][s] = 2;
            for t in (s + 1)..n {
                if m[s][t] != m[t][s] {
                    return Err(CoxeterError::InvalidMatrix(format!("m[{s}][{t}] != m[{t}][{s}]")));
                }
                if m[s][t].is_some_and(|v| v < 2) {
                    return Err(CoxeterError::InvalidMatrix(format!("m[{s}][{t}] must be >= 2")));
                }
                let (a, b) = cartan_pair(m[s][t])?;
                cartan[s][t] = a;
                cartan[t][s] = b;
            }
        }
        let mut seen = HashSet::new();
        if !names.iter().all(|x| seen.insert(x)) {
            return Err(CoxeterError::InvalidMatrix("duplicate generator names".into()));
        }
        Ok(Self::build(names, m, cartan, DEFAULT_CAP))
    }

    fn build(names: Vec<String>, m: Vec<Vec<Option<u32>>>, cartan: Vec<Vec<i64>>, cap: usize) -> Self {
        let n = names.len();
        let gens = (0..n)
            .map(|s| {
                let mut mat = vec![0i64; n * n].into_boxed_slice();
                for r in 0..n {
                    mat[r * n + r] = 1;
                }
                for c in 0..n {
                    mat[s * n + c] -= cartan[s][c];
                }
                GroupElement { rank: n, inv: mat.clone(), mat, len: 1 }
            })
            .collect();
        CoxeterSystem { names, m, cartan, gens, cap, cache: RwLock::new(HashMap::new()) }
    }

    pub fn from_config(cfg: &CoxeterConfig) -> Result<Self, CoxeterError> {
        let m = cfg
            .matrix
            .iter()
            .map(|row| row.iter().map(|v| v.filter(|&x| x != 0)).collect())
            .collect();
        Self::new(cfg.names.clone(), m)
    }

    pub fn config(&self) -> CoxeterConfig {
        CoxeterConfig { names: self.names.clone(), matrix: self.m.clone() }
    }

    fn default_names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("s{i}")).collect()
    }

    fn from_edges(n: usize, edges: &[(usize, usize, Option<u32>)]) -> Result<Self, CoxeterError> {
        let mut m = vec![vec![Some(2); n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Some(1);
        }
        for &(a, b, v) in edges {
            m[a][b] = v;
            m[b][a] = v;
        }
        Self::new(Self::default_names(n), m)
    }

    /// Type `A_rank`, i.e. the symmetric group on `rank + 1` letters.
    pub fn type_a(rank: usize) -> Result<Self, CoxeterError> {
        let edges: Vec<_> = (1..rank).map(|i| (i - 1, i, Some(3))).collect();
        Self::from_edges(rank, &edges)
    }

    /// The symmetric group `S_n` (type `A_{n-1}`).
    pub fn symmetric(n: usize) -> Result<Self, CoxeterError> {
        if n < 2 {
            return Err(CoxeterError::Unsupported("S_n needs n >= 2".into()));
        }
        Self::type_a(n - 1)
    }

    /// Type `B_n = C_n`; the last generator is the short simple root.
    pub fn type_bc(n: usize) -> Result<Self, CoxeterError> {
        if n < 2 {
            return Err(CoxeterError::Unsupported("BC(n) needs n >= 2".into()));
        }
        let mut edges: Vec<_> = (1..n - 1).map(|i| (i - 1, i, Some(3))).collect();
        edges.push((n - 2, n - 1, Some(4)));
        Self::from_edges(n, &edges)
    }

    /// Type `D_n`: a chain `s1 - ... - s_{n-1}` with `s_n` attached to `s_{n-2}`.
    pub fn type_d(n: usize) -> Result<Self, CoxeterError> {
        if n < 2 {
            return Err(CoxeterError::Unsupported("D(n) needs n >= 2".into()));
        }
        let mut edges: Vec<_> = (1..n.saturating_sub(1)).map(|i| (i - 1, i, Some(3))).collect();
        if n >= 3 {
            edges.push((n - 3, n - 1, Some(3)));
        }
        Self::from_edges(n, &edges)
    }

    /// Dihedral group of order `2m`; `None` gives the infinite dihedral group.
    pub fn dihedral(m: Option<u32>) -> Result<Self, CoxeterError> {
        Self::from_edges(2, &[(0, 1, m)])
    }

    /// Affine type `Ã_{n-1}` with generators `s1..sn`, indices modulo `n`.
    pub fn affine_a(n: usize) -> Result<Self, CoxeterError> {
        match n {
            0 | 1 => Err(CoxeterError::Unsupported("affine A needs n >= 2".into())),
            2 => Self::dihedral(None),
            _ => {
                let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, Some(3))).collect();
                Self::from_edges(n, &edges)
            }
        }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap.max(1);
        self.cache = RwLock::new(HashMap::new());
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn generator_index(&self, name: &str) -> Result<usize, CoxeterError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| CoxeterError::UnknownGenerator(name.to_string()))
    }

    pub fn all(&self) -> Subset {
        Subset::full(self.rank())
    }

    /// Coxeter matrix entry; `None` is ∞.
    pub fn m(&self, s: usize, t: usize) -> Option<u32> {
        self.m[s][t]
    }

    /// Cartan entry `<alpha_s^vee, alpha_t>`.
    pub fn cartan(&self, s: usize, t: usize) -> i64 {
        self.cartan[s][t]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.rank())
    }

    pub fn generator(&self, s: usize) -> GroupElement {
        self.gens[s].clone()
    }

    /// `w * s`, with the length updated from the descent test.
    pub fn mul_gen_right(&self, w: &GroupElement, s: usize) -> GroupElement {
        let n = self.rank();
        let down = w.has_right_descent(s);
        let mut mat = w.mat.clone();
        for r in 0..n {
            let ws = w.mat[r * n + s];
            if ws == 0 {
                continue;
            }
            for c in 0..n {
                mat[r * n + c] -= self.cartan[s][c] * ws;
            }
        }
        let inv = matmul(n, &self.gens[s].mat, &w.inv);
        GroupElement { rank: n, mat, inv, len: if down { w.len - 1 } else { w.len + 1 } }
    }

    /// `s * w`.
    pub fn mul_gen_left(&self, s: usize, w: &GroupElement) -> GroupElement {
        self.mul_gen_right(&w.inverse(), s).inverse()
    }

    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let n = self.rank();
        let mat = matmul(n, &a.mat, &b.mat);
        let inv = matmul(n, &b.inv, &a.inv);
        let len = self.length_of(&mat);
        GroupElement { rank: n, mat, inv, len }
    }

    fn length_of(&self, mat: &[i64]) -> u32 {
        let n = self.rank();
        let mut cur = mat.to_vec();
        let mut len = 0;
        'outer: loop {
            for s in 0..n {
                if (0..n).any(|r| cur[r * n + s] < 0) {
                    for r in 0..n {
                        let ws = cur[r * n + s];
                        if ws != 0 {
                            for c in 0..n {
                                cur[r * n + c] -= self.cartan[s][c] * ws;
                            }
                        }
                    }
                    len += 1;
                    continue 'outer;
                }
            }
            return len;
        }
    }

    pub fn from_word(&self, word: &[usize]) -> GroupElement {
        word.iter().fold(self.identity(), |w, &s| self.mul_gen_right(&w, s))
    }

    pub fn is_reduced(&self, word: &[usize]) -> bool {
        self.from_word(word).length() as usize == word.len()
    }

    pub fn right_descents(&self, w: &GroupElement) -> Subset {
        Subset::from_indices((0..self.rank()).filter(|&s| w.has_right_descent(s)))
    }

    pub fn left_descents(&self, w: &GroupElement) -> Subset {
        Subset::from_indices((0..self.rank()).filter(|&s| w.has_left_descent(s)))
    }

    /// The lexicographically least reduced word.
    pub fn reduced_word(&self, w: &GroupElement) -> Word {
        let mut word = Vec::with_capacity(w.len as usize);
        let mut cur = w.clone();
        while !cur.is_identity() {
            let s = (0..self.rank()).find(|&s| cur.has_left_descent(s)).expect("nontrivial element has a descent");
            word.push(s);
            cur = self.mul_gen_left(s, &cur);
        }
        word
    }

    /// Every reduced word of `w`, sorted lexicographically.
    pub fn reduced_words(&self, w: &GroupElement) -> Vec<Word> {
        let mut memo: HashMap<GroupElement, Vec<Word>> = HashMap::new();
        let mut out = self.reduced_words_rec(w, &mut memo);
        out.sort();
        out
    }

    fn reduced_words_rec(&self, w: &GroupElement, memo: &mut HashMap<GroupElement, Vec<Word>>) -> Vec<Word> {
        if w.is_identity() {
            return vec![vec![]];
        }
        if let Some(v) = memo.get(w) {
            return v.clone();
        }
        let mut out = Vec::new();
        for s in 0..self.rank() {
            if w.has_left_descent(s) {
                let rest = self.mul_gen_left(s, w);
                for tail in self.reduced_words_rec(&rest, memo) {
                    let mut word = Vec::with_capacity(tail.len() + 1);
                    word.push(s);
                    word.extend(tail);
                    out.push(word);
                }
            }
        }
        memo.insert(w.clone(), out.clone());
        out
    }

    /// Bruhat order, by the lifting property along the reduced word of `y`.
    pub fn bruhat_leq(&self, x: &GroupElement, y: &GroupElement) -> bool {
        if x.len > y.len {
            return false;
        }
        let mut x = x.clone();
        for s in self.reduced_word(y) {
            if x.has_left_descent(s) {
                x = self.mul_gen_left(s, &x);
            }
        }
        x.is_identity()
    }

    /// All elements of `W_I`, sorted by length; cached per subset.
    pub fn enumerate_parabolic(&self, subset: Subset) -> Result<Arc<Vec<GroupElement>>, CoxeterError> {
        if let Some(v) = self.cache.read().expect("cache lock").get(&subset) {
            return Ok(v.clone());
        }
        let e = self.identity();
        let elems = self.closure(&e, subset, Subset::EMPTY)?;
        let v = Arc::new(elems);
        self.cache.write().expect("cache lock").insert(subset, v.clone());
        Ok(v)
    }

    /// The double coset `W_I w W_J` as a sorted list.
    pub fn double_coset_elements(&self, i: Subset, w: &GroupElement, j: Subset) -> Result<Vec<GroupElement>, CoxeterError> {
        self.closure(w, i, j)
    }

    fn closure(&self, start: &GroupElement, left: Subset, right: Subset) -> Result<Vec<GroupElement>, CoxeterError> {
        let mut seen: HashSet<GroupElement> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start.clone());
        while let Some(w) = queue.pop_front() {
            let nexts = left
                .iter()
                .map(|s| self.mul_gen_left(s, &w))
                .chain(right.iter().map(|s| self.mul_gen_right(&w, s)));
            for v in nexts {
                if !seen.contains(&v) {
                    if seen.len() >= self.cap {
                        return Err(CoxeterError::CapExceeded { cap: self.cap });
                    }
                    seen.insert(v.clone());
                    queue.push_back(v);
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    pub fn is_finitary(&self, subset: Subset) -> bool {
        self.enumerate_parabolic(subset).is_ok()
    }

    /// The longest element `w_I`.
    pub fn longest_element(&self, subset: Subset) -> Result<GroupElement, CoxeterError> {
        self.coset_max(subset, &self.identity(), Subset::EMPTY)
    }

    /// Bruhat-minimal element of `W_I w W_J`.
    pub fn coset_min(&self, i: Subset, w: &GroupElement, j: Subset) -> GroupElement {
        let mut cur = w.clone();
        loop {
            if let Some(s) = i.iter().find(|&s| cur.has_left_descent(s)) {
                cur = self.mul_gen_left(s, &cur);
            } else if let Some(s) = j.iter().find(|&s| cur.has_right_descent(s)) {
                cur = self.mul_gen_right(&cur, s);
            } else {
                return cur;
            }
        }
    }

    /// Bruhat-maximal element of `W_I w W_J`.
    pub fn coset_max(&self, i: Subset, w: &GroupElement, j: Subset) -> Result<GroupElement, CoxeterError> {
        let mut cur = w.clone();
        loop {
            if cur.len as usize > self.cap {
                return Err(CoxeterError::CapExceeded { cap: self.cap });
            }
            if let Some(s) = i.iter().find(|&s| !cur.has_left_descent(s)) {
                cur = self.mul_gen_left(s, &cur);
            } else if let Some(s) = j.iter().find(|&s| !cur.has_right_descent(s)) {
                cur = self.mul_gen_right(&cur, s);
            } else {
                return Ok(cur);
            }
        }
    }

    /// `{x s x^{-1} : s in subset}` when every conjugate is a simple reflection.
    pub fn conjugate_subset(&self, x: &GroupElement, subset: Subset) -> Option<Subset> {
        let xi = x.inverse();
        let mut out = Subset::EMPTY;
        for s in subset.iter() {
            let c = self.multiply(&self.multiply(x, &self.gens[s]), &xi);
            let t = (0..self.rank()).find(|&t| self.gens[t] == c)?;
            out = out.insert(t);
        }
        Some(out)
    }

    /// `{t : x t x^{-1} in subset}`.
    pub fn conjugate_preimage(&self, x: &GroupElement, subset: Subset) -> Subset {
        let xi = x.inverse();
        Subset::from_indices((0..self.rank()).filter(|&t| {
            let c = self.multiply(&self.multiply(x, &self.gens[t]), &xi);
            subset.iter().any(|s| self.gens[s] == c)
        }))
    }

    /// Render a word with generator names, e.g. `s1 s2 s1`; `e` for the empty word.
    pub fn word_text(&self, word: &[usize]) -> String {
        if word.is_empty() {
            return "e".into();
        }
        word.iter().map(|&s| self.names[s].as_str()).collect::<Vec<_>>().join(" ")
    }

    pub fn subset_names(&self, subset: Subset) -> Vec<String> {
        subset.iter().map(|s| self.names[s].clone()).collect()
    }

    /// Connected components of the Coxeter graph restricted to `subset`.
    pub fn components(&self, subset: Subset) -> Vec<Subset> {
        let mut left = subset;
        let mut out = Vec::new();
        while let Some(start) = left.iter().next() {
            let mut comp = Subset::singleton(start);
            let mut frontier = vec![start];
            while let Some(s) = frontier.pop() {
                for t in subset.iter() {
                    if !comp.contains(t) && self.m[s][t] != Some(2) {
                        comp = comp.insert(t);
                        frontier.push(t);
                    }
                }
            }
            left = left.minus(comp);
            out.push(comp);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> CoxeterSystem {
        CoxeterSystem::type_a(n).unwrap()
    }

    #[test]
    fn involution_and_braid() {
        let w = a(2);
        let s = w.generator(0);
        assert!(w.multiply(&s, &s).is_identity());
        assert_eq!(w.from_word(&[0, 1, 0]), w.from_word(&[1, 0, 1]));
        assert_eq!(w.from_word(&[0, 1, 0]).length(), 3);
        assert_eq!(w.from_word(&[0, 0]).length(), 0);
    }

    #[test]
    fn lengths_and_descents() {
        let s4 = a(3);
        assert_eq!(s4.identity().length(), 0);
        assert_eq!(s4.longest_element(s4.all()).unwrap().length(), 6);
        let w = s4.from_word(&[0, 1]);
        assert_eq!(s4.right_descents(&w), Subset::singleton(1));
        assert_eq!(s4.left_descents(&w), Subset::singleton(0));
    }

    #[test]
    fn reduced_word_counts() {
        let s3 = a(2);
        assert_eq!(s3.reduced_words(&s3.identity()), vec![Vec::<usize>::new()]);
        let w0 = s3.longest_element(s3.all()).unwrap();
        assert_eq!(s3.reduced_words(&w0), vec![vec![0, 1, 0], vec![1, 0, 1]]);
        let s4 = a(3);
        let w0 = s4.longest_element(s4.all()).unwrap();
        assert_eq!(s4.reduced_words(&w0).len(), 16);
        assert_eq!(s4.reduced_word(&w0), vec![0, 1, 0, 2, 1, 0]);
    }

    #[test]
    fn bruhat_examples() {
        let s4 = a(3);
        let x = s4.from_word(&[0, 2]);
        let y = s4.from_word(&[0, 1, 2]);
        assert!(s4.bruhat_leq(&x, &y));
        assert!(!s4.bruhat_leq(&s4.generator(1), &x));
        assert!(s4.bruhat_leq(&s4.identity(), &y));
    }

    #[test]
    fn parabolic_sizes() {
        let s4 = a(3);
        let su = Subset::from_indices([0, 2]);
        assert_eq!(s4.enumerate_parabolic(su).unwrap().len(), 4);
        assert_eq!(s4.enumerate_parabolic(s4.all()).unwrap().len(), 24);
        assert_eq!(s4.longest_element(Subset::singleton(0)).unwrap(), s4.generator(0));
        let w = s4.longest_element(su).unwrap();
        assert!(s4.multiply(&w, &w).is_identity());
    }

    #[test]
    fn other_types() {
        let b3 = CoxeterSystem::type_bc(3).unwrap();
        assert_eq!(b3.enumerate_parabolic(b3.all()).unwrap().len(), 48);
        let d4 = CoxeterSystem::type_d(4).unwrap();
        assert_eq!(d4.enumerate_parabolic(d4.all()).unwrap().len(), 192);
        let g2 = CoxeterSystem::dihedral(Some(6)).unwrap();
        assert_eq!(g2.longest_element(g2.all()).unwrap().length(), 6);
        assert!(CoxeterSystem::dihedral(Some(5)).is_err());
        let inf = CoxeterSystem::dihedral(None).unwrap().with_cap(50);
        assert_eq!(inf.enumerate_parabolic(inf.all()), Err(CoxeterError::CapExceeded { cap: 50 }));
        assert!(inf.is_finitary(Subset::singleton(0)));
        let aff = CoxeterSystem::affine_a(3).unwrap().with_cap(500);
        assert!(!aff.is_finitary(aff.all()));
        assert_eq!(aff.enumerate_parabolic(Subset::from_indices([0, 1])).unwrap().len(), 6);
    }

    #[test]
    fn coset_extremes() {
        let s4 = a(3);
        let su = Subset::from_indices([0, 2]);
        let t = s4.generator(1);
        assert_eq!(s4.coset_min(su, &t, su), t);
        let max = s4.coset_max(su, &t, su).unwrap();
        assert_eq!(s4.reduced_word(&max).len(), 5);
        let wi = s4.longest_element(su).unwrap();
        assert!(s4.coset_min(su, &wi, su).is_identity());
    }

    #[test]
    fn config_round_trip() {
        let s4 = a(3);
        let cfg = s4.config();
        let json = serde_json::to_string(&cfg).unwrap();
        let back: CoxeterConfig = serde_json::from_str(&json).unwrap();
        assert_eq!(CoxeterSystem::from_config(&back).unwrap(), s4);
        let bad = CoxeterConfig { names: vec!["a".into(), "b".into()], matrix: vec![vec![Some(1), Some(3)], vec![Some(2), Some(1)]] };
        assert!(CoxeterSystem::from_config(&bad).is_err());
    }

    #[test]
    fn components_split() {
        let s5 = a(4);
        let m = Subset::from_indices([0, 1, 3]);
        assert_eq!(s5.components(m), vec![Subset::from_indices([0, 1]), Subset::singleton(3)]);
    }
}
