//! Exact sparse linear algebra over a field.
//!
//! Systems are given column by column; each column is a sparse vector keyed
//! by row index. Elimination keeps every reduced column together with the
//! combination of original columns that produced it, which yields solutions
//! and kernel vectors without a second pass.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;



use crate::scalar::Field;

pub type SparseVec<F> = BTreeMap<usize, F>;

/// Assigns dense row indices to arbitrary keys.
#[derive(Debug, Clone)]
pub struct RowIndex<K> {
    map: HashMap<K, usize>,
}

impl<K: Hash + Eq + Clone> RowIndex<K> {
    pub fn new() -> Self {
        RowIndex { map: HashMap::new() }
    }

    pub fn index(&mut self, k: &K) -> usize {
        if let Some(&i) = self.map.get(k) {
            return i;
        }
        let i = self.map.len();
        self.map.insert(k.clone(), i);
        i
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

impl<K: Hash + Eq + Clone> Default for RowIndex<K> {
    fn default() -> Self {
        Self::new()
    }
}

struct Pivot<F> {
    vec: SparseVec<F>,
    combo: SparseVec<F>,
}

/// Incremental column echelon form.
pub struct Echelon<F> {
    pivots: HashMap<usize, Pivot<F>>,
    kernel: Vec<SparseVec<F>>,
    ncols: usize,
}

/// Outcome of solving `sum_j x_j * col_j = target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solve<F> {
    /// One solution, or `None` when the target is outside the column span.
    pub solution: Option<Vec<F>>,
    /// Basis of the solution space of the homogeneous system.
    pub kernel: Vec<Vec<F>>,
}

impl<F: Field> Solve<F> {
    pub fn is_unique(&self) -> bool {
        self.kernel.is_empty()
    }
}

fn axpy<F: Field>(y: &mut SparseVec<F>, a: &F, x: &SparseVec<F>) {
    if a.is_zero() {
        return;
    }
    for (k, v) in x {
        let d = a.clone() * v.clone();
        match y.entry(*k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(d);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &d;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Echelon { pivots: HashMap::new(), kernel: Vec::new(), ncols: 0 }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Reduce `v`; returns the residual and the combination subtracted.
    fn reduce(&self, mut v: SparseVec<F>, mut combo: SparseVec<F>) -> (SparseVec<F>, SparseVec<F>) {
        let mut bound = usize::MAX;
        loop {
            let next = v.range(..bound).next_back().map(|(k, c)| (*k, c.clone()));
            let Some((row, c)) = next else { break };
            match self.pivots.get(&row) {
                Some(p) => {
                    let lead = p.vec.get(&row).expect("pivot row present");
                    let factor = -(c * lead.inv().expect("nonzero pivot"));
                    axpy(&mut v, &factor, &p.vec);
                    axpy(&mut combo, &factor, &p.combo);
                }
                None => bound = row,
            }
        }
        (v, combo)
    }

    pub fn push_column(&mut self, col: SparseVec<F>) {
        let j = self.ncols;
        self.ncols += 1;
        let mut combo = SparseVec::new();
        combo.insert(j, F::one());
        let (v, combo) = self.reduce(col, combo);
        match v.keys().next_back() {
            Some(&row) => {
                self.pivots.insert(row, Pivot { vec: v, combo });
            }
            None => self.kernel.push(combo),
        }
    }

    fn densify(&self, v: &SparseVec<F>) -> Vec<F> {
        let mut out = vec![F::zero(); self.ncols];
        for (k, c) in v {
            out[*k] = c.clone();
        }
        out
    }

    pub fn solve(&self, target: &SparseVec<F>) -> Solve<F> {
        let (residual, combo) = self.reduce(target.clone(), SparseVec::new());
        let solution = residual.is_empty().then(|| {
            // target - sum(combo) reduced to zero, so x = -combo
            let neg: SparseVec<F> = combo.into_iter().map(|(k, c)| (k, -c)).collect();
            self.densify(&neg)
        });
        Solve { solution, kernel: self.kernel.iter().map(|k| self.densify(k)).collect() }
    }
}

impl<F: Field> Default for Echelon<F> {
    fn default() -> Self {
        Self::new()
    }
}

/// Solve `sum_j x_j * cols[j] = target` exactly.
pub fn solve<F: Field>(cols: &[SparseVec<F>], target: &SparseVec<F>) -> Solve<F> {
    let mut e = Echelon::new();
    for c in cols {
        e.push_column(c.clone());
    }
    e.solve(target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_integer(BigInt::from(n))
    }

    fn sv(entries: &[(usize, i64)]) -> SparseVec<Q> {
        entries.iter().filter(|e| e.1 != 0).map(|&(k, v)| (k, q(v))).collect()
    }

    fn apply(cols: &[SparseVec<Q>], x: &[Q]) -> SparseVec<Q> {
        let mut out = SparseVec::new();
        for (c, a) in cols.iter().zip(x) {
            axpy(&mut out, a, c);
        }
        out
    }

    #[test]
    fn unique_solution() {
        let cols = vec![sv(&[(0, 1), (1, 1)]), sv(&[(0, 1), (1, -1)])];
        let t = sv(&[(0, 3), (1, 1)]);
        let s = solve(&cols, &t);
        assert_eq!(s.solution, Some(vec![q(2), q(1)]));
        assert!(s.is_unique());
    }

    #[test]
    fn infeasible_and_kernel() {
        let cols = vec![sv(&[(0, 1)]), sv(&[(0, 2)]), sv(&[(1, 1), (0, 1)])];
        let s = solve(&cols, &sv(&[(2, 1)]));
        assert!(s.solution.is_none());
        assert_eq!(s.kernel.len(), 1);
        assert!(apply(&cols, &s.kernel[0]).is_empty());
        let s = solve(&cols, &sv(&[(0, 5), (1, 2)]));
        let x = s.solution.unwrap();
        assert_eq!(apply(&cols, &x), sv(&[(0, 5), (1, 2)]));
    }

    #[test]
    fn random_systems_round_trip() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let ncols = rng.gen_range(1..6);
            let cols: Vec<_> = (0..ncols)
                .map(|_| {
                    (0..6).filter_map(|r| {
                        let v: i64 = rng.gen_range(-2..=2);
                        (v != 0).then(|| (r, q(v)))
                    }).collect::<SparseVec<Q>>()
                })
                .collect();
            let x: Vec<Q> = (0..ncols).map(|_| q(rng.gen_range(-3..=3))).collect();
            let t = apply(&cols, &x);
            let s = solve(&cols, &t);
            let y = s.solution.expect("target built inside the span");
            assert_eq!(apply(&cols, &y), t);
            for k in &s.kernel {
                assert!(apply(&cols, k).is_empty());
            }
        }
    }
}
