use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};



use super::monomial::{Monomial, MAX_VARS};
use super::PolyError;
use crate::scalar::Coeff;

/// A sparse polynomial with exact coefficients in `nvars` variables.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality. Arithmetic between polynomials with different variable counts
/// is a ring mismatch: the `checked_*` methods report it, the operator
/// impls panic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> Polynomial<C> {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables supported");
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(nvars, Monomial::ONE, c)
    }

    pub fn from_i64(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, C::from_i64(c))
    }

    /// The variable `x_{var+1}`.
    pub fn var(nvars: usize, var: usize) -> Self {
        assert!(var < nvars, "variable index {var} out of range for {nvars} variables");
        Self::monomial(nvars, Monomial::var(var), C::one())
    }

    pub fn monomial(nvars: usize, m: Monomial, c: C) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(m, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Linear form `sum_j coeffs[j] * x_{j+1}`.
    pub fn linear(coeffs: &[C]) -> Self {
        Self::from_terms(
            coeffs.len(),
            coeffs.iter().enumerate().map(|(j, c)| (Monomial::var(j), c.clone())),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + '_ {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, C)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&Monomial::ONE)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Variables (0-based) that occur in some term.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&v| self.terms.keys().any(|m| m.exp(v) > 0)).collect()
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        debug_assert!(m.support_len() <= self.nvars, "monomial outside ring");
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn sub_term(&mut self, m: Monomial, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(-c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() -= c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_ring(&self, other: &Self) -> Result<(), PolyError> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(PolyError::RingMismatch { left: self.nvars, right: other.nvars })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.sub_term(*m, c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &small.terms {
            for (m2, c2) in &big.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, a)| {
                let v = a.clone() * c.clone();
                (!v.is_zero()).then_some((*m, v))
            })
            .collect();
        Polynomial { nvars: self.nvars, terms }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let terms = self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect();
        Polynomial { nvars: self.nvars, terms }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The homogeneous component of degree `d`.
    pub fn graded_component(&self, d: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == d)
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        Polynomial { nvars: self.nvars, terms }
    }

    /// Nonzero homogeneous components keyed by degree.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, Self> {
        let mut out: BTreeMap<u32, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| Self::zero(self.nvars))
                .terms
                .insert(*m, c.clone());
        }
        out
    }

    /// Exact quotient `q` with `q * g == self`.
    pub fn exact_divide(&self, g: &Self) -> Result<Self, PolyError> {
        self.check_ring(g)?;
        let (lm, lc) = match g.leading_term() {
            None => return Err(PolyError::DivisionByZero),
            Some((m, c)) => (*m, c.clone()),
        };
        let mut rem = self.clone();
        let mut q = Self::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(&lm).ok_or(PolyError::NotDivisible)?;
            let qc = c.exact_div(&lc).ok_or(PolyError::NotDivisible)?;
            for (gm, gc) in &g.terms {
                rem.sub_term(gm.mul(&qm), &(qc.clone() * gc.clone()));
            }
            q.add_term(qm, qc);
        }
        Ok(q)
    }

    /// Rename variables: `x_i` goes to `x_{perm[i]}`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars, "permutation size must match variable count");
        let terms = self.terms.iter().map(|(m, c)| (m.permute(perm), c.clone())).collect();
        Polynomial { nvars: self.nvars, terms }
    }

    /// The same polynomial viewed in a ring with `nvars >= self.nvars()` variables.
    pub fn extend_vars(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars && nvars <= MAX_VARS);
        Polynomial { nvars, terms: self.terms.clone() }
    }

    /// Drop to a ring with fewer variables; `None` if a removed variable occurs.
    pub fn restrict_vars(&self, nvars: usize) -> Option<Self> {
        if self.terms.keys().any(|m| m.support_len() > nvars) {
            return None;
        }
        Some(Polynomial { nvars, terms: self.terms.clone() })
    }

    /// Set the listed variables to zero and renumber the remaining ones.
    pub fn eliminate_vars(&self, killed: &[usize]) -> Self {
        let keep: Vec<usize> = (0..self.nvars).filter(|v| !killed.contains(v)).collect();
        let mut out = Self::zero(keep.len());
        for (m, c) in &self.terms {
            if killed.iter().any(|&v| m.exp(v) > 0) {
                continue;
            }
            let mut nm = Monomial::ONE;
            for (new, &old) in keep.iter().enumerate() {
                nm.set(new, m.exp(old));
            }
            out.add_term(nm, c.clone());
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        let mut out = Polynomial::<D>::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(*m, f(c));
        }
        out
    }

    /// Pass to the fraction field.
    pub fn to_field(&self) -> Polynomial<C::Field> {
        self.map_coeffs(Coeff::to_field)
    }

    /// Pull back from the fraction field; `None` if some coefficient is not integral.
    pub fn from_field(p: &Polynomial<C::Field>) -> Option<Self> {
        let mut out = Self::zero(p.nvars);
        for (m, c) in &p.terms {
            out.terms.insert(*m, C::from_field(c)?);
        }
        Some(out)
    }

    /// Evaluate the constant term of a constant polynomial.
    pub fn as_constant(&self) -> Option<C> {
        self.is_constant().then(|| self.constant_term())
    }

    pub fn to_text(&self, names: &[String]) -> String {
        let mut s = String::new();
        self.write_text(names, &mut s).expect("writing to a String cannot fail");
        s
    }

    fn write_text(&self, names: &[String], out: &mut impl fmt::Write) -> fmt::Result {
        if self.terms.is_empty() {
            return out.write_char('0');
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            match (i, neg) {
                (0, true) => out.write_char('-')?,
                (0, false) => {}
                (_, true) => out.write_str(" - ")?,
                (_, false) => out.write_str(" + ")?,
            }
            let unit = mag == "1";
            if m.degree() == 0 {
                out.write_str(&mag)?;
            } else {
                if !unit {
                    out.write_str(&mag)?;
                    out.write_char('*')?;
                }
                m.fmt_with(names, out)?;
            }
        }
        Ok(())
    }
}

/// Default variable names `x1, ..., xn`.
pub fn default_names(nvars: usize) -> Vec<String> {
    (1..=nvars).map(|i| format!("x{i}")).collect()
}

impl<C: Coeff> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_text(&default_names(self.nvars), f)
    }
}

impl<C: Coeff> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.nvars, self)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<C: Coeff> $tr<&Polynomial<C>> for &Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: &Polynomial<C>) -> Polynomial<C> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<C: Coeff> $tr<Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: Polynomial<C>) -> Polynomial<C> {
                (&self).$method(&rhs)
            }
        }
        impl<C: Coeff> $tr<&Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: &Polynomial<C>) -> Polynomial<C> {
                (&self).$method(rhs)
            }
        }
        impl<C: Coeff> $tr<Polynomial<C>> for &Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: Polynomial<C>) -> Polynomial<C> {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl<C: Coeff> AddAssign<&Polynomial<C>> for Polynomial<C> {
    fn add_assign(&mut self, rhs: &Polynomial<C>) {
        self.check_ring(rhs).unwrap_or_else(|e| panic!("{e}"));
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<C: Coeff> SubAssign<&Polynomial<C>> for Polynomial<C> {
    fn sub_assign(&mut self, rhs: &Polynomial<C>) {
        self.check_ring(rhs).unwrap_or_else(|e| panic!("{e}"));
        for (m, c) in &rhs.terms {
            self.sub_term(*m, c);
        }
    }
}

impl<C: Coeff> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        let terms = self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect();
        Polynomial { nvars: self.nvars, terms }
    }
}

impl<C: Coeff> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        -&self
    }
}

impl<C: Coeff> Polynomial<C> {
    /// Sum of an iterator of polynomials in a ring with `nvars` variables.
    pub fn sum<'a>(nvars: usize, it: impl IntoIterator<Item = &'a Polynomial<C>>) -> Self {
        let mut acc = Self::zero(nvars);
        for p in it {
            acc += p;
        }
        acc
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = Polynomial<BigInt>;

    fn x(n: usize, i: usize) -> P {
        P::var(n, i - 1)
    }

    #[test]
    fn add_cancels_and_merges() {
        let f = &x(2, 1) + &x(2, 2);
        assert_eq!(&f + &(-x(2, 2)), x(2, 1));
        assert_eq!(&f + &P::zero(2), f);
        let m = &x(2, 1) * &x(2, 2);
        assert_eq!((&m + &m).to_string(), "2*x1*x2");
    }

    #[test]
    fn mul_difference_of_squares() {
        let f = &(&x(2, 1) - &x(2, 2)) * &(&x(2, 1) + &x(2, 2));
        assert_eq!(f.to_string(), "x1^2 - x2^2");
        assert_eq!(&f * &P::one(2), f);
    }

    #[test]
    fn ring_mismatch_is_reported() {
        assert_eq!(
            x(2, 1).checked_add(&x(3, 1)),
            Err(PolyError::RingMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn exact_division_cases() {
        let f = &x(3, 1).pow(2) - &x(3, 2).pow(2);
        let g = &x(3, 1) - &x(3, 2);
        assert_eq!(f.exact_divide(&g).unwrap(), &x(3, 1) + &x(3, 2));
        assert!(P::zero(3).exact_divide(&g).unwrap().is_zero());
        assert_eq!((&x(3, 1) - &x(3, 3)).exact_divide(&g), Err(PolyError::NotDivisible));
        assert_eq!(f.exact_divide(&P::zero(3)), Err(PolyError::DivisionByZero));
        let two = P::from_i64(3, 2);
        assert_eq!(f.exact_divide(&two), Err(PolyError::NotDivisible));
    }

    #[test]
    fn graded_components_recompose() {
        let f = &x(2, 1) + &(&x(2, 1) * &x(2, 2));
        assert_eq!(f.graded_component(2), &x(2, 1) * &x(2, 2));
        let comps = f.homogeneous_components();
        assert_eq!(P::sum(2, comps.values()), f);
    }

    #[test]
    fn permutation_of_variables() {
        let f = &x(2, 1) * &x(2, 2).pow(2);
        assert_eq!(f.permute_vars(&[1, 0]), &x(2, 2) * &x(2, 1).pow(2));
    }

    #[test]
    fn text_rendering() {
        let f = &(&x(3, 1).pow(2) * &x(3, 2)).scale(&BigInt::from(3)) - &x(3, 3);
        assert_eq!(f.to_string(), "3*x1^2*x2 - x3");
        assert_eq!((-P::one(1)).to_string(), "-1");
        assert_eq!(P::zero(1).to_string(), "0");
    }
}
