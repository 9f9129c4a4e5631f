use std::collections::HashMap;



use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::PolyError;
use crate::scalar::Coeff;

/// A linear substitution of variables, `x_j -> sum_k m[j][k] x_k`.
///
/// Applied to polynomials it is the ring endomorphism sending each variable
/// to its image, so `a.compose(&b).apply(f) == a.apply(&b.apply(f))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap<C> {
    images: Vec<Vec<C>>,
    perm: Option<Vec<usize>>,
}

impl<C: Coeff> LinearMap<C> {
    pub fn new(images: Vec<Vec<C>>) -> Result<Self, PolyError> {
        let n = images.len();
        if images.iter().any(|row| row.len() != n) {
            return Err(PolyError::ShapeMismatch { expected: n, found: images.iter().map(Vec::len).max().unwrap_or(0) });
        }
        let perm = detect_permutation(&images);
        Ok(LinearMap { images, perm })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_permutation(&(0..n).collect::<Vec<_>>())
    }

    /// The map `x_j -> x_{perm[j]}`.
    pub fn from_permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let images = perm
            .iter()
            .map(|&p| (0..n).map(|k| if k == p { C::one() } else { C::zero() }).collect())
            .collect();
        LinearMap { images, perm: Some(perm.to_vec()) }
    }

    pub fn nvars(&self) -> usize {
        self.images.len()
    }

    /// Coefficients of the image of `x_j`.
    pub fn image(&self, j: usize) -> &[C] {
        &self.images[j]
    }

    pub fn as_permutation(&self) -> Option<&[usize]> {
        self.perm.as_deref()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.as_ref().is_some_and(|p| p.iter().enumerate().all(|(i, &j)| i == j))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.nvars(), other.nvars(), "linear maps of different sizes");
        if let (Some(p), Some(q)) = (&self.perm, &other.perm) {
            return Self::from_permutation(&q.iter().map(|&j| p[j]).collect::<Vec<_>>());
        }
        let n = self.nvars();
        let images = other
            .images
            .iter()
            .map(|row| {
                let mut out = vec![C::zero(); n];
                for (k, c) in row.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (l, d) in self.images[k].iter().enumerate() {
                        if !d.is_zero() {
                            out[l] += &(c.clone() * d.clone());
                        }
                    }
                }
                out
            })
            .collect::<Vec<_>>();
        let perm = detect_permutation(&images);
        LinearMap { images, perm }
    }

    /// Apply the substitution to a linear form given by its coefficient vector.
    pub fn apply_vector(&self, v: &[C]) -> Vec<C> {
        let n = self.nvars();
        let mut out = vec![C::zero(); n];
        for (j, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, d) in self.images[j].iter().enumerate() {
                if !d.is_zero() {
                    out[k] += &(c.clone() * d.clone());
                }
            }
        }
        out
    }

    pub fn apply(&self, f: &Polynomial<C>) -> Result<Polynomial<C>, PolyError> {
        if f.nvars() != self.nvars() {
            return Err(PolyError::ShapeMismatch { expected: self.nvars(), found: f.nvars() });
        }
        if let Some(p) = &self.perm {
            return Ok(f.permute_vars(p));
        }
        let n = self.nvars();
        let lin: Vec<Polynomial<C>> = self.images.iter().map(|row| Polynomial::linear(row)).collect();
        let mut powers: HashMap<(usize, u32), Polynomial<C>> = HashMap::new();
        let mut out = Polynomial::zero(n);
        for (m, c) in f.terms() {
            let mut term = Polynomial::constant(n, c.clone());
            for (j, l) in lin.iter().enumerate() {
                let e = m.exp(j);
                if e == 0 {
                    continue;
                }
                if self.perm_like_var(j) {
                    // image is a single variable times a scalar
                    let (k, a) = self.single(j);
                    let mut mono = Monomial::ONE;
                    mono.set(k, e);
                    let mut s = C::one();
                    for _ in 0..e {
                        s *= &a;
                    }
                    term = term.mul_monomial(&mono).scale(&s);
                    continue;
                }
                let pw = powers.entry((j, e)).or_insert_with(|| l.pow(e));
                term = &term * &*pw;
            }
            out += &term;
        }
        Ok(out)
    }

    fn perm_like_var(&self, j: usize) -> bool {
        self.images[j].iter().filter(|c| !c.is_zero()).count() == 1
    }

    fn single(&self, j: usize) -> (usize, C) {
        self.images[j]
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.clone()))
            .expect("nonzero image")
    }
}

fn detect_permutation<C: Coeff>(images: &[Vec<C>]) -> Option<Vec<usize>> {
    let n = images.len();
    let mut perm = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for row in images {
        let mut hit = None;
        for (k, c) in row.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if hit.is_some() || !c.is_one() {
                return None;
            }
            hit = Some(k);
        }
        let k = hit?;
        if seen[k] {
            return None;
        }
        seen[k] = true;
        perm.push(k);
    }
    Some(perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use crate::poly::default_names;
    use num_bigint::BigInt;

    fn p(s: &str, n: usize) -> Polynomial<BigInt> {
        parse_polynomial(s, &default_names(n)).unwrap()
    }

    fn m(rows: &[&[i64]]) -> LinearMap<BigInt> {
        LinearMap::new(rows.iter().map(|r| r.iter().map(|&c| BigInt::from(c)).collect()).collect()).unwrap()
    }

    #[test]
    fn swap_and_identity() {
        let swap = m(&[&[0, 1], &[1, 0]]);
        assert!(swap.as_permutation().is_some());
        assert_eq!(swap.apply(&p("x1*x2^2", 2)).unwrap(), p("x2*x1^2", 2));
        let f = p("3*x1^2 - x2 + 7", 2);
        assert_eq!(LinearMap::identity(2).apply(&f).unwrap(), f);
    }

    #[test]
    fn general_substitution() {
        // x1 -> x1 + x2, x2 -> -x2
        let a = m(&[&[1, 1], &[0, -1]]);
        assert_eq!(a.apply(&p("x1*x2", 2)).unwrap(), p("-x1*x2 - x2^2", 2));
    }

    #[test]
    fn composition_matches_sequential_application() {
        let a = m(&[&[1, 1, 0], &[0, -1, 0], &[2, 0, 1]]);
        let b = m(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
        let f = p("x1^2*x3 - 4*x2*x3 + x1", 3);
        let lhs = a.apply(&b.apply(&f).unwrap()).unwrap();
        assert_eq!(a.compose(&b).apply(&f).unwrap(), lhs);
    }

    #[test]
    fn shape_errors() {
        let bad = LinearMap::<BigInt>::new(vec![vec![BigInt::from(1)], vec![]]);
        assert!(bad.is_err());
        assert!(LinearMap::<BigInt>::identity(2).apply(&p("x1", 3)).is_err());
    }
}
