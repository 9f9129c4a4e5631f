use std::cmp::Ordering;
use std::fmt;

/// Maximum number of variables a polynomial ring may have.
pub const MAX_VARS: usize = 16;

/// A monomial `x1^e1 * ... * xn^en`.
///
/// Exponents are packed into a fixed array so monomials are `Copy`; slots past
/// the ring's variable count are always zero. Ordering is graded
/// lexicographic with `x1 > x2 > ...`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    deg: u32,
    exps: [u8; MAX_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { deg: 0, exps: [0; MAX_VARS] };

    pub fn one() -> Self {
        Self::ONE
    }

    /// The monomial `x_var` (0-based index).
    pub fn var(var: usize) -> Self {
        let mut m = Self::ONE;
        m.set(var, 1);
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables supported");
        let mut m = Self::ONE;
        for (i, &e) in exps.iter().enumerate() {
            m.set(i, e);
        }
        m
    }

    #[inline]
    pub fn exp(&self, var: usize) -> u32 {
        self.exps[var] as u32
    }

    #[inline]
    pub fn set(&mut self, var: usize, e: u32) {
        let e8 = u8::try_from(e).expect("exponent exceeds 255");
        self.deg = self.deg - self.exps[var] as u32 + e;
        self.exps[var] = e8;
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    /// Index one past the last variable with a nonzero exponent.
    pub fn support_len(&self) -> usize {
        self.exps.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u8; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].checked_add(other.exps[i]).expect("exponent exceeds 255");
        }
        Monomial { deg: self.deg + other.deg, exps }
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = [0u8; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].checked_sub(other.exps[i])?;
        }
        Some(Monomial { deg: self.deg - other.deg, exps })
    }

    /// Apply a permutation of variables: `x_i` goes to `x_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        let mut exps = [0u8; MAX_VARS];
        for (i, &p) in perm.iter().enumerate() {
            exps[p] = self.exps[i];
        }
        Monomial { deg: self.deg, exps }
    }

    /// Remove variable `var`, returning its exponent and the rest.
    pub fn split_off(&self, var: usize) -> (u32, Monomial) {
        let mut rest = *self;
        let e = rest.exp(var);
        rest.set(var, 0);
        (e, rest)
    }

    pub fn fmt_with(&self, names: &[String], f: &mut impl fmt::Write) -> fmt::Result {
        let mut first = true;
        for (i, name) in names.iter().enumerate() {
            let e = self.exp(i);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_char('*')?;
            }
            first = false;
            f.write_str(name)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_char('1')?;
        }
        Ok(())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg.cmp(&other.deg).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.support_len();
        write!(f, "x^{:?}", &self.exps[..n])
    }
}

/// All monomials of total degree `d` in the variables listed in `vars`,
/// in decreasing graded-lex order.
pub fn monomials_of_degree(vars: &[usize], d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = Monomial::ONE;
    fill(vars, d, &mut cur, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn fill(vars: &[usize], d: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
    match vars {
        [] => {
            if d == 0 {
                out.push(*cur);
            }
        }
        [v] => {
            cur.set(*v, d);
            out.push(*cur);
            cur.set(*v, 0);
        }
        [v, rest @ ..] => {
            for e in (0..=d).rev() {
                cur.set(*v, e);
                fill(rest, d - e, cur, out);
            }
            cur.set(*v, 0);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let a = Monomial::from_exponents(&[2, 0]);
        let b = Monomial::from_exponents(&[1, 1]);
        let c = Monomial::from_exponents(&[0, 2]);
        let d = Monomial::from_exponents(&[3]);
        assert!(a > b && b > c && d > a);
    }

    #[test]
    fn degree_tracks_updates() {
        let mut m = Monomial::from_exponents(&[1, 2, 3]);
        assert_eq!(m.degree(), 6);
        m.set(1, 0);
        assert_eq!(m.degree(), 4);
        assert_eq!(m.mul(&m).degree(), 8);
        assert_eq!(m.div(&Monomial::var(2)).unwrap().degree(), 3);
        assert!(Monomial::var(1).div(&Monomial::var(0)).is_none());
    }

    #[test]
    fn enumeration_counts() {
        // C(d + n - 1, n - 1)
        assert_eq!(monomials_of_degree(&[0, 1, 2], 4).len(), 15);
        assert_eq!(monomials_of_degree(&[], 0).len(), 1);
        assert_eq!(monomials_of_degree(&[], 1).len(), 0);
        let b = monomials_of_degree(&[0, 1], 2);
        assert_eq!(b, vec![
            Monomial::from_exponents(&[2, 0]),
            Monomial::from_exponents(&[1, 1]),
            Monomial::from_exponents(&[0, 2]),
        ]);
    }
}
