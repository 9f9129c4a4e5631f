//! Exact coefficient rings.
//!
//! Every polynomial, realization and solver in this crate is generic over a
//! [`Coeff`] ring. Linear solves happen over the ring's fraction field
//! ([`Coeff::Field`]) and results are pulled back with an integrality check.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact commutative coefficient ring.
pub trait Coeff:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + Send
    + Sync
    + 'static
{
    /// Fraction field used for linear solves.
    type Field: Field;

    /// Short tag used in reports (`"ZZ"`, `"QQ"`, `"GF(5)"`).
    fn domain_tag() -> String;

    fn from_bigint(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    /// `Some(q)` with `q * d == self`, if such `q` exists in the ring.
    fn exact_div(&self, d: &Self) -> Option<Self>;

    fn is_unit(&self) -> bool;

    fn to_field(&self) -> Self::Field;

    /// Pull a field element back into the ring; `None` if it is not integral.
    fn from_field(x: &Self::Field) -> Option<Self>;

    /// Whether `n` divides this coefficient, for `n` an integer.
    fn divisible_by(&self, n: &BigInt) -> bool;

    /// True when the ideal generated by `coeffs` is the whole ring.
    fn generate_unit_ideal(coeffs: &[Self]) -> bool {
        coeffs.iter().any(Coeff::is_unit)
    }

    fn parse_coeff(s: &str) -> Option<Self>;

    /// `(g, x, y)` with `g = x*a + y*b` generating the ideal `(a, b)`.
    fn bezout(a: &Self, b: &Self) -> (Self, Self, Self);

    /// Scale a field vector to a ring vector spanning the same line.
    fn clear_denominators(v: &[Self::Field]) -> Vec<Self>;
}

fn field_bezout<F: Field>(a: &F, b: &F) -> (F, F, F) {
    if let Some(i) = a.inv() {
        (F::one(), i, F::zero())
    } else if let Some(i) = b.inv() {
        (F::one(), F::zero(), i)
    } else {
        (F::zero(), F::zero(), F::zero())
    }
}

/// A coefficient ring that is a field.
pub trait Field: Coeff<Field = Self> {
    fn inv(&self) -> Option<Self>;
}

impl Coeff for BigInt {
    type Field = BigRational;

    fn domain_tag() -> String {
        "ZZ".into()
    }

    fn from_bigint(n: &BigInt) -> Self {
        n.clone()
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }

    fn to_field(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }

    fn from_field(x: &BigRational) -> Option<Self> {
        x.is_integer().then(|| x.to_integer())
    }

    fn divisible_by(&self, n: &BigInt) -> bool {
        n.is_zero() && self.is_zero() || !n.is_zero() && (self % n).is_zero()
    }

    fn generate_unit_ideal(coeffs: &[Self]) -> bool {
        let g = coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        g.is_one()
    }

    fn parse_coeff(s: &str) -> Option<Self> {
        BigInt::from_str(s.trim()).ok()
    }

    fn bezout(a: &Self, b: &Self) -> (Self, Self, Self) {
        let e = a.extended_gcd(b);
        if e.gcd.is_negative() {
            (-e.gcd, -e.x, -e.y)
        } else {
            (e.gcd, e.x, e.y)
        }
    }

    fn clear_denominators(v: &[BigRational]) -> Vec<Self> {
        let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect()
    }
}

impl Coeff for BigRational {
    type Field = BigRational;

    fn domain_tag() -> String {
        "QQ".into()
    }

    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        (!d.is_zero()).then(|| self / d)
    }

    fn is_unit(&self) -> bool {
        !self.is_zero()
    }

    fn to_field(&self) -> BigRational {
        self.clone()
    }

    fn from_field(x: &BigRational) -> Option<Self> {
        Some(x.clone())
    }

    fn divisible_by(&self, n: &BigInt) -> bool {
        !n.is_zero() || self.is_zero()
    }

    fn parse_coeff(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim()).ok()?;
                let d = BigInt::from_str(d.trim()).ok()?;
                (!d.is_zero()).then(|| BigRational::new(n, d))
            }
            None => BigInt::from_str(s).ok().map(BigRational::from_integer),
        }
    }

    fn bezout(a: &Self, b: &Self) -> (Self, Self, Self) {
        field_bezout(a, b)
    }

    fn clear_denominators(v: &[Self]) -> Vec<Self> {
        v.to_vec()
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

/// Integers modulo a prime `P`, stored as the canonical residue in `0..P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ModP<const P: u64>(u64);

impl<const P: u64> ModP<P> {
    pub fn new(v: i64) -> Self {
        ModP(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = ModP(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> Debug for ModP<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Display for ModP<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for ModP<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        ModP((self.0 + o.0) % P)
    }
}

impl<const P: u64> Sub for ModP<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        ModP((self.0 + P - o.0) % P)
    }
}

impl<const P: u64> Mul for ModP<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        ModP(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for ModP<P> {
    type Output = Self;
    fn neg(self) -> Self {
        ModP((P - self.0) % P)
    }
}

impl<'a, const P: u64> AddAssign<&'a ModP<P>> for ModP<P> {
    fn add_assign(&mut self, o: &'a Self) {
        *self = *self + *o;
    }
}

impl<'a, const P: u64> SubAssign<&'a ModP<P>> for ModP<P> {
    fn sub_assign(&mut self, o: &'a Self) {
        *self = *self - *o;
    }
}

impl<'a, const P: u64> MulAssign<&'a ModP<P>> for ModP<P> {
    fn mul_assign(&mut self, o: &'a Self) {
        *self = *self * *o;
    }
}

impl<const P: u64> Zero for ModP<P> {
    fn zero() -> Self {
        ModP(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for ModP<P> {
    fn one() -> Self {
        ModP(1 % P)
    }
}

impl<const P: u64> Coeff for ModP<P> {
    type Field = Self;

    fn domain_tag() -> String {
        format!("GF({P})")
    }

    fn from_bigint(n: &BigInt) -> Self {
        let r = n.mod_floor(&BigInt::from(P));
        ModP(r.to_u64().expect("residue fits in u64"))
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        d.inv().map(|i| *self * i)
    }

    fn is_unit(&self) -> bool {
        self.0 != 0
    }

    fn to_field(&self) -> Self {
        *self
    }

    fn from_field(x: &Self) -> Option<Self> {
        Some(*x)
    }

    fn divisible_by(&self, n: &BigInt) -> bool {
        Self::from_bigint(n).is_unit() || self.is_zero()
    }

    fn parse_coeff(s: &str) -> Option<Self> {
        BigInt::from_str(s.trim()).ok().map(|n| Self::from_bigint(&n))
    }

    fn bezout(a: &Self, b: &Self) -> (Self, Self, Self) {
        field_bezout(a, b)
    }

    fn clear_denominators(v: &[Self]) -> Vec<Self> {
        v.to_vec()
    }
}

impl<const P: u64> Field for ModP<P> {
    fn inv(&self) -> Option<Self> {
        // P is assumed prime
        (self.0 != 0).then(|| self.pow(P - 2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_exact_division() {
        let a = BigInt::from(12);
        assert_eq!(a.exact_div(&BigInt::from(-4)), Some(BigInt::from(-3)));
        assert_eq!(a.exact_div(&BigInt::from(5)), None);
        assert_eq!(a.exact_div(&BigInt::zero()), None);
    }

    #[test]
    fn integer_unit_ideal_uses_gcd() {
        let cs = [BigInt::from(6), BigInt::from(10), BigInt::from(15)];
        assert!(BigInt::generate_unit_ideal(&cs));
        let cs = [BigInt::from(6), BigInt::from(10)];
        assert!(!BigInt::generate_unit_ideal(&cs));
    }

    #[test]
    fn rational_parse_and_pullback() {
        let x = BigRational::parse_coeff("6/4").unwrap();
        assert_eq!(x, BigRational::new(3.into(), 2.into()));
        assert_eq!(BigInt::from_field(&x), None);
        assert_eq!(BigInt::from_field(&BigRational::from_integer(7.into())), Some(BigInt::from(7)));
    }

    #[test]
    fn modp_field_laws() {
        type F7 = ModP<7>;
        for v in 1..7 {
            let x = F7::new(v);
            assert_eq!(x * x.inv().unwrap(), F7::one());
        }
        assert_eq!(F7::new(-1).value(), 6);
        assert_eq!(F7::from_bigint(&BigInt::from(-15)).value(), 6);
        assert!(BigInt::from(14).divisible_by(&BigInt::from(7)));
    }

    #[test]
    fn bezout_and_denominators() {
        let (g, x, y) = BigInt::bezout(&BigInt::from(-6), &BigInt::from(10));
        assert_eq!(g, BigInt::from(2));
        assert_eq!(x * BigInt::from(-6) + y * BigInt::from(10), g);
        let v = [BigRational::new(1.into(), 2.into()), BigRational::new((-2).into(), 3.into())];
        assert_eq!(BigInt::clear_denominators(&v), vec![BigInt::from(3), BigInt::from(-4)]);
    }
}
