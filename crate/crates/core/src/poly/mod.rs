//! Sparse exact multivariate polynomials.

mod linear;
mod monomial;
mod parse;
mod polynomial;

pub use linear::LinearMap;
pub use monomial::{monomials_of_degree, Monomial, MAX_VARS};
pub use parse::parse_polynomial;
pub use polynomial::{default_names, Polynomial};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("ring mismatch: {left} variables vs {right} variables")]
    RingMismatch { left: usize, right: usize },
    #[error("polynomial is not divisible")]
    NotDivisible,
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("shape mismatch: expected {expected} variables, found {found}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

/// Monomials of degree `d` in the given variables (all variables if `vars`
/// is `None`), in decreasing graded-lex order.
pub fn monomial_basis(nvars: usize, d: u32, vars: Option<&[usize]>) -> Vec<Monomial> {
    match vars {
        Some(v) => monomials_of_degree(v, d),
        None => monomials_of_degree(&(0..nvars).collect::<Vec<_>>(), d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_examples() {
        let b = monomial_basis(2, 1, None);
        assert_eq!(b, vec![Monomial::var(0), Monomial::var(1)]);
        let b = monomial_basis(2, 2, None);
        assert_eq!(b.len(), 3);
        assert_eq!(b[0], Monomial::from_exponents(&[2, 0]));
        assert_eq!(b[1], Monomial::from_exponents(&[1, 1]));
        assert_eq!(b[2], Monomial::from_exponents(&[0, 2]));
        let only_x2 = monomial_basis(3, 2, Some(&[1]));
        assert_eq!(only_x2, vec![Monomial::from_exponents(&[0, 2, 0])]);
    }
}
