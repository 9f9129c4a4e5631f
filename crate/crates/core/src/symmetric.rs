//! Complete homogeneous, elementary and Schur polynomials in subsets of
//! variables, plus the divided-difference rule for `h_i`.

use crate::poly::{monomial_basis, Polynomial};
use crate::realization::Realization;
use crate::scalar::Coeff;

/// `h_i(X)`: sum of all degree-`i` monomials in the variables `vars`.
pub fn complete_symmetric<C: Coeff>(nvars: usize, vars: &[usize], i: u32) -> Polynomial<C> {
    Polynomial::from_terms(nvars, monomial_basis(nvars, i, Some(vars)).into_iter().map(|m| (m, C::one())))
}

pub fn complete_symmetric_in<C: Coeff>(r: &Realization<C>, vars: &[usize], i: u32) -> Polynomial<C> {
    complete_symmetric(r.nvars(), vars, i)
}

/// `e_i(X)`: sum of squarefree degree-`i` monomials in `vars`.
pub fn elementary<C: Coeff>(nvars: usize, vars: &[usize], i: u32) -> Polynomial<C> {
    Polynomial::from_terms(
        nvars,
        monomial_basis(nvars, i, Some(vars))
            .into_iter()
            .filter(|m| vars.iter().all(|&v| m.exp(v) <= 1))
            .map(|m| (m, C::one())),
    )
}

/// Schur polynomial `s_λ(X)` by the Jacobi–Trudi determinant `det(h_{λ_i - i + j})`.
pub fn schur<C: Coeff>(nvars: usize, vars: &[usize], lambda: &[u32]) -> Polynomial<C> {
    let parts: Vec<u32> = lambda.iter().copied().filter(|&p| p > 0).collect();
    let k = parts.len();
    if k > vars.len() {
        return Polynomial::zero(nvars);
    }
    let entry = |i: usize, j: usize| -> Polynomial<C> {
        let d = parts[i] as i64 - i as i64 + j as i64;
        if d < 0 {
            Polynomial::zero(nvars)
        } else {
            complete_symmetric(nvars, vars, d as u32)
        }
    };
    let m: Vec<Vec<Polynomial<C>>> = (0..k).map(|i| (0..k).map(|j| entry(i, j)).collect()).collect();
    determinant(nvars, &m)
}

fn determinant<C: Coeff>(nvars: usize, m: &[Vec<Polynomial<C>>]) -> Polynomial<C> {
    let k = m.len();
    if k == 0 {
        return Polynomial::one(nvars);
    }
    let mut acc = Polynomial::zero(nvars);
    for col in 0..k {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial<C>>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, p)| p.clone()).collect()).collect();
        let term = &m[0][col] * &determinant(nvars, &minor);
        if col % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

/// Partitions fitting in an `a × b` box (at most `a` parts, each at most `b`),
/// listed by increasing size.
pub fn partitions_in_box(a: usize, b: u32) -> Vec<Vec<u32>> {
    fn rec(a: usize, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(prefix.clone());
        if prefix.len() == a {
            return;
        }
        for p in 1..=max {
            prefix.push(p);
            rec(a, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(a, b, &mut Vec::new(), &mut out);
    out.sort_by_key(|l| (l.iter().sum::<u32>(), std::cmp::Reverse(l.clone())));
    out
}

/// `∂_j h_i(X)` for the transposition of variables `j` and `j+1` (0-based):
/// `h_{i-1}(X ∪ {j+1})` if only `j ∈ X`, `-h_{i-1}(X ∪ {j})` if only
/// `j+1 ∈ X`, and zero otherwise.
pub fn demazure_h_rule<C: Coeff>(nvars: usize, j: usize, vars: &[usize], i: u32) -> Polynomial<C> {
    let has = |v: usize| vars.contains(&v);
    if i == 0 || has(j) == has(j + 1) {
        return Polynomial::zero(nvars);
    }
    let mut bigger = vars.to_vec();
    if has(j) {
        bigger.push(j + 1);
        complete_symmetric(nvars, &bigger, i - 1)
    } else {
        bigger.push(j);
        -complete_symmetric(nvars, &bigger, i - 1)
    }
}
