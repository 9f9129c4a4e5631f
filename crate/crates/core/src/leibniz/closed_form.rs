//! The type-A rule for complete symmetric polynomials: for the Grassmannian
//! atom, `T_{q_1}(h_i(X)) = h_{i-1}(X ∪ {n})` and all other terms vanish.

use crate::poly::Polynomial;
use crate::scalar::Coeff;
use crate::symmetric::complete_symmetric;

use super::{Direction, LeibnizCertificate, LeibnizContext, LeibnizError, Outcome};

#[derive(Clone, Debug)]
pub struct ClosedFormReport<C: Coeff> {
    pub i: u32,
    pub certificate: LeibnizCertificate<C>,
    /// The closed form satisfies the rule for every dual-basis element.
    pub verified: bool,
    /// The solver returns exactly the closed form.
    pub matches_solver: bool,
    pub unique: bool,
}

/// Build and check the closed-form certificate for `f = h_i(x_1..x_a)`.
///
/// `ctx` must be the Grassmannian atom for `(a, b)` over the permutation
/// realization of `S_{a+b}`.
pub fn closed_form_type_a<C: Coeff>(ctx: &LeibnizContext<C>, a: usize, b: usize, i: u32) -> Result<ClosedFormReport<C>, LeibnizError> {
    let r = ctx.realization();
    let n = a + b;
    if r.nvars() != n || ctx.lower().len() != a.min(b) {
        return Err(LeibnizError::Invalid(format!("context is not the Grassmannian atom for ({a}, {b})")));
    }
    let x: Vec<usize> = (0..a).collect();
    let f: Polynomial<C> = complete_symmetric(n, &x, i);
    let mut values = vec![r.zero(); ctx.lower().len()];
    if i > 0 && !values.is_empty() {
        let mut xn = x.clone();
        xn.push(n - 1);
        values[0] = complete_symmetric(n, &xn, i - 1);
    }
    let certificate = ctx.certificate(Direction::Rightward, f.clone(), values, true);
    let verified = ctx.verify(&certificate)?;
    let (matches_solver, unique) = match ctx.solve(&f, Direction::Rightward)? {
        Outcome::Feasible(c) => (c.values() == certificate.values(), c.unique),
        Outcome::Infeasible(_) => (false, false),
    };
    let certificate = LeibnizCertificate { unique, ..certificate };
    Ok(ClosedFormReport { i, certificate, verified, matches_solver, unique })
}
