//! Polynomial forcing: writing `1 ⊗ f - a̲(f) ⊗ 1` as a combination of
//! right-sprinkled double leaves through lower cosets.

use crate::frobenius::{canonical_form, BimoduleElement};
use crate::poly::Polynomial;
use crate::scalar::Coeff;

use super::{Direction, Kind, LeibnizContext, LeibnizError, Outcome, Term};

/// Coordinates `b_q ∈ R^{rightred(q)}` of the target element on double leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcingCertificate<C: Coeff> {
    pub f: Polynomial<C>,
    pub coords: Vec<Term<C>>,
    pub unique: bool,
}

pub type ForcingOutcome<C> = Outcome<ForcingCertificate<C>, C>;

/// Canonical form of `1 ⊗ f - y_p(f) ⊗ 1` in `R^I ⊗_{R^M} R^J`.
pub fn target_element<C: Coeff>(ctx: &LeibnizContext<C>, f: &Polynomial<C>) -> Result<BimoduleElement<C>, LeibnizError> {
    let r = ctx.realization();
    let yf = r.act(ctx.lead_y(), f)?;
    Ok(canonical_form(ctx.dual_bases(), ctx.i(), &[(r.one(), f.clone()), (-yf, r.one())])?)
}

/// The element `Σ_i ∂_{y_q}(b c_i) ⊗ d_i` in canonical form, evaluated
/// through `∂_{w_I w_L} ∘ ∂_{q̲}`.
fn double_leaf<C: Coeff>(ctx: &LeibnizContext<C>, q: usize, b: &Polynomial<C>) -> Result<BimoduleElement<C>, LeibnizError> {
    let coeffs = ctx.dual_bases().c().iter().map(|c| ctx.column(Kind::Forcing, q, b, c)).collect::<Result<Vec<_>, _>>()?;
    Ok(BimoduleElement { coeffs })
}

/// Decide whether `1 ⊗ f - a̲(f) ⊗ 1` lies in the span of lower double leaves.
pub fn pf_membership<C: Coeff>(ctx: &LeibnizContext<C>, f: &Polynomial<C>) -> Result<ForcingOutcome<C>, LeibnizError> {
    match ctx.solve_kind(f, Kind::Forcing, None)? {
        Err(inf) => Ok(Outcome::Infeasible(inf)),
        Ok(sol) => {
            let cert = ctx.certificate(Direction::Rightward, f.clone(), sol.terms, sol.unique);
            let fc = ForcingCertificate { f: f.clone(), coords: cert.terms, unique: sol.unique };
            if !verify_forcing(ctx, &fc)? {
                return Err(LeibnizError::Verification("double-leaf coordinates do not reproduce the target".into()));
            }
            Ok(Outcome::Feasible(fc))
        }
    }
}

/// Substitute the coordinates and compare with the canonical target.
pub fn verify_forcing<C: Coeff>(ctx: &LeibnizContext<C>, cert: &ForcingCertificate<C>) -> Result<bool, LeibnizError> {
    let r = ctx.realization();
    let mut acc = BimoduleElement::zero(ctx.dual_bases());
    for (q, t) in cert.coords.iter().enumerate() {
        if !r.is_invariant(&t.value, t.invariance) {
            return Ok(false);
        }
        if !t.value.is_zero() {
            acc = acc.add(&double_leaf(ctx, q, &t.value)?);
        }
    }
    Ok(acc == target_element(ctx, &cert.f)?)
}
