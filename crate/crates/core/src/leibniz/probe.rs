//! Probing whether a non-atomic coset admits a naive Leibniz rule
//! `∂_q(fg) = y_q(f) ∂_q(g) + Σ_{r<q} ∂_{y_r}(T_r(f) g)` with unconstrained `T_r`.

use crate::coxeter::Subset;
use crate::poly::Polynomial;
use crate::scalar::Coeff;

use super::{Direction, Kind, LeibnizCertificate, LeibnizContext, LeibnizError};

#[derive(Clone, Debug)]
pub enum ProbeOutcome<C: Coeff> {
    /// A rule exists for every probed `f`; one certificate each.
    Feasible(Vec<LeibnizCertificate<C>>),
    /// No operator values make the rule hold for both `g = 1` and `g`.
    Counterexample { f: Polynomial<C>, g: Polynomial<C> },
}

impl<C: Coeff> ProbeOutcome<C> {
    pub fn is_feasible(&self) -> bool {
        matches!(self, ProbeOutcome::Feasible(_))
    }
}

/// Try the naive rule on each `f`. If it fails for some `f`, search for a
/// pair `(f, g)` with `g ∈ R^J` such that the rule already fails on `{1, g}`,
/// trying linear invariants `g` for every failing `f` before the dual basis.
pub fn naive_rule_probe<C: Coeff>(ctx: &LeibnizContext<C>, fs: &[Polynomial<C>]) -> Result<ProbeOutcome<C>, LeibnizError> {
    let r = ctx.realization();
    let mut certs = Vec::new();
    let mut failing = Vec::new();
    for f in fs {
        match ctx.solve_kind(f, Kind::Naive, None)? {
            Ok(sol) => {
                let mut cert = ctx.certificate(Direction::Rightward, f.clone(), sol.terms, sol.unique);
                for t in &mut cert.terms {
                    t.invariance = Subset::EMPTY;
                }
                certs.push(cert);
            }
            Err(_) => failing.push(f),
        }
    }
    if failing.is_empty() {
        return Ok(ProbeOutcome::Feasible(certs));
    }
    let linear: Vec<Polynomial<C>> = r.invariant_basis(ctx.j(), 1).iter().cloned().collect();
    for candidates in [&linear[..], ctx.dual_bases().c()] {
        for f in &failing {
            for g in candidates {
                let pair = [r.one(), g.clone()];
                if ctx.solve_kind(f, Kind::Naive, Some(&pair))?.is_err() {
                    return Ok(ProbeOutcome::Counterexample { f: (*f).clone(), g: g.clone() });
                }
            }
        }
    }
    Err(LeibnizError::Invalid("rule fails on the dual basis but on no single g".into()))
}
