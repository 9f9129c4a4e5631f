//! Moving certificates between realizations, and reducing an atom inside a
//! product of Coxeter groups to its connected factor.

use std::collections::{BTreeMap, BTreeSet};

use crate::poly::{Monomial, Polynomial};
use crate::scalar::Coeff;

use super::{Direction, LeibnizCertificate, LeibnizContext, LeibnizError, Outcome, Term};

/// Map `f` and every `T_q(f)` through `map` and re-verify in `target`.
///
/// The target context must have the same lower cosets, as it does after
/// enlarging, quotienting or specializing the realization.
pub fn transport_certificate<C: Coeff, D: Coeff>(
    cert: &LeibnizCertificate<C>,
    target: &LeibnizContext<D>,
    map: impl Fn(&Polynomial<C>) -> Polynomial<D>,
) -> Result<LeibnizCertificate<D>, LeibnizError> {
    if cert.terms.len() != target.lower().len() {
        return Err(LeibnizError::Invalid("lower cosets do not correspond".into()));
    }
    let mut terms = Vec::with_capacity(cert.terms.len());
    for (t, lq) in cert.terms.iter().zip(target.lower()) {
        if t.coset.min() != lq.coset.min() {
            return Err(LeibnizError::Invalid("lower cosets do not correspond".into()));
        }
        terms.push(Term { coset: lq.coset.clone(), value: map(&t.value), invariance: t.invariance });
    }
    let out = LeibnizCertificate {
        direction: cert.direction,
        f: map(&cert.f),
        terms,
        verified_on: target.dual_bases().len(),
        unique: cert.unique,
    };
    if !target.verify(&out)? {
        return Err(LeibnizError::Verification("transported certificate fails in the new realization".into()));
    }
    Ok(out)
}

/// Solve in `big` by reducing to the connected factor `small`.
///
/// Generator `k` of `small` is generator `gen_map[k]` of `big`, and the
/// variables of `small` are the first variables of `big`. The remaining
/// generators of `M` must permute monomials in the remaining variables.
/// Writing `f = Σ_O f_O m_O` with `m_O` the orbit sums in the remaining
/// variables gives `T_q(f) = Σ_O m_O T'_{q'}(f_O)`.
pub fn connected_reduction<C: Coeff>(
    big: &LeibnizContext<C>,
    small: &LeibnizContext<C>,
    gen_map: &[usize],
    f: &Polynomial<C>,
    direction: Direction,
) -> Result<LeibnizCertificate<C>, LeibnizError> {
    let r = big.realization();
    let sys = r.system();
    let k = small.realization().nvars();
    let nv = r.nvars();
    r.require_invariant(f, big.j())?;

    let mut matching = Vec::with_capacity(big.lower().len());
    for lq in big.lower() {
        let idx = small.lower().iter().position(|sq| {
            let word: Vec<usize> = sq.min_word().iter().map(|&g| gen_map[g]).collect();
            sys.from_word(&word) == *lq.coset.min()
        });
        matching.push(idx.ok_or_else(|| LeibnizError::Invalid("lower cosets do not correspond".into()))?);
    }

    let mut split: BTreeMap<Monomial, Polynomial<C>> = BTreeMap::new();
    for (m, c) in f.terms() {
        let mut inner = Monomial::ONE;
        let mut outer = *m;
        for v in 0..k {
            inner.set(v, m.exp(v));
            outer.set(v, 0);
        }
        split.entry(outer).or_insert_with(|| Polynomial::zero(k)).add_term(inner, c.clone());
    }

    let others: Vec<usize> = big.m().iter().filter(|g| !gen_map.contains(g)).collect();
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut values = vec![r.zero(); big.lower().len()];
    let mut unique = true;
    for (mu, f_mu) in &split {
        if seen.contains(mu) {
            continue;
        }
        let mut orbit = vec![*mu];
        seen.insert(*mu);
        let mut next = 0;
        while next < orbit.len() {
            let x = Polynomial::monomial(nv, orbit[next], C::one());
            next += 1;
            for &s in &others {
                let y = r.act_gen(s, &x);
                let (ym, yc) = match y.leading_term() {
                    Some((m, c)) if y.num_terms() == 1 => (*m, c.clone()),
                    _ => return Err(LeibnizError::Invalid("generator outside the factor does not permute monomials".into())),
                };
                if yc != C::one() {
                    return Err(LeibnizError::Invalid("generator outside the factor does not permute monomials".into()));
                }
                if seen.insert(ym) {
                    orbit.push(ym);
                }
            }
        }
        for m in &orbit {
            if split.get(m) != Some(f_mu) {
                return Err(LeibnizError::Invalid("f is not invariant under the outer generators".into()));
            }
        }
        let m_o = Polynomial::from_terms(nv, orbit.iter().map(|m| (*m, C::one())));
        let cert = match small.solve(f_mu, direction)? {
            Outcome::Feasible(c) => c,
            Outcome::Infeasible(_) => return Err(LeibnizError::Verification("connected factor is infeasible".into())),
        };
        unique &= cert.unique;
        for (q, &sq) in matching.iter().enumerate() {
            let t = cert.terms[sq].value.extend_vars(nv);
            if !t.is_zero() {
                values[q] += &(&m_o * &t);
            }
        }
    }
    let out = big.certificate(direction, f.clone(), values, unique);
    if !big.verify(&out)? {
        return Err(LeibnizError::Verification("reduced certificate fails in the product".into()));
    }
    Ok(out)
}
