//! Iterated twisted Leibniz expansion `∂_w(fg) = Σ_x T'_x(f) ∂_x(g)`.

use std::collections::BTreeMap;

use crate::coxeter::GroupElement;
use crate::poly::Polynomial;
use crate::realization::Realization;
use crate::scalar::Coeff;

use super::LeibnizError;

/// `x ↦ T'_x(f)` for the reduced word `s_1 ... s_n`, where
/// `T'_x(f) = Σ_{e : w^e = x} θ^e_1 ∘ ... ∘ θ^e_n (f)` with `θ = s` when
/// the letter is kept and `θ = ∂` when it is dropped. Only reduced
/// subexpressions contribute, since `∂_s ∂_x = 0` when `sx < x`. Zero entries
/// are omitted.
pub fn iterated_leibniz<C: Coeff>(
    r: &Realization<C>,
    word: &[usize],
    f: &Polynomial<C>,
) -> Result<BTreeMap<GroupElement, Polynomial<C>>, LeibnizError> {
    let sys = r.system();
    if !sys.is_reduced(word) {
        return Err(LeibnizError::NonReduced(sys.word_text(word)));
    }
    let mut state: BTreeMap<GroupElement, Polynomial<C>> = BTreeMap::new();
    state.insert(sys.identity(), f.clone());
    for &s in word.iter().rev() {
        let mut next: BTreeMap<GroupElement, Polynomial<C>> = BTreeMap::new();
        for (x, p) in state {
            let kept = r.act_gen(s, &p);
            let dropped = r.demazure(s, &p)?;
            let sx = sys.mul_gen_left(s, &x);
            if !kept.is_zero() && sx.length() > x.length() {
                *next.entry(sx).or_insert_with(|| Polynomial::zero(r.nvars())) += &kept;
            }
            if !dropped.is_zero() {
                *next.entry(x).or_insert_with(|| Polynomial::zero(r.nvars())) += &dropped;
            }
        }
        next.retain(|_, p| !p.is_zero());
        state = next;
    }
    Ok(state)
}

/// `Σ_x T'_x(f) ∂_x(g)`, which must equal `∂_w(fg)`.
pub fn expand_with<C: Coeff>(
    r: &Realization<C>,
    expansion: &BTreeMap<GroupElement, Polynomial<C>>,
    g: &Polynomial<C>,
) -> Result<Polynomial<C>, LeibnizError> {
    let mut acc = Polynomial::zero(r.nvars());
    for (x, t) in expansion {
        acc += &(t * &r.demazure_element(x, g)?);
    }
    Ok(acc)
}
