//! Built-in regression suites on the permutation realization of `S_4`.

use std::sync::Arc;

use anyhow::Result;
use atomic_leibniz::cosets::enumerate_cosets;
use atomic_leibniz::coxeter::Subset;
use atomic_leibniz::frobenius::{DualBasisMethod, DualBases};
use atomic_leibniz::leibniz::{Direction, LeibnizContext, Outcome, ProbeOutcome};
use atomic_leibniz::realization::Realization;
use atomic_leibniz::{BigInt, ZPoly};
use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::config::{config_err, RunConfig};
use crate::report::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    S4Examples,
    Relations,
    Frobenius,
    All,
}

type R = Arc<Realization<BigInt>>;

const S: usize = 0;
const T: usize = 1;
const U: usize = 2;

pub fn run(cfg: &RunConfig, suite: Suite) -> Result<Vec<Check>> {
    let r: R = Arc::new(Realization::permutation_with_cap(4, cfg.cap).map_err(|e| config_err(e.to_string()))?);
    let mut checks = Vec::new();
    if matches!(suite, Suite::S4Examples | Suite::All) {
        checks.push(guard("(su,su) atom", || su_su_atom(&r, cfg.degmax)));
        checks.push(guard("(tu,st) atom", || tu_st_atom(&r, cfg.degmax)));
        checks.push(guard("naive rule for y = sut", || naive_rule(&r)));
    }
    if matches!(suite, Suite::Relations | Suite::All) {
        checks.push(guard("operator relations", || relations(&r, cfg.seed)));
    }
    if matches!(suite, Suite::Frobenius | Suite::All) {
        checks.push(guard("Frobenius dual bases", || frobenius(&r, cfg.degmax.min(6))));
    }
    Ok(checks)
}

fn guard(name: &str, f: impl FnOnce() -> Result<(bool, Value)>) -> Check {
    match f() {
        Ok((ok, payload)) => Check::new(name, ok, payload),
        Err(e) => Check::error(name, e),
    }
}

fn basis(r: &R, j: Subset, degmax: u32) -> Vec<ZPoly> {
    (0..=degmax).flat_map(|d| r.invariant_basis(j, d).iter().cloned().collect::<Vec<_>>()).collect()
}

fn su_su_atom(r: &R, degmax: u32) -> Result<(bool, Value)> {
    let ctx = LeibnizContext::atom(r.clone(), r.system().all(), T)?;
    let su = Subset::from_indices([S, U]);
    let fs = basis(r, su, degmax);
    for f in &fs {
        let cert = match ctx.solve(f, Direction::Rightward)? {
            Outcome::Feasible(c) => c,
            Outcome::Infeasible(_) => return Ok((false, json!({ "infeasible": r.show(f) }))),
        };
        let tq = r.act_word(&[S, U], &r.demazure(T, f)?)?;
        let tr = &r.demazure_word(&[T, S, U, T], f)? - &r.demazure_word(&[S, U, T], &tq)?;
        let ok = cert.terms[0].value == tq && cert.terms[1].value == tr && r.is_invariant(&tr, su) && cert.unique && ctx.verify(&cert)?;
        if !ok {
            return Ok((false, json!({ "f": r.show(f), "certificate": ctx.record(&cert) })));
        }
    }
    Ok((true, json!({ "checked": fs.len(), "T_q": "su ∂_t(f)", "T_r": "∂_tsut(f) - ∂_sut(su ∂_t(f))" })))
}

fn tu_st_atom(r: &R, degmax: u32) -> Result<(bool, Value)> {
    let ctx = LeibnizContext::atom(r.clone(), r.system().all(), S)?;
    let fs = basis(r, ctx.j(), degmax);
    for f in &fs {
        let cert = match ctx.solve(f, Direction::Rightward)? {
            Outcome::Feasible(c) => c,
            Outcome::Infeasible(_) => return Ok((false, json!({ "infeasible": r.show(f) }))),
        };
        let tq = r.act_word(&[S, T], &r.demazure(U, f)?)?;
        let ok = cert.terms.len() == 1 && cert.terms[0].value == tq && cert.unique && ctx.verify(&cert)?;
        if !ok {
            return Ok((false, json!({ "f": r.show(f), "certificate": ctx.record(&cert) })));
        }
    }
    Ok((true, json!({ "checked": fs.len(), "T_q": "st ∂_u(f)" })))
}

fn naive_rule(r: &R) -> Result<(bool, Value)> {
    let sys = r.system();
    let su = Subset::from_indices([S, U]);
    let q = enumerate_cosets(sys, su, su, sys.all())?.into_iter().find(|q| sys.reduced_word(q.y()) == vec![S, U, T]);
    let Some(q) = q else {
        return Ok((false, json!({ "error": "no coset with y = sut" })));
    };
    let ctx = LeibnizContext::for_coset(r.clone(), q, sys.all())?;
    match atomic_leibniz::leibniz::naive_rule_probe(&ctx, &basis(r, su, 3))? {
        ProbeOutcome::Counterexample { f, g } => {
            let dt = r.demazure(T, &g)?;
            let linear = g.is_homogeneous() && g.degree() == Some(1) && (dt.is_one() || dt == -r.one());
            Ok((linear, json!({ "f": r.show(&f), "g": r.show(&g) })))
        }
        ProbeOutcome::Feasible(_) => Ok((false, json!({ "error": "naive rule reported feasible" }))),
    }
}

fn relations(r: &R, seed: u64) -> Result<(bool, Value)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random = |rng: &mut ChaCha8Rng| {
        let mut p = r.zero();
        for _ in 0..rng.gen_range(1..=4) {
            let monos = atomic_leibniz::poly::monomial_basis(r.nvars(), rng.gen_range(0..=5), None);
            let m = monos[rng.gen_range(0..monos.len())];
            p.add_term(m, BigInt::from(rng.gen_range(-3i64..=3)));
        }
        p
    };
    let samples = 200;
    for k in 0..samples {
        let f = random(&mut rng);
        let g = random(&mut rng);
        for s in [S, T, U] {
            let d = |p: &ZPoly| r.demazure(s, p);
            let leibniz = d(&(&f * &g))? == &(&r.act_gen(s, &f) * &d(&g)?) + &(&d(&f)? * &g);
            let quad = d(&r.act_gen(s, &f))? == -d(&f)? && d(&d(&f)?)?.is_zero();
            let root = r.root(s) * &d(&f)? == &f - &r.act_gen(s, &f);
            if !(leibniz && quad && root) {
                return Ok((false, json!({ "sample": k, "s": s + 1, "f": r.show(&f), "g": r.show(&g) })));
            }
        }
        for (s, t) in [(S, T), (T, S), (T, U), (U, T)] {
            let braid = r.act_word(&[s, t], &r.demazure(s, &f)?)? == r.demazure(t, &r.act_word(&[s, t], &f)?)?;
            let lhs = &r.demazure_word(&[s, t], &r.act_gen(s, &f))? + &r.demazure_word(&[t, s], &f)?;
            let mixed = lhs == r.act_gen(t, &r.demazure_word(&[s, t], &f)?);
            if !(braid && mixed) {
                return Ok((false, json!({ "sample": k, "f": r.show(&f) })));
            }
        }
    }
    Ok((true, json!({ "samples": samples })))
}

fn frobenius(r: &R, degmax: u32) -> Result<(bool, Value)> {
    let all = r.system().all();
    let mut pairs = 0;
    for m in all.subsets() {
        for j in m.subsets() {
            let db = DualBases::new(r.clone(), m, j, DualBasisMethod::Auto)?;
            let mut ok = db.verify_delta()? && db.degrees_balanced()?;
            for f in basis(r, j, degmax) {
                ok &= db.reproducing_check(&f)?;
            }
            if !ok {
                let sys = r.system();
                return Ok((false, json!({ "M": sys.subset_names(m), "J": sys.subset_names(j) })));
            }
            pairs += 1;
        }
    }
    Ok((true, json!({ "pairs": pairs, "degmax": degmax })))
}
