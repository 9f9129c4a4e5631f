use std::sync::Arc;

use anyhow::Result;
use atomic_leibniz::cosets::{coset_of, enumerate_cosets};
use atomic_leibniz::coxeter::{GroupElement, Subset};
use atomic_leibniz::frobenius::{DualBasisMethod, DualBases};
use atomic_leibniz::leibniz::{
    closed_form_type_a, iterated_leibniz, naive_rule_probe, pf_membership, verify_forcing, Direction, Infeasibility,
    LeibnizContext, Outcome, ProbeOutcome,
};
use atomic_leibniz::realization::Realization;
use atomic_leibniz::poly::Polynomial;
use atomic_leibniz::Coeff;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::config::{config_err, parse_generator, parse_poly, parse_subset, parse_word, RunConfig};
use crate::report::Check;

type R<C> = Arc<Realization<C>>;

fn word<C: Coeff>(r: &R<C>, w: &GroupElement) -> String {
    let sys = r.system();
    sys.word_text(&sys.reduced_word(w))
}

fn names<C: Coeff>(r: &R<C>, s: Subset) -> Vec<String> {
    r.system().subset_names(s)
}

fn infeasible_payload<C: Coeff>(r: &R<C>, inf: &Infeasibility<C>) -> Value {
    json!({ "f": r.show(&inf.f), "degree": inf.degree, "reason": inf.reason })
}

/// The explicit polynomials, or the invariant basis of `R^J` up to `degmax`.
fn inputs<C: Coeff>(r: &R<C>, fs: &[String], j: Subset, degmax: u32) -> Result<Vec<Polynomial<C>>> {
    if fs.is_empty() {
        return Ok((0..=degmax).flat_map(|d| r.invariant_basis(j, d).iter().cloned().collect::<Vec<_>>()).collect());
    }
    fs.iter()
        .map(|text| {
            let f = parse_poly(r, text)?;
            if !r.is_invariant(&f, j) {
                return Err(config_err(format!("{text} is not invariant under {:?}", names(r, j))));
            }
            Ok(f)
        })
        .collect()
}

fn atom_context<C: Coeff>(r: &R<C>, m: Option<&str>, s: &str) -> Result<LeibnizContext<C>> {
    let sys = r.system();
    let m = match m {
        Some(text) => parse_subset(sys, text)?,
        None => sys.all(),
    };
    let s = parse_generator(sys, s)?;
    LeibnizContext::atom(r.clone(), m, s).map_err(|e| config_err(e.to_string()))
}

pub fn cosets<C: Coeff>(cfg: &RunConfig, i: &str, j: &str, m: Option<&str>) -> Result<Vec<Check>> {
    let r = cfg.build_realization::<C>()?;
    let sys = r.system();
    let (i, j) = (parse_subset(sys, i)?, parse_subset(sys, j)?);
    let m = match m {
        Some(text) => parse_subset(sys, text)?,
        None => sys.all().union(i).union(j),
    };
    let list = enumerate_cosets(sys, i, j, m).map_err(|e| config_err(e.to_string()))?;
    let mut records = Vec::new();
    for q in &list {
        match q.describe(sys) {
            Ok(rec) => records.push(serde_json::to_value(rec)?),
            Err(e) => return Ok(vec![Check::error("cosets", e)]),
        }
    }
    Ok(vec![Check::new(
        format!("cosets I={:?} J={:?}", names(&r, i), names(&r, j)),
        true,
        json!({ "count": records.len(), "cosets": records }),
    )])
}

pub fn dualbases<C: Coeff>(cfg: &RunConfig, m: Option<&str>, j: &str, method: DualBasisMethod) -> Result<Vec<Check>> {
    let r = cfg.build_realization::<C>()?;
    let sys = r.system();
    let j = parse_subset(sys, j)?;
    let m = match m {
        Some(text) => parse_subset(sys, text)?,
        None => sys.all(),
    };
    let db = DualBases::new(r.clone(), m, j, method).map_err(|e| config_err(e.to_string()))?;
    let mut checks = Vec::new();
    let d = match db.d() {
        Ok(d) => d.to_vec(),
        Err(e) => return Ok(vec![Check::error("dual bases", e)]),
    };
    let pairs: Vec<Value> =
        db.c().iter().zip(&d).map(|(c, d)| json!({ "c": r.show(c), "d": r.show(d) })).collect();
    checks.push(Check::new(
        "dual bases",
        true,
        json!({
            "M": names(&r, m),
            "J": names(&r, j),
            "trace": word(&r, db.trace_element()),
            "trace_degree": db.trace_degree(),
            "pairs": pairs,
        }),
    ));
    let push = |checks: &mut Vec<Check>, name: &str, res: Result<bool, atomic_leibniz::frobenius::FrobeniusError>| {
        checks.push(match res {
            Ok(ok) => Check::new(name, ok, Value::Null),
            Err(e) => Check::error(name, e),
        })
    };
    push(&mut checks, "delta orthogonality", db.verify_delta());
    push(&mut checks, "degrees balanced", db.degrees_balanced());
    let basis = inputs(&r, &[], j, cfg.degmax)?;
    let mut bad = None;
    for f in &basis {
        match db.reproducing_check(f) {
            Ok(true) => {}
            Ok(false) => {
                bad = Some(r.show(f));
                break;
            }
            Err(e) => {
                checks.push(Check::error("reproducing property", e));
                return Ok(checks);
            }
        }
    }
    checks.push(Check::new(
        format!("reproducing property up to degree {}", cfg.degmax),
        bad.is_none(),
        match bad {
            Some(f) => json!({ "counterexample": f }),
            None => json!({ "checked": basis.len() }),
        },
    ));
    Ok(checks)
}

pub fn solve_t<C: Coeff>(cfg: &RunConfig, m: Option<&str>, s: &str, fs: &[String], dirs: &[Direction]) -> Result<Vec<Check>> {
    let r = cfg.build_realization::<C>()?;
    let ctx = atom_context(&r, m, s)?;
    let mut checks = Vec::new();
    for f in inputs(&r, fs, ctx.j(), cfg.degmax)? {
        for &dir in dirs {
            let name = format!("{dir} f = {}", r.show(&f));
            checks.push(match ctx.solve(&f, dir) {
                Ok(Outcome::Feasible(cert)) => match ctx.verify(&cert) {
                    Ok(ok) => Check::new(name, ok, serde_json::to_value(ctx.record(&cert))?),
                    Err(e) => Check::error(name, e),
                },
                Ok(Outcome::Infeasible(inf)) => Check::new(name, false, infeasible_payload(&r, &inf)),
                Err(e) => Check::error(name, e),
            });
        }
    }
    Ok(checks)
}

pub fn forcing<C: Coeff>(cfg: &RunConfig, m: Option<&str>, s: &str, fs: &[String]) -> Result<Vec<Check>> {
    let r = cfg.build_realization::<C>()?;
    let ctx = atom_context(&r, m, s)?;
    let sys = r.system();
    let mut checks = Vec::new();
    for f in inputs(&r, fs, ctx.j(), cfg.degmax)? {
        let name = format!("forcing f = {}", r.show(&f));
        let cert = match pf_membership(&ctx, &f) {
            Ok(Outcome::Feasible(c)) => c,
            Ok(Outcome::Infeasible(inf)) => {
                checks.push(Check::new(name, false, infeasible_payload(&r, &inf)));
                continue;
            }
            Err(e) => {
                checks.push(Check::error(name, e));
                continue;
            }
        };
        let verified = verify_forcing(&ctx, &cert);
        let rightward = ctx.solve(&f, Direction::Rightward);
        let agrees = match &rightward {
            Ok(Outcome::Feasible(rc)) => rc.terms.iter().zip(&cert.coords).all(|(a, b)| a.value == b.value),
            _ => false,
        };
        let coords: Vec<Value> = cert
            .coords
            .iter()
            .map(|t| {
                json!({
                    "coset_min_word": sys.word_text(&sys.reduced_word(t.coset.min())),
                    "T": r.show(&t.value),
                    "invariance": names(&r, t.invariance),
                })
            })
            .collect();
        let payload = json!({
            "atom": ctx.atom_record(),
            "f": r.show(&f),
            "coords": coords,
            "unique": cert.unique,
            "matches_rightward": agrees,
        });
        checks.push(match verified {
            Ok(ok) => Check::new(name, ok && agrees, payload),
            Err(e) => Check::error(name, e),
        });
    }
    Ok(checks)
}

pub struct ProbeArgs<'a> {
    pub i: &'a str,
    pub j: &'a str,
    pub min: &'a str,
    pub m: Option<&'a str>,
    pub fs: &'a [String],
    pub expect: Option<bool>,
}

pub fn probe_naive<C: Coeff>(cfg: &RunConfig, args: &ProbeArgs<'_>) -> Result<Vec<Check>> {
    let r = cfg.build_realization::<C>()?;
    let sys = r.system();
    let (i, j) = (parse_subset(sys, args.i)?, parse_subset(sys, args.j)?);
    let m = match args.m {
        Some(text) => parse_subset(sys, text)?,
        None => sys.all(),
    };
    let w = sys.from_word(&parse_word(sys, args.min)?);
    let q = coset_of(sys, i, &w, j).map_err(|e| config_err(e.to_string()))?;
    let ctx = LeibnizContext::for_coset(r.clone(), q.clone(), m).map_err(|e| config_err(e.to_string()))?;
    let fs = inputs(&r, args.fs, j, cfg.degmax)?;
    let name = format!("naive rule on the coset with min {} and y {}", word(&r, q.min()), word(&r, q.y()));
    let outcome = match naive_rule_probe(&ctx, &fs) {
        Ok(o) => o,
        Err(e) => return Ok(vec![Check::error(name, e)]),
    };
    let feasible = outcome.is_feasible();
    let payload = match &outcome {
        ProbeOutcome::Feasible(certs) => json!({
            "outcome": "feasible",
            "certificates": certs.iter().map(|c| ctx.record(c)).collect::<Vec<_>>(),
        }),
        ProbeOutcome::Counterexample { f, g } => json!({
            "outcome": "counterexample",
            "f": r.show(f),
            "g": r.show(g),
        }),
    };
    let ok = args.expect.is_none_or(|e| e == feasible);
    Ok(vec![Check::new(name, ok, payload)])
}

pub fn closed_form<C: Coeff>(cfg: &RunConfig, a: usize, b: usize, imax: u32) -> Result<Vec<Check>> {
    if a == 0 || b == 0 {
        return Err(config_err("--a and --b must be positive"));
    }
    let r: R<C> = Arc::new(Realization::permutation_with_cap(a + b, cfg.cap).map_err(|e| config_err(e.to_string()))?);
    let atom = atomic_leibniz::cosets::grassmannian_atom(r.system(), a, b).map_err(|e| config_err(e.to_string()))?;
    let ctx = LeibnizContext::atomic(r.clone(), atom).map_err(|e| config_err(e.to_string()))?;
    let mut checks = Vec::new();
    for i in 0..=imax {
        let name = format!("closed form a={a} b={b} i={i}");
        checks.push(match closed_form_type_a(&ctx, a, b, i) {
            Ok(rep) => Check::new(
                name,
                rep.verified && rep.matches_solver && rep.unique,
                json!({
                    "certificate": ctx.record(&rep.certificate),
                    "verified": rep.verified,
                    "matches_solver": rep.matches_solver,
                    "unique": rep.unique,
                }),
            ),
            Err(e) => Check::error(name, e),
        });
    }
    Ok(checks)
}

fn random_poly<C: Coeff>(rng: &mut ChaCha8Rng, r: &R<C>, max_deg: u32) -> Polynomial<C> {
    let mut p = r.zero();
    for _ in 0..rng.gen_range(1..=4) {
        let d = rng.gen_range(0..=max_deg);
        let monos = atomic_leibniz::poly::monomial_basis(r.nvars(), d, None);
        let mono = monos[rng.gen_range(0..monos.len())];
        p.add_term(mono, C::from_i64(rng.gen_range(-3i64..=3)));
    }
    p
}

pub fn iterated<C: Coeff>(cfg: &RunConfig, w: &str, f: &str, gs: &[String]) -> Result<Vec<Check>> {
    let r = cfg.build_realization::<C>()?;
    let sys = r.system();
    let letters = parse_word(sys, w)?;
    if !sys.is_reduced(&letters) {
        return Err(config_err(format!("{w:?} is not a reduced word")));
    }
    let f = parse_poly(&r, f)?;
    let gs: Vec<Polynomial<C>> = if gs.is_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        (0..5).map(|_| random_poly(&mut rng, &r, cfg.degmax.min(4))).collect()
    } else {
        gs.iter().map(|g| parse_poly(&r, g)).collect::<Result<_>>()?
    };
    let expansion = match iterated_leibniz(&r, &letters, &f) {
        Ok(e) => e,
        Err(e) => return Ok(vec![Check::error("iterated expansion", e)]),
    };
    let mut entries: Vec<(&GroupElement, &Polynomial<C>)> = expansion.iter().collect();
    entries.sort_by_key(|(x, _)| (std::cmp::Reverse(x.length()), sys.reduced_word(x)));
    let terms: Vec<Value> = entries.iter().map(|(x, t)| json!({ "x": word(&r, x), "T": r.show(t) })).collect();
    let w_elem = sys.from_word(&letters);
    let top = expansion.get(&w_elem).cloned().unwrap_or_else(|| r.zero());
    let mut checks = vec![Check::new(
        format!("expansion of ∂_({}) (f g)", sys.word_text(&letters)),
        top == r.act(&w_elem, &f)?,
        json!({ "f": r.show(&f), "terms": terms }),
    )];
    for g in &gs {
        let mut acc = r.zero();
        for (x, t) in &expansion {
            acc += &(t * &r.demazure_element(x, g)?);
        }
        let lhs = r.demazure_word(&letters, &(&f * g))?;
        checks.push(Check::new(format!("identity for g = {}", r.show(g)), acc == lhs, Value::Null));
    }
    Ok(checks)
}
