use std::sync::Arc;

use num_bigint::BigInt;

use super::*;
use crate::coxeter::Subset;
use crate::poly::monomial_basis;

type Z = BigInt;

const S: usize = 0;
const T: usize = 1;
const U: usize = 2;

fn perm(n: usize) -> Arc<Realization<Z>> {
    Arc::new(Realization::permutation(n).unwrap())
}

fn invariant_monomial_sums(r: &Realization<Z>, j: Subset, d: u32) -> Vec<Polynomial<Z>> {
    r.invariant_basis(j, d).iter().cloned().collect()
}

#[test]
fn rank_one_rule_is_demazure() {
    let r = perm(2);
    let ctx = LeibnizContext::atom(r.clone(), Subset::singleton(0), 0).unwrap();
    assert_eq!(ctx.lower().len(), 1);
    for d in 0..5 {
        for m in monomial_basis(2, d, None) {
            let f = Polynomial::monomial(2, m, Z::from(1));
            for dir in [Direction::Rightward, Direction::Leftward] {
                let cert = ctx.solve(&f, dir).unwrap().into_feasible().unwrap();
                assert!(cert.unique);
                assert_eq!(cert.terms[0].value, r.demazure(0, &f).unwrap());
            }
        }
    }
}

#[test]
fn s2s2_example() {
    let r = perm(4);
    let su = Subset::from_indices([S, U]);
    let ctx = LeibnizContext::atom(r.clone(), r.system().all(), T).unwrap();
    assert_eq!(ctx.i(), su);
    assert_eq!(ctx.j(), su);
    assert_eq!(ctx.lower().len(), 2);
    for d in 0..=4 {
        for f in invariant_monomial_sums(&r, su, d) {
            let cert = ctx.solve(&f, Direction::Rightward).unwrap().into_feasible().unwrap();
            let dt = r.demazure(T, &f).unwrap();
            let tq = r.act_word(&[S, U], &dt).unwrap();
            let tr = &r.demazure_word(&[T, S, U, T], &f).unwrap() - &r.demazure_word(&[S, U, T], &tq).unwrap();
            assert_eq!(cert.terms[0].value, tq);
            assert_eq!(cert.terms[1].value, tr);
            assert!(r.is_invariant(&tr, su));
            assert!(cert.unique);
        }
    }
}

#[test]
fn s3s1_example() {
    let r = perm(4);
    let ctx = LeibnizContext::atom(r.clone(), r.system().all(), S).unwrap();
    assert_eq!(ctx.i(), Subset::from_indices([T, U]));
    assert_eq!(ctx.j(), Subset::from_indices([S, T]));
    assert_eq!(ctx.lower().len(), 1);
    for d in 0..=4 {
        for f in invariant_monomial_sums(&r, ctx.j(), d) {
            let cert = ctx.solve(&f, Direction::Rightward).unwrap().into_feasible().unwrap();
            let expected = r.act_word(&[S, T], &r.demazure(U, &f).unwrap()).unwrap();
            assert_eq!(cert.terms[0].value, expected);
            assert!(r.is_invariant(&expected, Subset::singleton(T)));
        }
    }
}

#[test]
fn directions_and_forcing_agree_in_s4() {
    let r = perm(4);
    let sys = r.system().clone();
    for m in sys.all().subsets() {
        for s in m.iter() {
            let ctx = LeibnizContext::atom(r.clone(), m, s).unwrap();
            for d in 0..=3 {
                for f in invariant_monomial_sums(&r, ctx.j(), d) {
                    let right = ctx.solve(&f, Direction::Rightward).unwrap().into_feasible().unwrap();
                    let left = ctx.solve(&f, Direction::Leftward).unwrap().into_feasible().unwrap();
                    let pf = pf_membership(&ctx, &f).unwrap().into_feasible().unwrap();
                    assert!(right.unique && left.unique && pf.unique);
                    for (a, b) in right.terms.iter().zip(&pf.coords) {
                        assert_eq!(a.value, b.value);
                    }
                }
            }
        }
    }
}

#[test]
fn target_element_vanishes_on_invariants() {
    let r = perm(3);
    let ctx = LeibnizContext::atom(r.clone(), r.system().all(), 0).unwrap();
    let e2 = r.parse("x1*x2 + x1*x3 + x2*x3").unwrap();
    assert!(target_element(&ctx, &e2).unwrap().is_zero());
    assert!(target_element(&ctx, &r.one()).unwrap().is_zero());
    let f = r.parse("x1 + x2").unwrap();
    assert!(!target_element(&ctx, &f).unwrap().is_zero());
}

#[test]
fn naive_probe_s4() {
    let r = perm(4);
    let su = Subset::from_indices([S, U]);
    let cosets = crate::cosets::enumerate_cosets(r.system(), su, su, r.system().all()).unwrap();
    let q = cosets[1].clone();
    let ctx = LeibnizContext::for_coset(r.clone(), q, r.system().all()).unwrap();
    assert!(ctx.atom_data().is_none());
    assert_eq!(ctx.lower().len(), 1);
    let fs: Vec<Polynomial<Z>> = (1..=3).flat_map(|d| invariant_monomial_sums(&r, su, d)).collect();
    match naive_rule_probe(&ctx, &fs).unwrap() {
        ProbeOutcome::Counterexample { g, .. } => {
            assert_eq!(g.degree(), Some(1));
            assert!(r.demazure(T, &g).unwrap().is_one());
        }
        ProbeOutcome::Feasible(_) => panic!("the naive rule should fail"),
    }
    let twisted: Vec<Polynomial<Z>> = fs.iter().map(|f| r.act_gen(T, f)).collect();
    match naive_rule_probe(&ctx, &twisted).unwrap() {
        ProbeOutcome::Feasible(certs) => {
            for c in certs {
                assert_eq!(c.terms[0].value, r.demazure_word(&[S, U, T], &c.f).unwrap());
            }
        }
        ProbeOutcome::Counterexample { .. } => panic!("the restricted rule should hold"),
    }
}

#[test]
fn closed_form_small() {
    for (a, b) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let r = perm(a + b);
        let atom = crate::cosets::grassmannian_atom(r.system(), a, b).unwrap();
        let ctx = LeibnizContext::atomic(r.clone(), atom).unwrap();
        for i in 0..=4 {
            let rep = closed_form_type_a(&ctx, a, b, i).unwrap();
            assert!(rep.verified && rep.matches_solver && rep.unique, "a={a} b={b} i={i}");
        }
    }
}

#[test]
fn certificate_record_shape() {
    let r = perm(4);
    let ctx = LeibnizContext::atom(r.clone(), r.system().all(), S).unwrap();
    let f = r.parse("x1 + x2 + x3").unwrap();
    let cert = ctx.solve(&f, Direction::Rightward).unwrap().into_feasible().unwrap();
    let v = serde_json::to_value(ctx.record(&cert)).unwrap();
    assert_eq!(v["atom"]["I"], serde_json::json!(["s2", "s3"]));
    assert_eq!(v["atom"]["min_word"], "s1 s2 s3");
    assert_eq!(v["direction"], "rightward");
    assert_eq!(v["terms"][0]["coset_min_word"], "e");
    assert_eq!(v["terms"][0]["T"], "1");
    assert_eq!(v["unique"], true);
}
