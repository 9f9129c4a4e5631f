use std::sync::{Arc, OnceLock};

use atomic_leibniz::coxeter::{CoxeterSystem, Subset};
use atomic_leibniz::frobenius::{DualBasisMethod, DualBases};
use atomic_leibniz::leibniz::{iterated_leibniz, Direction, LeibnizContext, Outcome};
use atomic_leibniz::poly::{monomial_basis, Polynomial};
use atomic_leibniz::realization::Realization;
use atomic_leibniz::{BigInt, BigRational, Coeff, ModP};
use proptest::prelude::*;

type Z = BigInt;
type P = Polynomial<Z>;

fn s4() -> &'static Arc<Realization<Z>> {
    static R: OnceLock<Arc<Realization<Z>>> = OnceLock::new();
    R.get_or_init(|| Arc::new(Realization::permutation(4).unwrap()))
}

fn poly_strategy<C: Coeff>(nvars: usize, max_deg: u32) -> impl Strategy<Value = Polynomial<C>> {
    let monos: Vec<_> = (0..=max_deg).flat_map(|d| monomial_basis(nvars, d, None)).collect();
    let k = monos.len();
    prop::collection::vec((0..k, -4i64..=4), 0..6).prop_map(move |terms| {
        Polynomial::from_terms(nvars, terms.into_iter().map(|(i, c)| (monos[i], C::from_i64(c))))
    })
}

/// Random integer combination of the `subset`-invariant basis up to `max_deg`.
fn invariant_strategy(r: Arc<Realization<Z>>, subset: Subset, max_deg: u32) -> impl Strategy<Value = P> {
    let basis: Vec<P> = (0..=max_deg).flat_map(|d| r.invariant_basis(subset, d).iter().cloned().collect::<Vec<_>>()).collect();
    let k = basis.len();
    prop::collection::vec(-3i64..=3, k).prop_map(move |cs| {
        let mut acc = Polynomial::zero(r.nvars());
        for (c, b) in cs.into_iter().zip(&basis) {
            acc += &b.scale(&Z::from(c));
        }
        acc
    })
}

fn word_strategy(rank: usize, max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..rank, 0..=max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(f in poly_strategy::<Z>(3, 3), g in poly_strategy::<Z>(3, 3), h in poly_strategy::<Z>(3, 2)) {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &Polynomial::one(3), f.clone());
    }

    #[test]
    fn exact_division_inverts_multiplication(f in poly_strategy::<Z>(3, 3), g in poly_strategy::<Z>(3, 2)) {
        prop_assume!(!g.is_zero());
        prop_assert_eq!((&f * &g).exact_divide(&g).unwrap(), f);
    }

    #[test]
    fn graded_components_recompose(f in poly_strategy::<Z>(4, 4)) {
        let parts = f.homogeneous_components();
        prop_assert!(parts.iter().all(|(d, p)| p.is_homogeneous() && p.degree() == Some(*d)));
        prop_assert_eq!(Polynomial::sum(4, parts.values()), f);
    }

    #[test]
    fn substitution_is_a_ring_map(f in poly_strategy::<Z>(3, 3), g in poly_strategy::<Z>(3, 3)) {
        let perm = [2, 0, 1];
        prop_assert_eq!((&f * &g).permute_vars(&perm), &f.permute_vars(&perm) * &g.permute_vars(&perm));
        prop_assert_eq!((&f + &g).eliminate_vars(&[1]), &f.eliminate_vars(&[1]) + &g.eliminate_vars(&[1]));
        prop_assert_eq!(f.extend_vars(5).restrict_vars(3), Some(f.clone()));
    }

    #[test]
    fn field_round_trip(f in poly_strategy::<Z>(3, 3)) {
        prop_assert_eq!(Polynomial::<Z>::from_field(&f.to_field()), Some(f));
    }

    #[test]
    fn words_and_elements(w in word_strategy(4, 10), v in word_strategy(4, 6)) {
        let sys = CoxeterSystem::symmetric(5).unwrap();
        let x = sys.from_word(&w);
        let y = sys.from_word(&v);
        prop_assert!(x.length() as usize <= w.len());
        let rex = sys.reduced_word(&x);
        prop_assert!(sys.is_reduced(&rex));
        prop_assert_eq!(sys.from_word(&rex), x.clone());
        prop_assert_eq!(x.inverse().length(), x.length());
        prop_assert!(sys.multiply(&x, &x.inverse()).is_identity());
        let xy = sys.multiply(&x, &y);
        prop_assert!(xy.length() <= x.length() + y.length());
        let mut joined = w.clone();
        joined.extend(&v);
        prop_assert_eq!(sys.from_word(&joined), xy);
    }

    #[test]
    fn prefixes_are_bruhat_below(w in word_strategy(3, 8)) {
        let sys = CoxeterSystem::symmetric(4).unwrap();
        let x = sys.from_word(&w);
        let rex = sys.reduced_word(&x);
        for k in 0..=rex.len() {
            prop_assert!(sys.bruhat_leq(&sys.from_word(&rex[..k]), &x));
        }
    }

    #[test]
    fn demazure_relations(f in poly_strategy::<Z>(4, 4), g in poly_strategy::<Z>(4, 3), s in 0usize..3) {
        let r = s4();
        let d = |s: usize, p: &P| r.demazure(s, p).unwrap();
        prop_assert_eq!(d(s, &(&f * &g)), &(&r.act_gen(s, &f) * &d(s, &g)) + &(&d(s, &f) * &g));
        prop_assert_eq!(d(s, &r.act_gen(s, &f)), -d(s, &f));
        prop_assert!(d(s, &d(s, &f)).is_zero());
        prop_assert_eq!(r.root(s) * &d(s, &f), &f - &r.act_gen(s, &f));
        for t in 0usize..3 {
            if t.abs_diff(s) == 1 {
                let st = [s, t];
                let lhs = &r.demazure_word(&st, &r.act_gen(s, &f)).unwrap() + &r.demazure_word(&[t, s], &f).unwrap();
                prop_assert_eq!(lhs, r.act_gen(t, &r.demazure_word(&st, &f).unwrap()));
                prop_assert_eq!(r.act_word(&st, &d(s, &f)).unwrap(), d(t, &r.act_word(&st, &f).unwrap()));
            } else if t != s {
                prop_assert_eq!(r.act_gen(s, &d(t, &f)), d(t, &r.act_gen(s, &f)));
            }
        }
    }

    #[test]
    fn demazure_over_other_rings(f in poly_strategy::<BigRational>(2, 4), g in poly_strategy::<ModP<7>>(3, 3)) {
        let b2 = Realization::<BigRational>::root_realization(Arc::new(CoxeterSystem::type_bc(2).unwrap())).unwrap();
        let d = |s: usize, p: &Polynomial<BigRational>| b2.demazure(s, p).unwrap();
        prop_assert!(d(0, &d(0, &f)).is_zero());
        prop_assert_eq!(b2.demazure_word(&[0, 1, 0, 1], &f).unwrap(), b2.demazure_word(&[1, 0, 1, 0], &f).unwrap());
        let r7 = s4().specialize(ModP::<7>::from_bigint).unwrap().restrict(Subset::from_indices([0, 1])).unwrap();
        let g = g.extend_vars(r7.nvars());
        prop_assert_eq!(r7.demazure_word(&[0, 1, 0], &g).unwrap(), r7.demazure_word(&[1, 0, 1], &g).unwrap());
    }

    #[test]
    fn iterated_expansion_is_word_independent(f in poly_strategy::<Z>(4, 3), g in poly_strategy::<Z>(4, 3), w in word_strategy(3, 6)) {
        let r = s4();
        let sys = r.system();
        let x = sys.from_word(&w);
        let words = sys.reduced_words(&x);
        let first = iterated_leibniz(r, &words[0], &f).unwrap();
        for word in &words[1..] {
            prop_assert_eq!(&iterated_leibniz(r, word, &f).unwrap(), &first);
        }
        let mut acc = r.zero();
        for (y, t) in &first {
            acc += &(t * &r.demazure_element(y, &g).unwrap());
        }
        prop_assert_eq!(acc, r.demazure_element(&x, &(&f * &g)).unwrap());
    }
}

fn atom_contexts() -> &'static Vec<LeibnizContext<Z>> {
    static CTX: OnceLock<Vec<LeibnizContext<Z>>> = OnceLock::new();
    CTX.get_or_init(|| {
        let r = s4();
        let all = r.system().all();
        vec![
            LeibnizContext::atom(r.clone(), all, 1).unwrap(),
            LeibnizContext::atom(r.clone(), all, 0).unwrap(),
            LeibnizContext::atom(r.clone(), Subset::from_indices([0, 1]), 1).unwrap(),
        ]
    })
}

fn solve(ctx: &LeibnizContext<Z>, f: &P, dir: Direction) -> Vec<P> {
    match ctx.solve(f, dir).unwrap() {
        Outcome::Feasible(c) => c.terms.into_iter().map(|t| t.value).collect(),
        Outcome::Infeasible(inf) => panic!("infeasible in degree {}", inf.degree),
    }
}

fn combine(a: &[P], b: &[P], op: impl Fn(&P, &P) -> P) -> Vec<P> {
    a.iter().zip(b).map(|(x, y)| op(x, y)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rules_are_additive_and_invariant_linear(
        k in 0usize..3,
        seeds in (invariant_strategy(s4().clone(), Subset::from_indices([0, 2]), 3),
                  invariant_strategy(s4().clone(), Subset::from_indices([0, 2]), 3),
                  invariant_strategy(s4().clone(), Subset::full(3), 4)),
    ) {
        let ctx = &atom_contexts()[k];
        let r = ctx.realization();
        let (f1, f2, h) = seeds;
        // Project the seeds into R^J for contexts whose J is smaller than {s, u}.
        let sym = |f: &P| -> P {
            let mut acc = r.zero();
            for w in r.system().enumerate_parabolic(ctx.j()).unwrap().iter() {
                acc += &r.act(w, f).unwrap();
            }
            acc
        };
        let (f1, f2) = (sym(&f1), sym(&f2));
        prop_assert!(r.is_invariant(&h, ctx.m()));
        for dir in [Direction::Rightward, Direction::Leftward] {
            let t1 = solve(ctx, &f1, dir);
            let t2 = solve(ctx, &f2, dir);
            prop_assert_eq!(solve(ctx, &(&f1 + &f2), dir), combine(&t1, &t2, |a, b| a + b));
            let th = solve(ctx, &(&h * &f1), dir);
            prop_assert_eq!(th, t1.iter().map(|t| &h * t).collect::<Vec<_>>());
        }
    }

    #[test]
    fn products_of_solvable_inputs_are_solvable(
        f in invariant_strategy(s4().clone(), Subset::from_indices([0, 2]), 2),
        g in invariant_strategy(s4().clone(), Subset::from_indices([0, 2]), 2),
    ) {
        let ctx = &atom_contexts()[0];
        let fg = &f * &g;
        let cert = match ctx.solve(&fg, Direction::Rightward).unwrap() {
            Outcome::Feasible(c) => c,
            Outcome::Infeasible(_) => return Err(TestCaseError::fail("product is infeasible")),
        };
        prop_assert!(ctx.verify(&cert).unwrap());
    }

    #[test]
    fn frobenius_reproduces_invariants(
        j in prop::sample::select(vec![Subset::EMPTY, Subset::singleton(0), Subset::from_indices([0, 2]), Subset::from_indices([1, 2])]),
        f in poly_strategy::<Z>(4, 3),
    ) {
        let r = s4();
        let db = DualBases::new(r.clone(), r.system().all(), j, DualBasisMethod::Auto).unwrap();
        let mut fj = r.zero();
        for w in r.system().enumerate_parabolic(j).unwrap().iter() {
            fj += &r.act(w, &f).unwrap();
        }
        prop_assert!(db.reproducing_check(&fj).unwrap());
        let trace_f = r.demazure_element(db.trace_element(), &fj).unwrap();
        prop_assert!(r.is_invariant(&trace_f, r.system().all()));
    }
}
