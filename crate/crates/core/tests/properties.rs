use std::cmp::Ordering;

use proptest::prelude::*;

use svmod::base::{OneDim, QSpec};
use svmod::bracket::{bracket, bracket_elements};
use svmod::catalog;
use svmod::induced::{from_records, to_records, IndKey, IndRecord, IndVector, Induced};
use svmod::multi_index::{lex_cmp, principal_cmp_sv, revlex_cmp, SvTriple};
use svmod::pbw::{is_normal, straighten, PbwOrder};
use svmod::props::{module_axiom_defect, rewrite_normal_form, t0_brute_force, STRATEGIES};
use svmod::w22::{t0_condition_check, T0Verdict};
use svmod::{Algebra, Generator, LinComb, MultiIndex, Scalar};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| Scalar::ratio(n, d))
}

fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |s| !s.is_zero())
}

fn sv_generator(lo: i64, hi: i64) -> impl Strategy<Value = Generator> {
    prop_oneof![
        (lo..=hi).prop_map(Generator::m),
        (lo..=hi).prop_map(Generator::y),
        (lo..=hi).prop_map(Generator::l),
        Just(Generator::c()),
    ]
}

fn w_generator(lo: i64, hi: i64) -> impl Strategy<Value = Generator> {
    prop_oneof![(lo..=hi).prop_map(Generator::w), (lo..=hi).prop_map(Generator::wl), Just(Generator::cw())]
}

fn generator(lo: i64, hi: i64) -> impl Strategy<Value = Generator> {
    prop_oneof![sv_generator(lo, hi), w_generator(lo, hi)]
}

fn multi_index() -> impl Strategy<Value = MultiIndex> {
    prop::collection::vec((1u32..=6, 0u32..=3), 0..4).prop_map(MultiIndex::from_pairs)
}

fn triple() -> impl Strategy<Value = SvTriple> {
    (multi_index(), multi_index(), multi_index())
}

fn sv_word(max_len: usize) -> impl Strategy<Value = Vec<Generator>> {
    prop::collection::vec(sv_generator(-4, 4), 0..=max_len)
}

fn w_word(max_len: usize) -> impl Strategy<Value = Vec<Generator>> {
    prop::collection::vec(w_generator(-4, 4), 0..=max_len)
}

fn verma_vector() -> impl Strategy<Value = IndVector<()>> {
    prop::collection::vec((multi_index(), multi_index(), multi_index(), nonzero_scalar()), 1..=3).prop_map(|terms| {
        terms.into_iter().map(|(m, y, l, c)| (IndKey { m, y, l, v: () }, c)).collect()
    })
}

/// Doubled degree of a key of a Verma module: slot `s` of `M`, `Y`, `L` has
/// degree `-s`, `-s + 1/2`, `-s`.
fn key_degree2(k: &IndKey<()>) -> i64 {
    let side = |mi: &MultiIndex, f: fn(i64) -> i64| mi.iter().map(|(s, e)| f(s as i64) * e as i64).sum::<i64>();
    side(&k.m, |s| -2 * s) + side(&k.y, |s| -2 * s + 1) + side(&k.l, |s| -2 * s)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn scalar_round_trip(a in scalar()) {
        let text = serde_json::to_string(&a).unwrap();
        let back: Scalar = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert!(a.denom() > &0.into());
    }

    #[test]
    fn scalar_field_laws(a in scalar(), b in scalar(), c in nonzero_scalar()) {
        prop_assert_eq!(&(&a + &b) * &c, &a * &c + &b * &c);
        prop_assert_eq!(&(&a * &c) / &c, a.clone());
        prop_assert_eq!(&a - &a, Scalar::zero());
    }

    #[test]
    fn generator_json_round_trip(g in generator(-20, 20)) {
        let back = Generator::from_json(g.algebra, &g.to_json()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn antisymmetry(x in generator(-40, 40), y in generator(-40, 40)) {
        prop_assume!(x.algebra == y.algebra);
        prop_assert!(bracket(&x, &y).unwrap().plus(&bracket(&y, &x).unwrap()).is_zero());
    }

    #[test]
    fn jacobi_sv(x in sv_generator(-30, 30), y in sv_generator(-30, 30), z in sv_generator(-30, 30)) {
        let (bx, by, bz) = (LinComb::basis(x), LinComb::basis(y), LinComb::basis(z));
        let mut sum = bracket_elements(&bracket(&x, &y).unwrap(), &bz).unwrap();
        sum.add_assign(&bracket_elements(&bracket(&y, &z).unwrap(), &bx).unwrap());
        sum.add_assign(&bracket_elements(&bracket(&z, &x).unwrap(), &by).unwrap());
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn bracket_degree(x in generator(-30, 30), y in generator(-30, 30)) {
        prop_assume!(x.algebra == y.algebra);
        for (g, _) in &bracket(&x, &y).unwrap() {
            if !g.is_central() {
                prop_assert_eq!(g.degree2(), x.degree2() + y.degree2());
            }
        }
    }

    #[test]
    fn principal_order_is_total(a in triple(), b in triple(), c in triple()) {
        let ab = principal_cmp_sv(&a, &b);
        prop_assert_eq!(ab, principal_cmp_sv(&b, &a).reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        if ab != Ordering::Greater && principal_cmp_sv(&b, &c) != Ordering::Greater {
            prop_assert_ne!(principal_cmp_sv(&a, &c), Ordering::Greater);
        }
    }

    #[test]
    fn lex_and_revlex_are_orders(i in multi_index(), j in multi_index()) {
        prop_assert_eq!(lex_cmp(&i, &j), lex_cmp(&j, &i).reverse());
        prop_assert_eq!(revlex_cmp(&i, &j), revlex_cmp(&j, &i).reverse());
        prop_assert_eq!(lex_cmp(&i, &j) == Ordering::Equal, i == j);
    }

    #[test]
    fn drops_lower_weight(i in multi_index()) {
        prop_assume!(!i.is_zero());
        let p = i.prime_drop().unwrap();
        let q = i.dprime_drop().unwrap();
        prop_assert_eq!(p.total() + 1, i.total());
        prop_assert_eq!(q.total() + 1, i.total());
        prop_assert_eq!(p.weight() + i.max_position().unwrap() as u64, i.weight());
        prop_assert_eq!(q.weight() + i.min_position().unwrap() as u64, i.weight());
    }

    #[test]
    fn multi_index_json_round_trip(i in multi_index()) {
        let back: MultiIndex = serde_json::from_str(&serde_json::to_string(&i).unwrap()).unwrap();
        prop_assert_eq!(back, i);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn straighten_matches_rewriting_sv(word in sv_word(5)) {
        for order in [PbwOrder::Induced, PbwOrder::Quotient] {
            let nf = straighten(&word, order).unwrap();
            for strategy in STRATEGIES {
                prop_assert_eq!(&rewrite_normal_form(&word, order, strategy).unwrap(), &nf);
            }
        }
    }

    #[test]
    fn straighten_matches_rewriting_w(word in w_word(5)) {
        let nf = straighten(&word, PbwOrder::Induced).unwrap();
        prop_assert_eq!(rewrite_normal_form(&word, PbwOrder::Induced, STRATEGIES[2]).unwrap(), nf);
    }

    #[test]
    fn straighten_is_normal_homogeneous_and_idempotent(word in sv_word(5)) {
        let degree: i64 = word.iter().map(Generator::degree2).sum();
        let nf = straighten(&word, PbwOrder::Induced).unwrap();
        for (m, _) in &nf {
            let w = m.word();
            prop_assert!(is_normal(&w, PbwOrder::Induced));
            prop_assert_eq!(m.degree2(), degree);
            let again = straighten(&w, PbwOrder::Induced).unwrap();
            let mut central = w.clone();
            central.extend(std::iter::repeat(Generator::c()).take(m.central as usize));
            prop_assert_eq!(straighten(&central, PbwOrder::Induced).unwrap(), LinComb::basis(m.clone()));
            prop_assert_eq!(again.len(), 1);
        }
    }

    #[test]
    fn verma_module_axiom(
        xi in scalar(), nu0 in nonzero_scalar(), c in scalar(),
        x in sv_generator(-4, 4), y in sv_generator(-4, 4), v in verma_vector(),
    ) {
        let ind = Induced::new(OneDim::new(xi, nu0, c).unwrap());
        prop_assert!(module_axiom_defect(&ind, &x, &y, &v).unwrap().is_zero());
    }

    #[test]
    fn verma_action_is_graded(x in sv_generator(-4, 4), v in verma_vector()) {
        let ind = Induced::new(catalog::verma());
        for (k, _) in &v {
            let out = ind.act(&x, &LinComb::basis(k.clone())).unwrap();
            for (k2, _) in &out {
                prop_assert_eq!(key_degree2(k2), key_degree2(k) + x.degree2());
            }
        }
    }

    #[test]
    fn reduction_from_verma_vectors(nu0 in nonzero_scalar(), xi in scalar(), v in verma_vector()) {
        let ind = Induced::new(OneDim::new(xi, nu0, Scalar::zero()).unwrap());
        let (w, trace) = ind.reduce_to_base(&v).unwrap();
        prop_assert!(!w.is_zero());
        for s in &trace {
            prop_assert_eq!(&s.predicted, &s.actual);
        }
    }

    #[test]
    fn ind_records_round_trip(v in verma_vector()) {
        let text = serde_json::to_string(&to_records(&v)).unwrap();
        let back: Vec<IndRecord<()>> = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(from_records(back), v);
    }

    #[test]
    fn t0_check_agrees_with_brute_force(h in scalar(), c in scalar()) {
        let brute = t0_brute_force(&h, &c, 2000);
        match t0_condition_check(&h, &c) {
            T0Verdict::Pass => prop_assert_eq!(brute, None),
            T0Verdict::Fail { n } => prop_assert_eq!(brute, Some(n)),
        }
    }
}

#[test]
fn qspec_round_trip() {
    for spec in [catalog::q_t2_spec(), catalog::q_1_0_2_spec(), catalog::q_3_2_2_spec()] {
        let back: QSpec = serde_json::from_str(&serde_json::to_string(&spec).unwrap()).unwrap();
        assert_eq!(back, spec);
    }
}

#[test]
fn generators_of_both_algebras_do_not_mix() {
    assert!(bracket(&Generator::l(1), &Generator::wl(1)).is_err());
    assert_eq!(Algebra::parse("w22").unwrap(), Algebra::W22);
}
