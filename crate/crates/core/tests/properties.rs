mod common;

use common::*;
use coxeter_tits::coxeter::{parse_coxeter_spec, Order};
use coxeter_tits::geom;
use coxeter_tits::tits::{self, Signature};
use coxeter_tits::{CoxeterSystem, FieldElement, Matrix};
use proptest::prelude::*;

const LEVELS: [u64; 12] = [1, 3, 4, 5, 7, 8, 9, 12, 15, 16, 20, 24];

fn arb_level() -> impl Strategy<Value = u64> {
    prop::sample::select(LEVELS.to_vec())
}

fn arb_element_in(level: u64) -> impl Strategy<Value = FieldElement> {
    let f = field(level);
    prop::collection::vec((-40i64..=40, 1i64..=9), f.degree()).prop_map(move |cs| element(&f, &cs))
}

fn arb_pair() -> impl Strategy<Value = (FieldElement, FieldElement)> {
    arb_level().prop_flat_map(|l| (arb_element_in(l), arb_element_in(l)))
}

fn arb_order() -> impl Strategy<Value = Order> {
    prop_oneof![
        4 => (2u64..=6).prop_map(Order::Finite),
        1 => Just(Order::Infinite),
    ]
}

fn arb_system(max_rank: usize) -> impl Strategy<Value = CoxeterSystem> {
    (1..=max_rank).prop_flat_map(|n| {
        prop::collection::vec(arb_order(), n * (n - 1) / 2).prop_map(move |flat| {
            let mut it = flat.into_iter();
            let pairs: Vec<(usize, usize, Order)> =
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| (i, j, it.next().unwrap())).collect();
            CoxeterSystem::from_pairs(n, &pairs).unwrap()
        })
    })
}

/// Unimodular matrix as a product of elementary operations.
fn arb_unimodular(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec((0..n, 0..n, -2i64..=2, 0u8..3), 0..3 * n + 1).prop_map(move |ops| {
        let mut p: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        for (i, j, c, kind) in ops {
            match kind {
                0 if i != j => {
                    for col in 0..n {
                        p[i][col] += c * p[j][col];
                    }
                }
                1 => p.swap(i, j),
                _ => p[i].iter_mut().for_each(|x| *x = -*x),
            }
        }
        p
    })
}

fn float_eval(x: &FieldElement) -> f64 {
    let t = x.field().theta_f64();
    x.coeffs().iter().rev().fold(0.0, |acc, c| {
        let (n, d) = (c.numer().to_string(), c.denom().to_string());
        acc * t + n.parse::<f64>().unwrap() / d.parse::<f64>().unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn field_ring_axioms((a, b) in arb_pair(), k in -5i64..=5) {
        let c = &a - &a.field().from_int(k);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
    }

    #[test]
    fn field_inverse((a, _) in arb_pair()) {
        prop_assume!(!a.is_zero());
        let inv = a.inv().unwrap();
        prop_assert!((&a * &inv).is_one());
        prop_assert_eq!(inv.inv().unwrap(), a);
    }

    #[test]
    fn sign_agrees_with_float((a, b) in arb_pair()) {
        let x = &a - &b;
        let v = float_eval(&x);
        if v.abs() > 1e-6 {
            prop_assert_eq!(x.sign().as_i8(), if v > 0.0 { 1 } else { -1 });
        }
        prop_assert_eq!((-&x).sign().as_i8(), -x.sign().as_i8());
        prop_assert_eq!((&x * &x).sign().as_i8(), i8::from(!x.is_zero()));
    }

    #[test]
    fn decimal_agrees_with_float((a, _) in arb_pair()) {
        let d: f64 = a.to_decimal(12).parse().unwrap();
        prop_assert!((d - float_eval(&a)).abs() < 1e-9 * (1.0 + d.abs()));
    }

    #[test]
    fn signature_is_congruence_invariant(
        (sys, p) in arb_system(6).prop_flat_map(|s| { let n = s.rank(); (Just(s), arb_unimodular(n)) })
    ) {
        let form = tits::build_tits_form(&sys);
        let p = Matrix::from_i64(form.field(), &p);
        prop_assert!(p.determinant().to_integer().is_some_and(|d| d == 1.into() || d == (-1).into()));
        prop_assert_eq!(tits::signature(&form), tits::signature(&form.congruent(&p)));
    }

    #[test]
    fn signature_accounts_for_rank(sys in arb_system(6)) {
        let form = tits::build_tits_form(&sys);
        let sig = tits::signature(&form);
        prop_assert_eq!(sig.p + sig.q + sig.z, sys.rank());
        prop_assert_eq!(sig.z == 0, !form.matrix().determinant().is_zero());
        prop_assert_eq!(sig.rank(), form.rank());
    }

    #[test]
    fn cayley_hamilton(sys in arb_system(5)) {
        let a = tits::build_tits_form(&sys).matrix().clone();
        let cp = a.char_poly();
        prop_assert!(cp.eval_matrix(&a).rows() == a.rows());
        let zero = Matrix::zeros(a.field(), a.rows(), a.cols());
        prop_assert_eq!(cp.eval_matrix(&a), zero);
    }

    #[test]
    fn finite_pairs_restrict_positive_definite(sys in arb_system(5)) {
        let form = tits::build_tits_form(&sys);
        let n = sys.rank();
        for i in 0..n {
            for j in i + 1..n {
                if let Order::Finite(_) = sys.order(i, j) {
                    let basis = [
                        coxeter_tits::Vector::unit(form.field(), n, i),
                        coxeter_tits::Vector::unit(form.field(), n, j),
                    ];
                    prop_assert_eq!(tits::signature(&form.restrict(&basis)), Signature { p: 2, q: 0, z: 0 });
                }
            }
        }
    }

    #[test]
    fn canonical_point_in_chamber(sys in arb_system(5)) {
        let form = tits::build_tits_form(&sys);
        if let Ok(v) = tits::canonical_chamber_point(&form) {
            prop_assert!(tits::chamber_contains(&form, &v));
        } else {
            prop_assert!(tits::signature(&form).is_degenerate());
        }
    }

    #[test]
    fn chamber_samples_in_chamber(seed in any::<u64>()) {
        let form = tits::build_tits_form(&right_angled());
        let pts = tits::sample_chamber_points(&form, seed, 8).unwrap();
        prop_assert!(pts.iter().all(|v| tits::chamber_contains(&form, v)));
        prop_assert_eq!(pts, tits::sample_chamber_points(&form, seed, 8).unwrap());
    }

    #[test]
    fn dsl_round_trip(sys in arb_system(8)) {
        prop_assert_eq!(parse_coxeter_spec(&sys.to_dsl()).unwrap(), sys);
    }

    #[test]
    fn irreducibility_matches_union_find(sys in arb_system(8)) {
        prop_assert_eq!(sys.is_irreducible(), union_find_connected(sys.orders()));
    }

    #[test]
    fn unmentioned_pairs_default_to_two(n in 2usize..=6, m in 3u64..=7) {
        let text = format!("rank {n}\nm 1 2 {m}\n");
        let sys = parse_coxeter_spec(&text).unwrap();
        for i in 0..n {
            prop_assert_eq!(sys.order(i, i), Order::Finite(1));
            for j in (0..n).filter(|&j| j != i) {
                let want = if (i, j) == (0, 1) || (i, j) == (1, 0) { Order::Finite(m) } else { Order::Finite(2) };
                prop_assert_eq!(sys.order(i, j), want);
            }
        }
    }

    #[test]
    fn reflections_are_involutions_with_det_minus_one(sys in arb_system(5)) {
        let form = tits::build_tits_form(&sys);
        for g in geom::generators(&sys) {
            prop_assert!((&g * &g).is_identity());
            prop_assert_eq!(g.determinant(), form.field().from_int(-1));
            prop_assert!(geom::preserves_form(&g, &form));
        }
    }

    #[test]
    fn enumerated_elements_preserve_form(sys in arb_system(4), len in 0usize..=4) {
        let form = tits::build_tits_form(&sys);
        let table = geom::enumerate_elements(&sys, len, 2000);
        let one = form.field().one();
        for r in &table.records {
            let d = r.matrix.determinant();
            prop_assert!(d == one || d == -&one);
            prop_assert_eq!(d.sign().as_i8(), if r.length() % 2 == 0 { 1 } else { -1 });
            prop_assert!(geom::preserves_form(&r.matrix, &form));
        }
    }

    #[test]
    fn growth_is_monotone_in_length(sys in arb_system(4), len in 0usize..=4) {
        let short = geom::enumerate_elements(&sys, len, usize::MAX);
        let long = geom::enumerate_elements(&sys, len + 1, usize::MAX);
        prop_assert!(long.len() >= short.len());
        let (g_short, g_long) = (short.growth(), long.growth());
        prop_assert_eq!(&g_long[..g_short.len()], g_short.as_slice());
        prop_assert!(short.records.iter().zip(&long.records).all(|(a, b)| a == b));
    }

    #[test]
    fn enumeration_independent_of_workers(sys in arb_system(4), len in 0usize..=4, workers in 2usize..=4) {
        let one = geom::enumerate_elements_with_workers(&sys, len, 5000, 1);
        let many = geom::enumerate_elements_with_workers(&sys, len, 5000, workers);
        prop_assert_eq!(one.records, many.records);
        prop_assert_eq!(one.closed, many.closed);
    }
}
