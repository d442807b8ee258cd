//! Cross-checks against independently computed values.

mod common;

use common::*;
use coxeter_tits::coxeter::Order::{Finite as F, Infinite as Inf};
use coxeter_tits::geom;
use coxeter_tits::linalg::{FieldPoly, Vector};
use coxeter_tits::tits::{self, FormMatrix};
use coxeter_tits::{CoxeterSystem, Matrix};
use num_bigint::BigInt;

/// Minimal polynomial from `prod (x - 2cos(k pi / L))` over odd `k` coprime
/// to `2L`, computed in floating point and rounded.
fn float_minpoly(level: u64) -> Vec<i64> {
    let roots: Vec<f64> = (1..level)
        .step_by(2)
        .filter(|&k| gcd(k, 2 * level) == 1)
        .map(|k| 2.0 * (std::f64::consts::PI * k as f64 / level as f64).cos())
        .collect();
    let mut c = vec![1.0f64];
    for r in roots {
        let mut next = vec![0.0; c.len() + 1];
        for (i, &a) in c.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= r * a;
        }
        c = next;
    }
    c.iter().map(|x| x.round() as i64).collect()
}

#[test]
fn minimal_polynomials_match_root_products() {
    for level in 2..=30u64 {
        let f = field(level);
        let want: Vec<BigInt> = float_minpoly(level).into_iter().map(BigInt::from).collect();
        assert_eq!(f.minpoly(), want.as_slice(), "level {level}");
        assert_eq!(f.degree() as u64, totient(2 * level) / 2, "level {level}");
    }
}

#[test]
fn two_cos_matches_float_for_divisors() {
    for level in 1..=60u64 {
        let f = field(level);
        for m in (1..=level).filter(|m| level % m == 0) {
            let got = f.two_cos_pi_over(F(m)).unwrap().to_f64();
            let want = 2.0 * (std::f64::consts::PI / m as f64).cos();
            assert!((got - want).abs() < 1e-12, "L={level} m={m}: {got} vs {want}");
        }
        assert_eq!(f.two_cos_pi_over(Inf).unwrap(), f.from_int(2));
    }
}

#[test]
fn theta_enclosure_brackets_float_theta() {
    for level in 3..=60u64 {
        let f = field(level);
        let (lo, hi) = f.theta_enclosure();
        let t = f.theta_f64();
        let (lo, hi) = (lo.to_string(), hi.to_string());
        let parse = |s: &str| match s.split_once('/') {
            Some((n, d)) => n.parse::<f64>().unwrap() / d.parse::<f64>().unwrap(),
            None => s.parse::<f64>().unwrap(),
        };
        assert!(parse(&lo) <= t + 1e-12 && t <= parse(&hi) + 1e-12, "level {level}");
        assert!(parse(&hi) - parse(&lo) < 1e-6, "level {level}");
    }
}

#[test]
fn char_poly_matches_leibniz_determinant() {
    let samples = [right_angled(), ideal_triangle(), h3(), b3(), system(4, &[(0, 1, F(5)), (1, 2, F(4)), (2, 3, Inf)])];
    for sys in samples {
        let b = tits::build_tits_form(&sys);
        let a = b.matrix();
        let f = a.field().clone();
        let cp = a.char_poly();
        assert_eq!(cp.degree(), Some(sys.rank()));
        for t in -3..=3 {
            let t = f.from_int(t);
            let shifted = Matrix::identity(&f, a.rows()).scale(&t).sub(a);
            assert_eq!(cp.eval(&t), leibniz_det(&shifted));
        }
        assert_eq!(a.determinant(), leibniz_det(a));
    }
}

#[test]
fn signature_matches_descartes_count() {
    let mut systems: Vec<CoxeterSystem> = relation_catalog().into_iter().map(|(_, s)| s).collect();
    systems.push(system(3, &[(0, 1, F(3)), (1, 2, F(3)), (0, 2, F(3))]));
    systems.push(system(3, &[(0, 1, F(4)), (1, 2, F(4))]));
    systems.push(system(3, &[(0, 1, F(7)), (1, 2, F(3))]));
    systems.push(system(4, &[(0, 1, F(5)), (1, 2, F(3)), (2, 3, F(3))]));
    for sys in systems {
        let b = tits::build_tits_form(&sys);
        let sig = tits::signature(&b);
        assert_eq!((sig.p, sig.q, sig.z), descartes_signature(b.matrix()), "{}", sys.to_dsl());
    }
}

/// Brute force: multiply out every word up to length 2 and deduplicate.
#[test]
fn words_of_length_two_brute_force() {
    let sys = right_angled();
    let gens = geom::generators(&sys);
    let f = gens[0].field().clone();
    let mut seen: Vec<Matrix> = vec![Matrix::identity(&f, 3)];
    for a in &gens {
        for w in [a.clone()].into_iter().chain(gens.iter().map(|b| a * b)) {
            if !seen.contains(&w) {
                seen.push(w);
            }
        }
    }
    let table = geom::enumerate_elements(&sys, 2, geom::DEFAULT_CAP);
    assert_eq!(table.len(), seen.len());
    assert_eq!(table.len(), 9);
    assert!(table.records.iter().all(|r| seen.contains(&r.matrix)));
}

/// Growth of the right-angled example: `a_n = a_{n-1} + a_{n-2}` from (1, 3, 5).
#[test]
fn right_angled_growth_series() {
    let table = geom::enumerate_elements(&right_angled(), 8, geom::DEFAULT_CAP);
    assert_eq!(table.growth(), vec![1, 3, 5, 8, 13, 21, 34, 55, 89]);
    let tri = geom::enumerate_elements(&ideal_triangle(), 6, geom::DEFAULT_CAP);
    let want: Vec<usize> = (0..=6).map(|n| if n == 0 { 1 } else { 3 << (n - 1) }).collect();
    assert_eq!(tri.growth(), want);
}

/// Poincare polynomials of the finite groups: products of `[d_i]_q` over the
/// degrees.
#[test]
fn finite_growth_matches_poincare_polynomials() {
    fn poincare(degrees: &[usize]) -> Vec<usize> {
        degrees.iter().fold(vec![1], |acc, &d| {
            let mut out = vec![0; acc.len() + d - 1];
            for (i, &a) in acc.iter().enumerate() {
                for k in 0..d {
                    out[i + k] += a;
                }
            }
            out
        })
    }
    let cases = [(a3(), vec![2, 3, 4]), (b3(), vec![2, 4, 6]), (h3(), vec![2, 6, 10])];
    for (sys, degrees) in cases {
        let table = geom::enumerate_elements(&sys, usize::MAX, geom::DEFAULT_CAP);
        assert_eq!(table.growth(), poincare(&degrees), "{}", sys.to_dsl());
    }
    for m in 2..=8u64 {
        let table = geom::enumerate_elements(&CoxeterSystem::dihedral(F(m)), usize::MAX, geom::DEFAULT_CAP);
        assert_eq!(table.growth(), poincare(&[2, m as usize]));
    }
}

#[test]
fn chamber_point_solves_linear_system() {
    let form = tits::build_tits_form(&right_angled());
    let v = tits::canonical_chamber_point(&form).unwrap();
    let ones = Vector::from_i64(form.field(), &[1, 1, 1]);
    assert_eq!(form.matrix().mul_vec(&v), ones);
    let cp = FieldPoly::from_roots(&field(1), &[field(1).from_int(2), field(1).from_int(2), field(1).from_int(-1)]);
    let triangle = FormMatrix::new(int_matrix(&[[1, -1, -1], [-1, 1, -1], [-1, -1, 1]])).unwrap();
    assert_eq!(tits::char_poly(&triangle), cp);
}
