//! Dense univariate polynomials over `Q` in ascending coefficient order.
//!
//! These are internal helpers for building minimal polynomials, reducing
//! field elements and isolating the generator `theta`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) type QPoly = Vec<BigRational>;

pub(crate) fn trim(p: &mut QPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Degree of a trimmed polynomial; `None` for the zero polynomial.
pub(crate) fn degree(p: &[BigRational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub(crate) fn mul(a: &[BigRational], b: &[BigRational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn sub(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let n = a.len().max(b.len());
    let mut out: QPoly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

/// Euclidean division. Panics if `d` is zero.
pub(crate) fn divrem(n: &[BigRational], d: &[BigRational]) -> (QPoly, QPoly) {
    let dd = degree(d).expect("division by the zero polynomial");
    let lead = &d[dd];
    let mut rem: QPoly = n.to_vec();
    trim(&mut rem);
    if rem.len() <= dd {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - dd];
    while let Some(rd) = degree(&rem) {
        if rd < dd {
            break;
        }
        let c = &rem[rd] / lead;
        let shift = rd - dd;
        for (i, dc) in d.iter().enumerate().take(dd + 1) {
            rem[shift + i] -= &c * dc;
        }
        quot[shift] = c;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

pub(crate) fn derivative(p: &[BigRational]) -> QPoly {
    let mut out: QPoly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn eval(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c)
}

/// Returns `s` with `s * a == 1 (mod m)`, or `None` when `gcd(a, m) != 1`.
pub(crate) fn inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<QPoly> {
    // Extended Euclid tracking only the cofactor of `a`.
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1): (QPoly, QPoly) = (Vec::new(), vec![BigRational::one()]);
    while degree(&r1).is_some() {
        let (q, r) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // r0 is the gcd, s0 its cofactor.
    if degree(&r0) != Some(0) {
        return None;
    }
    let scale = r0[0].recip();
    let (_, s) = divrem(&s0.iter().map(|c| c * &scale).collect::<Vec<_>>(), m);
    Some(s)
}

fn int_poly_divexact(n: &[BigInt], d: &[BigInt]) -> Vec<BigInt> {
    // `d` is monic here (cyclotomic divisors), so the quotient stays integral.
    let dd = d.len() - 1;
    let mut rem = n.to_vec();
    let mut quot = vec![BigInt::zero(); n.len() - dd];
    for shift in (0..quot.len()).rev() {
        let c = rem[shift + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, dc) in d.iter().enumerate() {
            rem[shift + i] -= &c * dc;
        }
        quot[shift] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

/// The `n`-th cyclotomic polynomial, by dividing `x^n - 1` by `Phi_d` for
/// every proper divisor `d` of `n`.
pub(crate) fn cyclotomic(n: u64) -> Vec<BigInt> {
    assert!(n > 0);
    let divisors: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let mut known: Vec<(u64, Vec<BigInt>)> = Vec::with_capacity(divisors.len());
    for &d in &divisors {
        let mut p = vec![BigInt::zero(); d as usize + 1];
        p[0] = BigInt::from(-1);
        p[d as usize] = BigInt::one();
        for (e, phi) in &known {
            if d % e == 0 {
                p = int_poly_divexact(&p, phi);
            }
        }
        known.push((d, p));
    }
    known.pop().map(|(_, p)| p).unwrap()
}

/// Rewrites a palindromic polynomial `p(x)` of even degree `2k` as `g(y)`
/// with `x^{-k} p(x) = g(x + 1/x)`.
pub(crate) fn palindromic_to_trace(p: &[BigInt]) -> Vec<BigInt> {
    let n = p.len() - 1;
    assert!(n.is_multiple_of(2), "palindromic substitution needs even degree");
    let k = n / 2;
    // sym[j] = coefficient of (x^j + x^{-j}) for j >= 1, sym[0] = constant.
    let mut sym: Vec<BigInt> = (0..=k).map(|j| p[k + j].clone()).collect();
    let mut g = vec![BigInt::zero(); k + 1];
    for top in (0..=k).rev() {
        let c = sym[top].clone();
        if c.is_zero() {
            continue;
        }
        g[top] = c.clone();
        // (x + 1/x)^top = sum_i C(top, i) x^{top - 2i}
        let mut binom = BigInt::one();
        for i in 0..=top {
            let e = top as i64 - 2 * i as i64;
            // x^e and x^{-e} share one symmetric slot; take the e >= 0 half.
            if e >= 0 {
                sym[e as usize] -= &c * &binom;
            }
            binom = binom * BigInt::from(top - i) / BigInt::from(i + 1);
        }
    }
    debug_assert!(sym.iter().all(Zero::is_zero));
    g
}

pub(crate) fn to_rational(p: &[BigInt]) -> QPoly {
    p.iter().cloned().map(BigRational::from_integer).collect()
}

/// Sturm chain of a squarefree polynomial.
pub(crate) fn sturm_chain(p: &[BigRational]) -> Vec<QPoly> {
    let mut chain = vec![p.to_vec(), derivative(p)];
    loop {
        let len = chain.len();
        if degree(&chain[len - 1]).unwrap_or(0) == 0 {
            break;
        }
        let (_, r) = divrem(&chain[len - 2], &chain[len - 1]);
        if degree(&r).is_none() {
            break;
        }
        chain.push(primitive(&r.into_iter().map(|c| -c).collect::<Vec<_>>()));
    }
    chain
}

/// Positive multiple of `p` with coprime integer coefficients.
fn primitive(p: &[BigRational]) -> QPoly {
    let den = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let nums: Vec<BigInt> = p.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    let content = nums.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
    if content.is_zero() {
        return p.to_vec();
    }
    nums.into_iter().map(|n| BigRational::from_integer(n / &content)).collect()
}

fn sign_changes(chain: &[QPoly], x: &BigRational) -> usize {
    let signs: Vec<bool> = chain
        .iter()
        .map(|p| eval(p, x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` in the half-open interval `(a, b]`.
pub(crate) fn count_roots(chain: &[QPoly], a: &BigRational, b: &BigRational) -> usize {
    sign_changes(chain, a).saturating_sub(sign_changes(chain, b))
}

pub(crate) fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}
