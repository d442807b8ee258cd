//! Exact arithmetic in `Q(theta)`, `theta = 2cos(pi/L)`.
//!
//! Every entry of a Tits form whose finite orders all divide `L` lies in this
//! field. Elements are canonical coefficient vectors of length
//! `deg(minpoly)`, so equality and hashing are structural.

mod poly;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::coxeter::Order;

pub(crate) use poly::lcm_u64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("field level must be positive")]
    ZeroLevel,
    #[error("elements belong to different fields (levels {0} and {1})")]
    FieldMismatch(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("order {order} does not divide the field level {level}")]
    OrderNotDividing { order: u64, level: u64 },
    #[error("order must be positive")]
    ZeroOrder,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

/// The real cyclotomic field `Q(2cos(pi/L))`.
///
/// `theta_enclosure` is a rational interval `(lo, hi]` containing `theta` and
/// no other root of the minimal polynomial. For `L <= 2` the field is `Q`
/// and the enclosure is a single point.
#[derive(Debug)]
pub struct RealCyclotomicField {
    level: u64,
    minpoly: Vec<BigInt>,
    minpoly_q: Vec<BigRational>,
    enclosure: (BigRational, BigRational),
    /// Tightest enclosure computed so far; only ever narrows.
    refined: Mutex<(BigRational, BigRational)>,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl RealCyclotomicField {
    /// Shared field of the given level; fields are built once per process.
    pub fn for_level(level: u64) -> Result<Arc<Self>, ArithError> {
        static CACHE: OnceLock<Mutex<HashMap<u64, Arc<RealCyclotomicField>>>> = OnceLock::new();
        if level == 0 {
            return Err(ArithError::ZeroLevel);
        }
        let cache = CACHE.get_or_init(Default::default);
        if let Some(f) = cache.lock().unwrap_or_else(|e| e.into_inner()).get(&level) {
            return Ok(Arc::clone(f));
        }
        let built = Self::build(level)?;
        let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
        Ok(Arc::clone(guard.entry(level).or_insert(built)))
    }

    fn build(level: u64) -> Result<Arc<Self>, ArithError> {
        if level == 0 {
            return Err(ArithError::ZeroLevel);
        }
        if level == 1 {
            // Rational field. The generator is pinned to 2 by convention; the
            // only order that would need 2cos(pi) = -2 is handled directly.
            let minpoly = vec![BigInt::from(-2), BigInt::one()];
            return Ok(Arc::new(Self {
                level,
                minpoly_q: poly::to_rational(&minpoly),
                minpoly,
                enclosure: (q(2), q(2)),
                refined: Mutex::new((q(2), q(2))),
            }));
        }
        let minpoly = poly::palindromic_to_trace(&poly::cyclotomic(2 * level));
        let minpoly_q = poly::to_rational(&minpoly);
        let enclosure = if minpoly.len() == 2 {
            let root = -minpoly_q[0].clone();
            (root.clone(), root)
        } else {
            isolate_largest_root(&minpoly_q, 2.0 * (std::f64::consts::PI / level as f64).cos())
        };
        let refined = Mutex::new(enclosure.clone());
        Ok(Arc::new(Self { level, minpoly, minpoly_q, enclosure, refined }))
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    /// Degree of the extension over `Q`.
    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    /// Monic minimal polynomial of `theta`, ascending coefficients.
    pub fn minpoly(&self) -> &[BigInt] {
        &self.minpoly
    }

    pub fn theta_enclosure(&self) -> (&BigRational, &BigRational) {
        (&self.enclosure.0, &self.enclosure.1)
    }

    /// Floating approximation of `theta`, for diagnostics only.
    pub fn theta_f64(&self) -> f64 {
        if self.level == 1 {
            2.0
        } else {
            2.0 * (std::f64::consts::PI / self.level as f64).cos()
        }
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        FieldElement { field: Arc::clone(self), coeffs: vec![BigRational::zero(); self.degree()] }
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.from_rational(BigRational::one())
    }

    pub fn from_rational(self: &Arc<Self>, r: BigRational) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = r;
        e
    }

    pub fn from_int(self: &Arc<Self>, n: i64) -> FieldElement {
        self.from_rational(q(n))
    }

    pub fn theta(self: &Arc<Self>) -> FieldElement {
        self.from_poly(vec![BigRational::zero(), BigRational::one()])
    }

    /// Reduces an arbitrary polynomial in `theta` to canonical form.
    pub fn from_poly(self: &Arc<Self>, mut coeffs: Vec<BigRational>) -> FieldElement {
        let d = self.degree();
        while coeffs.len() > d {
            let c = coeffs.pop().unwrap();
            if c.is_zero() {
                continue;
            }
            let shift = coeffs.len() - d;
            for (i, m) in self.minpoly_q[..d].iter().enumerate() {
                coeffs[shift + i] -= &c * m;
            }
        }
        coeffs.resize(d, BigRational::zero());
        FieldElement { field: Arc::clone(self), coeffs }
    }

    /// Exact `2cos(pi/m)`; `m = inf` maps to 2 so that the Tits entry
    /// `-value/2` is `-1`.
    pub fn two_cos_pi_over(self: &Arc<Self>, m: Order) -> Result<FieldElement, ArithError> {
        let m = match m {
            Order::Infinite => return Ok(self.from_int(2)),
            Order::Finite(0) => return Err(ArithError::ZeroOrder),
            Order::Finite(1) => return Ok(self.from_int(-2)),
            Order::Finite(2) => return Ok(self.zero()),
            Order::Finite(m) => m,
        };
        if !self.level.is_multiple_of(m) {
            return Err(ArithError::OrderNotDividing { order: m, level: self.level });
        }
        // c_k = 2cos(k pi / L) via c_{k+1} = theta c_k - c_{k-1}.
        let theta = self.theta();
        let (mut prev, mut cur) = (self.from_int(2), theta.clone());
        for _ in 1..self.level / m {
            let next = &(&theta * &cur) - &prev;
            prev = std::mem::replace(&mut cur, next);
        }
        Ok(cur)
    }

    /// Halves the enclosure, keeping the half that still brackets `theta`.
    fn bisect(&self, lo: &mut BigRational, hi: &mut BigRational) {
        if lo == hi {
            return;
        }
        let mid = (&*lo + &*hi) / q(2);
        let at_mid = poly::eval(&self.minpoly_q, &mid);
        if at_mid.is_zero() {
            *lo = mid.clone();
            *hi = mid;
            return;
        }
        let at_hi = poly::eval(&self.minpoly_q, hi);
        if at_mid.is_positive() == at_hi.is_positive() {
            *hi = mid;
        } else {
            *lo = mid;
        }
    }

    /// Enclosure of `theta` narrower than `width`, sharing refinement work
    /// across calls.
    fn enclosure_within(&self, width: &BigRational) -> (BigRational, BigRational) {
        let mut cached = self.refined.lock().unwrap_or_else(|e| e.into_inner());
        let (lo, hi) = &mut *cached;
        while lo != hi && &*hi - &*lo >= *width {
            self.bisect(lo, hi);
        }
        cached.clone()
    }

    fn same_field(a: &Arc<Self>, b: &Arc<Self>) -> bool {
        Arc::ptr_eq(a, b) || a.level == b.level
    }
}

impl PartialEq for RealCyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.level == other.level
    }
}

impl Eq for RealCyclotomicField {}

impl Hash for RealCyclotomicField {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.level.hash(state);
    }
}

/// Interval `(lo, hi]` around the largest real root of a squarefree
/// polynomial whose roots lie in `(-2, 2)`, narrowed to width below 2^-20.
///
/// `guess` seeds a candidate interval that is accepted only if a Sturm count
/// shows it holds the one root above its lower end; otherwise the root is
/// isolated by Sturm bisection from `(-2, 2]`.
fn isolate_largest_root(p: &[BigRational], guess: f64) -> (BigRational, BigRational) {
    let chain = poly::sturm_chain(p);
    let eps = BigRational::new(BigInt::one(), BigInt::one() << 20);
    let dyadic = |x: f64| BigRational::from_float(x).unwrap_or_else(BigRational::zero);
    let seeded = (dyadic(guess - 1e-9), dyadic(guess + 1e-9));
    if poly::count_roots(&chain, &seeded.0, &q(2)) == 1 && poly::count_roots(&chain, &seeded.0, &seeded.1) == 1 {
        return seeded;
    }
    let (mut lo, mut hi) = (q(-2), q(2));
    while poly::count_roots(&chain, &lo, &hi) > 1 {
        let mid = (&lo + &hi) / q(2);
        if poly::count_roots(&chain, &mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    while &hi - &lo > eps {
        let mid = (&lo + &hi) / q(2);
        if poly::count_roots(&chain, &mid, &hi) == 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

fn interval_mul(a: &(BigRational, BigRational), b: &(BigRational, BigRational)) -> (BigRational, BigRational) {
    let products = [&a.0 * &b.0, &a.0 * &b.1, &a.1 * &b.0, &a.1 * &b.1];
    let lo = products.iter().min().unwrap().clone();
    let hi = products.iter().max().unwrap().clone();
    (lo, hi)
}

/// An element of a [`RealCyclotomicField`].
#[derive(Clone)]
pub struct FieldElement {
    field: Arc<RealCyclotomicField>,
    coeffs: Vec<BigRational>,
}

impl FieldElement {
    pub fn field(&self) -> &Arc<RealCyclotomicField> {
        &self.field
    }

    /// Coefficients in ascending powers of `theta`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it is one.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| self.coeffs[0].clone())
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    fn check(&self, other: &Self) -> Result<(), ArithError> {
        if RealCyclotomicField::same_field(&self.field, &other.field) {
            Ok(())
        } else {
            Err(ArithError::FieldMismatch(self.field.level, other.field.level))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ArithError> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { field: Arc::clone(&self.field), coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { field: Arc::clone(&self.field), coeffs })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ArithError> {
        self.check(other)?;
        if self.field.degree() == 1 {
            let coeffs = vec![&self.coeffs[0] * &other.coeffs[0]];
            return Ok(Self { field: Arc::clone(&self.field), coeffs });
        }
        let d = self.field.degree();
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Ok(self.field.from_poly(prod))
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(self.field.from_rational(r.recip()));
        }
        let s = poly::inverse_mod(&self.coeffs, &self.field.minpoly_q)
            .expect("minimal polynomial is irreducible");
        Ok(self.field.from_poly(s))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ArithError> {
        self.try_mul(&other.inv()?)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c * r).collect();
        Self { field: Arc::clone(&self.field), coeffs }
    }

    /// Interval containing the value, evaluated over an enclosure of `theta`.
    fn interval(&self, lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
        let theta = (lo.clone(), hi.clone());
        let mut it = self.coeffs.iter().rev();
        let top = it.next().unwrap().clone();
        let mut acc = (top.clone(), top);
        for c in it {
            let (a, b) = interval_mul(&acc, &theta);
            acc = (a + c, b + c);
        }
        acc
    }

    /// Exact sign: zero test on the coefficients, then interval evaluation
    /// with the `theta` enclosure refined until zero is excluded.
    pub fn sign(&self) -> Sign {
        if self.is_zero() {
            return Sign::Zero;
        }
        if let Some(r) = self.to_rational() {
            return if r.is_positive() { Sign::Positive } else { Sign::Negative };
        }
        let mut width = self.field.enclosure.1.clone() - &self.field.enclosure.0;
        loop {
            let (lo, hi) = self.field.enclosure_within(&width);
            let (a, b) = self.interval(&lo, &hi);
            if a.is_positive() {
                return Sign::Positive;
            }
            if b.is_negative() {
                return Sign::Negative;
            }
            width = (&hi - &lo) / q(16);
        }
    }

    /// Nearest-ish `f64`, from an exact enclosure of relative width below
    /// `2^-60`.
    pub fn to_f64(&self) -> f64 {
        if let Some(r) = self.to_rational() {
            return r.to_f64().unwrap_or(f64::NAN);
        }
        let mut width = BigRational::new(BigInt::one(), BigInt::one() << 64);
        loop {
            let (lo, hi) = self.field.enclosure_within(&width);
            let (a, b) = self.interval(&lo, &hi);
            let mid = (&a + &b) / q(2);
            if (&b - &a) * (BigInt::one() << 60) <= mid.abs() || lo == hi {
                return mid.to_f64().unwrap_or(f64::NAN);
            }
            width = (&hi - &lo) / q(16);
        }
    }

    /// Decimal rendering with `digits` places after the point, from a
    /// rational enclosure of width below `10^-(digits + 2)`.
    pub fn to_decimal(&self, digits: usize) -> String {
        let ten_pow = BigInt::from(10).pow(digits as u32);
        let value = match self.to_rational() {
            Some(r) => r,
            None => {
                let tol = BigRational::new(BigInt::one(), &ten_pow * BigInt::from(100));
                let mut width = tol.clone();
                loop {
                    let (lo, hi) = self.field.enclosure_within(&width);
                    let (a, b) = self.interval(&lo, &hi);
                    if &b - &a < tol {
                        break (a + b) / q(2);
                    }
                    width = (&hi - &lo) / q(16);
                }
            }
        };
        let scaled = (value * BigRational::from_integer(ten_pow)).round().to_integer();
        let negative = scaled.is_negative();
        let mut digits_str = scaled.abs().to_string();
        if digits > 0 {
            if digits_str.len() <= digits {
                digits_str = format!("{}{}", "0".repeat(digits + 1 - digits_str.len()), digits_str);
            }
            digits_str.insert(digits_str.len() - digits, '.');
        }
        if negative {
            format!("-{digits_str}")
        } else {
            digits_str
        }
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.level == other.field.level && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.level.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            let sep = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let power = match k {
                0 => String::new(),
                1 => "θ".to_string(),
                _ => format!("θ^{k}"),
            };
            let body = match (k, abs.is_one()) {
                (0, _) => abs.to_string(),
                (_, true) => power,
                _ => format!("{abs}*{power}"),
            };
            write!(f, "{sep}{body}")?;
            first = false;
        }
        Ok(())
    }
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("FieldElement", 2)?;
        st.serialize_field("level", &self.field.level)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            /// Panics on a field mismatch; use the `try_` form to handle it.
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$try(rhs).expect("field mismatch")
            }
        }
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { field: Arc::clone(&self.field), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn minimal_polynomials() {
        assert_eq!(RealCyclotomicField::for_level(1).unwrap().minpoly(), ints(&[-2, 1]));
        assert_eq!(RealCyclotomicField::for_level(2).unwrap().minpoly(), ints(&[0, 1]));
        assert_eq!(RealCyclotomicField::for_level(3).unwrap().minpoly(), ints(&[-1, 1]));
        assert_eq!(RealCyclotomicField::for_level(4).unwrap().minpoly(), ints(&[-2, 0, 1]));
        assert_eq!(RealCyclotomicField::for_level(5).unwrap().minpoly(), ints(&[-1, -1, 1]));
        assert_eq!(RealCyclotomicField::for_level(0).unwrap_err(), ArithError::ZeroLevel);
    }

    #[test]
    fn two_cos_values() {
        let f = RealCyclotomicField::for_level(6).unwrap();
        assert!(f.two_cos_pi_over(Order::Finite(2)).unwrap().is_zero());
        assert_eq!(f.two_cos_pi_over(Order::Finite(3)).unwrap(), f.one());
        assert_eq!(f.two_cos_pi_over(Order::Infinite).unwrap(), f.from_int(2));
        assert_eq!(f.two_cos_pi_over(Order::Finite(1)).unwrap(), f.from_int(-2));
        assert_eq!(
            f.two_cos_pi_over(Order::Finite(4)).unwrap_err(),
            ArithError::OrderNotDividing { order: 4, level: 6 }
        );
        assert_eq!(f.two_cos_pi_over(Order::Finite(0)).unwrap_err(), ArithError::ZeroOrder);
        // 2cos(pi/6) = sqrt 3 = theta itself
        assert_eq!(f.two_cos_pi_over(Order::Finite(6)).unwrap(), f.theta());
    }

    #[test]
    fn arithmetic_examples() {
        let f4 = RealCyclotomicField::for_level(4).unwrap();
        let t = f4.theta();
        assert_eq!(&t * &t, f4.from_int(2));
        assert_eq!(&t + &f4.zero(), t);

        let f5 = RealCyclotomicField::for_level(5).unwrap();
        let t = f5.theta();
        let tm1 = &t - &f5.one();
        assert_eq!(&tm1 * &t, f5.one());
        assert_eq!(t.inv().unwrap(), tm1);
        assert_eq!(f5.one().inv().unwrap(), f5.one());
        assert_eq!(f5.from_int(2).inv().unwrap(), f5.from_rational(BigRational::new(1.into(), 2.into())));
        assert_eq!(f5.zero().inv().unwrap_err(), ArithError::DivisionByZero);
        assert_eq!(t.try_add(&f4.theta()).unwrap_err(), ArithError::FieldMismatch(5, 4));
    }

    #[test]
    fn sign_examples() {
        let f4 = RealCyclotomicField::for_level(4).unwrap();
        assert_eq!(f4.zero().sign(), Sign::Zero);
        assert_eq!((&f4.theta() - &f4.from_int(2)).sign(), Sign::Negative);
        let f5 = RealCyclotomicField::for_level(5).unwrap();
        assert_eq!((&f5.theta() - &f5.one()).sign(), Sign::Positive);
        // theta^2 - 2 - 1e-30 style near-cancellation still resolves.
        let tiny = BigRational::new(1.into(), BigInt::from(10).pow(30));
        let e = (&f4.theta() - &f4.from_rational(BigRational::new(14142.into(), 10000.into())))
            .scale(&BigRational::one())
            - f4.from_rational(tiny);
        assert_eq!(e.sign(), Sign::Positive);
    }

    #[test]
    fn decimals() {
        let f4 = RealCyclotomicField::for_level(4).unwrap();
        assert_eq!(f4.theta().to_decimal(6), "1.414214");
        assert_eq!((-f4.theta()).to_decimal(3), "-1.414");
        assert_eq!(f4.from_rational(BigRational::new((-1).into(), 2.into())).to_decimal(2), "-0.50");
        assert_eq!(f4.from_int(7).to_decimal(0), "7");
        assert_eq!(f4.from_rational(BigRational::new(1.into(), 200.into())).to_decimal(4), "0.0050");
    }

    #[test]
    fn display_and_json() {
        let f5 = RealCyclotomicField::for_level(5).unwrap();
        let e = &f5.theta() - &f5.from_rational(BigRational::new(1.into(), 2.into()));
        assert_eq!(e.to_string(), "θ - 1/2");
        assert_eq!(
            serde_json::to_value(&e).unwrap(),
            serde_json::json!({"level": 5, "coeffs": ["-1/2", "1"]})
        );
    }
}
