//! The Tits bilinear form `B(e_i, e_j) = -cos(pi / m_ij)` and the geometry of
//! the fundamental chamber `C = {v : B(v, e_i) > 0 for all i}`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::arith::{FieldElement, RealCyclotomicField, Sign};
use crate::coxeter::{CoxeterSystem, Order};
use crate::linalg::{FieldPoly, Matrix, Vector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormError {
    #[error("the form is degenerate")]
    DegenerateForm,
    #[error("the form restricted to the given span is degenerate")]
    DegenerateRestriction,
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
}

/// Symmetric matrix of a bilinear form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormMatrix {
    matrix: Matrix,
}

impl FormMatrix {
    /// Wraps a symmetric square matrix; returns `None` otherwise.
    pub fn new(matrix: Matrix) -> Option<Self> {
        matrix.is_symmetric().then_some(Self { matrix })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn field(&self) -> &Arc<RealCyclotomicField> {
        self.matrix.field()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    /// `B(u, v) = u^T B v`.
    pub fn eval(&self, u: &Vector, v: &Vector) -> FieldElement {
        let bv = self.matrix.mul_vec(v);
        u.0.iter().zip(&bv.0).fold(self.field().zero(), |acc, (a, b)| acc + a * b)
    }

    /// Gram matrix of the form on the given vectors.
    pub fn restrict(&self, basis: &[Vector]) -> FormMatrix {
        let rows = basis.iter().map(|u| basis.iter().map(|v| self.eval(u, v)).collect()).collect();
        FormMatrix { matrix: Matrix::from_rows(self.field(), rows) }
    }

    /// `P^T B P`.
    pub fn congruent(&self, p: &Matrix) -> FormMatrix {
        FormMatrix { matrix: &(&p.transpose() * &self.matrix) * p }
    }
}

impl fmt::Display for FormMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.matrix.fmt(f)
    }
}

impl Serialize for FormMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.matrix.serialize(s)
    }
}

/// Inertia: counts of positive, negative and zero pivots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Signature {
    pub p: usize,
    pub q: usize,
    pub z: usize,
}

impl Signature {
    pub fn rank(self) -> usize {
        self.p + self.q + self.z
    }

    pub fn is_degenerate(self) -> bool {
        self.z > 0
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.p, self.q, self.z)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Classification {
    PositiveDefinite,
    PositiveSemidefiniteDegenerate,
    HyperbolicType,
    IndefiniteOther,
    DegenerateOther,
}

impl Classification {
    pub fn from_signature(sig: Signature) -> Self {
        let n = sig.rank();
        match sig {
            Signature { q: 0, z: 0, .. } => Classification::PositiveDefinite,
            Signature { q: 0, .. } => Classification::PositiveSemidefiniteDegenerate,
            Signature { p, q: 1, z: 0 } if p + 1 == n => Classification::HyperbolicType,
            Signature { p, q, z: 0 } if p >= 1 && q >= 1 => Classification::IndefiniteOther,
            _ => Classification::DegenerateOther,
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Tits form of a system over `Q(2cos(pi/L))`, `L` the system's field level.
pub fn build_tits_form(system: &CoxeterSystem) -> FormMatrix {
    let field = RealCyclotomicField::for_level(system.field_level()).expect("level is positive");
    let n = system.rank();
    let minus_half = BigRational::new(BigInt::from(-1), BigInt::from(2));
    let mut m = Matrix::identity(&field, n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let two_cos = field
                    .two_cos_pi_over(system.order(i, j))
                    .expect("every finite order >= 3 divides the level");
                m.set(i, j, two_cos.scale(&minus_half));
            }
        }
    }
    FormMatrix { matrix: m }
}

/// Sylvester inertia by symmetric elimination under congruence.
///
/// Pivoting prefers a nonzero diagonal entry; when the remaining diagonal is
/// all zero, a nonzero `D[i][j]` is folded in by adding row and column `j` to
/// `i`, which puts `2 D[i][j]` on the diagonal.
pub fn signature(form: &FormMatrix) -> Signature {
    let n = form.rank();
    let mut d = form.matrix.to_rows();
    let mut sig = Signature { p: 0, q: 0, z: 0 };

    for k in 0..n {
        let diag = (k..n).find(|&i| !d[i][i].is_zero());
        let pivot = match diag {
            Some(i) => i,
            None => {
                let off = (k..n).flat_map(|i| (k..n).map(move |j| (i, j))).find(|&(i, j)| !d[i][j].is_zero());
                let Some((i, j)) = off else {
                    sig.z += n - k;
                    break;
                };
                for c in 0..n {
                    let v = &d[i][c] + &d[j][c];
                    d[i][c] = v;
                }
                for r in 0..n {
                    let v = &d[r][i] + &d[r][j];
                    d[r][i] = v;
                }
                i
            }
        };
        d.swap(k, pivot);
        for row in d.iter_mut() {
            row.swap(k, pivot);
        }

        let p = d[k][k].clone();
        match p.sign() {
            Sign::Positive => sig.p += 1,
            Sign::Negative => sig.q += 1,
            Sign::Zero => unreachable!("pivot is nonzero"),
        }
        let inv = p.inv().expect("nonzero pivot");
        let pivot_row = d[k].clone();
        for r in k + 1..n {
            if pivot_row[r].is_zero() {
                continue;
            }
            let f = &pivot_row[r] * &inv;
            for c in k + 1..n {
                let v = &d[r][c] - &(&f * &pivot_row[c]);
                d[r][c] = v;
            }
            d[r][k] = p.field().zero();
            d[k][r] = p.field().zero();
        }
    }
    sig
}

pub fn classify(system: &CoxeterSystem) -> Classification {
    Classification::from_signature(signature(&build_tits_form(system)))
}

/// The point `v` with `B(v, e_i) = 1` for every `i`.
pub fn canonical_chamber_point(form: &FormMatrix) -> Result<Vector, FormError> {
    let ones = Vector(vec![form.field().one(); form.rank()]);
    form.matrix.solve(&ones).ok_or(FormError::DegenerateForm)
}

/// Whether `B(v, e_i) > 0` for every `i`.
pub fn chamber_contains(form: &FormMatrix, v: &Vector) -> bool {
    v.len() == form.rank() && form.matrix.mul_vec(v).all_positive()
}

/// Deterministic chamber points `v = B^{-1} c` with `c` strictly positive.
///
/// Each `c_i` is a rational `a/b` with `a, b` uniform in `1..=1000`, drawn
/// from a ChaCha8 stream seeded with `seed`.
pub fn sample_chamber_points(form: &FormMatrix, seed: u64, count: usize) -> Result<Vec<Vector>, FormError> {
    let inv = form.matrix.inverse().ok_or(FormError::DegenerateForm)?;
    let field = form.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points = (0..count)
        .map(|_| {
            let c = Vector(
                (0..form.rank())
                    .map(|_| {
                        let num: i64 = rng.gen_range(1..=1000);
                        let den: i64 = rng.gen_range(1..=1000);
                        field.from_rational(BigRational::new(num.into(), den.into()))
                    })
                    .collect(),
            );
            inv.mul_vec(&c)
        })
        .collect();
    Ok(points)
}

/// Basis of `{v : B(v, b) = 0 for all b in basis}`.
pub fn orthogonal_complement(form: &FormMatrix, basis: &[Vector]) -> Result<Vec<Vector>, FormError> {
    for b in basis {
        if b.len() != form.rank() {
            return Err(FormError::Dimension { expected: form.rank(), got: b.len() });
        }
    }
    if basis.is_empty() {
        return Ok((0..form.rank()).map(|i| Vector::unit(form.field(), form.rank(), i)).collect());
    }
    if form.restrict(basis).matrix.determinant().is_zero() {
        return Err(FormError::DegenerateRestriction);
    }
    let rows = basis.iter().map(|b| form.matrix.mul_vec(b).0).collect();
    Ok(Matrix::from_rows(form.field(), rows).kernel())
}

pub fn char_poly(form: &FormMatrix) -> FieldPoly {
    form.matrix.char_poly()
}

/// Which signature lemma covers the system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SignatureRoute {
    /// Some pair has a finite order; `B` restricted to `span(e_i, e_j)` is
    /// positive definite.
    FinitePair { i: usize, j: usize, order: u64, restriction_positive_definite: bool },
    /// Every pair has infinite order; the triangle on the first three
    /// generators has signature (2, 1).
    AllInfinite { triangle_signature: Option<Signature> },
}

impl SignatureRoute {
    fn holds(&self) -> bool {
        match self {
            SignatureRoute::FinitePair { restriction_positive_definite, .. } => *restriction_positive_definite,
            SignatureRoute::AllInfinite { triangle_signature } => {
                *triangle_signature == Some(Signature { p: 2, q: 1, z: 0 })
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ChamberWitness {
    pub point: Vector,
    pub norm: FieldElement,
    pub negative: bool,
}

/// Numeric consequences of the lattice theorem for hyperbolic Coxeter groups:
/// signature `(n-1, 1)` and `B(v, v) < 0` on the chamber.
#[derive(Clone, Debug, Serialize)]
pub struct Theorem3Report {
    pub signature: Signature,
    pub expected_signature: Signature,
    pub signature_ok: bool,
    pub route: SignatureRoute,
    pub canonical: ChamberWitness,
    pub samples: Vec<ChamberWitness>,
    pub samples_ok: bool,
    pub note: &'static str,
    pub pass: bool,
}

pub const LATTICE_NOTE: &str = "the lattice hypothesis itself is not verified; only its \
    numeric consequences are checked for an irreducible, non-degenerate, infinite system";

fn witness(form: &FormMatrix, v: Vector) -> ChamberWitness {
    let norm = form.eval(&v, &v);
    let negative = norm.sign() == Sign::Negative;
    ChamberWitness { point: v, norm, negative }
}

pub fn theorem3_check(system: &CoxeterSystem, sample_count: usize, seed: u64) -> Result<Theorem3Report, FormError> {
    if !system.is_irreducible() {
        return Err(FormError::PreconditionUnmet("the Coxeter graph is not connected".into()));
    }
    let form = build_tits_form(system);
    let sig = signature(&form);
    if sig.is_degenerate() {
        return Err(FormError::PreconditionUnmet("the Tits form is degenerate".into()));
    }
    if Classification::from_signature(sig) == Classification::PositiveDefinite {
        return Err(FormError::PreconditionUnmet(
            "the Tits form is positive definite, so the group is finite".into(),
        ));
    }
    let n = system.rank();
    let expected = Signature { p: n - 1, q: 1, z: 0 };

    let finite_pair = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find_map(|(i, j)| match system.order(i, j) {
            Order::Finite(m) => Some((i, j, m)),
            Order::Infinite => None,
        });
    let route = match finite_pair {
        Some((i, j, order)) => {
            let basis = [Vector::unit(form.field(), n, i), Vector::unit(form.field(), n, j)];
            let restricted = signature(&form.restrict(&basis));
            SignatureRoute::FinitePair {
                i,
                j,
                order,
                restriction_positive_definite: restricted == Signature { p: 2, q: 0, z: 0 },
            }
        }
        None => {
            let triangle_signature = (n >= 3).then(|| {
                let basis: Vec<Vector> = (0..3).map(|i| Vector::unit(form.field(), n, i)).collect();
                signature(&form.restrict(&basis))
            });
            SignatureRoute::AllInfinite { triangle_signature }
        }
    };

    let canonical = witness(&form, canonical_chamber_point(&form)?);
    let samples: Vec<ChamberWitness> =
        sample_chamber_points(&form, seed, sample_count)?.into_iter().map(|v| witness(&form, v)).collect();
    let samples_ok = samples.iter().all(|w| w.negative);
    let signature_ok = sig == expected;
    let pass = signature_ok && route.holds() && canonical.negative && samples_ok;
    Ok(Theorem3Report {
        signature: sig,
        expected_signature: expected,
        signature_ok,
        route,
        canonical,
        samples,
        samples_ok,
        note: LATTICE_NOTE,
        pass,
    })
}
