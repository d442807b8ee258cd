//! Dense matrices, vectors and polynomials over a [`RealCyclotomicField`].

use std::fmt;
use std::ops::Mul;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Serialize, Serializer};

use crate::arith::{FieldElement, RealCyclotomicField, Sign};

/// Row-major square or rectangular matrix with exact entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Arc<RealCyclotomicField>,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(field: &Arc<RealCyclotomicField>, rows: usize, cols: usize) -> Self {
        Self { field: Arc::clone(field), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Arc<RealCyclotomicField>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(field: &Arc<RealCyclotomicField>, rows: Vec<Vec<FieldElement>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Self { field: Arc::clone(field), rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64<R: AsRef<[i64]>>(field: &Arc<RealCyclotomicField>, rows: &[R]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| field.from_int(x)).collect())
            .collect();
        Self::from_rows(field, rows)
    }

    pub fn field(&self) -> &Arc<RealCyclotomicField> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn to_rows(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Integer entries, if every entry is an integer.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        use num_traits::ToPrimitive;
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|e| e.to_integer().and_then(|n| n.to_i64())).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() })
            })
    }

    pub fn trace(&self) -> FieldElement {
        (0..self.rows.min(self.cols)).fold(self.field.zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Self { data: self.data.iter().map(|x| x * c).collect(), ..self.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self { data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(), ..self.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self { data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(), ..self.clone() }
    }

    pub fn neg(&self) -> Self {
        Self { data: self.data.iter().map(|a| -a).collect(), ..self.clone() }
    }

    pub fn mul_vec(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.len());
        Vector(
            (0..self.rows)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .zip(&v.0)
                        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                        .fold(self.field.zero(), |acc, (a, b)| acc + a * b)
                })
                .collect(),
        )
    }

    pub fn pow(&self, mut k: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(&self.field, self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in 0..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c).clone();
                    for j in 0..m.cols {
                        let v = m.get(i, j) - &(&f * m.get(r, j));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self * x = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(row, f);
                }
                Vector(v)
            })
            .collect()
    }

    pub fn determinant(&self) -> FieldElement {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = self.field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return self.field.zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) * &inv;
                for j in c..n {
                    let v = m.get(i, j) - &(&f * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// Solves `self * x = b`; `None` if the matrix is singular.
    pub fn solve(&self, b: &Vector) -> Option<Vector> {
        assert!(self.is_square() && b.len() == self.rows);
        let n = self.rows;
        let mut aug = Self::zeros(&self.field, n, n + 1);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n, b.0[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots.last() == Some(&n) {
            return None;
        }
        Some(Vector((0..n).map(|i| r.get(i, n).clone()).collect()))
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Self::zeros(&self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// Characteristic polynomial `det(x I - self)` by Faddeev-LeVerrier.
    pub fn char_poly(&self) -> FieldPoly {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![self.field.zero(); n + 1];
        coeffs[n] = self.field.one();
        let id = Self::identity(&self.field, n);
        let mut m = Self::zeros(&self.field, n, n);
        for k in 1..=n {
            m = (self * &m).add(&id.scale(&coeffs[n - k + 1]));
            let tr = (self * &m).trace();
            let factor = BigRational::new(BigInt::from(-1), BigInt::from(k));
            coeffs[n - k] = tr.scale(&factor);
        }
        FieldPoly::new(&self.field, coeffs)
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix dimension mismatch");
        let mut out = Matrix::zeros(&self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(ToString::to_string).collect()).collect();
        let width = cells.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

/// Coordinate vector with exact entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector(pub Vec<FieldElement>);

impl Vector {
    pub fn from_i64(field: &Arc<RealCyclotomicField>, xs: &[i64]) -> Self {
        Self(xs.iter().map(|&x| field.from_int(x)).collect())
    }

    pub fn unit(field: &Arc<RealCyclotomicField>, n: usize, i: usize) -> Self {
        let mut v = vec![field.zero(); n];
        v[i] = field.one();
        Self(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.0
    }

    /// Sum of all coordinates.
    pub fn sum(&self) -> Option<FieldElement> {
        let mut it = self.0.iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, x| acc + x))
    }

    pub fn all_positive(&self) -> bool {
        self.0.iter().all(|x| x.sign() == Sign::Positive)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Serialize for Vector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Polynomial over a field, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldPoly {
    field: Arc<RealCyclotomicField>,
    coeffs: Vec<FieldElement>,
}

impl FieldPoly {
    pub fn new(field: &Arc<RealCyclotomicField>, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        Self { field: Arc::clone(field), coeffs }
    }

    pub fn from_i64(field: &Arc<RealCyclotomicField>, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    /// `prod (x - r)` over the given roots.
    pub fn from_roots(field: &Arc<RealCyclotomicField>, roots: &[FieldElement]) -> Self {
        roots.iter().fold(Self::from_i64(field, &[1]), |acc, r| {
            acc.mul(&Self::new(field, vec![-r, field.one()]))
        })
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(&self.field, Vec::new());
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(&self.field, out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = d.coeffs[dd].inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = &rem[top] * &lead_inv;
            let shift = top - dd;
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[shift + i] = &rem[shift + i] - &(&c * dc);
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(FieldElement::is_zero) {
                rem.pop();
            }
        }
        (Self::new(&self.field, quot), Self::new(&self.field, rem))
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    /// Matrix substitution `p(A)` by Horner's rule.
    pub fn eval_matrix(&self, a: &Matrix) -> Matrix {
        let id = Matrix::identity(&self.field, a.rows());
        self.coeffs
            .iter()
            .rev()
            .fold(Matrix::zeros(&self.field, a.rows(), a.cols()), |acc, c| (&acc * a).add(&id.scale(c)))
    }
}

impl fmt::Display for FieldPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let x = match k {
                    0 => String::new(),
                    1 => "x".into(),
                    _ => format!("x^{k}"),
                };
                match (k, c.is_one()) {
                    (0, _) => format!("({c})"),
                    (_, true) => x,
                    _ => format!("({c})*{x}"),
                }
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl Serialize for FieldPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat() -> Arc<RealCyclotomicField> {
        RealCyclotomicField::for_level(1).unwrap()
    }

    #[test]
    fn char_poly_examples() {
        let f = rat();
        let b1 = Matrix::from_i64(&f, &[[1, -1, -1], [-1, 1, -1], [-1, -1, 1]]);
        // (x - 2)^2 (x + 1) = x^3 - 3x^2 + 4
        assert_eq!(b1.char_poly(), FieldPoly::from_i64(&f, &[4, 0, -3, 1]));
        assert_eq!(Matrix::identity(&f, 2).char_poly(), FieldPoly::from_i64(&f, &[1, -2, 1]));
        let k = Matrix::from_i64(&f, &[[0, 0, -1], [0, 1, 0], [-1, 0, 0]]);
        // (x - 1)^2 (x + 1) = x^3 - x^2 - x + 1
        assert_eq!(k.char_poly(), FieldPoly::from_i64(&f, &[1, -1, -1, 1]));
    }

    #[test]
    fn division_recovers_factors() {
        let f = rat();
        let p = FieldPoly::from_i64(&f, &[4, 0, -3, 1]);
        let (q1, r1) = p.divrem(&FieldPoly::from_i64(&f, &[-2, 1]));
        assert!(r1.is_zero());
        let (q2, r2) = q1.divrem(&FieldPoly::from_i64(&f, &[1, 1]));
        assert!(r2.is_zero());
        assert_eq!(q2, FieldPoly::from_i64(&f, &[-2, 1]));
        let (_, r) = p.divrem(&FieldPoly::from_i64(&f, &[-3, 1]));
        assert!(!r.is_zero());
    }

    #[test]
    fn solve_kernel_inverse() {
        let f = rat();
        let b = Matrix::from_i64(&f, &[[1, -1, 0], [-1, 1, -1], [0, -1, 1]]);
        assert_eq!(b.solve(&Vector::from_i64(&f, &[1, 1, 1])).unwrap(), Vector::from_i64(&f, &[-2, -3, -2]));
        assert_eq!(b.determinant(), f.from_int(-1));
        let inv = b.inverse().unwrap();
        assert!((&inv * &b).is_identity());

        let singular = Matrix::from_i64(&f, &[[1, -1], [-1, 1]]);
        assert!(singular.solve(&Vector::from_i64(&f, &[1, 1])).is_none());
        assert!(singular.inverse().is_none());
        assert!(singular.determinant().is_zero());

        let row = Matrix::from_i64(&f, &[[1, -1, 0]]);
        assert_eq!(row.kernel(), vec![Vector::from_i64(&f, &[1, 1, 0]), Vector::from_i64(&f, &[0, 0, 1])]);
    }

    #[test]
    fn powers() {
        let f = rat();
        let x = Matrix::from_i64(&f, &[[1, 1], [0, 1]]);
        assert_eq!(x.pow(5), Matrix::from_i64(&f, &[[1, 5], [0, 1]]));
        assert!(x.pow(0).is_identity());
    }

    #[test]
    fn cayley_hamilton_irrational() {
        let f = RealCyclotomicField::for_level(5).unwrap();
        let t = f.theta();
        let m = Matrix::from_rows(&f, vec![vec![f.one(), -&t], vec![t.clone(), f.from_int(3)]]);
        let p = m.char_poly();
        assert!(p.eval_matrix(&m).rows() == 2);
        assert!(p.eval_matrix(&m).to_rows().iter().flatten().all(FieldElement::is_zero));
    }
}
