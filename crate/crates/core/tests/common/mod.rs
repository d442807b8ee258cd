#![allow(dead_code)]

use std::sync::Arc;

use coxeter_tits::coxeter::Order::{self, Finite as F, Infinite as Inf};
use coxeter_tits::{CoxeterSystem, FieldElement, Matrix, RealCyclotomicField};
use num_bigint::BigInt;
use num_rational::BigRational;

pub fn system(rank: usize, pairs: &[(usize, usize, Order)]) -> CoxeterSystem {
    CoxeterSystem::from_pairs(rank, pairs).expect("valid system")
}

pub fn right_angled() -> CoxeterSystem {
    system(3, &[(0, 1, Inf), (1, 2, Inf), (0, 2, F(2))])
}

pub fn ideal_triangle() -> CoxeterSystem {
    system(3, &[(0, 1, Inf), (1, 2, Inf), (0, 2, Inf)])
}

pub fn a3() -> CoxeterSystem {
    system(3, &[(0, 1, F(3)), (1, 2, F(3))])
}

pub fn b3() -> CoxeterSystem {
    system(3, &[(0, 1, F(4)), (1, 2, F(3))])
}

pub fn h3() -> CoxeterSystem {
    system(3, &[(0, 1, F(5)), (1, 2, F(3))])
}

/// Finite systems with their group orders.
pub fn finite_catalog() -> Vec<(String, CoxeterSystem, usize)> {
    let mut out: Vec<(String, CoxeterSystem, usize)> =
        (2..=6).map(|m| (format!("I2({m})"), CoxeterSystem::dihedral(F(m)), 2 * m as usize)).collect();
    out.push(("A3".into(), a3(), 24));
    out.push(("B3".into(), b3(), 48));
    out.push(("H3".into(), h3(), 120));
    out
}

/// Finite catalog plus the infinite dihedral group and the two rank-3
/// hyperbolic examples.
pub fn relation_catalog() -> Vec<(String, CoxeterSystem)> {
    let mut out: Vec<(String, CoxeterSystem)> = finite_catalog().into_iter().map(|(n, s, _)| (n, s)).collect();
    out.push(("I2(inf)".into(), CoxeterSystem::dihedral(Inf)));
    out.push(("right-angled".into(), right_angled()));
    out.push(("ideal triangle".into(), ideal_triangle()));
    out
}

pub fn field(level: u64) -> Arc<RealCyclotomicField> {
    RealCyclotomicField::for_level(level).expect("positive level")
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn element(f: &Arc<RealCyclotomicField>, coeffs: &[(i64, i64)]) -> FieldElement {
    f.from_poly(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
}

pub fn int_matrix(rows: &[[i64; 3]]) -> Matrix {
    Matrix::from_i64(&field(1), rows)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Euler's totient by direct count.
pub fn totient(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

/// Determinant by Leibniz expansion over all permutations.
pub fn leibniz_det(a: &Matrix) -> FieldElement {
    let n = a.rows();
    let f = a.field().clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = f.zero();
    permute(&mut perm, 0, &mut |p| {
        let mut term = f.one();
        for (i, &j) in p.iter().enumerate() {
            term = &term * a.get(i, j);
        }
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        total = if inversions % 2 == 0 { &total + &term } else { &total - &term };
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, visit);
        p.swap(k, i);
    }
}

/// Signature of a symmetric matrix from Descartes' rule on its characteristic
/// polynomial, exact because every root is real.
pub fn descartes_signature(a: &Matrix) -> (usize, usize, usize) {
    let cp = a.char_poly();
    let signs: Vec<i8> = cp.coeffs().iter().map(|c| c.sign().as_i8()).collect();
    let z = signs.iter().take_while(|&&s| s == 0).count();
    let changes = |s: &[i8]| {
        let nz: Vec<i8> = s.iter().copied().filter(|&x| x != 0).collect();
        nz.windows(2).filter(|w| w[0] != w[1]).count()
    };
    let p = changes(&signs);
    let flipped: Vec<i8> = signs.iter().enumerate().map(|(k, &s)| if k % 2 == 1 { -s } else { s }).collect();
    let q = changes(&flipped);
    (p, q, z)
}

/// Connectivity of the Coxeter graph by union-find.
pub fn union_find_connected(orders: &[Vec<Order>]) -> bool {
    let n = orders.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if orders[i][j].is_edge() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let root = find(&mut parent, 0);
    (0..n).all(|i| find(&mut parent, i) == root)
}
