//! The geometric representation `s_i -> sigma_i`, with
//! `sigma_i(v) = v - 2 B(e_i, v) e_i`, and bounded enumeration of its image.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::coxeter::{CoxeterSystem, Order};
use crate::linalg::{Matrix, Vector};
use crate::tits::{self, FormError, FormMatrix};

pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("generator index {index} is outside 0..{rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("base-change matrix is singular")]
    SingularBasis,
    #[error("base-change matrix is {got}x{got_cols}, expected {expected}x{expected}")]
    BasisShape { expected: usize, got: usize, got_cols: usize },
    #[error("order of s_i s_j needs two distinct generators")]
    SameIndex,
    #[error(transparent)]
    Form(#[from] FormError),
}

/// A representation matrix, optionally tagged with the word it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMatrix {
    pub matrix: Matrix,
    pub word: Option<Vec<usize>>,
}

impl RepMatrix {
    pub fn new(matrix: Matrix) -> Self {
        Self { matrix, word: None }
    }
}

/// Matrix of `sigma_i` in the basis `e_1..e_n`: column `j` is
/// `e_j - 2 B(e_j, e_i) e_i`.
pub fn reflection_matrix(system: &CoxeterSystem, i: usize) -> Result<RepMatrix, RepError> {
    let form = tits::build_tits_form(system);
    reflection_from_form(&form, i).map(|m| RepMatrix { matrix: m, word: Some(vec![i]) })
}

fn reflection_from_form(form: &FormMatrix, i: usize) -> Result<Matrix, RepError> {
    let n = form.rank();
    if i >= n {
        return Err(RepError::IndexOutOfRange { index: i, rank: n });
    }
    let field = form.field();
    let two = field.from_int(2);
    let mut m = Matrix::identity(field, n);
    for j in 0..n {
        let v = m.get(i, j) - &(&two * form.matrix().get(j, i));
        m.set(i, j, v);
    }
    Ok(m)
}

/// All generator reflections, in index order.
pub fn generators(system: &CoxeterSystem) -> Vec<Matrix> {
    let form = tits::build_tits_form(system);
    (0..system.rank()).map(|i| reflection_from_form(&form, i).expect("index in range")).collect()
}

fn check_basis(p: &Matrix, n: usize) -> Result<Matrix, RepError> {
    if p.rows() != n || p.cols() != n {
        return Err(RepError::BasisShape { expected: n, got: p.rows(), got_cols: p.cols() });
    }
    p.inverse().ok_or(RepError::SingularBasis)
}

/// `P^{-1} M P`: the same map written in the basis given by the columns of `P`.
pub fn change_basis_rep(m: &RepMatrix, p: &Matrix) -> Result<RepMatrix, RepError> {
    let inv = check_basis(p, m.matrix.rows())?;
    Ok(RepMatrix { matrix: &(&inv * &m.matrix) * p, word: m.word.clone() })
}

/// `P^T B P`: the same form written in the basis given by the columns of `P`.
pub fn change_basis_form(form: &FormMatrix, p: &Matrix) -> Result<FormMatrix, RepError> {
    check_basis(p, form.rank())?;
    Ok(form.congruent(p))
}

/// `g^T B g == B`.
pub fn preserves_form(g: &Matrix, form: &FormMatrix) -> bool {
    g.rows() == form.rank() && &(&g.transpose() * form.matrix()) * g == *form.matrix()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum OrderResult {
    Finite(u64),
    InfiniteCertified,
    /// No power up to the cap was the identity and no certificate applied.
    Unknown { cap: u64 },
}

/// Order of `sigma_i sigma_j`.
///
/// Finite orders are found by powering up to `cap`. For `m_ij = inf` the pair
/// span carries `[[1, -1], [-1, 1]]`, so `sigma_i sigma_j` restricted to it has
/// characteristic polynomial `(x - 1)^2` without being the identity; such a
/// unipotent matrix has infinite order.
pub fn order_of_product(system: &CoxeterSystem, i: usize, j: usize, cap: u64) -> Result<OrderResult, RepError> {
    let n = system.rank();
    for index in [i, j] {
        if index >= n {
            return Err(RepError::IndexOutOfRange { index, rank: n });
        }
    }
    if i == j {
        return Err(RepError::SameIndex);
    }
    let form = tits::build_tits_form(system);
    let prod = &reflection_from_form(&form, i)? * &reflection_from_form(&form, j)?;
    Ok(order_of_matrix(&form, &prod, i, j, system.order(i, j), cap))
}

fn order_of_matrix(form: &FormMatrix, prod: &Matrix, i: usize, j: usize, m: Order, cap: u64) -> OrderResult {
    if m == Order::Infinite && unipotent_on_pair(form, prod, i, j) {
        return OrderResult::InfiniteCertified;
    }
    let mut power = prod.clone();
    for k in 1..=cap {
        if power.is_identity() {
            return OrderResult::Finite(k);
        }
        power = &power * prod;
    }
    OrderResult::Unknown { cap }
}

/// The 2x2 block of `prod` on `span(e_i, e_j)`; that span is invariant under
/// both reflections.
pub fn pair_block(prod: &Matrix, i: usize, j: usize) -> Matrix {
    let idx = [i, j];
    let rows = idx.iter().map(|&r| idx.iter().map(|&c| prod.get(r, c).clone()).collect()).collect();
    Matrix::from_rows(prod.field(), rows)
}

fn unipotent_on_pair(form: &FormMatrix, prod: &Matrix, i: usize, j: usize) -> bool {
    if *form.matrix().get(i, j) != form.field().from_int(-1) {
        return false;
    }
    let block = pair_block(prod, i, j);
    let two = form.field().from_int(2);
    block.trace() == two && block.determinant().is_one() && !block.is_identity()
}

#[derive(Clone, Debug, Serialize)]
pub struct PairRelation {
    /// 0-indexed generators.
    pub i: usize,
    pub j: usize,
    pub order: Order,
    pub result: OrderResult,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationsReport {
    /// `sigma_i^2 == I`, per generator.
    pub involutions: Vec<bool>,
    pub pairs: Vec<PairRelation>,
    pub pass: bool,
}

/// Checks `sigma_i^2 = I` and that every `sigma_i sigma_j` has order `m_ij`.
pub fn verify_relations(system: &CoxeterSystem, inf_probe_cap: u64) -> RelationsReport {
    let form = tits::build_tits_form(system);
    let gens = generators(system);
    let involutions: Vec<bool> = gens.iter().map(|g| (g * g).is_identity()).collect();
    let n = system.rank();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let m = system.order(i, j);
            let prod = &gens[i] * &gens[j];
            let cap = match m {
                Order::Finite(k) => k.max(inf_probe_cap),
                Order::Infinite => inf_probe_cap,
            };
            let result = order_of_matrix(&form, &prod, i, j, m, cap);
            let ok = match (m, result) {
                (Order::Finite(k), OrderResult::Finite(found)) => k == found,
                (Order::Infinite, OrderResult::InfiniteCertified) => true,
                _ => false,
            };
            pairs.push(PairRelation { i, j, order: m, result, ok });
        }
    }
    let pass = involutions.iter().all(|&b| b) && pairs.iter().all(|p| p.ok);
    RelationsReport { involutions, pairs, pass }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementRecord {
    /// Shortest word found, 0-indexed generators.
    pub word: Vec<usize>,
    pub matrix: Matrix,
}

impl ElementRecord {
    pub fn length(&self) -> usize {
        self.word.len()
    }
}

/// Distinct group elements in breadth-first order.
#[derive(Clone, Debug)]
pub struct ElementTable {
    pub records: Vec<ElementRecord>,
    pub max_len: usize,
    /// True when elements of length `max_len + 1` may still exist.
    pub length_limited: bool,
    /// True when enumeration stopped because `cap` elements were found.
    pub cap_reached: bool,
    /// True when the search closed: the group is finite and fully listed.
    pub closed: bool,
}

impl ElementTable {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Number of elements of each word length.
    pub fn growth(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for r in &self.records {
            if out.len() <= r.length() {
                out.resize(r.length() + 1, 0);
            }
            out[r.length()] += 1;
        }
        out
    }
}

/// Breadth-first enumeration of `sigma(W)` on the global rayon pool.
pub fn enumerate_elements(system: &CoxeterSystem, max_len: usize, cap: usize) -> ElementTable {
    let gens = generators(system);
    enumerate_with_generators(&gens, max_len, cap)
}

/// Same as [`enumerate_elements`] on a dedicated pool of `workers` threads.
/// The table does not depend on `workers`.
pub fn enumerate_elements_with_workers(
    system: &CoxeterSystem,
    max_len: usize,
    cap: usize,
    workers: usize,
) -> ElementTable {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| enumerate_elements(system, max_len, cap))
}

/// Breadth-first search by right multiplication.
///
/// Each level is expanded in parallel, then merged sequentially in
/// (parent order, generator index) order. Because parents are sorted by word,
/// children come out sorted by (length, lexicographic word).
pub fn enumerate_with_generators(gens: &[Matrix], max_len: usize, cap: usize) -> ElementTable {
    let cap = cap.max(1);
    let field = gens[0].field().clone();
    let n = gens[0].rows();
    let identity = ElementRecord { word: Vec::new(), matrix: Matrix::identity(&field, n) };
    // Hashing reads only the field level and entries, never the enclosure cache.
    #[allow(clippy::mutable_key_type)]
    let mut index: HashMap<Matrix, usize> = HashMap::new();
    index.insert(identity.matrix.clone(), 0);
    let mut records = vec![identity];
    let mut frontier = 0..1;
    let mut cap_reached = false;

    for _ in 0..max_len {
        if frontier.is_empty() || cap_reached {
            break;
        }
        let products: Vec<(usize, usize, Matrix)> = records[frontier.clone()]
            .par_iter()
            .enumerate()
            .flat_map_iter(|(offset, rec)| {
                let parent = frontier.start + offset;
                gens.iter().enumerate().map(move |(g, m)| (parent, g, &rec.matrix * m))
            })
            .collect();

        let start = records.len();
        for (parent, g, matrix) in products {
            if index.contains_key(&matrix) {
                continue;
            }
            if records.len() >= cap {
                cap_reached = true;
                break;
            }
            let mut word = records[parent].word.clone();
            word.push(g);
            index.insert(matrix.clone(), records.len());
            records.push(ElementRecord { word, matrix });
        }
        frontier = start..records.len();
    }

    let closed = frontier.is_empty() && !cap_reached;
    let length_limited = !closed && !cap_reached;
    ElementTable { records, max_len, length_limited, cap_reached, closed }
}

#[derive(Clone, Debug, Serialize)]
pub struct DisjointnessReport {
    pub max_len: usize,
    pub elements_checked: usize,
    pub identity_in_chamber: bool,
    /// Words (0-indexed) of non-identity elements `w` with `w v0` in the chamber.
    pub violations: Vec<Vec<usize>>,
    pub closed: bool,
    pub pass: bool,
}

/// Chamber disjointness at bounded length: with `v0` the canonical chamber
/// point, `w v0` must leave the chamber for every non-identity `w`.
pub fn tits_disjointness_check(system: &CoxeterSystem, max_len: usize) -> Result<DisjointnessReport, RepError> {
    tits_disjointness_check_capped(system, max_len, DEFAULT_CAP)
}

pub fn tits_disjointness_check_capped(
    system: &CoxeterSystem,
    max_len: usize,
    cap: usize,
) -> Result<DisjointnessReport, RepError> {
    let form = tits::build_tits_form(system);
    let v0 = tits::canonical_chamber_point(&form)?;
    let table = enumerate_elements(system, max_len, cap);
    Ok(disjointness_on_table(&form, &v0, &table))
}

fn disjointness_on_table(form: &FormMatrix, v0: &Vector, table: &ElementTable) -> DisjointnessReport {
    let inside: Vec<bool> =
        table.records.par_iter().map(|r| tits::chamber_contains(form, &r.matrix.mul_vec(v0))).collect();
    let identity_in_chamber = inside[0];
    let violations: Vec<Vec<usize>> = table
        .records
        .iter()
        .zip(&inside)
        .skip(1)
        .filter(|(_, &hit)| hit)
        .map(|(r, _)| r.word.clone())
        .collect();
    DisjointnessReport {
        max_len: table.max_len,
        elements_checked: table.len(),
        identity_in_chamber,
        pass: identity_in_chamber && violations.is_empty(),
        violations,
        closed: table.closed,
    }
}
