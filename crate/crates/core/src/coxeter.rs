//! Coxeter systems: order matrices, validation, the text format and the
//! Coxeter graph.
//!
//! The text format is line oriented:
//!
//! ```text
//! # right-angled example
//! rank 3
//! m 1 2 inf
//! m 2 3 inf
//! m 1 3 2
//! ```
//!
//! Generators are 1-indexed in text and 0-indexed in the API. Pairs that are
//! never mentioned commute (`m = 2`).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// Order of a product `s_i s_j`, possibly infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Order {
    pub fn is_finite(self) -> bool {
        matches!(self, Order::Finite(_))
    }

    /// True when the pair is joined by an edge of the Coxeter graph.
    pub fn is_edge(self) -> bool {
        match self {
            Order::Finite(m) => m >= 3,
            Order::Infinite => true,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(m) => write!(f, "{m}"),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Order {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "inf" {
            return Ok(Order::Infinite);
        }
        s.parse::<u64>()
            .map(Order::Finite)
            .map_err(|_| format!("expected an integer order or \"inf\", found {s:?}"))
    }
}

impl Serialize for Order {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Order::Finite(m) => s.serialize_u64(*m),
            Order::Infinite => s.serialize_str("inf"),
        }
    }
}

/// One broken invariant of an order matrix (0-indexed).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub row: usize,
    pub col: usize,
    pub reason: ViolationKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    DiagonalNotOne,
    Asymmetric,
    OffDiagonalBelowTwo,
    NotSquare,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::DiagonalNotOne => "diagonal entry is not 1",
            ViolationKind::Asymmetric => "matrix is not symmetric",
            ViolationKind::OffDiagonalBelowTwo => "off-diagonal order is below 2",
            ViolationKind::NotSquare => "matrix is not square",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

/// Lists every violated invariant of a raw order matrix. Never fails.
pub fn validate(orders: &[Vec<Order>]) -> ValidationReport {
    let n = orders.len();
    let mut violations = Vec::new();
    for (i, row) in orders.iter().enumerate() {
        if row.len() != n {
            violations.push(Violation { row: i, col: row.len(), reason: ViolationKind::NotSquare });
            continue;
        }
        for (j, &m) in row.iter().enumerate() {
            if i == j {
                if m != Order::Finite(1) {
                    violations.push(Violation { row: i, col: j, reason: ViolationKind::DiagonalNotOne });
                }
                continue;
            }
            if matches!(m, Order::Finite(k) if k < 2) {
                violations.push(Violation { row: i, col: j, reason: ViolationKind::OffDiagonalBelowTwo });
            }
            // Report each asymmetric pair once, at its upper-triangular position.
            if i < j && orders[j].len() == n && orders[j][i] != m {
                violations.push(Violation { row: i, col: j, reason: ViolationKind::Asymmetric });
            }
        }
    }
    ValidationReport { ok: violations.is_empty(), violations }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {col}: {message}")]
    Syntax { line: usize, col: usize, message: String },
    #[error("line {line}, column {col}: generator {index} is outside 1..={rank}")]
    RankMismatch { line: usize, col: usize, index: u64, rank: usize },
    #[error("line {line}, column {col}: order {order} is not allowed off the diagonal (need 2, 3, ... or inf)")]
    InvalidOrder { line: usize, col: usize, order: u64 },
    #[error("line {line}: pair ({i}, {j}) was already given order {previous}, now {new}")]
    ConflictingPair { line: usize, i: usize, j: usize, previous: Order, new: Order },
    #[error("missing `rank <n>` header")]
    MissingRank,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid Coxeter matrix: {}", describe(&.0.violations))]
pub struct InvalidSystem(pub ValidationReport);

fn describe(v: &[Violation]) -> String {
    v.iter()
        .map(|x| format!("({}, {}) {}", x.row + 1, x.col + 1, x.reason))
        .collect::<Vec<_>>()
        .join("; ")
}

/// A validated Coxeter system: a rank and a symmetric order matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterSystem {
    orders: Vec<Vec<Order>>,
}

impl CoxeterSystem {
    pub fn from_orders(orders: Vec<Vec<Order>>) -> Result<Self, InvalidSystem> {
        let report = validate(&orders);
        if !report.ok || orders.is_empty() {
            return Err(InvalidSystem(report));
        }
        Ok(Self { orders })
    }

    /// Builds a system from 0-indexed pairs; unlisted pairs get order 2.
    pub fn from_pairs(rank: usize, pairs: &[(usize, usize, Order)]) -> Result<Self, InvalidSystem> {
        let mut orders = vec![vec![Order::Finite(2); rank]; rank];
        for (i, row) in orders.iter_mut().enumerate() {
            row[i] = Order::Finite(1);
        }
        for &(i, j, m) in pairs {
            orders[i][j] = m;
            orders[j][i] = m;
        }
        Self::from_orders(orders)
    }

    /// Rank-2 dihedral system with `m_12 = m`.
    pub fn dihedral(m: Order) -> Self {
        Self::from_pairs(2, &[(0, 1, m)]).expect("dihedral order must be >= 2")
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self, i: usize, j: usize) -> Order {
        self.orders[i][j]
    }

    pub fn orders(&self) -> &[Vec<Order>] {
        &self.orders
    }

    /// Least common multiple of all finite orders `>= 3`; 1 when there are none.
    pub fn field_level(&self) -> u64 {
        self.orders
            .iter()
            .flatten()
            .filter_map(|m| match m {
                Order::Finite(k) if *k >= 3 => Some(*k),
                _ => None,
            })
            .fold(1, crate::arith::lcm_u64)
    }

    /// Whether the Coxeter graph (edges where `m_ij >= 3`) is connected.
    pub fn is_irreducible(&self) -> bool {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in 0..n {
                if !seen[w] && self.orders[v][w].is_edge() {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Renders the system in the text format; only non-commuting pairs are listed.
    pub fn to_dsl(&self) -> String {
        let mut out = format!("rank {}\n", self.rank());
        for i in 0..self.rank() {
            for j in i + 1..self.rank() {
                if self.orders[i][j] != Order::Finite(2) {
                    out.push_str(&format!("m {} {} {}\n", i + 1, j + 1, self.orders[i][j]));
                }
            }
        }
        out
    }
}

impl Serialize for CoxeterSystem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            rank: usize,
            orders: &'a [Vec<Order>],
        }
        Repr { rank: self.rank(), orders: &self.orders }.serialize(s)
    }
}

impl FromStr for CoxeterSystem {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        parse_coxeter_spec(text)
    }
}

/// Tokens of one line with their 1-based starting columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let body = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (idx, ch) in body.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &body[s..idx]));
                start = None;
            }
            (false, None) => start = Some(idx),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &body[s..]));
    }
    out.into_iter()
        .map(|(byte, tok)| (body[..byte].chars().count() + 1, tok))
        .collect()
}

pub fn parse_coxeter_spec(text: &str) -> Result<CoxeterSystem, ParseError> {
    let mut rank: Option<usize> = None;
    let mut pairs: BTreeMap<(usize, usize), Order> = BTreeMap::new();

    for (lineno, line) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let toks = tokens(line);
        let Some(&(col, keyword)) = toks.first() else { continue };
        let syntax = |col: usize, message: String| ParseError::Syntax { line: line_no, col, message };

        match (keyword, rank) {
            ("rank", None) => {
                if toks.len() != 2 {
                    return Err(syntax(col, "expected `rank <n>`".into()));
                }
                let (c, tok) = toks[1];
                match tok.parse::<usize>() {
                    Ok(n) if n >= 1 => rank = Some(n),
                    _ => return Err(syntax(c, format!("rank must be a positive integer, found {tok:?}"))),
                }
            }
            ("rank", Some(_)) => return Err(syntax(col, "duplicate `rank` header".into())),
            (_, None) => return Err(syntax(col, format!("expected `rank <n>` before {keyword:?}"))),
            ("m", Some(n)) => {
                if toks.len() != 4 {
                    return Err(syntax(col, "expected `m <i> <j> <order>`".into()));
                }
                let mut idx = [0usize; 2];
                for (slot, &(c, tok)) in idx.iter_mut().zip(&toks[1..3]) {
                    let v: u64 = tok
                        .parse()
                        .map_err(|_| syntax(c, format!("expected a generator index, found {tok:?}")))?;
                    if v < 1 || v as usize > n {
                        return Err(ParseError::RankMismatch { line: line_no, col: c, index: v, rank: n });
                    }
                    *slot = v as usize - 1;
                }
                if idx[0] == idx[1] {
                    return Err(syntax(toks[2].0, "a generator cannot be paired with itself".into()));
                }
                let (oc, otok) = toks[3];
                let order: Order = otok.parse().map_err(|e: String| syntax(oc, e))?;
                if let Order::Finite(k) = order {
                    if k < 2 {
                        return Err(ParseError::InvalidOrder { line: line_no, col: oc, order: k });
                    }
                }
                let key = (idx[0].min(idx[1]), idx[0].max(idx[1]));
                if let Some(&previous) = pairs.get(&key) {
                    if previous != order {
                        return Err(ParseError::ConflictingPair {
                            line: line_no,
                            i: key.0 + 1,
                            j: key.1 + 1,
                            previous,
                            new: order,
                        });
                    }
                }
                pairs.insert(key, order);
            }
            (other, Some(_)) => return Err(syntax(col, format!("unknown directive {other:?}"))),
        }
    }

    let rank = rank.ok_or(ParseError::MissingRank)?;
    let pairs: Vec<_> = pairs.into_iter().map(|((i, j), m)| (i, j, m)).collect();
    Ok(CoxeterSystem::from_pairs(rank, &pairs).expect("parser only admits valid orders"))
}
