//! Term orders given by integer matrices, plus the weight-based orders used
//! internally for flips and reduction strategies.

use std::cell::Cell;
use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::monomial::{ExponentVector, IntegerVector};
use super::polynomial::{Polynomial, Term};
use super::AlgebraError;
use crate::linalg::rank_i64;

/// A total order on exponent vectors used to pick leading terms.
pub trait MonomialOrder {
    fn cmp_exp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering;

    /// Index of the largest term of `f`.
    fn leading_index(&self, f: &Polynomial) -> Option<usize> {
        let terms = f.terms();
        if terms.is_empty() {
            return None;
        }
        let mut best = 0;
        for i in 1..terms.len() {
            if self.cmp_exp(&terms[i].exp, &terms[best].exp) == Ordering::Greater {
                best = i;
            }
        }
        Some(best)
    }
}

/// Term order represented by an integer matrix: `a > b` iff `M(a - b)` is
/// lexicographically positive.
///
/// The stored matrix always has rank `n` and lexicographically positive
/// columns; the rows supplied by the caller come first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrderMatrix {
    rows: Vec<Vec<i64>>,
    supplied: usize,
}

fn check_columns(rows: &[Vec<i64>], n: usize, allow_zero: bool) -> Result<(), AlgebraError> {
    for j in 0..n {
        match rows.iter().map(|r| r[j]).find(|&x| x != 0) {
            Some(x) if x < 0 => {
                return Err(AlgebraError::NotATermOrder {
                    column: j + 1,
                    entry: x,
                })
            }
            None if !allow_zero => {
                return Err(AlgebraError::NotATermOrder {
                    column: j + 1,
                    entry: 0,
                })
            }
            _ => {}
        }
    }
    Ok(())
}

impl TermOrderMatrix {
    /// Validates column positivity and completes the matrix to rank `n` with
    /// a degree-reverse-lexicographic tie-breaker.
    pub fn new(rows: Vec<Vec<i64>>, n: usize) -> Result<Self, AlgebraError> {
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(AlgebraError::DimensionMismatch {
                expected: n,
                found: r.len(),
            });
        }
        check_columns(&rows, n, true)?;
        let supplied = rows.len();
        let mut m = rows;
        let mut rank = rank_i64(&m, n);
        let has_zero_column = (0..n).any(|j| m.iter().all(|r| r[j] == 0));
        let mut candidates: Vec<Vec<i64>> = Vec::new();
        if has_zero_column {
            candidates.push(vec![1; n]);
        }
        for j in (0..n).rev() {
            let mut r = vec![0; n];
            r[j] = -1;
            candidates.push(r);
        }
        for c in candidates {
            if rank == n {
                break;
            }
            m.push(c);
            let r = rank_i64(&m, n);
            if r > rank {
                rank = r;
            } else {
                m.pop();
            }
        }
        check_columns(&m, n, false)?;
        if rank < n {
            return Err(AlgebraError::RankDeficient { rank, n });
        }
        Ok(TermOrderMatrix { rows: m, supplied })
    }

    /// Lexicographic order; `priority[0]` is the largest variable.
    pub fn lex(priority: &[usize], n: usize) -> Result<Self, AlgebraError> {
        Self::new(priority.iter().map(|&i| unit_row(n, i, 1)).collect(), n)
    }

    pub fn deglex(priority: &[usize], n: usize) -> Result<Self, AlgebraError> {
        let mut rows = vec![vec![1; n]];
        rows.extend(priority.iter().map(|&i| unit_row(n, i, 1)));
        Self::new(rows, n)
    }

    pub fn degrevlex(priority: &[usize], n: usize) -> Result<Self, AlgebraError> {
        let mut rows = vec![vec![1; n]];
        rows.extend(priority.iter().rev().map(|&i| unit_row(n, i, -1)));
        Self::new(rows, n)
    }

    /// `≺_ω`: compare by `ω` first, then by `tiebreak`.
    pub fn weighted(weight: &[i64], tiebreak: &TermOrderMatrix) -> Result<Self, AlgebraError> {
        let n = tiebreak.nvars();
        if weight.len() != n {
            return Err(AlgebraError::DimensionMismatch {
                expected: n,
                found: weight.len(),
            });
        }
        let mut rows = vec![weight.to_vec()];
        rows.extend(tiebreak.rows.iter().cloned());
        Self::new(rows, n)
    }

    /// Default order: degree reverse lexicographic with `x_1 > ... > x_n`.
    pub fn default_for(n: usize) -> Self {
        let p: Vec<usize> = (0..n).collect();
        Self::degrevlex(&p, n).expect("degrevlex is a term order")
    }

    pub fn nvars(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Number of rows given at construction, before completion.
    pub fn supplied_rows(&self) -> usize {
        self.supplied
    }

    /// Sign of the first non-zero entry of `M v`.
    pub fn lex_sign(&self, v: &[BigInt]) -> Ordering {
        for row in &self.rows {
            let s: BigInt = row
                .iter()
                .zip(v)
                .filter(|(r, _)| **r != 0)
                .map(|(r, x)| BigInt::from(*r) * x)
                .sum();
            if !s.is_zero() {
                return if s.is_positive() {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
        }
        Ordering::Equal
    }

    pub fn lex_sign_i64(&self, v: &[i64]) -> Ordering {
        for row in &self.rows {
            let s: i128 = row
                .iter()
                .zip(v)
                .map(|(r, x)| *r as i128 * *x as i128)
                .sum();
            if s != 0 {
                return s.cmp(&0);
            }
        }
        Ordering::Equal
    }

    /// Applies a variable permutation to the order (variable i becomes perm[i]).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut out = vec![0; r.len()];
                for (i, &x) in r.iter().enumerate() {
                    out[perm[i]] = x;
                }
                out
            })
            .collect();
        TermOrderMatrix {
            rows,
            supplied: self.supplied,
        }
    }
}

fn unit_row(n: usize, i: usize, v: i64) -> Vec<i64> {
    let mut r = vec![0; n];
    r[i] = v;
    r
}

impl MonomialOrder for TermOrderMatrix {
    fn cmp_exp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        if a == b {
            return Ordering::Equal;
        }
        let (a, b) = (a.as_slice(), b.as_slice());
        for row in &self.rows {
            let mut s: i128 = 0;
            for j in 0..row.len() {
                if row[j] != 0 {
                    s += row[j] as i128 * (a[j] as i128 - b[j] as i128);
                }
            }
            if s != 0 {
                return s.cmp(&0);
            }
        }
        Ordering::Equal
    }
}

/// Compares two signed exponent vectors under a term order.
pub fn compare_exponents(
    m: &TermOrderMatrix,
    a: &IntegerVector,
    b: &IntegerVector,
) -> Result<Ordering, AlgebraError> {
    let n = m.nvars();
    for v in [a, b] {
        if v.len() != n {
            return Err(AlgebraError::DimensionMismatch {
                expected: n,
                found: v.len(),
            });
        }
    }
    Ok(m.lex_sign(a.sub(b).entries()))
}

/// Orders monomials by a single weight; ties fall back to the canonical
/// order and are recorded so callers can detect them.
#[derive(Debug)]
pub struct RankOneOrder {
    weight: Vec<i64>,
    tie_seen: Cell<bool>,
}

impl RankOneOrder {
    pub fn new(weight: Vec<i64>) -> Self {
        RankOneOrder {
            weight,
            tie_seen: Cell::new(false),
        }
    }

    pub fn tie_seen(&self) -> bool {
        self.tie_seen.get()
    }
}

impl MonomialOrder for RankOneOrder {
    fn cmp_exp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        if a == b {
            return Ordering::Equal;
        }
        match a.weight(&self.weight).cmp(&b.weight(&self.weight)) {
            Ordering::Equal => {
                self.tie_seen.set(true);
                a.cmp(b)
            }
            o => o,
        }
    }
}

/// Weight first, canonical graded-lex as tie-breaker.
#[derive(Clone, Debug)]
pub struct WeightThenCanonical(pub Vec<i64>);

impl MonomialOrder for WeightThenCanonical {
    fn cmp_exp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        a.weight(&self.0)
            .cmp(&b.weight(&self.0))
            .then_with(|| a.cmp(b))
    }
}

pub fn initial_term(m: &TermOrderMatrix, f: &Polynomial) -> Result<Term, AlgebraError> {
    if f.nvars() != m.nvars() {
        return Err(AlgebraError::DimensionMismatch {
            expected: m.nvars(),
            found: f.nvars(),
        });
    }
    let i = m.leading_index(f).ok_or(AlgebraError::ZeroPolynomial)?;
    Ok(f.terms()[i].clone())
}

/// Sum of the terms of `f` of maximal `ω`-degree, together with that degree.
pub fn initial_form(
    omega: &IntegerVector,
    f: &Polynomial,
) -> Result<(Polynomial, BigInt), AlgebraError> {
    if omega.len() != f.nvars() {
        return Err(AlgebraError::DimensionMismatch {
            expected: f.nvars(),
            found: omega.len(),
        });
    }
    if f.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let deg = |t: &Term| -> BigInt {
        t.exp
            .as_slice()
            .iter()
            .zip(omega.entries())
            .map(|(&e, w)| w * BigInt::from(e))
            .sum()
    };
    let best = f.terms().iter().map(deg).max().expect("non-empty");
    let form = f.filter_terms(|t| deg(t) == best);
    Ok((form, best))
}
