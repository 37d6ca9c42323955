//! Exact linear programming over Q and polyhedral cones.

pub mod cone;
pub mod simplex;

use thiserror::Error;

use crate::algebra::monomial::IntegerVector;
use crate::algebra::rational::Rational;
use crate::linalg::{combine, rref_integer};
use simplex::{solve_standard, StandardOutcome};

pub use cone::{
    canonicalize, cone_dimension, faces_all, homogeneity_space, positive_interior_point,
    relative_interior_point, Cone,
};
pub use simplex::solve_count;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LpError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpResult {
    pub status: LpStatus,
    pub point: Option<Vec<Rational>>,
    pub objective: Option<Rational>,
}

/// `max c.x  s.t.  A x <= b` with `x` free.
pub fn lp_solve(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> Result<LpResult, LpError> {
    let n = c.len();
    if a.len() != b.len() {
        return Err(LpError::DimensionMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    if let Some(row) = a.iter().find(|r| r.len() != n) {
        return Err(LpError::DimensionMismatch {
            expected: n,
            found: row.len(),
        });
    }
    let m = a.len();
    // x = x+ - x-, plus one slack per row.
    let cols = 2 * n + m;
    let rows: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = Vec::with_capacity(cols);
            row.extend(r.iter().cloned());
            row.extend(r.iter().map(|v| -v));
            row.extend((0..m).map(|k| {
                if k == i {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            row
        })
        .collect();
    let mut cost: Vec<Rational> = c.to_vec();
    cost.extend(c.iter().map(|v| -v));
    cost.extend((0..m).map(|_| Rational::zero()));
    Ok(match solve_standard(&rows, b, &cost) {
        StandardOutcome::Optimal { x, value, .. } => {
            let point: Vec<Rational> = (0..n).map(|j| &x[j] - &x[n + j]).collect();
            debug_assert!(a.iter().zip(b).all(|(r, bi)| r
                .iter()
                .zip(&point)
                .map(|(p, q)| p * q)
                .sum::<Rational>()
                <= *bi));
            LpResult {
                status: LpStatus::Optimal,
                point: Some(point),
                objective: Some(value),
            }
        }
        StandardOutcome::Unbounded { .. } => LpResult {
            status: LpStatus::Unbounded,
            point: None,
            objective: None,
        },
        StandardOutcome::Infeasible => LpResult {
            status: LpStatus::Infeasible,
            point: None,
            objective: None,
        },
    })
}

/// Either `z` with `row . z >= 1` for all rows, or multipliers `l >= 0`,
/// not all zero, with `sum l_i row_i = 0`.
pub(crate) enum Interior {
    Point(Vec<Rational>),
    Certificate(Vec<Rational>),
}

/// Solves `min s.z  s.t.  R z >= 1` (with `s` the sum of the rows) through
/// its dual `max 1.l  s.t.  R^T l = s, l >= 0`, which is always feasible.
pub(crate) fn interior(rows: &[Vec<Rational>], k: usize) -> Interior {
    if rows.is_empty() {
        return Interior::Point(vec![Rational::zero(); k]);
    }
    let m = rows.len();
    let a: Vec<Vec<Rational>> = (0..k)
        .map(|j| rows.iter().map(|r| r[j].clone()).collect())
        .collect();
    let s: Vec<Rational> = (0..k).map(|j| rows.iter().map(|r| &r[j]).sum()).collect();
    let ones = vec![Rational::one(); m];
    match solve_standard(&a, &s, &ones) {
        StandardOutcome::Optimal { duals, .. } => {
            debug_assert!(rows.iter().all(|r| r
                .iter()
                .zip(&duals)
                .map(|(p, q)| p * q)
                .sum::<Rational>()
                >= Rational::one()));
            Interior::Point(duals)
        }
        StandardOutcome::Unbounded { ray } => Interior::Certificate(ray),
        StandardOutcome::Infeasible => unreachable!("the all-ones multiplier is feasible"),
    }
}

/// Coordinates of `v` on a subspace basis: `(v . b_j)_j`.
pub(crate) fn project(v: &IntegerVector, basis: &[IntegerVector]) -> Vec<Rational> {
    basis
        .iter()
        .map(|b| Rational::from_bigint(v.dot(b)))
        .collect()
}

/// Outcome of a strict feasibility test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    /// `x` with `e.x = 0` for the equations and `a.x > 0` for the strict rows.
    Point(Vec<Rational>),
    /// Multipliers `l >= 0`, not all zero, one per strict row, such that
    /// `sum l_i a_i` lies in the span of the equations.
    Certificate(Vec<Rational>),
}

pub fn strict_feasibility(
    eqs: &[IntegerVector],
    strict: &[IntegerVector],
    n: usize,
) -> Feasibility {
    let basis = rref_integer(eqs, n).null_space();
    let rows: Vec<Vec<Rational>> = strict.iter().map(|a| project(a, &basis)).collect();
    match interior(&rows, basis.len()) {
        Interior::Point(z) => {
            let x = combine(&basis, &z, n);
            debug_assert!(eqs.iter().all(|e| e.dot_rational(&x).is_zero()));
            debug_assert!(strict.iter().all(|a| a.dot_rational(&x).is_positive()));
            Feasibility::Point(x)
        }
        Interior::Certificate(l) => Feasibility::Certificate(l),
    }
}

/// A point `x` with `e.x = 0` for every `e` in `eqs` and `a.x > 0` for every
/// `a` in `strict`, or `None` if no such point exists.
pub fn strictly_feasible(
    eqs: &[IntegerVector],
    strict: &[IntegerVector],
    n: usize,
) -> Option<Vec<Rational>> {
    match strict_feasibility(eqs, strict, n) {
        Feasibility::Point(x) => Some(x),
        Feasibility::Certificate(_) => None,
    }
}

/// Non-negative multipliers `m` with `sum m_i gens_i = target`, if any.
pub fn cone_combination(target: &[Rational], gens: &[Vec<Rational>]) -> Option<Vec<Rational>> {
    let k = target.len();
    let a: Vec<Vec<Rational>> = (0..k)
        .map(|j| gens.iter().map(|g| g[j].clone()).collect())
        .collect();
    let zero = vec![Rational::zero(); gens.len()];
    match solve_standard(&a, target, &zero) {
        StandardOutcome::Optimal { x, .. } => Some(x),
        StandardOutcome::Unbounded { .. } => unreachable!("zero objective is bounded"),
        StandardOutcome::Infeasible => None,
    }
}

/// Whether `target` lies in the cone generated by `gens`.
pub fn in_cone(target: &[Rational], gens: &[Vec<Rational>]) -> bool {
    cone_combination(target, gens).is_some()
}
