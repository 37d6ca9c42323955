//! Polyhedral cones `{x : E x = 0, A x >= 0}` with an exact canonical form.

use std::collections::HashSet;

use crate::algebra::monomial::IntegerVector;
use crate::algebra::rational::{primitive_integer_vector, Rational};
use crate::linalg::{combine, rref_integer};

use super::{in_cone, interior, project, Interior};

/// A cone given by equations `<e, x> = 0` and inner normals `<a, x> >= 0`.
///
/// Equality and hashing compare the stored vectors, so two cones are
/// identified exactly when both are canonical and equal as point sets.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cone {
    pub n: usize,
    pub equations: Vec<IntegerVector>,
    pub inequalities: Vec<IntegerVector>,
}

fn normalized(vs: impl IntoIterator<Item = IntegerVector>, sign: bool) -> Vec<IntegerVector> {
    let mut out: Vec<IntegerVector> = Vec::new();
    let mut seen = HashSet::new();
    for v in vs {
        if v.is_zero() {
            continue;
        }
        let p = if sign {
            v.primitive_normalized()
        } else {
            v.primitive()
        };
        if seen.insert(p.clone()) {
            out.push(p);
        }
    }
    out
}

impl Cone {
    /// Raw cone; vectors are made primitive and deduplicated.
    pub fn new(n: usize, equations: Vec<IntegerVector>, inequalities: Vec<IntegerVector>) -> Self {
        Cone {
            n,
            equations: normalized(equations, true),
            inequalities: normalized(inequalities, false),
        }
    }

    /// The whole space `R^n`.
    pub fn full(n: usize) -> Self {
        Cone {
            n,
            equations: Vec::new(),
            inequalities: Vec::new(),
        }
    }

    pub fn dimension(&self) -> usize {
        cone_dimension(self)
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.equations.iter().all(|e| e.dot_rational(x).is_zero())
            && self
                .inequalities
                .iter()
                .all(|a| !a.dot_rational(x).is_negative())
    }

    /// Whether `x` satisfies every inequality strictly and every equation.
    pub fn contains_relative_interior(&self, x: &[Rational]) -> bool {
        self.equations.iter().all(|e| e.dot_rational(x).is_zero())
            && self
                .inequalities
                .iter()
                .all(|a| a.dot_rational(x).is_positive())
    }
}

/// Canonical form: implied equalities become equations (reduced row-echelon,
/// primitive rows), inequalities become the irredundant facet normals reduced
/// modulo the equation space, sorted.
pub fn canonicalize(c: &Cone) -> Cone {
    let n = c.n;
    let mut eqs = normalized(c.equations.iter().cloned(), true);
    let mut ineqs = normalized(c.inequalities.iter().cloned(), false);
    let (r, rows) = loop {
        let r = rref_integer(&eqs, n);
        let basis = r.null_space();
        let rows: Vec<Vec<Rational>> = ineqs.iter().map(|a| project(a, &basis)).collect();
        match interior(&rows, basis.len()) {
            Interior::Point(_) => break (r, rows),
            Interior::Certificate(l) => {
                let mut keep = Vec::new();
                for (a, li) in ineqs.into_iter().zip(&l) {
                    if li.is_positive() {
                        eqs.push(a);
                    } else {
                        keep.push(a);
                    }
                }
                ineqs = keep;
            }
        }
    };

    // Reduce modulo the equations and drop parallel copies; the projected
    // coordinates are unchanged by the reduction.
    let mut reduced: Vec<(IntegerVector, Vec<Rational>)> = Vec::new();
    let mut seen = HashSet::new();
    for (a, row) in ineqs.iter().zip(rows) {
        let v = IntegerVector::new(primitive_integer_vector(&r.reduce(&a.to_rationals())));
        if !v.is_zero() && seen.insert(v.clone()) {
            reduced.push((v, row));
        }
    }
    reduced.sort_by(|a, b| a.0.cmp(&b.0));

    let mut alive = vec![true; reduced.len()];
    for i in 0..reduced.len() {
        let gens: Vec<Vec<Rational>> = (0..reduced.len())
            .filter(|&j| j != i && alive[j])
            .map(|j| reduced[j].1.clone())
            .collect();
        if in_cone(&reduced[i].1, &gens) {
            alive[i] = false;
        }
    }
    let inequalities = reduced
        .into_iter()
        .zip(alive)
        .filter(|(_, a)| *a)
        .map(|((v, _), _)| v)
        .collect();
    Cone {
        n,
        equations: r.integer_rows(),
        inequalities,
    }
}

/// `n` minus the rank of the equations; exact for canonical cones.
pub fn cone_dimension(c: &Cone) -> usize {
    c.n - rref_integer(&c.equations, c.n).rank()
}

/// A point satisfying every inequality strictly and every equation; the
/// origin for a cone that is a linear subspace.
pub fn relative_interior_point(c: &Cone) -> Vec<Rational> {
    let basis = rref_integer(&c.equations, c.n).null_space();
    let rows: Vec<Vec<Rational>> = c.inequalities.iter().map(|a| project(a, &basis)).collect();
    match interior(&rows, basis.len()) {
        Interior::Point(z) => combine(&basis, &z, c.n),
        Interior::Certificate(_) => vec![Rational::zero(); c.n],
    }
}

/// A relative interior point that is also strictly positive, if one exists.
pub fn positive_interior_point(c: &Cone) -> Option<Vec<Rational>> {
    let mut strict = c.inequalities.clone();
    strict.extend((0..c.n).map(|i| IntegerVector::unit(c.n, i)));
    super::strictly_feasible(&c.equations, &strict, c.n)
}

/// All non-empty faces of a canonical cone, each canonical, including the
/// cone itself.
pub fn faces_all(c: &Cone) -> Vec<Cone> {
    let c = canonicalize(c);
    let mut seen: HashSet<Cone> = HashSet::new();
    let mut stack = vec![c.clone()];
    seen.insert(c.clone());
    let mut out = vec![c];
    while let Some(f) = stack.pop() {
        for (i, a) in f.inequalities.iter().enumerate() {
            let mut eqs = f.equations.clone();
            eqs.push(a.clone());
            let rest: Vec<IntegerVector> = f
                .inequalities
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, v)| v.clone())
                .collect();
            let g = canonicalize(&Cone {
                n: f.n,
                equations: eqs,
                inequalities: rest,
            });
            if seen.insert(g.clone()) {
                stack.push(g.clone());
                out.push(g);
            }
        }
    }
    out
}

/// Basis of `{w : <w, d> = 0 for all d}` and its dimension.
pub fn homogeneity_space(diffs: &[IntegerVector], n: usize) -> (Vec<IntegerVector>, usize) {
    let basis = rref_integer(diffs, n).null_space();
    let h = basis.len();
    (basis, h)
}
