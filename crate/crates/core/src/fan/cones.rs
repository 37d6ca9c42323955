use std::collections::BTreeSet;

use crate::algebra::marked::{s_polynomial, MarkedBasis, MarkedPolynomial};
use crate::algebra::monomial::IntegerVector;
use crate::algebra::rational::Rational;
use crate::lp::{canonicalize, in_cone, strictly_feasible, Cone};

use super::{bump, FacetNormal, FanError, FACETS};

/// Primitive vectors `marked - e` over all non-marked exponents, without
/// repetition, sorted.
pub fn raw_inequalities(g: &MarkedBasis) -> Vec<IntegerVector> {
    let set: BTreeSet<IntegerVector> = g
        .differences()
        .iter()
        .map(IntegerVector::primitive)
        .collect();
    set.into_iter().collect()
}

/// Canonical Gröbner cone of a marked basis.
pub fn cone_of(g: &MarkedBasis) -> Result<Cone, FanError> {
    let n = g.nvars();
    let c = canonicalize(&Cone::new(n, vec![], raw_inequalities(g)));
    if !c.equations.is_empty() {
        return Err(FanError::IncoherentMarking);
    }
    Ok(c)
}

/// A strictly positive point in the interior of the cone cut out by `raw`.
pub(crate) fn positive_interior(
    raw: &[IntegerVector],
    n: usize,
) -> Result<Vec<Rational>, FanError> {
    let mut strict = raw.to_vec();
    strict.extend((0..n).map(|i| IntegerVector::unit(n, i)));
    strictly_feasible(&[], &strict, n).ok_or(FanError::IncoherentMarking)
}

pub(crate) fn integer_weight(x: &[Rational]) -> Result<Vec<i64>, FanError> {
    crate::algebra::marked::weight_to_i64(x).ok_or(FanError::WeightOverflow)
}

/// Keeps in every element the marked term and the terms whose difference
/// from it is parallel to `alpha`.
pub fn restrict_initial_forms(g: &MarkedBasis, alpha: &IntegerVector) -> MarkedBasis {
    let n = g.nvars();
    let elements = g
        .elements()
        .iter()
        .map(|p| {
            let m = p.marked().clone();
            let body = p
                .body()
                .filter_terms(|t| t.exp == m || m.diff(&t.exp).is_parallel(alpha));
            MarkedPolynomial::new(body, m).expect("marked term kept")
        })
        .collect();
    MarkedBasis::from_elements_unchecked(n, elements)
}

/// Necessary condition for `alpha` to be a facet normal: every non-zero
/// S-polynomial of the restricted forms has a term in the initial ideal.
pub(crate) fn passes_pretest(g: &MarkedBasis, alpha: &IntegerVector) -> bool {
    let h = restrict_initial_forms(g, alpha);
    let el = h.elements();
    for i in 0..el.len() {
        for j in (i + 1)..el.len() {
            if el[i].marked().is_coprime(el[j].marked()) {
                continue;
            }
            let s = s_polynomial(&el[i], &el[j]);
            if !s.is_zero() && !s.terms().iter().any(|t| g.is_in_initial_ideal(&t.exp)) {
                return false;
            }
        }
    }
    true
}

/// Whether `raw[i]` is not a non-negative combination of the others.
pub(crate) fn is_irredundant(raw: &[IntegerVector], i: usize) -> bool {
    let others: Vec<Vec<Rational>> = raw
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, v)| v.to_rationals())
        .collect();
    !in_cone(&raw[i].to_rationals(), &others)
}

/// Whether the facet `raw[i]` of a full-dimensional cone contains a strictly
/// positive point in its relative interior.
pub(crate) fn is_flippable(raw: &[IntegerVector], i: usize, n: usize) -> bool {
    let mut strict: Vec<IntegerVector> = raw
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, v)| v.clone())
        .collect();
    strict.extend((0..n).map(|k| IntegerVector::unit(n, k)));
    strictly_feasible(std::slice::from_ref(&raw[i]), &strict, n).is_some()
}

/// Facet normals among the raw inequalities accepted by `keep`.
pub(crate) fn facets_where(
    g: &MarkedBasis,
    raw: &[IntegerVector],
    keep: impl Fn(&IntegerVector) -> bool,
    only_flippable: bool,
) -> Vec<FacetNormal> {
    bump(&FACETS);
    let n = g.nvars();
    let mut out = Vec::new();
    for (i, alpha) in raw.iter().enumerate() {
        if !keep(alpha) || !passes_pretest(g, alpha) || !is_irredundant(raw, i) {
            continue;
        }
        let flippable = is_flippable(raw, i, n);
        if flippable || !only_flippable {
            out.push(FacetNormal {
                alpha: alpha.clone(),
                flippable,
            });
        }
    }
    out
}

/// Irredundant inner facet normals of `cone_of(g)`, optionally only the
/// flippable ones.
pub fn facet_normals(g: &MarkedBasis, only_flippable: bool) -> Vec<FacetNormal> {
    let raw = raw_inequalities(g);
    facets_where(g, &raw, |_| true, only_flippable)
}
