//! Marked polynomials and marked reduced Gröbner bases.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::monomial::{ExponentVector, IntegerVector};
use super::order::{MonomialOrder, WeightThenCanonical};
use super::polynomial::{Polynomial, Term};
use super::rational::{primitive_integer_vector, Rational};
use super::reduce::{reduce, Divisor};
use super::{AlgebraError, DEFAULT_REDUCTION_GUARD};
use crate::lp;

/// A polynomial with one distinguished term, scaled so that term is monic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedPolynomial {
    marked: ExponentVector,
    body: Polynomial,
}

impl MarkedPolynomial {
    pub fn new(body: Polynomial, marked: ExponentVector) -> Result<Self, AlgebraError> {
        if !body.contains_exponent(&marked) {
            return Err(AlgebraError::MarkNotPresent);
        }
        let body = body.normalized_at(&marked);
        Ok(MarkedPolynomial { body, marked })
    }

    /// Marks the leading term of `body` under `order`.
    pub fn from_order<O: MonomialOrder>(body: Polynomial, order: &O) -> Result<Self, AlgebraError> {
        let i = order
            .leading_index(&body)
            .ok_or(AlgebraError::ZeroPolynomial)?;
        let marked = body.terms()[i].exp.clone();
        Self::new(body, marked)
    }

    pub fn body(&self) -> &Polynomial {
        &self.body
    }

    pub fn marked(&self) -> &ExponentVector {
        &self.marked
    }

    pub fn nvars(&self) -> usize {
        self.body.nvars()
    }

    /// Terms other than the marked one.
    pub fn tail(&self) -> impl Iterator<Item = &Term> {
        self.body
            .terms()
            .iter()
            .filter(move |t| t.exp != self.marked)
    }

    /// `marked - e` for every non-marked exponent `e`.
    pub fn differences(&self) -> impl Iterator<Item = IntegerVector> + '_ {
        self.tail().map(move |t| self.marked.diff(&t.exp))
    }

    pub fn permuted(&self, perm: &[usize]) -> Self {
        MarkedPolynomial {
            body: self.body.permuted(perm),
            marked: self.marked.permuted(perm),
        }
    }
}

impl fmt::Debug for MarkedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}] {:?}", self.marked, self.body)
    }
}

/// S-polynomial with respect to the marked terms.
pub fn s_polynomial(g1: &MarkedPolynomial, g2: &MarkedPolynomial) -> Polynomial {
    let l = g1.marked.lcm(&g2.marked);
    let a = g1.body.mul_term(&Rational::one(), &l.div(&g1.marked));
    let b = g2.body.mul_term(&Rational::one(), &l.div(&g2.marked));
    a.sub(&b)
}

/// A reduced Gröbner basis with its initial terms marked.
///
/// Elements are sorted by marked exponent, largest first in the canonical
/// order. Equality is equality of marked bases, which identifies the
/// Gröbner cone.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedBasis {
    nvars: usize,
    elements: Vec<MarkedPolynomial>,
}

impl MarkedBasis {
    /// Wraps elements as-is after sorting; no reducedness check.
    pub fn from_elements_unchecked(nvars: usize, mut elements: Vec<MarkedPolynomial>) -> Self {
        elements.sort_by(|a, b| b.marked.cmp(&a.marked));
        MarkedBasis { nvars, elements }
    }

    /// Builds a basis and checks the reducedness invariant.
    pub fn new(nvars: usize, elements: Vec<MarkedPolynomial>) -> Result<Self, AlgebraError> {
        let b = Self::from_elements_unchecked(nvars, elements);
        if !b.is_reduced() {
            return Err(AlgebraError::IncoherentMarking);
        }
        Ok(b)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn elements(&self) -> &[MarkedPolynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True for the basis `{1}` of the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].marked.is_constant()
    }

    pub fn marked_exponents(&self) -> impl Iterator<Item = &ExponentVector> {
        self.elements.iter().map(|g| &g.marked)
    }

    /// No marked exponent divides any exponent of another element, and no
    /// tail exponent is divisible by a marked exponent.
    pub fn is_reduced(&self) -> bool {
        for (i, g) in self.elements.iter().enumerate() {
            for (j, h) in self.elements.iter().enumerate() {
                for t in h.body.terms() {
                    if i == j && t.exp == h.marked {
                        continue;
                    }
                    if g.marked.divides(&t.exp) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True if some marked exponent divides `e`.
    pub fn is_in_initial_ideal(&self, e: &ExponentVector) -> bool {
        self.elements.iter().any(|g| g.marked.divides(e))
    }

    /// All vectors `marked - e` over non-marked exponents.
    pub fn differences(&self) -> Vec<IntegerVector> {
        self.elements.iter().flat_map(|g| g.differences()).collect()
    }

    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self::from_elements_unchecked(
            self.nvars,
            self.elements.iter().map(|g| g.permuted(perm)).collect(),
        )
    }

    pub fn bodies(&self) -> Vec<Polynomial> {
        self.elements.iter().map(|g| g.body.clone()).collect()
    }
}

impl fmt::Debug for MarkedBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.elements).finish()
    }
}

/// A strictly positive integer weight `w` with `<w, marked - e> > 0` for every
/// non-marked exponent, or `None` when the marking is not coherent.
pub fn coherent_weight(elements: &[MarkedPolynomial], nvars: usize) -> Option<Vec<i64>> {
    let mut strict: Vec<IntegerVector> = elements.iter().flat_map(|g| g.differences()).collect();
    strict.extend((0..nvars).map(|i| IntegerVector::unit(nvars, i)));
    let x = lp::strictly_feasible(&[], &strict, nvars)?;
    weight_to_i64(&x)
}

pub(crate) fn weight_to_i64(x: &[Rational]) -> Option<Vec<i64>> {
    let v: Vec<BigInt> = primitive_integer_vector(x);
    v.iter().map(|b| b.to_i64()).collect()
}

/// Checks that a positive weight selects every marked term.
pub fn is_coherent(elements: &[MarkedPolynomial], nvars: usize) -> bool {
    coherent_weight(elements, nvars).is_some()
}

fn divisors_for(elements: &[&MarkedPolynomial], order: &WeightThenCanonical) -> Vec<Divisor> {
    elements
        .iter()
        .map(|g| Divisor::new(g.marked.clone(), &g.body, order))
        .collect()
}

/// Normal form of `f` modulo a marked basis, reducing the term of highest
/// `weight` first. `weight` must satisfy `<weight, marked - e> > 0` on `basis`.
pub fn normal_form_weighted(
    f: &Polynomial,
    basis: &MarkedBasis,
    weight: &[i64],
    guard: u64,
) -> Result<Polynomial, AlgebraError> {
    if f.nvars() != basis.nvars {
        return Err(AlgebraError::DimensionMismatch {
            expected: basis.nvars,
            found: f.nvars(),
        });
    }
    let order = WeightThenCanonical(weight.to_vec());
    let refs: Vec<&MarkedPolynomial> = basis.elements.iter().collect();
    reduce(f, &divisors_for(&refs, &order), &order, true, guard)
}

/// Normal form of `f` modulo a marked basis. The result does not depend on
/// any term order, only on the marking.
pub fn normal_form(f: &Polynomial, basis: &MarkedBasis) -> Result<Polynomial, AlgebraError> {
    let w = coherent_weight(&basis.elements, basis.nvars).ok_or(AlgebraError::IncoherentMarking)?;
    normal_form_weighted(f, basis, &w, DEFAULT_REDUCTION_GUARD)
}

/// Inter-reduces a coherently marked generating set into a marked reduced basis.
pub fn autoreduce(
    elements: Vec<MarkedPolynomial>,
    nvars: usize,
) -> Result<MarkedBasis, AlgebraError> {
    let w = coherent_weight(&elements, nvars).ok_or(AlgebraError::IncoherentMarking)?;
    autoreduce_weighted(elements, nvars, &w, DEFAULT_REDUCTION_GUARD)
}

pub(crate) fn autoreduce_weighted(
    elements: Vec<MarkedPolynomial>,
    nvars: usize,
    weight: &[i64],
    guard: u64,
) -> Result<MarkedBasis, AlgebraError> {
    let order = WeightThenCanonical(weight.to_vec());
    // Elements whose marked term is divisible by another marked term are
    // reduced by the rest; a non-zero remainder is re-marked at its
    // weight-leading term, a zero remainder is dropped.
    let mut kept = elements;
    loop {
        let hit = (0..kept.len()).find(|&i| {
            kept.iter().enumerate().any(|(j, k)| {
                j != i && k.marked.divides(&kept[i].marked) && (k.marked != kept[i].marked || j < i)
            })
        });
        let Some(i) = hit else { break };
        let g = kept.remove(i);
        let refs: Vec<&MarkedPolynomial> = kept.iter().collect();
        let r = reduce(g.body(), &divisors_for(&refs, &order), &order, true, guard)?;
        if !r.is_zero() {
            kept.push(MarkedPolynomial::from_order(r, &order)?);
        }
    }
    let mut out = Vec::with_capacity(kept.len());
    for i in 0..kept.len() {
        let others: Vec<&MarkedPolynomial> = kept
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g)
            .collect();
        let divs = divisors_for(&others, &order);
        let g = &kept[i];
        let tail = Polynomial::from_terms(nvars, g.tail().cloned());
        let reduced_tail = reduce(&tail, &divs, &order, true, guard)?;
        let body = reduced_tail.add(&Polynomial::monomial(
            nvars,
            Rational::one(),
            g.marked.clone(),
        ));
        out.push(MarkedPolynomial::new(body, g.marked.clone())?);
    }
    Ok(MarkedBasis::from_elements_unchecked(nvars, out))
}
