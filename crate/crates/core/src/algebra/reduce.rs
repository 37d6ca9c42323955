//! Multivariate division driven by a monomial order.

use std::cmp::Ordering;

use super::monomial::ExponentVector;
use super::order::MonomialOrder;
use super::polynomial::{Polynomial, Term};
use super::rational::Rational;
use super::AlgebraError;

/// A divisor prepared for reduction: monic leading exponent plus the
/// remaining terms sorted ascending under the active order.
pub(crate) struct Divisor {
    pub lead: ExponentVector,
    pub tail: Vec<Term>,
}

impl Divisor {
    /// `body` must have coefficient one at `lead`, and `lead` must be the
    /// largest exponent of `body` under `order`.
    pub fn new<O: MonomialOrder>(lead: ExponentVector, body: &Polynomial, order: &O) -> Self {
        let mut tail: Vec<Term> = body
            .terms()
            .iter()
            .filter(|t| t.exp != lead)
            .cloned()
            .collect();
        tail.sort_by(|a, b| order.cmp_exp(&a.exp, &b.exp));
        Divisor { lead, tail }
    }
}

/// Sorts terms ascending under `order`.
pub(crate) fn sorted_terms<O: MonomialOrder>(f: &Polynomial, order: &O) -> Vec<Term> {
    let mut t = f.terms().to_vec();
    t.sort_by(|a, b| order.cmp_exp(&a.exp, &b.exp));
    t
}

/// `rest - c * x^shift * tail`, all ascending under `order`.
fn merge_sub<O: MonomialOrder>(
    rest: Vec<Term>,
    c: &Rational,
    shift: &ExponentVector,
    tail: &[Term],
    order: &O,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(rest.len() + tail.len());
    let mut it = rest.into_iter().peekable();
    for t in tail {
        let e = t.exp.mul(shift);
        let v = -(c * &t.coeff);
        loop {
            match it.peek() {
                Some(r) => match order.cmp_exp(&r.exp, &e) {
                    Ordering::Less => out.push(it.next().expect("peeked")),
                    Ordering::Equal => {
                        let r = it.next().expect("peeked");
                        let s = r.coeff + &v;
                        if !s.is_zero() {
                            out.push(Term::new(s, e.clone()));
                        }
                        break;
                    }
                    Ordering::Greater => {
                        out.push(Term::new(v.clone(), e.clone()));
                        break;
                    }
                },
                None => {
                    out.push(Term::new(v.clone(), e.clone()));
                    break;
                }
            }
        }
    }
    out.extend(it);
    out
}

/// Reduces `f` by `divisors`. With `full` every term is reduced; otherwise
/// only the leading terms until one is irreducible.
///
/// Terminates whenever every divisor's leading term dominates its tail in a
/// term order compatible with `order`; `guard` bounds the number of steps
/// otherwise.
pub(crate) fn reduce<O: MonomialOrder>(
    f: &Polynomial,
    divisors: &[Divisor],
    order: &O,
    full: bool,
    guard: u64,
) -> Result<Polynomial, AlgebraError> {
    let nvars = f.nvars();
    let mut rest = sorted_terms(f, order);
    let mut done: Vec<Term> = Vec::new();
    let mut steps: u64 = 0;
    while let Some(top) = rest.pop() {
        match divisors.iter().find(|d| d.lead.divides(&top.exp)) {
            Some(d) => {
                steps += 1;
                if steps > guard {
                    return Err(AlgebraError::NonTermination(guard));
                }
                let shift = top.exp.div(&d.lead);
                rest = merge_sub(rest, &top.coeff, &shift, &d.tail, order);
            }
            None => {
                done.push(top);
                if !full {
                    done.append(&mut rest);
                    break;
                }
            }
        }
    }
    Ok(Polynomial::from_terms(nvars, done))
}
