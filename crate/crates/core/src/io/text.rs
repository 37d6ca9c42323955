//! Plain-text forms of polynomials, marked bases, cones and documents.

use std::fmt::Write;

use crate::algebra::marked::MarkedBasis;
use crate::algebra::monomial::{ExponentVector, IntegerVector};
use crate::algebra::polynomial::{Polynomial, Term};
use crate::algebra::rational::Rational;
use crate::fan::RunStats;
use crate::lp::Cone;

use super::parse::InputDocument;

fn monomial(exp: &ExponentVector, vars: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &k) in exp.as_slice().iter().enumerate() {
        match k {
            0 => {}
            1 => parts.push(vars[i].clone()),
            _ => parts.push(format!("{}^{k}", vars[i])),
        }
    }
    parts.join("*")
}

fn push_term(out: &mut String, t: &Term, vars: &[String], first: bool, mark: bool) {
    let negative = t.coeff.is_negative();
    if negative {
        out.push('-');
    } else if !first {
        out.push('+');
    }
    if mark {
        out.push('!');
    }
    let c = t.coeff.abs();
    let m = monomial(&t.exp, vars);
    if m.is_empty() {
        write!(out, "{c}").expect("string write");
    } else if c.is_one() {
        out.push_str(&m);
    } else {
        write!(out, "{c}*{m}").expect("string write");
    }
}

/// Terms in descending canonical order.
pub fn format_polynomial(p: &Polynomial, vars: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in p.terms().iter().rev().enumerate() {
        push_term(&mut out, t, vars, i == 0, false);
    }
    out
}

/// The marked term first with a `!` prefix, then the remaining terms in
/// ascending canonical order.
pub fn format_marked(p: &Polynomial, marked: &ExponentVector, vars: &[String]) -> String {
    let mut out = String::new();
    let lead = Term::new(p.coefficient(marked), marked.clone());
    push_term(&mut out, &lead, vars, true, true);
    for t in p.terms().iter().filter(|t| t.exp != *marked) {
        push_term(&mut out, t, vars, false, false);
    }
    out
}

pub fn format_marked_basis(g: &MarkedBasis, vars: &[String]) -> String {
    let items: Vec<String> = g
        .elements()
        .iter()
        .map(|p| format_marked(p.body(), p.marked(), vars))
        .collect();
    format!("{{{}}}", items.join(", "))
}

pub fn format_polynomial_list(ps: &[Polynomial], vars: &[String]) -> String {
    let items: Vec<String> = ps.iter().map(|p| format_polynomial(p, vars)).collect();
    format!("{{{}}}", items.join(", "))
}

pub fn format_vector(v: &IntegerVector) -> String {
    format!("{v}")
}

pub fn format_rationals(v: &[Rational]) -> String {
    let items: Vec<String> = v.iter().map(Rational::to_string).collect();
    format!("({})", items.join(","))
}

/// `cone(n) eq[...] ineq[...]`.
pub fn format_cone(c: &Cone) -> String {
    let list = |vs: &[IntegerVector]| vs.iter().map(format_vector).collect::<Vec<_>>().join(",");
    format!(
        "cone({}) eq[{}] ineq[{}]",
        c.n,
        list(&c.equations),
        list(&c.inequalities)
    )
}

pub fn format_stats(s: &RunStats) -> String {
    let c = &s.counters;
    format!(
        "facets: {}\nshoots: {}\nflips: {}\nlp_solves: {}\nwall_time_ms: {}",
        c.facets,
        c.shoots,
        c.flips,
        c.lp_solves,
        s.wall_time.as_millis()
    )
}

pub fn format_document(d: &InputDocument) -> String {
    let gens: Vec<String> = d
        .generators
        .iter()
        .zip(&d.marks)
        .map(|(g, m)| match m {
            Some(m) => format_marked(g, m, &d.variables),
            None => format_polynomial(g, &d.variables),
        })
        .collect();
    let mut out = format!("Q[{}]{{{}}}\n", d.variables.join(","), gens.join(", "));
    if let Some(o) = &d.order {
        writeln!(out, "order: {o}").expect("string write");
    }
    if let Some(s) = &d.symmetry {
        writeln!(out, "symmetry: {s}").expect("string write");
    }
    out
}
