//! Fixtures, random inputs and exact checkers shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;
use std::path::PathBuf;

use rand::Rng;

use grobfan::algebra::marked::{normal_form, s_polynomial};
use grobfan::fan::{facet_normals, flip, raw_inequalities};
use grobfan::io::{parse_input, InputDocument};
use grobfan::linalg::rank_integer;
use grobfan::lp::{lp_solve, strict_feasibility, Feasibility};
use grobfan::{
    Cone, ExponentVector, IntegerVector, LpStatus, MarkedBasis, Polynomial, Rational, Term,
};

pub fn load(name: &str) -> InputDocument {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name);
    parse_input(&std::fs::read_to_string(path).expect("data file")).expect("data file parses")
}

/// A polynomial in three variables with one to four terms of degree at most
/// three and coefficients in `{-3..3} \ {0}`.
pub fn random_polynomial(rng: &mut impl Rng) -> Polynomial {
    loop {
        let k = rng.gen_range(1..=4);
        let terms = (0..k).map(|_| {
            let mut c = 0;
            while c == 0 {
                c = rng.gen_range(-3..=3);
            }
            let d = rng.gen_range(0..=3u32);
            let a = rng.gen_range(0..=d);
            let b = rng.gen_range(0..=d - a);
            Term::new(
                Rational::from(c as i64),
                ExponentVector::new(vec![a, b, d - a - b]),
            )
        });
        let p = Polynomial::from_terms(3, terms);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_ideal(rng: &mut impl Rng) -> Vec<Polynomial> {
    vec![random_polynomial(rng), random_polynomial(rng)]
}

fn dot(a: &IntegerVector, x: &[Rational]) -> Rational {
    a.entries()
        .iter()
        .zip(x)
        .map(|(p, q)| &Rational::from(p) * q)
        .sum()
}

/// Every S-polynomial reduces to zero and the marking is induced by a
/// strictly positive weight, checked by substituting that weight exactly.
pub fn verify_basis(g: &MarkedBasis) -> Result<(), String> {
    let el = g.elements();
    for i in 0..el.len() {
        for j in (i + 1)..el.len() {
            let r = normal_form(&s_polynomial(&el[i], &el[j]), g).map_err(|e| e.to_string())?;
            if !r.is_zero() {
                return Err(format!("S-polynomial {i},{j} leaves a remainder"));
            }
        }
    }
    if g.is_unit() {
        return Ok(());
    }
    let n = g.nvars();
    let mut strict = raw_inequalities(g);
    strict.extend((0..n).map(|k| IntegerVector::unit(n, k)));
    match strict_feasibility(&[], &strict, n) {
        Feasibility::Point(x) => {
            if strict.iter().all(|a| dot(a, &x).is_positive()) {
                Ok(())
            } else {
                Err("weight does not satisfy the marking strictly".into())
            }
        }
        Feasibility::Certificate(l) => {
            verify_gordan(&[], &strict, &l, n)?;
            Err("marking is not coherent".into())
        }
    }
}

/// `l >= 0`, not all zero, and `sum l_i strict_i` in the span of `eqs`.
pub fn verify_gordan(
    eqs: &[IntegerVector],
    strict: &[IntegerVector],
    l: &[Rational],
    n: usize,
) -> Result<(), String> {
    if l.len() != strict.len()
        || l.iter().any(Rational::is_negative)
        || l.iter().all(Rational::is_zero)
    {
        return Err("multipliers are not a non-trivial non-negative vector".into());
    }
    let combo: Vec<Rational> = (0..n)
        .map(|j| {
            strict
                .iter()
                .zip(l)
                .map(|(a, x)| &Rational::from(&a.entries()[j]) * x)
                .sum()
        })
        .collect();
    let combo = IntegerVector::new(grobfan::algebra::rational::primitive_integer_vector(&combo));
    let mut with = eqs.to_vec();
    with.push(combo);
    if rank_integer(&with, n) == rank_integer(eqs, n) {
        Ok(())
    } else {
        Err("combination leaves the span of the equations".into())
    }
}

/// Every flippable facet leads to a basis in `all`, and flipping back
/// returns to `g`.
pub fn verify_flips(g: &MarkedBasis, all: &HashSet<MarkedBasis>) -> Result<usize, String> {
    let mut edges = 0;
    for f in facet_normals(g, true) {
        let u = flip(g, &f.alpha).map_err(|e| e.to_string())?;
        if !all.contains(&u) {
            return Err("flip left the enumerated set".into());
        }
        let back = flip(&u, &-&f.alpha).map_err(|e| e.to_string())?;
        if &back != g {
            return Err("flip is not an involution".into());
        }
        edges += 1;
    }
    Ok(edges)
}

/// Dimensions of all faces of `c`, found by asking for every subset `S` of
/// the inequalities whether some point of `c` has exactly `S` tight. Each
/// witness point is checked by exact substitution.
pub fn brute_force_face_dimensions(c: &Cone) -> Result<Vec<usize>, String> {
    let n = c.n;
    let m = c.inequalities.len();
    let q = |a: &IntegerVector| -> Vec<Rational> {
        let mut row: Vec<Rational> = a.entries().iter().map(Rational::from).collect();
        row.push(Rational::zero());
        row
    };
    let neg = |r: &[Rational]| -> Vec<Rational> { r.iter().map(|x| -x).collect() };
    let mut dims = Vec::new();
    for mask in 0u32..(1 << m) {
        let mut a = Vec::new();
        let mut b = Vec::new();
        let mut tight = c.equations.clone();
        for e in &c.equations {
            a.push(q(e));
            a.push(neg(&q(e)));
            b.extend([Rational::zero(), Rational::zero()]);
        }
        for (i, ineq) in c.inequalities.iter().enumerate() {
            if mask & (1 << i) != 0 {
                a.push(q(ineq));
                a.push(neg(&q(ineq)));
                b.extend([Rational::zero(), Rational::zero()]);
                tight.push(ineq.clone());
            } else {
                // t - ineq.x <= 0
                let mut row = neg(&q(ineq));
                row[n] = Rational::one();
                a.push(row);
                b.push(Rational::zero());
            }
        }
        let mut cap = vec![Rational::zero(); n + 1];
        cap[n] = Rational::one();
        a.push(cap.clone());
        b.push(Rational::one());
        let r = lp_solve(&a, &b, &cap).map_err(|e| e.to_string())?;
        if r.status != LpStatus::Optimal {
            return Err("bounded feasible program reported otherwise".into());
        }
        let x = r.point.expect("optimal point");
        for (row, bi) in a.iter().zip(&b) {
            let lhs: Rational = row.iter().zip(&x).map(|(p, v)| p * v).sum();
            if lhs > *bi {
                return Err("witness violates a constraint".into());
            }
        }
        if x[n].is_positive() {
            dims.push(n - rank_integer(&tight, n));
        }
    }
    dims.sort();
    Ok(dims)
}
