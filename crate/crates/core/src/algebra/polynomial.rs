use std::cmp::Ordering;

use super::monomial::ExponentVector;
use super::rational::Rational;

/// A monomial together with its non-zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    pub exp: ExponentVector,
    pub coeff: Rational,
}

impl Term {
    pub fn new(coeff: Rational, exp: ExponentVector) -> Self {
        Term { coeff, exp }
    }
}

/// Sparse polynomial over Q in a fixed number of variables.
///
/// Terms are kept in ascending canonical (graded-lex) order of exponents,
/// with distinct exponents and no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(nvars, c, ExponentVector::zero(nvars))
    }

    pub fn monomial(nvars: usize, c: Rational, exp: ExponentVector) -> Self {
        debug_assert_eq!(exp.len(), nvars);
        if c.is_zero() {
            return Self::zero(nvars);
        }
        Polynomial {
            nvars,
            terms: vec![Term::new(c, exp)],
        }
    }

    /// Builds a polynomial from arbitrary terms, merging repeated exponents.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = Term>) -> Self {
        let mut terms: Vec<Term> = terms.into_iter().collect();
        debug_assert!(terms.iter().all(|t| t.exp.len() == nvars));
        terms.sort_by(|a, b| a.exp.cmp(&b.exp));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.exp == t.exp => last.coeff += &t.coeff,
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Polynomial { nvars, terms: out }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: &ExponentVector) -> Rational {
        match self.terms.binary_search_by(|t| t.exp.cmp(exp)) {
            Ok(i) => self.terms[i].coeff.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn contains_exponent(&self, exp: &ExponentVector) -> bool {
        self.terms.binary_search_by(|t| t.exp.cmp(exp)).is_ok()
    }

    /// Largest exponent in the canonical order.
    pub fn canonical_leading(&self) -> Option<&Term> {
        self.terms.last()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.iter().map(|t| t.exp.degree()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.exp.clone()))
                .collect(),
        }
    }

    /// Scales so that the term at `exp` has coefficient one.
    pub fn normalized_at(&self, exp: &ExponentVector) -> Self {
        let c = self.coefficient(exp);
        assert!(!c.is_zero(), "exponent not present");
        self.scale(&c.recip())
    }

    /// Scales so that the canonically largest term is monic.
    pub fn monic_canonical(&self) -> Self {
        match self.canonical_leading() {
            Some(t) => self.scale(&t.coeff.recip()),
            None => self.clone(),
        }
    }

    /// `c * x^e * self`. Multiplying by a monomial preserves the canonical
    /// order because graded-lex is a term order.
    pub fn mul_term(&self, c: &Rational, e: &ExponentVector) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.exp.mul(e)))
                .collect(),
        }
    }

    /// `self + c * other`, computed by merging.
    pub fn add_scaled(&self, c: &Rational, other: &Polynomial) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = &other.terms[j];
            match a.exp.cmp(&b.exp) {
                Ordering::Less => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(Term::new(&b.coeff * c, b.exp.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = &a.coeff + &(&b.coeff * c);
                    if !s.is_zero() {
                        out.push(Term::new(s, a.exp.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(
            other.terms[j..]
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.exp.clone())),
        );
        Polynomial {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn add(&self, other: &Polynomial) -> Self {
        self.add_scaled(&Rational::one(), other)
    }

    pub fn sub(&self, other: &Polynomial) -> Self {
        self.add_scaled(&-Rational::one(), other)
    }

    pub fn mul(&self, other: &Polynomial) -> Self {
        let mut acc = Polynomial::zero(self.nvars);
        for t in &other.terms {
            acc = acc.add(&self.mul_term(&t.coeff, &t.exp));
        }
        acc
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Polynomial::constant(self.nvars, Rational::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Renames variables: variable i becomes variable perm[i].
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Polynomial::from_terms(
            self.nvars,
            self.terms
                .iter()
                .map(|t| Term::new(t.coeff.clone(), t.exp.permuted(perm))),
        )
    }

    /// Keeps the terms satisfying `keep`.
    pub fn filter_terms(&self, mut keep: impl FnMut(&Term) -> bool) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|t| keep(t)).cloned().collect(),
        }
    }
}
