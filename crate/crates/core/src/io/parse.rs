//! Input documents: `Q[x,y,z]{x+y+z, x^3*z+x+y^2}` plus optional
//! `order:` and `symmetry:` directive lines after the closing brace.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::algebra::marked::{MarkedBasis, MarkedPolynomial};
use crate::algebra::monomial::{ExponentVector, IntegerVector};
use crate::algebra::polynomial::{Polynomial, Term};
use crate::algebra::rational::Rational;
use crate::lp::Cone;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownIdentifier(String),
    DuplicateVariable(String),
    ZeroDenominator,
    EmptyGenerators,
    ExponentTooLarge,
    UnknownDirective(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(s) => write!(f, "syntax error: {s}"),
            ParseErrorKind::UnknownIdentifier(s) => write!(f, "unknown identifier `{s}`"),
            ParseErrorKind::DuplicateVariable(s) => write!(f, "variable `{s}` declared twice"),
            ParseErrorKind::ZeroDenominator => write!(f, "zero denominator"),
            ParseErrorKind::EmptyGenerators => write!(f, "empty generator list"),
            ParseErrorKind::ExponentTooLarge => write!(f, "exponent too large"),
            ParseErrorKind::UnknownDirective(s) => write!(f, "unknown directive `{s}`"),
        }
    }
}

/// A parse failure at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

/// A parsed input file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputDocument {
    pub variables: Vec<String>,
    pub generators: Vec<Polynomial>,
    /// Exponent of the `!`-marked term of each generator, if any.
    pub marks: Vec<Option<ExponentVector>>,
    pub order: Option<String>,
    pub symmetry: Option<String>,
}

impl InputDocument {
    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    /// The generators as a marked basis when every generator carries a mark.
    pub fn marked_basis(&self) -> Option<MarkedBasis> {
        let elements: Option<Vec<MarkedPolynomial>> = self
            .generators
            .iter()
            .zip(&self.marks)
            .map(|(g, m)| MarkedPolynomial::new(g.clone(), m.clone()?).ok())
            .collect();
        Some(MarkedBasis::from_elements_unchecked(
            self.nvars(),
            elements?,
        ))
    }
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
    vars: &'a [String],
}

impl Cursor<'_> {
    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            kind,
        }
    }

    fn syntax(&self, msg: impl Into<String>) -> ParseError {
        self.err(ParseErrorKind::Syntax(msg.into()))
    }

    fn peek_raw(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek_raw()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c == '#' {
                while let Some(c) = self.peek_raw() {
                    if c == '\n' {
                        break;
                    }
                    self.bump();
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = self
                .peek()
                .map_or("end of input".to_string(), |x| format!("`{x}`"));
            Err(self.syntax(format!("expected `{c}`, found {found}")))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Some(c) if c.is_alphabetic() || c == '_' => {}
            _ => return Err(self.syntax("expected identifier")),
        }
        let mut s = String::new();
        while let Some(c) = self.peek_raw() {
            if c.is_alphanumeric() || c == '_' {
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        Ok(s)
    }

    fn uint(&mut self) -> Result<BigInt, ParseError> {
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Err(self.syntax("expected integer"));
        }
        let mut s = String::new();
        while let Some(c) = self.peek_raw() {
            if c.is_ascii_digit() {
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        Ok(s.parse().expect("digits"))
    }

    fn coefficient(&mut self) -> Result<Rational, ParseError> {
        let n = self.uint()?;
        if self.eat('/') {
            let (line, column) = (self.line, self.column);
            let d = self.uint()?;
            if d.is_zero() {
                return Err(ParseError {
                    line,
                    column,
                    kind: ParseErrorKind::ZeroDenominator,
                });
            }
            return Ok(Rational::from_bigints(n, d));
        }
        Ok(Rational::from_bigint(n))
    }

    fn factor(&mut self, exp: &mut [u32]) -> Result<(), ParseError> {
        let (line, column) = {
            self.skip_ws();
            (self.line, self.column)
        };
        let name = self.ident()?;
        let Some(i) = self.vars.iter().position(|v| *v == name) else {
            return Err(ParseError {
                line,
                column,
                kind: ParseErrorKind::UnknownIdentifier(name),
            });
        };
        let k = if self.eat('^') {
            self.uint()?
                .to_u32()
                .ok_or_else(|| self.err(ParseErrorKind::ExponentTooLarge))?
        } else {
            1
        };
        exp[i] = exp[i]
            .checked_add(k)
            .ok_or_else(|| self.err(ParseErrorKind::ExponentTooLarge))?;
        Ok(())
    }

    /// One term without its sign; returns the term and whether it was marked.
    fn term(&mut self) -> Result<(Term, bool), ParseError> {
        let marked = self.eat('!');
        let n = self.vars.len();
        let mut exp = vec![0u32; n];
        let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let c = self.coefficient()?;
            let more = self.eat('*') || self.peek().is_some_and(|c| c.is_alphabetic() || c == '_');
            if more {
                self.factor(&mut exp)?;
            } else {
                return Ok((Term::new(c, ExponentVector::new(exp)), marked));
            }
            c
        } else {
            self.factor(&mut exp)?;
            Rational::one()
        };
        while self.eat('*') {
            self.factor(&mut exp)?;
        }
        Ok((Term::new(coeff, ExponentVector::new(exp)), marked))
    }

    fn polynomial(&mut self) -> Result<(Polynomial, Option<ExponentVector>), ParseError> {
        let n = self.vars.len();
        let mut sum: BTreeMap<ExponentVector, Rational> = BTreeMap::new();
        let mut mark: Option<ExponentVector> = None;
        let mut first = true;
        loop {
            let negative = if self.eat('-') {
                true
            } else {
                if !self.eat('+') && !first {
                    break;
                }
                false
            };
            first = false;
            let (line, column) = {
                self.skip_ws();
                (self.line, self.column)
            };
            let (t, marked) = self.term()?;
            if marked {
                if mark.is_some() {
                    return Err(ParseError {
                        line,
                        column,
                        kind: ParseErrorKind::Syntax("two marked terms".into()),
                    });
                }
                mark = Some(t.exp.clone());
            }
            let c = if negative { -t.coeff } else { t.coeff };
            *sum.entry(t.exp).or_insert_with(Rational::zero) += &c;
        }
        let p = Polynomial::from_terms(n, sum.into_iter().map(|(e, c)| Term::new(c, e)));
        if let Some(m) = &mark {
            if !p.contains_exponent(m) {
                return Err(self.syntax("marked term cancels"));
            }
        }
        Ok((p, mark))
    }
}

/// Parses the ring header and variable list: `Q[x,y,z]`.
fn header(c: &mut Cursor<'_>) -> Result<Vec<String>, ParseError> {
    let field = c.ident()?;
    if field != "Q" {
        return Err(c.syntax(format!("unsupported field `{field}`, expected `Q`")));
    }
    c.expect('[')?;
    let mut vars: Vec<String> = Vec::new();
    loop {
        let (line, column) = {
            c.skip_ws();
            (c.line, c.column)
        };
        let v = c.ident()?;
        if vars.contains(&v) {
            return Err(ParseError {
                line,
                column,
                kind: ParseErrorKind::DuplicateVariable(v),
            });
        }
        vars.push(v);
        if !c.eat(',') {
            break;
        }
    }
    c.expect(']')?;
    Ok(vars)
}

fn polynomial_list(
    c: &mut Cursor<'_>,
) -> Result<(Vec<Polynomial>, Vec<Option<ExponentVector>>), ParseError> {
    c.expect('{')?;
    if c.peek() == Some('}') {
        return Err(c.err(ParseErrorKind::EmptyGenerators));
    }
    let mut gens = Vec::new();
    let mut marks = Vec::new();
    loop {
        let (p, m) = c.polynomial()?;
        gens.push(p);
        marks.push(m);
        if !c.eat(',') {
            break;
        }
    }
    c.expect('}')?;
    Ok((gens, marks))
}

pub fn parse_input(text: &str) -> Result<InputDocument, ParseError> {
    let mut c = Cursor {
        chars: text.chars().collect(),
        pos: 0,
        line: 1,
        column: 1,
        vars: &[],
    };
    let variables = header(&mut c)?;
    let mut c = Cursor {
        vars: &variables,
        ..c
    };
    let (generators, marks) = polynomial_list(&mut c)?;
    let mut order = None;
    let mut symmetry = None;
    while c.peek().is_some() {
        let (line, column) = (c.line, c.column);
        let key = c.ident()?;
        c.expect(':')?;
        let mut value = String::new();
        while let Some(ch) = c.peek_raw() {
            if ch == '\n' || ch == '#' {
                break;
            }
            value.push(ch);
            c.bump();
        }
        let value = value.trim().to_string();
        match key.as_str() {
            "order" => order = Some(value),
            "symmetry" => symmetry = Some(value),
            _ => {
                return Err(ParseError {
                    line,
                    column,
                    kind: ParseErrorKind::UnknownDirective(key),
                })
            }
        }
    }
    Ok(InputDocument {
        variables,
        generators,
        marks,
        order,
        symmetry,
    })
}

/// Parses a brace-delimited list of polynomials over known variables, such
/// as the text form of a marked basis.
pub fn parse_polynomials(
    text: &str,
    variables: &[String],
) -> Result<(Vec<Polynomial>, Vec<Option<ExponentVector>>), ParseError> {
    let mut c = Cursor {
        chars: text.chars().collect(),
        pos: 0,
        line: 1,
        column: 1,
        vars: variables,
    };
    let out = polynomial_list(&mut c)?;
    if c.peek().is_some() {
        return Err(c.syntax("trailing input"));
    }
    Ok(out)
}

/// Parses the text form `{!y^2+x-x^3*y-x^4, !z+y+x}` of a marked basis.
pub fn parse_marked_basis(text: &str, variables: &[String]) -> Result<MarkedBasis, ParseError> {
    let (gens, marks) = parse_polynomials(text, variables)?;
    let mut elements = Vec::with_capacity(gens.len());
    for (g, m) in gens.into_iter().zip(marks) {
        let m = m.ok_or_else(|| ParseError {
            line: 1,
            column: 1,
            kind: ParseErrorKind::Syntax("every element of a marked basis needs a `!` mark".into()),
        })?;
        elements.push(MarkedPolynomial::new(g, m).expect("mark present"));
    }
    Ok(MarkedBasis::from_elements_unchecked(
        variables.len(),
        elements,
    ))
}

fn vector_list(s: &str) -> Option<Vec<IntegerVector>> {
    let s = s.trim();
    if s.is_empty() {
        return Some(Vec::new());
    }
    let inner = s.strip_prefix('(')?.strip_suffix(')')?;
    inner
        .split("),(")
        .map(|v| {
            v.split(',')
                .map(|x| x.trim().parse::<BigInt>().ok())
                .collect::<Option<Vec<_>>>()
                .map(IntegerVector::new)
        })
        .collect()
}

/// Parses the text form `cone(n) eq[...] ineq[...]` of a cone.
pub fn parse_cone(text: &str) -> Result<Cone, ParseError> {
    let bad = || ParseError {
        line: 1,
        column: 1,
        kind: ParseErrorKind::Syntax("malformed cone".into()),
    };
    let rest = text.trim().strip_prefix("cone(").ok_or_else(bad)?;
    let (n, rest) = rest.split_once(')').ok_or_else(bad)?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    let rest = rest.trim().strip_prefix("eq[").ok_or_else(bad)?;
    let (eqs, rest) = rest.split_once(']').ok_or_else(bad)?;
    let rest = rest.trim().strip_prefix("ineq[").ok_or_else(bad)?;
    let ineqs = rest.strip_suffix(']').ok_or_else(bad)?;
    let equations = vector_list(eqs).ok_or_else(bad)?;
    let inequalities = vector_list(ineqs).ok_or_else(bad)?;
    if equations.iter().chain(&inequalities).any(|v| v.len() != n) {
        return Err(bad());
    }
    Ok(Cone {
        n,
        equations,
        inequalities,
    })
}
