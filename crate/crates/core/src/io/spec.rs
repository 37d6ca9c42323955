//! Term order and symmetry specifications.

use thiserror::Error;

use crate::algebra::order::TermOrderMatrix;
use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderSpecError {
    #[error("malformed order `{0}`")]
    Syntax(String),
    #[error("unknown variable `{0}` in order")]
    UnknownVariable(String),
    #[error(transparent)]
    Invalid(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetrySpecError {
    #[error("malformed permutation `{0}`")]
    Syntax(String),
    #[error("permutation has {found} images, expected {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("permutation `{0}` is not a bijection")]
    NotABijection(String),
}

fn variable_list(s: &str, vars: &[String]) -> Result<Vec<usize>, OrderSpecError> {
    s.split(',')
        .map(str::trim)
        .map(|name| {
            vars.iter()
                .position(|v| v == name)
                .ok_or_else(|| OrderSpecError::UnknownVariable(name.to_string()))
        })
        .collect()
}

fn integer_row(s: &str) -> Result<Vec<i64>, OrderSpecError> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| OrderSpecError::Syntax(s.to_string()))
        })
        .collect()
}

/// Parses `lex:<vars>`, `deglex:<vars>`, `degrevlex:<vars>`,
/// `weight:<w>;tiebreak=<spec>` or `matrix:<row>;<row>;...`. Variable lists
/// name variables from largest to smallest.
pub fn parse_order(spec: &str, vars: &[String]) -> Result<TermOrderMatrix, OrderSpecError> {
    let n = vars.len();
    let spec = spec.trim();
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| OrderSpecError::Syntax(spec.to_string()))?;
    let rest = rest.trim();
    Ok(match kind.trim() {
        "lex" => TermOrderMatrix::lex(&variable_list(rest, vars)?, n)?,
        "deglex" => TermOrderMatrix::deglex(&variable_list(rest, vars)?, n)?,
        "degrevlex" => TermOrderMatrix::degrevlex(&variable_list(rest, vars)?, n)?,
        "weight" => {
            let (w, tie) = rest
                .split_once(';')
                .ok_or_else(|| OrderSpecError::Syntax(spec.to_string()))?;
            let tie = tie
                .trim()
                .strip_prefix("tiebreak=")
                .ok_or_else(|| OrderSpecError::Syntax(spec.to_string()))?;
            let w = integer_row(w)?;
            if w.len() != n {
                return Err(AlgebraError::DimensionMismatch {
                    expected: n,
                    found: w.len(),
                }
                .into());
            }
            TermOrderMatrix::weighted(&w, &parse_order(tie, vars)?)?
        }
        "matrix" => {
            let rows = rest
                .split(';')
                .map(integer_row)
                .collect::<Result<Vec<_>, _>>()?;
            TermOrderMatrix::new(rows, n)?
        }
        _ => return Err(OrderSpecError::Syntax(spec.to_string())),
    })
}

/// Parses generators given as comma lists of 1-based images, separated by
/// `;`. Returned permutations are 0-based.
pub fn parse_symmetry(spec: &str, n: usize) -> Result<Vec<Vec<usize>>, SymmetrySpecError> {
    let mut out = Vec::new();
    for g in spec.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let images: Vec<usize> = g
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| SymmetrySpecError::Syntax(g.to_string()))
            })
            .collect::<Result<_, _>>()?;
        if images.len() != n {
            return Err(SymmetrySpecError::WrongLength {
                expected: n,
                found: images.len(),
            });
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(SymmetrySpecError::NotABijection(g.to_string()));
            }
            seen[i - 1] = true;
        }
        out.push(images.into_iter().map(|i| i - 1).collect());
    }
    Ok(out)
}
