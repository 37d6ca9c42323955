use std::cmp::Ordering;

use crate::algebra::marked::MarkedBasis;
use crate::algebra::monomial::IntegerVector;
use crate::algebra::order::TermOrderMatrix;
use crate::algebra::rational::{primitive_integer_vector, Rational};

use super::cones::{positive_interior, raw_inequalities};
use super::{bump, FacetNormal, FanError, SHOOTS};

/// The facet through which the segment from a positive interior point of the
/// cone towards the target order's cone leaves, or `None` at the sink.
pub fn search_edge(
    g: &MarkedBasis,
    target: &TermOrderMatrix,
) -> Result<Option<FacetNormal>, FanError> {
    let raw = raw_inequalities(g);
    let sigma = positive_interior(&raw, g.nvars())?;
    Ok(
        search_edge_with(&raw, &sigma, target).map(|alpha| FacetNormal {
            alpha,
            flippable: true,
        }),
    )
}

pub(crate) fn search_edge_with(
    raw: &[IntegerVector],
    sigma: &[Rational],
    target: &TermOrderMatrix,
) -> Option<IntegerVector> {
    bump(&SHOOTS);
    let s = IntegerVector::new(primitive_integer_vector(sigma));
    let mut best: Option<&IntegerVector> = None;
    for a in raw {
        if target.lex_sign(a.entries()) != Ordering::Less {
            continue;
        }
        best = match best {
            None => Some(a),
            Some(b) => {
                // t_a < t_b  iff  target . (<s,b> a - <s,a> b) is lex-negative
                let v = a.scaled(&s.dot(b)).sub(&b.scaled(&s.dot(a)));
                if target.lex_sign(v.entries()) == Ordering::Less {
                    Some(a)
                } else {
                    Some(b)
                }
            }
        };
    }
    best.cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::marked::MarkedPolynomial;
    use crate::algebra::monomial::ExponentVector;
    use crate::algebra::polynomial::{Polynomial, Term};

    fn parabola(marked: &[u32]) -> MarkedBasis {
        let f = Polynomial::from_terms(
            2,
            [
                Term::new(Rational::one(), ExponentVector::new(vec![2, 0])),
                Term::new(-Rational::one(), ExponentVector::new(vec![0, 1])),
            ],
        );
        MarkedBasis::new(
            2,
            vec![MarkedPolynomial::new(f, ExponentVector::new(marked.to_vec())).unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn non_sink_has_its_facet() {
        let lex = TermOrderMatrix::lex(&[0, 1], 2).unwrap();
        let e = search_edge(&parabola(&[0, 1]), &lex).unwrap().unwrap();
        assert_eq!(e.alpha, IntegerVector::from_i64(&[-2, 1]));
    }

    #[test]
    fn sink_has_none() {
        let lex = TermOrderMatrix::lex(&[0, 1], 2).unwrap();
        assert_eq!(search_edge(&parabola(&[2, 0]), &lex).unwrap(), None);
    }
}
