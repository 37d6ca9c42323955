use crate::algebra::buchberger::{buchberger_with, BuchbergerOptions};
use crate::algebra::marked::{autoreduce, normal_form_weighted, MarkedBasis, MarkedPolynomial};
use crate::algebra::monomial::IntegerVector;
use crate::algebra::order::RankOneOrder;
use crate::algebra::{AlgebraError, DEFAULT_REDUCTION_GUARD};

use super::cones::{
    integer_weight, is_flippable, positive_interior, raw_inequalities, restrict_initial_forms,
};
use super::{bump, FanError, FLIPS};

/// The marked reduced basis on the other side of the flippable facet with
/// inner normal `alpha`.
pub fn flip(g: &MarkedBasis, alpha: &IntegerVector) -> Result<MarkedBasis, FanError> {
    let n = g.nvars();
    let raw = raw_inequalities(g);
    let alpha = alpha.primitive();
    let Some(i) = raw.iter().position(|a| *a == alpha) else {
        return Err(FanError::NotAFacet(alpha));
    };
    if !is_flippable(&raw, i, n) {
        return Err(FanError::NotFlippable(alpha));
    }
    let weight = integer_weight(&positive_interior(&raw, n)?)?;
    flip_with_weight(g, &alpha, &weight)
}

/// `weight` must be a positive integer vector in the interior of the cone of `g`.
pub(crate) fn flip_with_weight(
    g: &MarkedBasis,
    alpha: &IntegerVector,
    weight: &[i64],
) -> Result<MarkedBasis, FanError> {
    bump(&FLIPS);
    let n = g.nvars();
    let h = restrict_initial_forms(g, alpha);
    let neg: Vec<i64> = (-alpha).to_i64().ok_or(FanError::WeightOverflow)?;
    let order = RankOneOrder::new(neg);
    let other = buchberger_with(&h.bodies(), &order, BuchbergerOptions::default())?;
    if order.tie_seen() {
        return Err(FanError::Algebra(AlgebraError::OrderTie));
    }
    let mut lifted = Vec::with_capacity(other.len());
    for p in other.elements() {
        let r = normal_form_weighted(p.body(), g, weight, DEFAULT_REDUCTION_GUARD)?;
        let body = p.body().sub(&r);
        lifted.push(MarkedPolynomial::new(body, p.marked().clone())?);
    }
    autoreduce(lifted, n).map_err(|e| match e {
        AlgebraError::IncoherentMarking => FanError::IncoherentMarking,
        e => FanError::Algebra(e),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::monomial::ExponentVector;
    use crate::algebra::polynomial::{Polynomial, Term};
    use crate::algebra::rational::Rational;
    use crate::fan::facet_normals;

    fn poly(n: usize, terms: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_terms(
            n,
            terms.iter().map(|(c, x)| {
                Term::new(Rational::from_integer(*c), ExponentVector::new(x.to_vec()))
            }),
        )
    }

    #[test]
    fn parabola_flips_both_ways() {
        let f = poly(2, &[(1, &[2, 0]), (-1, &[0, 1])]);
        let g = MarkedBasis::new(
            2,
            vec![MarkedPolynomial::new(f.clone(), ExponentVector::new(vec![2, 0])).unwrap()],
        )
        .unwrap();
        let alpha = IntegerVector::from_i64(&[2, -1]);
        let u = flip(&g, &alpha).unwrap();
        assert_eq!(u.len(), 1);
        assert_eq!(u.elements()[0].marked(), &ExponentVector::new(vec![0, 1]));
        let back = flip(&u, &-&alpha).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn flip_rejects_non_facets() {
        let f = poly(2, &[(1, &[2, 0]), (-1, &[0, 1])]);
        let g = MarkedBasis::new(
            2,
            vec![MarkedPolynomial::new(f, ExponentVector::new(vec![2, 0])).unwrap()],
        )
        .unwrap();
        assert!(matches!(
            flip(&g, &IntegerVector::from_i64(&[1, 0])),
            Err(FanError::NotAFacet(_))
        ));
    }

    #[test]
    fn example_flips_are_involutions() {
        let g = crate::fan::cones::tests::small_lex();
        for fac in facet_normals(&g, true) {
            let u = flip(&g, &fac.alpha).unwrap();
            assert_ne!(u, g);
            assert!(u.is_reduced());
            assert_eq!(flip(&u, &-&fac.alpha).unwrap(), g);
        }
    }
}
