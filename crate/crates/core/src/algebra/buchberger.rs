//! Buchberger's algorithm, selecting pairs by smallest lcm in degree order.

use std::collections::HashSet;

use super::marked::{MarkedBasis, MarkedPolynomial};
use super::monomial::ExponentVector;
use super::order::{MonomialOrder, TermOrderMatrix};
use super::polynomial::Polynomial;
use super::rational::Rational;
use super::reduce::{reduce, Divisor};
use super::{AlgebraError, DEFAULT_REDUCTION_GUARD};

#[derive(Clone, Copy, Debug)]
pub struct BuchbergerOptions {
    /// Skip pairs covered by Buchberger's chain criterion.
    pub chain_criterion: bool,
    /// Step bound per reduction.
    pub guard: u64,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions {
            chain_criterion: true,
            guard: DEFAULT_REDUCTION_GUARD,
        }
    }
}

/// Marked reduced Gröbner basis of the ideal generated by `gens` under `order`.
pub fn buchberger(
    gens: &[Polynomial],
    order: &TermOrderMatrix,
) -> Result<MarkedBasis, AlgebraError> {
    buchberger_with(gens, order, BuchbergerOptions::default())
}

pub fn buchberger_with<O: MonomialOrder>(
    gens: &[Polynomial],
    order: &O,
    opts: BuchbergerOptions,
) -> Result<MarkedBasis, AlgebraError> {
    let nvars = match gens.first() {
        Some(g) => g.nvars(),
        None => return Err(AlgebraError::EmptyIdeal),
    };
    if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
        return Err(AlgebraError::DimensionMismatch {
            expected: nvars,
            found: g.nvars(),
        });
    }
    let mut state = State {
        nvars,
        order,
        opts,
        basis: Vec::new(),
        bodies: Vec::new(),
        pending: Vec::new(),
        pending_set: HashSet::new(),
    };
    let mut inputs: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    if inputs.is_empty() {
        return Err(AlgebraError::EmptyIdeal);
    }
    // Small generators first keeps early reductions cheap.
    inputs.sort_by_key(|g| (g.total_degree(), g.len()));
    for g in inputs {
        if state.add_reduced(g)? {
            return Ok(unit_basis(nvars));
        }
    }
    while let Some((i, j)) = state.next_pair() {
        if state.skip_pair(i, j) {
            continue;
        }
        let s = state.s_poly(i, j);
        if state.add_reduced(&s)? {
            return Ok(unit_basis(nvars));
        }
    }
    state.finish()
}

fn unit_basis(nvars: usize) -> MarkedBasis {
    let one = Polynomial::constant(nvars, Rational::one());
    MarkedBasis::from_elements_unchecked(
        nvars,
        vec![
            MarkedPolynomial::new(one, ExponentVector::zero(nvars)).expect("constant term present")
        ],
    )
}

struct State<'a, O: MonomialOrder> {
    nvars: usize,
    order: &'a O,
    opts: BuchbergerOptions,
    basis: Vec<Divisor>,
    bodies: Vec<Polynomial>,
    pending: Vec<(usize, usize, ExponentVector)>,
    pending_set: HashSet<(usize, usize)>,
}

impl<O: MonomialOrder> State<'_, O> {
    /// Reduces `f` and adds a non-zero remainder. Returns true if the
    /// remainder is a non-zero constant.
    fn add_reduced(&mut self, f: &Polynomial) -> Result<bool, AlgebraError> {
        let r = reduce(f, &self.basis, self.order, true, self.opts.guard)?;
        if r.is_zero() {
            return Ok(false);
        }
        let lead_idx = self.order.leading_index(&r).expect("non-zero");
        let lead = r.terms()[lead_idx].exp.clone();
        if lead.is_constant() {
            return Ok(true);
        }
        let body = r.normalized_at(&lead);
        let k = self.basis.len();
        for i in 0..k {
            let l = self.basis[i].lead.lcm(&lead);
            self.pending.push((i, k, l));
            self.pending_set.insert((i, k));
        }
        self.basis.push(Divisor::new(lead, &body, self.order));
        self.bodies.push(body);
        Ok(false)
    }

    /// Normal strategy: smallest lcm in the canonical order.
    fn next_pair(&mut self) -> Option<(usize, usize)> {
        let (pos, _) = self
            .pending
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.2.cmp(&b.2).then((a.0, a.1).cmp(&(b.0, b.1))))?;
        let (i, j, _) = self.pending.swap_remove(pos);
        self.pending_set.remove(&(i, j));
        Some((i, j))
    }

    fn skip_pair(&self, i: usize, j: usize) -> bool {
        let (a, b) = (&self.basis[i].lead, &self.basis[j].lead);
        if a.is_coprime(b) {
            return true;
        }
        if self.opts.chain_criterion {
            let l = a.lcm(b);
            let key = |x: usize, y: usize| (x.min(y), x.max(y));
            for k in 0..self.basis.len() {
                if k == i || k == j || !self.basis[k].lead.divides(&l) {
                    continue;
                }
                if !self.pending_set.contains(&key(i, k)) && !self.pending_set.contains(&key(j, k))
                {
                    return true;
                }
            }
        }
        false
    }

    fn s_poly(&self, i: usize, j: usize) -> Polynomial {
        let (a, b) = (&self.basis[i].lead, &self.basis[j].lead);
        let l = a.lcm(b);
        let one = Rational::one();
        self.bodies[i]
            .mul_term(&one, &l.div(a))
            .sub(&self.bodies[j].mul_term(&one, &l.div(b)))
    }

    fn finish(self) -> Result<MarkedBasis, AlgebraError> {
        let n = self.basis.len();
        let mut minimal: Vec<usize> = Vec::new();
        for i in 0..n {
            let li = &self.basis[i].lead;
            let dominated = (0..n).any(|j| {
                j != i && {
                    let lj = &self.basis[j].lead;
                    lj.divides(li) && (lj != li || j < i)
                }
            });
            if !dominated {
                minimal.push(i);
            }
        }
        let mut out = Vec::with_capacity(minimal.len());
        for &i in &minimal {
            let others: Vec<Divisor> = minimal
                .iter()
                .filter(|&&j| j != i)
                .map(|&j| Divisor::new(self.basis[j].lead.clone(), &self.bodies[j], self.order))
                .collect();
            let lead = self.basis[i].lead.clone();
            let tail = self.bodies[i].filter_terms(|t| t.exp != lead);
            let tail = reduce(&tail, &others, self.order, true, self.opts.guard)?;
            let body = tail.add(&Polynomial::monomial(
                self.nvars,
                Rational::one(),
                lead.clone(),
            ));
            out.push(MarkedPolynomial::new(body, lead)?);
        }
        Ok(MarkedBasis::from_elements_unchecked(self.nvars, out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::marked::{is_coherent, normal_form, s_polynomial};
    use crate::algebra::polynomial::Term;
    use proptest::prelude::*;

    fn e(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    fn poly(n: usize, terms: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_terms(
            n,
            terms
                .iter()
                .map(|(c, x)| Term::new(Rational::from_integer(*c), e(x))),
        )
    }

    fn mp(n: usize, terms: &[(i64, &[u32])], m: &[u32]) -> MarkedPolynomial {
        MarkedPolynomial::new(poly(n, terms), e(m)).unwrap()
    }

    #[test]
    fn lex_basis_of_two_generator_ideal() {
        let gens = [
            poly(3, &[(1, &[1, 0, 0]), (1, &[0, 1, 0]), (1, &[0, 0, 1])]),
            poly(3, &[(1, &[3, 0, 1]), (1, &[1, 0, 0]), (1, &[0, 2, 0])]),
        ];
        let lex = TermOrderMatrix::lex(&[2, 1, 0], 3).unwrap();
        let g = buchberger(&gens, &lex).unwrap();
        let expect = MarkedBasis::new(
            3,
            vec![
                mp(
                    3,
                    &[
                        (1, &[0, 2, 0]),
                        (1, &[1, 0, 0]),
                        (-1, &[3, 1, 0]),
                        (-1, &[4, 0, 0]),
                    ],
                    &[0, 2, 0],
                ),
                mp(
                    3,
                    &[(1, &[0, 0, 1]), (1, &[0, 1, 0]), (1, &[1, 0, 0])],
                    &[0, 0, 1],
                ),
            ],
        )
        .unwrap();
        assert_eq!(g, expect);
    }

    #[test]
    fn linear_ideal_has_one_basis() {
        let gens = [
            poly(2, &[(1, &[1, 0]), (-1, &[0, 0])]),
            poly(2, &[(1, &[0, 1]), (-1, &[0, 0])]),
        ];
        for m in [
            TermOrderMatrix::default_for(2),
            TermOrderMatrix::lex(&[1, 0], 2).unwrap(),
        ] {
            let g = buchberger(&gens, &m).unwrap();
            let expect = MarkedBasis::new(
                2,
                vec![
                    mp(2, &[(1, &[1, 0]), (-1, &[0, 0])], &[1, 0]),
                    mp(2, &[(1, &[0, 1]), (-1, &[0, 0])], &[0, 1]),
                ],
            )
            .unwrap();
            assert_eq!(g, expect);
        }
    }

    #[test]
    fn reduced_input_is_a_fixed_point() {
        let lex = TermOrderMatrix::lex(&[2, 1, 0], 3).unwrap();
        let gens = [
            poly(
                3,
                &[
                    (1, &[0, 2, 0]),
                    (1, &[1, 0, 0]),
                    (-1, &[3, 1, 0]),
                    (-1, &[4, 0, 0]),
                ],
            ),
            poly(3, &[(1, &[0, 0, 1]), (1, &[0, 1, 0]), (1, &[1, 0, 0])]),
        ];
        let g = buchberger(&gens, &lex).unwrap();
        assert_eq!(buchberger(&g.bodies(), &lex).unwrap(), g);
    }

    #[test]
    fn unit_ideal() {
        let gens = [
            poly(2, &[(1, &[1, 0])]),
            poly(2, &[(1, &[1, 0]), (1, &[0, 0])]),
        ];
        let g = buchberger(&gens, &TermOrderMatrix::default_for(2)).unwrap();
        assert!(g.is_unit());
    }

    #[test]
    fn all_zero_generators_rejected() {
        let gens = [Polynomial::zero(2)];
        assert_eq!(
            buchberger(&gens, &TermOrderMatrix::default_for(2)),
            Err(AlgebraError::EmptyIdeal)
        );
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(
            (
                (-3i64..=3).prop_filter("nonzero", |c| *c != 0),
                proptest::collection::vec(0u32..=2, 3),
            ),
            1..4,
        )
        .prop_map(|ts| {
            Polynomial::from_terms(
                3,
                ts.into_iter()
                    .map(|(c, x)| Term::new(Rational::from_integer(c), ExponentVector::new(x))),
            )
        })
        .prop_filter("nonzero", |p| !p.is_zero())
    }

    fn arb_order() -> impl Strategy<Value = TermOrderMatrix> {
        prop_oneof![
            Just(TermOrderMatrix::default_for(3)),
            Just(TermOrderMatrix::lex(&[0, 1, 2], 3).unwrap()),
            (1i64..8, 1i64..8, 1i64..8).prop_map(|(a, b, c)| {
                TermOrderMatrix::weighted(&[a, b, c], &TermOrderMatrix::default_for(3)).unwrap()
            }),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn output_is_a_coherent_reduced_groebner_basis(
            f in arb_poly(), g in arb_poly(), m in arb_order(), c in 1i64..5
        ) {
            let gb = buchberger(&[f.clone(), g.clone()], &m).unwrap();
            prop_assert!(gb.is_reduced());
            prop_assert!(is_coherent(gb.elements(), 3));
            for a in gb.elements() {
                for b in gb.elements() {
                    prop_assert!(normal_form(&s_polynomial(a, b), &gb).unwrap().is_zero());
                }
            }
            // generators lie in the ideal
            prop_assert!(normal_form(&f, &gb).unwrap().is_zero());
            prop_assert!(normal_form(&g, &gb).unwrap().is_zero());
            // invariant under permuting and rescaling generators
            let scaled = g.scale(&Rational::new(-c, 3));
            let again = buchberger(&[scaled, f.clone()], &m).unwrap();
            prop_assert_eq!(&again, &gb);
            // without the chain criterion the answer is the same
            let plain = buchberger_with(&[f, g], &m, BuchbergerOptions { chain_criterion: false, ..Default::default() }).unwrap();
            prop_assert_eq!(plain, gb);
        }

        #[test]
        fn normal_form_ignores_ideal_multiples(
            f in arb_poly(), g in arb_poly(), h in arb_poly(), k in 0usize..2
        ) {
            let gb = buchberger(&[f, g], &TermOrderMatrix::default_for(3)).unwrap();
            if gb.is_unit() { return Ok(()); }
            let el = &gb.elements()[k % gb.len()];
            let member = h.mul(el.body());
            let base = h.clone();
            prop_assert_eq!(
                normal_form(&base.add(&member), &gb).unwrap(),
                normal_form(&base, &gb).unwrap()
            );
        }
    }
}
