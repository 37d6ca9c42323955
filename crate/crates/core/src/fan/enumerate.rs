use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};

use crate::algebra::buchberger::buchberger;
use crate::algebra::marked::MarkedBasis;
use crate::algebra::monomial::IntegerVector;
use crate::algebra::order::TermOrderMatrix;
use crate::algebra::polynomial::Polynomial;
use crate::algebra::rational::Rational;

use super::cones::{facets_where, integer_weight, positive_interior, raw_inequalities};
use super::flip::flip_with_weight;
use super::search::search_edge_with;
use super::FanError;

/// A basis together with the data every traversal step needs.
pub(crate) struct Vertex {
    pub basis: MarkedBasis,
    pub raw: Vec<IntegerVector>,
    pub sigma: Vec<Rational>,
    pub weight: Vec<i64>,
}

impl Vertex {
    pub fn new(basis: MarkedBasis) -> Result<Self, FanError> {
        let raw = raw_inequalities(&basis);
        let sigma = positive_interior(&raw, basis.nvars())?;
        let weight = integer_weight(&sigma)?;
        Ok(Vertex {
            basis,
            raw,
            sigma,
            weight,
        })
    }

    pub fn flippable_facets(&self, keep: impl Fn(&IntegerVector) -> bool) -> Vec<IntegerVector> {
        facets_where(&self.basis, &self.raw, keep, true)
            .into_iter()
            .map(|f| f.alpha)
            .collect()
    }

    pub fn flip(&self, alpha: &IntegerVector) -> Result<MarkedBasis, FanError> {
        flip_with_weight(&self.basis, alpha, &self.weight)
    }
}

struct Frame {
    vertex: Vertex,
    candidates: Vec<IntegerVector>,
    next: usize,
}

fn frame(vertex: Vertex, target: &TermOrderMatrix) -> Frame {
    let candidates = vertex.flippable_facets(|a| target.lex_sign(a.entries()) == Ordering::Greater);
    Frame {
        vertex,
        candidates,
        next: 0,
    }
}

/// Calls `emit` once for every marked reduced Gröbner basis of the ideal,
/// walking the search tree rooted at the basis for `target` without storing
/// visited vertices.
pub fn reverse_search(
    gens: &[Polynomial],
    target: &TermOrderMatrix,
    mut emit: impl FnMut(&MarkedBasis),
) -> Result<(), FanError> {
    let sink = buchberger(gens, target)?;
    emit(&sink);
    if sink.is_unit() {
        return Ok(());
    }
    let mut stack = vec![frame(Vertex::new(sink)?, target)];
    while let Some(top) = stack.last_mut() {
        if top.next == top.candidates.len() {
            stack.pop();
            continue;
        }
        let alpha = top.candidates[top.next].clone();
        top.next += 1;
        let u = Vertex::new(top.vertex.flip(&alpha)?)?;
        if search_edge_with(&u.raw, &u.sigma, target) == Some(-&alpha) {
            emit(&u.basis);
            stack.push(frame(u, target));
        }
    }
    Ok(())
}

pub fn reverse_search_collect(
    gens: &[Polynomial],
    target: &TermOrderMatrix,
) -> Result<Vec<MarkedBasis>, FanError> {
    let mut out = Vec::new();
    reverse_search(gens, target, |g| out.push(g.clone()))?;
    Ok(out)
}

/// Breadth-first traversal across flippable facets with a visited set.
pub fn bfs_enumerate(start: &MarkedBasis) -> Result<Vec<MarkedBasis>, FanError> {
    let mut seen: HashSet<MarkedBasis> = HashSet::new();
    let mut out = vec![start.clone()];
    seen.insert(start.clone());
    if start.is_unit() {
        return Ok(out);
    }
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(g) = queue.pop_front() {
        let v = Vertex::new(g)?;
        for alpha in v.flippable_facets(|_| true) {
            let u = v.flip(&alpha)?;
            if seen.insert(u.clone()) {
                out.push(u.clone());
                queue.push_back(u);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::monomial::ExponentVector;
    use crate::algebra::polynomial::Term;

    fn poly(n: usize, terms: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_terms(
            n,
            terms.iter().map(|(c, x)| {
                Term::new(Rational::from_integer(*c), ExponentVector::new(x.to_vec()))
            }),
        )
    }

    fn small() -> Vec<Polynomial> {
        vec![
            poly(3, &[(1, &[1, 0, 0]), (1, &[0, 1, 0]), (1, &[0, 0, 1])]),
            poly(3, &[(1, &[3, 0, 1]), (1, &[1, 0, 0]), (1, &[0, 2, 0])]),
        ]
    }

    #[test]
    fn example_has_seven_cones() {
        let target = TermOrderMatrix::default_for(3);
        let all = reverse_search_collect(&small(), &target).unwrap();
        assert_eq!(all.len(), 7);
        let set: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), 7);
        let bfs: HashSet<_> = bfs_enumerate(&all[0]).unwrap().into_iter().collect();
        assert_eq!(bfs, set);
    }

    #[test]
    fn linear_ideal_has_one_cone() {
        let gens = vec![
            poly(2, &[(1, &[1, 0]), (-1, &[0, 0])]),
            poly(2, &[(1, &[0, 1]), (-1, &[0, 0])]),
        ];
        assert_eq!(
            reverse_search_collect(&gens, &TermOrderMatrix::default_for(2))
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn parabola_has_two_cones() {
        let gens = vec![poly(2, &[(1, &[2, 0]), (-1, &[0, 1])])];
        assert_eq!(
            reverse_search_collect(&gens, &TermOrderMatrix::default_for(2))
                .unwrap()
                .len(),
            2
        );
    }

    #[test]
    fn unit_ideal_short_circuits() {
        let gens = vec![
            poly(2, &[(1, &[1, 0])]),
            poly(2, &[(1, &[1, 0]), (1, &[0, 0])]),
        ];
        let all = reverse_search_collect(&gens, &TermOrderMatrix::default_for(2)).unwrap();
        assert_eq!(all.len(), 1);
        assert!(all[0].is_unit());
    }
}
