use std::collections::{HashSet, VecDeque};

use crate::algebra::buchberger::buchberger;
use crate::algebra::marked::{normal_form, MarkedBasis};
use crate::algebra::order::TermOrderMatrix;
use crate::algebra::polynomial::Polynomial;

use super::enumerate::Vertex;
use super::summary::{homogeneity, FanSummary};
use super::{Counters, FanError};

/// Largest group expanded element by element.
pub const MAX_GROUP_ORDER: usize = 1_000_000;

/// A group of variable permutations; `p[i]` is the image of variable `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationGroup {
    pub n: usize,
    pub generators: Vec<Vec<usize>>,
    pub elements: Vec<Vec<usize>>,
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&i| p[i]).collect()
}

fn check_permutation(p: &[usize], n: usize) -> Result<(), FanError> {
    let mut seen = vec![false; n];
    if p.len() != n {
        return Err(FanError::InvalidPermutation(format!(
            "expected {n} images, found {}",
            p.len()
        )));
    }
    for &i in p {
        if i >= n || seen[i] {
            return Err(FanError::InvalidPermutation(format!(
                "{p:?} is not a bijection"
            )));
        }
        seen[i] = true;
    }
    Ok(())
}

impl PermutationGroup {
    /// Closes `generators` under composition.
    pub fn new(n: usize, generators: Vec<Vec<usize>>) -> Result<Self, FanError> {
        for g in &generators {
            check_permutation(g, n)?;
        }
        let id: Vec<usize> = (0..n).collect();
        let mut seen: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
        let mut elements = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            for g in &generators {
                let q = compose(g, &p);
                if seen.insert(q.clone()) {
                    if seen.len() > MAX_GROUP_ORDER {
                        return Err(FanError::GroupTooLarge(MAX_GROUP_ORDER));
                    }
                    elements.push(q.clone());
                    queue.push_back(q);
                }
            }
        }
        Ok(PermutationGroup {
            n,
            generators,
            elements,
        })
    }

    pub fn trivial(n: usize) -> Self {
        PermutationGroup {
            n,
            generators: Vec::new(),
            elements: vec![(0..n).collect()],
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Smallest image of `g` under the group and the size of its orbit.
    pub fn orbit_representative(&self, g: &MarkedBasis) -> (MarkedBasis, u64) {
        let images: HashSet<MarkedBasis> = self
            .elements
            .iter()
            .map(|p| apply_permutation(p, g))
            .collect();
        let size = images.len() as u64;
        let rep = images.into_iter().min().expect("identity image");
        (rep, size)
    }
}

pub fn apply_permutation(pi: &[usize], g: &MarkedBasis) -> MarkedBasis {
    g.permuted(pi)
}

/// Whether every generator maps every ideal generator into the ideal. A
/// permutation of finite order that maps the ideal into itself fixes it.
pub fn validate_symmetry(perms: &[Vec<usize>], gens: &[Polynomial]) -> Result<bool, FanError> {
    let Some(n) = gens.first().map(Polynomial::nvars) else {
        return Ok(true);
    };
    for p in perms {
        check_permutation(p, n)?;
    }
    let gb = buchberger(gens, &TermOrderMatrix::default_for(n))?;
    for p in perms {
        for f in gens {
            if !normal_form(&f.permuted(p), &gb)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Breadth-first traversal of the orbits of maximal cones under `group`.
pub fn symmetric_bfs(
    gens: &[Polynomial],
    group: &PermutationGroup,
    order: &TermOrderMatrix,
) -> Result<FanSummary, FanError> {
    for (i, p) in group.generators.iter().enumerate() {
        if !validate_symmetry(std::slice::from_ref(p), gens)? {
            return Err(FanError::SymmetryViolated(i));
        }
    }
    let start_counters = Counters::snapshot();
    let start = buchberger(gens, order)?;
    let (rep, size) = group.orbit_representative(&start);
    let mut reps = vec![rep.clone()];
    let mut sizes = vec![size];
    let mut seen: HashSet<MarkedBasis> = HashSet::from([rep.clone()]);
    if !start.is_unit() {
        let mut queue = VecDeque::from([rep]);
        while let Some(g) = queue.pop_front() {
            let v = Vertex::new(g)?;
            for alpha in v.flippable_facets(|_| true) {
                let (r, s) = group.orbit_representative(&v.flip(&alpha)?);
                if seen.insert(r.clone()) {
                    reps.push(r.clone());
                    sizes.push(s);
                    queue.push_back(r);
                }
            }
        }
    }
    let h = homogeneity(&reps[0]);
    Ok(FanSummary {
        nvars: start.nvars(),
        maximal_cones: reps,
        orbit_sizes: Some(sizes),
        h,
        f_vector: None,
        universal_basis: None,
        counters: Counters::since(start_counters),
    })
}
