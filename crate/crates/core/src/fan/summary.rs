use std::collections::{BTreeSet, HashSet};

use crate::algebra::marked::MarkedBasis;
use crate::algebra::polynomial::Polynomial;
use crate::lp::{faces_all, homogeneity_space, Cone};

use super::cones::cone_of;
use super::symmetry::{apply_permutation, PermutationGroup};
use super::{Counters, FanError};

/// Result of a fan traversal.
#[derive(Debug, Clone)]
pub struct FanSummary {
    pub nvars: usize,
    /// All maximal cones, or one representative per orbit.
    pub maximal_cones: Vec<MarkedBasis>,
    /// Orbit sizes matching `maximal_cones` when symmetry was used.
    pub orbit_sizes: Option<Vec<u64>>,
    pub h: usize,
    /// Face counts by dimension from `h` to `nvars`.
    pub f_vector: Option<Vec<u64>>,
    pub universal_basis: Option<Vec<Polynomial>>,
    pub counters: Counters,
}

impl FanSummary {
    pub fn from_bases(bases: Vec<MarkedBasis>, counters: Counters) -> Self {
        let nvars = bases.first().map_or(0, MarkedBasis::nvars);
        let h = bases.first().map_or(nvars, homogeneity);
        FanSummary {
            nvars,
            maximal_cones: bases,
            orbit_sizes: None,
            h,
            f_vector: None,
            universal_basis: None,
            counters,
        }
    }

    pub fn total_cones(&self) -> u64 {
        match &self.orbit_sizes {
            Some(s) => s.iter().sum(),
            None => self.maximal_cones.len() as u64,
        }
    }

    /// Every maximal cone, expanding orbits under `group` if needed.
    pub fn all_bases(&self, group: &PermutationGroup) -> Vec<MarkedBasis> {
        if self.orbit_sizes.is_none() {
            return self.maximal_cones.clone();
        }
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for g in &self.maximal_cones {
            for p in &group.elements {
                let u = apply_permutation(p, g);
                if seen.insert(u.clone()) {
                    out.push(u);
                }
            }
        }
        out
    }
}

/// Dimension of the homogeneity space of the ideal of `g`.
pub fn homogeneity(g: &MarkedBasis) -> usize {
    homogeneity_space(&g.differences(), g.nvars()).1
}

/// Numbers of cones of each dimension from `h` to `n` in the union of the
/// face lattices of the given maximal cones.
pub fn f_vector(maximal: &[MarkedBasis]) -> Result<Vec<u64>, FanError> {
    let Some(first) = maximal.first() else {
        return Ok(Vec::new());
    };
    let n = first.nvars();
    let h = homogeneity(first);
    let mut faces: HashSet<Cone> = HashSet::new();
    for g in maximal {
        let c = cone_of(g)?;
        for f in faces_all(&c) {
            faces.insert(f);
        }
    }
    let mut counts = vec![0u64; n - h + 1];
    for f in &faces {
        counts[f.dimension() - h] += 1;
    }
    Ok(counts)
}

/// Union of all basis polynomials, scaled monic at their canonical leading
/// term, sorted.
pub fn universal_basis(all: &[MarkedBasis]) -> Vec<Polynomial> {
    let set: BTreeSet<Polynomial> = all
        .iter()
        .flat_map(|g| g.elements().iter().map(|p| p.body().monic_canonical()))
        .collect();
    set.into_iter().collect()
}
