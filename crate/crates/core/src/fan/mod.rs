//! Gröbner fans: cones of marked bases, facets, flips and traversals.

mod cones;
mod enumerate;
mod flip;
mod search;
mod summary;
mod symmetry;

use std::cell::Cell;

use thiserror::Error;

use crate::algebra::monomial::IntegerVector;
use crate::algebra::AlgebraError;

pub use cones::{cone_of, facet_normals, raw_inequalities, restrict_initial_forms};
pub use enumerate::{bfs_enumerate, reverse_search, reverse_search_collect};
pub use flip::flip;
pub use search::search_edge;
pub use summary::{f_vector, homogeneity, universal_basis, FanSummary};
pub use symmetry::{
    apply_permutation, symmetric_bfs, validate_symmetry, PermutationGroup, MAX_GROUP_ORDER,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FanError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("marking is not induced by any positive weight")]
    IncoherentMarking,
    #[error("{0} is not a facet normal of the cone")]
    NotAFacet(IntegerVector),
    #[error("facet {0} has no strictly positive point in its relative interior")]
    NotFlippable(IntegerVector),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("permutation {0} does not fix the ideal")]
    SymmetryViolated(usize),
    #[error("symmetry group exceeds {0} elements")]
    GroupTooLarge(usize),
    #[error("weight entries overflow 64 bits")]
    WeightOverflow,
}

/// Inner normal of a facet of a Gröbner cone.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FacetNormal {
    pub alpha: IntegerVector,
    pub flippable: bool,
}

/// Invocation counts of the traversal building blocks.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counters {
    pub facets: u64,
    pub shoots: u64,
    pub flips: u64,
    pub lp_solves: u64,
}

thread_local! {
    static FACETS: Cell<u64> = const { Cell::new(0) };
    static SHOOTS: Cell<u64> = const { Cell::new(0) };
    static FLIPS: Cell<u64> = const { Cell::new(0) };
}

fn bump(c: &'static std::thread::LocalKey<Cell<u64>>) {
    c.with(|v| v.set(v.get() + 1));
}

impl Counters {
    /// Totals on the current thread since it started.
    pub fn snapshot() -> Self {
        Counters {
            facets: FACETS.with(Cell::get),
            shoots: SHOOTS.with(Cell::get),
            flips: FLIPS.with(Cell::get),
            lp_solves: crate::lp::solve_count(),
        }
    }

    /// Counts accumulated since `earlier`.
    pub fn since(earlier: Counters) -> Self {
        let now = Self::snapshot();
        Counters {
            facets: now.facets - earlier.facets,
            shoots: now.shoots - earlier.shoots,
            flips: now.flips - earlier.flips,
            lp_solves: now.lp_solves - earlier.lp_solves,
        }
    }
}

/// Counters and wall time of one run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunStats {
    pub counters: Counters,
    pub wall_time: std::time::Duration,
}

impl RunStats {
    /// Runs `f` and records what it did on the current thread.
    pub fn measure<T>(f: impl FnOnce() -> T) -> (T, RunStats) {
        let before = Counters::snapshot();
        let start = std::time::Instant::now();
        let out = f();
        let stats = RunStats {
            counters: Counters::since(before),
            wall_time: start.elapsed(),
        };
        (out, stats)
    }
}
