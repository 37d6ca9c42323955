//! Polynomials over Q, term orders, marked reduction and Buchberger's algorithm.

pub mod buchberger;
pub mod marked;
pub mod monomial;
pub mod order;
pub mod polynomial;
pub mod rational;
pub(crate) mod reduce;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("not a term order: column {column} starts with {entry}")]
    NotATermOrder { column: usize, entry: i64 },
    #[error("term order matrix has rank {rank} < {n}")]
    RankDeficient { rank: usize, n: usize },
    #[error("reduction exceeded {0} steps; the marking is not induced by a term order")]
    NonTermination(u64),
    #[error("marking is not coherent with any positive weight vector")]
    IncoherentMarking,
    #[error("marked exponent does not occur in the polynomial")]
    MarkNotPresent,
    #[error("the generator list is empty or all zero")]
    EmptyIdeal,
    #[error("two distinct exponents tie under a rank-one order")]
    OrderTie,
}

/// Default bound on reduction steps per normal form computation.
pub const DEFAULT_REDUCTION_GUARD: u64 = 1 << 20;
