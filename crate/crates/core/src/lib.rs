//! Exact Gröbner fan computations over the rationals.

pub mod algebra;
pub mod fan;
pub mod io;
pub mod linalg;
pub mod lp;

pub use algebra::buchberger::{buchberger, buchberger_with, BuchbergerOptions};
pub use algebra::marked::{MarkedBasis, MarkedPolynomial};
pub use algebra::monomial::{ExponentVector, IntegerVector};
pub use algebra::order::{MonomialOrder, TermOrderMatrix};
pub use algebra::polynomial::{Polynomial, Term};
pub use algebra::rational::Rational;
pub use algebra::AlgebraError;
pub use fan::{Counters, FacetNormal, FanError, FanSummary, PermutationGroup, RunStats};
pub use lp::{Cone, Feasibility, LpError, LpResult, LpStatus};
