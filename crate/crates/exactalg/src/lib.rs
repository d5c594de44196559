//! Exact arithmetic substrate: arbitrary-precision rationals, sparse
//! multivariate polynomials and rational functions over fixed variable
//! contexts, fraction-free linear algebra, Sylvester resultants, and
//! rational root search. No floating point anywhere.

pub mod field;
pub mod linalg;
pub mod mpoly;
pub mod rat;
pub mod ratfunc;
pub mod resultant;
pub mod roots;
pub mod serialize;
pub mod sturm;

pub use field::{Field, QuadElem, QuadExtField, RatField, RatFuncField};
pub use linalg::{bareiss_det, kernel, rank, solve_linear, LinSolve, Matrix};
pub use mpoly::{MPoly, Mono, VarCtx};
pub use rat::Rat;
pub use ratfunc::RatFunc;
pub use resultant::resultant;
pub use roots::{factorize, rational_roots, RootSearch};
