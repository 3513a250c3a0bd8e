//! Exact arithmetic substrate: rationals, variable sets, Laurent
//! polynomials, polynomial-matrix determinants, truncated epsilon-series,
//! and univariate rational functions.

pub mod laurent;
pub mod matrix;
pub mod ratfunc;
pub mod rational;
pub mod series;
pub mod varset;

pub use laurent::{LaurentPoly, PolyJson, TermJson};
pub use matrix::{det_bareiss, det_cofactor, det_poly_matrix};
pub use ratfunc::RationalFunction;
pub use rational::{rat, rat_i, Rational};
pub use series::EpsSeries;
pub use varset::VarSet;
