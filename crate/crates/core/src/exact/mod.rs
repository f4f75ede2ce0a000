//! Exact arithmetic over exponential Laurent polynomials.

pub mod laurent;
pub mod ratfunc;
pub mod rational;
pub mod series;
pub mod subst;

pub use laurent::{ExpMonomial, LaurentPoly, Symbol};
pub use ratfunc::{konst, one_minus, RatFunc};
pub use rational::{int, parse_rational, rat, Rational};
pub use series::{expand_in_u, USeries};
pub use subst::{substitute, Substitution};
