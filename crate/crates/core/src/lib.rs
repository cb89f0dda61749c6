//! F-polynomials of snake graphs built from positive continued fractions.
//!
//! The snake graph `G[a1, ..., an]` has `N[a1, ..., an]` perfect matchings,
//! and its F-polynomial is the sum of their height monomials. This crate
//! computes that polynomial three ways:
//!
//! * [`fpoly::formula`]: a continued fraction of Laurent polynomials,
//! * [`fpoly::graft`]: the grafting recursion over prefixes,
//! * [`matchings::f_polynomial`]: brute-force enumeration,
//!
//! and [`check`] compares them.

pub mod check;
pub mod contfrac;
pub mod fpoly;
pub mod laurent;
pub mod matchings;
pub mod snakegraph;

pub use contfrac::{CfError, ContinuedFraction, Rational};
pub use laurent::{Format, LaurentPolynomial, Monomial};
pub use matchings::{MatchingPoset, DEFAULT_LIMIT};
pub use snakegraph::{Edge, PerfectMatching, Point, SnakeGraph, Step, Tile};
