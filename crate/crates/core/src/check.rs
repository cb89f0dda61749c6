//! Cross-validation of the three F-polynomial routes on one continued
//! fraction.

use num_bigint::BigInt;
use thiserror::Error;

use crate::contfrac::ContinuedFraction;
use crate::fpoly::{self, FpolyError};
use crate::laurent::{LaurentPolynomial, Monomial, Var};
use crate::matchings::{self, MatchingError};
use crate::snakegraph::{SnakeError, SnakeGraph};

pub type Method = fn(&ContinuedFraction) -> Result<LaurentPolynomial, FpolyError>;

/// The symbolic routes under test. Swappable so that deliberately broken
/// variants can be fed through the same checks.
#[derive(Clone, Copy)]
pub struct Methods {
    pub formula: Method,
    pub graft: Method,
    pub zigzag: fn(&ContinuedFraction, usize) -> Result<LaurentPolynomial, FpolyError>,
}

impl Default for Methods {
    fn default() -> Self {
        Methods { formula: fpoly::formula, graft: fpoly::graft, zigzag: fpoly::zigzag_polynomial }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub polynomial: LaurentPolynomial,
    pub terms: usize,
    pub numerator: BigInt,
}

#[derive(Debug, Error)]
pub enum CheckError {
    #[error(transparent)]
    Snake(#[from] SnakeError),
    #[error(transparent)]
    Matching(#[from] MatchingError),
    #[error(transparent)]
    Fpoly(#[from] FpolyError),
    #[error("cross-check failed for {cf}: {reason}")]
    Mismatch { cf: String, reason: String },
}

pub fn check(cf: &ContinuedFraction, limit: usize) -> Result<CheckReport, CheckError> {
    check_with(cf, limit, &Methods::default())
}

pub fn check_with(cf: &ContinuedFraction, limit: usize, methods: &Methods) -> Result<CheckReport, CheckError> {
    let g = SnakeGraph::build(cf)?;
    let fail = |reason: String| CheckError::Mismatch { cf: cf.to_string(), reason };

    let by_formula = (methods.formula)(cf)?;
    let by_graft = (methods.graft)(cf)?;
    let by_matchings = matchings::f_polynomial(&g, None, limit)?;
    if by_formula != by_graft {
        return Err(fail(format!("formula {by_formula} != graft {by_graft}")));
    }
    if by_formula != by_matchings {
        return Err(fail(format!("formula {by_formula} != matchings {by_matchings}")));
    }

    let numerator = BigInt::from(cf.numerator());
    let matching_count = matchings::enumerate(&g, limit)?.len();
    let f = by_formula;
    if BigInt::from(f.term_count()) != numerator
        || f.eval_all_ones() != numerator
        || BigInt::from(matching_count) != numerator
    {
        return Err(fail(format!(
            "N = {numerator}, {} terms, value at ones {}, {matching_count} matchings",
            f.term_count(),
            f.eval_all_ones()
        )));
    }
    if !f.all_coefficients_one() || !f.is_polynomial() {
        return Err(fail("coefficients are not all 1".into()));
    }
    if f.constant_term() != BigInt::from(1) {
        return Err(fail("constant term is not 1".into()));
    }
    let top = Monomial::range_product(1, g.tile_count() as Var, false);
    if f.leading_monomial() != Some(&top) {
        return Err(fail(format!("top term is not {top}")));
    }

    for i in 1..=cf.len() {
        let h = g.subgraph(cf, i)?;
        if h.tile_count() == 0 {
            continue;
        }
        let base = g.completed_minimal_matching(cf, i)?;
        let oracle = matchings::f_polynomial(&h, Some(&base), limit)?;
        let phi = (methods.zigzag)(cf, i)?;
        if oracle != phi {
            return Err(fail(format!("F(H_{i}) = {oracle} but phi_{i} = {phi}")));
        }
    }

    Ok(CheckReport { terms: f.term_count(), polynomial: f, numerator })
}
