//! Two symbolic routes to `F(G[a1, ..., an])`.
//!
//! * [`formula`]: build the Laurent entries `L_i = phi_i * C_i` and take the
//!   continuant `N[L_1, ..., L_n]`, dividing by the monomial `C_n` when `n`
//!   is even.
//! * [`graft`]: the two-term recursion obtained by grafting at the connecting
//!   tile `G_{l_{n-1}}`, started from the single-edge graph (`F = 1`) and the
//!   zigzag `G[a1]`.
//!
//! Neither route looks at matchings; [`crate::matchings::f_polynomial`] is the
//! independent check on both.

use thiserror::Error;

use crate::contfrac::{CfError, ContinuedFraction};
use crate::laurent::{LaurentPolynomial, Monomial, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FpolyError {
    #[error(transparent)]
    Cf(#[from] CfError),
    #[error("negative exponents survived in {0}: construction bug")]
    NegativeExponent(String),
    #[error("intermediate result reached {terms} terms, budget is {budget}")]
    TooLarge { terms: usize, budget: usize },
}

fn ell(cf: &ContinuedFraction, i: usize) -> Result<Var, CfError> {
    Ok(cf.ell(i)? as Var)
}

fn check_index(cf: &ContinuedFraction, i: usize) -> Result<(), CfError> {
    cf.ensure_snake()?;
    cf.entry(i).map(|_| ())
}

/// `C_i`: `y_1 ... y_{l_{i-1}}` for odd `i`, `(y_1 ... y_{l_i - 1})^-1` for
/// even `i`.
pub fn correction_monomial(cf: &ContinuedFraction, i: usize) -> Result<Monomial, FpolyError> {
    check_index(cf, i)?;
    Ok(if i % 2 == 1 {
        Monomial::range_product(1, ell(cf, i - 1)?, false)
    } else {
        Monomial::range_product(1, ell(cf, i)? - 1, true)
    })
}

/// `phi_i`, the F-polynomial of the zigzag `H_i`. For odd `i` it climbs the
/// tiles of `H_i` from the left, for even `i` from the right:
///
/// * odd: `1 + y_{l+1} + y_{l+1} y_{l+2} + ... + y_{l+1} ... y_{r}`
/// * even: `1 + y_r + y_{r-1} y_r + ... + y_{l+1} ... y_r`
///
/// where `l = l_{i-1}` and `r = l_i - 1`.
pub fn zigzag_polynomial(cf: &ContinuedFraction, i: usize) -> Result<LaurentPolynomial, FpolyError> {
    check_index(cf, i)?;
    let lo = ell(cf, i - 1)?;
    let hi = ell(cf, i)? - 1;
    let mut phi = LaurentPolynomial::one();
    for k in lo + 1..=hi {
        let term = if i % 2 == 1 {
            Monomial::range_product(lo + 1, k, false)
        } else {
            Monomial::range_product(hi + lo + 1 - k, hi, false)
        };
        phi = phi + LaurentPolynomial::from_monomial(term);
    }
    Ok(phi)
}

/// `L_i = phi_i * C_i`.
pub fn laurent_entry(cf: &ContinuedFraction, i: usize) -> Result<LaurentPolynomial, FpolyError> {
    Ok(zigzag_polynomial(cf, i)?.mul_monomial(&correction_monomial(cf, i)?))
}

/// `[L_1, ..., L_n]` together with the continued fraction it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentEntrySequence {
    pub cf: ContinuedFraction,
    pub entries: Vec<LaurentPolynomial>,
}

impl LaurentEntrySequence {
    pub fn new(cf: &ContinuedFraction) -> Result<Self, FpolyError> {
        cf.ensure_snake()?;
        let entries = (1..=cf.len()).map(|i| laurent_entry(cf, i)).collect::<Result<_, _>>()?;
        Ok(LaurentEntrySequence { cf: cf.clone(), entries })
    }
}

/// The continuant `N[p_1, ..., p_n]` over Laurent polynomials, `N[] = 1`.
pub fn continuant(entries: &[LaurentPolynomial]) -> LaurentPolynomial {
    continuant_bounded(entries, usize::MAX).expect("unbounded")
}

fn continuant_bounded(entries: &[LaurentPolynomial], budget: usize) -> Result<LaurentPolynomial, FpolyError> {
    let mut prev = LaurentPolynomial::zero();
    let mut cur = LaurentPolynomial::one();
    for p in entries {
        let next = &(p * &cur) + &prev;
        if next.term_count() > budget {
            return Err(FpolyError::TooLarge { terms: next.term_count(), budget });
        }
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

fn assert_polynomial(cf: &ContinuedFraction, f: LaurentPolynomial) -> Result<LaurentPolynomial, FpolyError> {
    if f.is_polynomial() {
        Ok(f)
    } else {
        Err(FpolyError::NegativeExponent(cf.to_string()))
    }
}

/// `F(G[cf])` from the continued fraction of Laurent entries.
pub fn formula(cf: &ContinuedFraction) -> Result<LaurentPolynomial, FpolyError> {
    formula_bounded(cf, usize::MAX)
}

/// [`formula`], giving up once an intermediate continuant exceeds `budget`
/// terms.
pub fn formula_bounded(cf: &ContinuedFraction, budget: usize) -> Result<LaurentPolynomial, FpolyError> {
    let seq = LaurentEntrySequence::new(cf)?;
    let mut f = continuant_bounded(&seq.entries, budget)?;
    let n = cf.len();
    if n % 2 == 0 {
        f = f.mul_monomial(&correction_monomial(cf, n)?.inverse());
    }
    assert_polynomial(cf, f)
}

/// `F(G[cf])` from the grafting recursion
/// `F_k = y34 * F_{k-1} * phi_k + y56 * F_{k-2}` with `F_0 = 1`, `F_1 = phi_1`.
pub fn graft(cf: &ContinuedFraction) -> Result<LaurentPolynomial, FpolyError> {
    cf.ensure_snake()?;
    let mut before = LaurentPolynomial::one();
    let mut last = zigzag_polynomial(cf, 1)?;
    for k in 2..=cf.len() {
        let phi = zigzag_polynomial(cf, k)?;
        let next = if k % 2 == 1 {
            let y34 = Monomial::var(ell(cf, k - 1)?);
            &(&last * &phi).mul_monomial(&y34) + &before
        } else {
            // index 0 contributes nothing when k = 2
            let y56 = Monomial::range_product(ell(cf, k - 2)?, ell(cf, k)? - 1, false);
            &(&last * &phi) + &before.mul_monomial(&y56)
        };
        before = last;
        last = next;
    }
    assert_polynomial(cf, last)
}
