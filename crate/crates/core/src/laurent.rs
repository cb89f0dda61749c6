//! Sparse Laurent polynomials in `y1, y2, ...` with big-integer coefficients.
//!
//! Terms are kept in canonical order: total degree ascending, then within a
//! degree the monomial with the larger exponent on the lowest-indexed
//! differing variable first. This puts `1` first and full products last, and
//! lists `y1` before `y3`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A variable index. `y0` is not a variable: index 0 stands for the
/// constant 1.
pub type Var = u32;

/// `prod y_v^e` stored as sorted `(v, e)` pairs with `v >= 1`, `e != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, i64)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// `y_v`; `var(0)` is the empty monomial.
    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: i64) -> Self {
        if v == 0 || e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    pub fn from_exponents<I: IntoIterator<Item = (Var, i64)>>(pairs: I) -> Self {
        let mut map = BTreeMap::new();
        for (v, e) in pairs {
            if v != 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        Monomial(map.into_iter().filter(|&(_, e)| e != 0).collect())
    }

    /// `prod_{j=lo}^{hi} y_j`, or its reciprocal. Empty when `lo > hi`.
    pub fn range_product(lo: Var, hi: Var, inverted: bool) -> Self {
        let e = if inverted { -1 } else { 1 };
        Monomial((lo.max(1)..=hi).map(|v| (v, e)).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: Var) -> i64 {
        self.0
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|k| self.0[k].1)
            .unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (Var, i64)> + '_ {
        self.0.iter().copied()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.0.iter().any(|&(_, e)| e < 0)
    }

    pub fn inverse(&self) -> Self {
        Monomial(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    /// Exponent-wise sum of two monomials.
    pub fn product(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    fn write_with(&self, f: &mut impl fmt::Write, latex: bool) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.0.iter().enumerate() {
            if !latex && k > 0 {
                f.write_char('*')?;
            }
            match (latex, e) {
                (false, 1) => write!(f, "y{v}")?,
                (false, _) => write!(f, "y{v}^{e}")?,
                (true, 1) => write!(f, "y_{{{v}}}")?,
                (true, _) => write!(f, "y_{{{v}}}^{{{e}}}")?,
            }
        }
        Ok(())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (a, b) = (&self.0, &other.0);
            let (mut i, mut j) = (0, 0);
            loop {
                let (va, ea) = a.get(i).copied().unwrap_or((Var::MAX, 0));
                let (vb, eb) = b.get(j).copied().unwrap_or((Var::MAX, 0));
                if i == a.len() && j == b.len() {
                    return Ordering::Equal;
                }
                let (ea, eb) = match va.cmp(&vb) {
                    Ordering::Less => {
                        i += 1;
                        (ea, 0)
                    }
                    Ordering::Greater => {
                        j += 1;
                        (0, eb)
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (ea, eb)
                    }
                };
                // larger exponent on the earlier variable sorts first
                match eb.cmp(&ea) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, false)
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        self.product(rhs)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected {found:?} at offset {offset}")]
    Unexpected { offset: usize, found: String },
    #[error("bad JSON polynomial: {0}")]
    Json(String),
}

/// A finite sum of monomials with nonzero integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(Monomial::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Self::term(1, m)
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPolynomial { terms }
    }

    pub fn var(v: Var) -> Self {
        Self::from_monomial(Monomial::var(v))
    }

    /// `prod_{j=lo}^{hi} y_j` (or its reciprocal monomial) as a polynomial.
    pub fn range_product(lo: Var, hi: Var, inverted: bool) -> Self {
        Self::from_monomial(Monomial::range_product(lo, hi, inverted))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::one())
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| !m.has_negative_exponent())
    }

    pub fn all_coefficients_one(&self) -> bool {
        self.terms.values().all(|c| c.is_one())
    }

    /// Value at `y1 = y2 = ... = 1`, i.e. the coefficient sum.
    pub fn eval_all_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// The last term in canonical order (highest degree).
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(k, c)| (k.product(m), c.clone())).collect(),
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                if !c.is_zero() {
                    slot.insert(c);
                }
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn to_canonical_string(&self, format: Format) -> String {
        match format {
            Format::Text => self.render(false),
            Format::Latex => self.render(true),
            Format::Json => self.to_json(),
        }
    }

    fn render(&self, latex: bool) -> String {
        use fmt::Write;
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let magnitude = c.abs();
            if m.is_one() {
                write!(out, "{magnitude}").unwrap();
                continue;
            }
            if !magnitude.is_one() {
                write!(out, "{magnitude}").unwrap();
                if !latex {
                    out.push('*');
                }
            }
            m.write_with(&mut out, latex).unwrap();
        }
        out
    }

    pub fn to_json(&self) -> String {
        let doc = JsonPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| JsonTerm { coeff: c.to_string(), exps: m.exponents().collect() })
                .collect(),
        };
        serde_json::to_string(&doc).expect("polynomial JSON is always serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, ParseError> {
        let doc: JsonPolynomial =
            serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
        let mut p = LaurentPolynomial::zero();
        for term in doc.terms {
            let c: BigInt = term
                .coeff
                .parse()
                .map_err(|_| ParseError::Json(format!("bad coefficient {:?}", term.coeff)))?;
            if term.exps.contains_key(&0) {
                return Err(ParseError::Json("variable index 0".into()));
            }
            p.add_term(Monomial::from_exponents(term.exps), c);
        }
        Ok(p)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonPolynomial {
    terms: Vec<JsonTerm>,
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    coeff: String,
    exps: BTreeMap<Var, i64>,
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl From<Monomial> for LaurentPolynomial {
    fn from(m: Monomial) -> Self {
        Self::from_monomial(m)
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Add for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(mut self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        if self.terms.len() < rhs.terms.len() {
            return rhs + self;
        }
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.product(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self * &rhs
    }
}

impl FromStr for LaurentPolynomial {
    type Err = ParseError;

    /// Parses the text format, e.g. `1 + y1 - 3*y2^-1*y4`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TextParser { src: s.as_bytes(), pos: 0 }.polynomial()
    }
}

struct TextParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl TextParser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self) -> ParseError {
        let found = match self.src.get(self.pos) {
            Some(&b) => (b as char).to_string(),
            None => "end of input".to_string(),
        };
        ParseError::Unexpected { offset: self.pos, found }
    }

    fn digits(&mut self) -> Result<&str, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error());
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn polynomial(mut self) -> Result<LaurentPolynomial, ParseError> {
        let mut p = LaurentPolynomial::zero();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            _ => 1,
        };
        loop {
            let (c, m) = self.term()?;
            p.add_term(m, c * sign);
            sign = match self.peek() {
                None => return Ok(p),
                Some(b'+') => 1,
                Some(b'-') => -1,
                Some(_) => return Err(self.error()),
            };
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(BigInt, Monomial), ParseError> {
        let mut c = BigInt::one();
        let mut m = Monomial::one();
        loop {
            match self.peek() {
                Some(b'y') => {
                    self.pos += 1;
                    let v: Var = self.digits()?.parse().map_err(|_| self.error())?;
                    let mut e = 1i64;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        let negative = self.peek() == Some(b'-');
                        if negative {
                            self.pos += 1;
                        }
                        e = self.digits()?.parse().map_err(|_| self.error())?;
                        if negative {
                            e = -e;
                        }
                    }
                    if v == 0 {
                        return Err(self.error());
                    }
                    m = m.product(&Monomial::var_pow(v, e));
                }
                Some(b) if b.is_ascii_digit() => {
                    let n: BigInt = self.digits()?.parse().unwrap();
                    c *= n;
                }
                _ => return Err(self.error()),
            }
            if self.peek() != Some(b'*') {
                return Ok((c, m));
            }
            self.pos += 1;
        }
    }
}
