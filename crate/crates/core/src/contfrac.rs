//! Positive continued fractions `[a1, ..., an]`, their partial sums and
//! continuants.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CfError {
    #[error("empty continued fraction")]
    Empty,
    #[error("not an integer: {0:?}")]
    NotAnInteger(String),
    #[error("entry {position} is {value}, entries must be positive")]
    NonPositive { position: usize, value: i128 },
    #[error("index {index} out of range 0..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("snake graphs need a1 >= 2, got a1 = {0}")]
    LeadingEntryTooSmall(u64),
}

/// A finite continued fraction whose entries are all positive integers.
///
/// The empty sequence is representable (it backs the single-edge base case
/// of the grafting recursion) but only [`ContinuedFraction::parse_allow_empty`]
/// and [`ContinuedFraction::empty`] produce it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    entries: Vec<u64>,
    // partial_sums[i] = a1 + ... + ai, partial_sums[0] = 0
    partial_sums: Vec<u64>,
}

impl ContinuedFraction {
    pub fn new(entries: Vec<u64>) -> Result<Self, CfError> {
        if entries.is_empty() {
            return Err(CfError::Empty);
        }
        Self::with_empty(entries)
    }

    pub fn empty() -> Self {
        ContinuedFraction { entries: Vec::new(), partial_sums: vec![0] }
    }

    fn with_empty(entries: Vec<u64>) -> Result<Self, CfError> {
        if let Some(pos) = entries.iter().position(|&a| a == 0) {
            return Err(CfError::NonPositive { position: pos + 1, value: 0 });
        }
        let mut partial_sums = Vec::with_capacity(entries.len() + 1);
        partial_sums.push(0);
        let mut acc = 0u64;
        for &a in &entries {
            acc += a;
            partial_sums.push(acc);
        }
        Ok(ContinuedFraction { entries, partial_sums })
    }

    /// Parses a comma- and/or whitespace-separated list such as `"2,3,4"`
    /// or `"2 3 4"`. Surrounding brackets are accepted.
    pub fn parse(text: &str) -> Result<Self, CfError> {
        let cf = Self::parse_allow_empty(text)?;
        if cf.is_empty() {
            return Err(CfError::Empty);
        }
        Ok(cf)
    }

    pub fn parse_allow_empty(text: &str) -> Result<Self, CfError> {
        let inner = text.trim();
        let inner = inner
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .unwrap_or(inner);
        if inner.trim().is_empty() {
            return Ok(Self::empty());
        }
        let mut entries = Vec::new();
        for piece in inner.split(',') {
            let mut tokens = piece.split_whitespace().peekable();
            if tokens.peek().is_none() {
                return Err(CfError::NotAnInteger(piece.to_string()));
            }
            for token in tokens {
                let value: i128 = token
                    .parse()
                    .map_err(|_| CfError::NotAnInteger(token.to_string()))?;
                if value <= 0 {
                    return Err(CfError::NonPositive { position: entries.len() + 1, value });
                }
                let value =
                    u64::try_from(value).map_err(|_| CfError::NotAnInteger(token.to_string()))?;
                entries.push(value);
            }
        }
        Self::with_empty(entries)
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The 1-based entry `a_i`.
    pub fn entry(&self, i: usize) -> Result<u64, CfError> {
        if i == 0 || i > self.len() {
            return Err(CfError::IndexOutOfRange { index: i, len: self.len() });
        }
        Ok(self.entries[i - 1])
    }

    /// Partial sum `l_i = a1 + ... + ai`, with `l_0 = 0`.
    pub fn ell(&self, i: usize) -> Result<u64, CfError> {
        self.partial_sums
            .get(i)
            .copied()
            .ok_or(CfError::IndexOutOfRange { index: i, len: self.len() })
    }

    /// `l_n`, the sum of all entries.
    pub fn total(&self) -> u64 {
        *self.partial_sums.last().expect("partial sums start with 0")
    }

    /// Rejects inputs that do not describe a snake graph (empty, or `a1 < 2`).
    pub fn ensure_snake(&self) -> Result<(), CfError> {
        match self.entries.first() {
            None => Err(CfError::Empty),
            Some(&a) if a < 2 => Err(CfError::LeadingEntryTooSmall(a)),
            Some(_) => Ok(()),
        }
    }

    /// The first `k` entries.
    pub fn prefix(&self, k: usize) -> ContinuedFraction {
        let k = k.min(self.len());
        ContinuedFraction {
            entries: self.entries[..k].to_vec(),
            partial_sums: self.partial_sums[..=k].to_vec(),
        }
    }

    /// Drops `a1`.
    pub fn tail(&self) -> ContinuedFraction {
        Self::with_empty(self.entries.iter().skip(1).copied().collect())
            .expect("entries already validated")
    }

    /// The continuant `N[a1, ..., an]`, with `N[] = 1`.
    pub fn numerator(&self) -> BigUint {
        continuant(&self.entries)
    }

    /// Exact value in lowest terms.
    pub fn value(&self) -> Result<Rational, CfError> {
        let mut rev = self.entries.iter().rev();
        let last = rev.next().ok_or(CfError::Empty)?;
        let mut acc = BigRational::from_integer(BigInt::from(*last));
        for &a in rev {
            acc = BigRational::from_integer(BigInt::from(a)) + acc.recip();
        }
        Ok(Rational(acc))
    }
}

/// `N[x1..xn] = xn N[x1..x(n-1)] + N[x1..x(n-2)]`, `N[] = 1`, `N[x1] = x1`.
fn continuant(entries: &[u64]) -> BigUint {
    let mut prev = BigUint::zero();
    let mut cur = BigUint::one();
    for &a in entries {
        let next = &cur * a + &prev;
        prev = cur;
        cur = next;
    }
    cur
}

impl FromStr for ContinuedFraction {
    type Err = CfError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, a) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

/// An exact rational in lowest terms with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numerator: BigInt, denominator: BigInt) -> Self {
        Rational(BigRational::new(numerator, denominator))
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator(), self.denominator())
    }
}
