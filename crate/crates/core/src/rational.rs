//! Exact rational scalars and small vector helpers over `Q`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Every coefficient in the crate. `BigRational` keeps itself reduced with a
/// positive denominator.
pub type Rational = BigRational;

/// A point or vector in `Q^n`.
pub type RationalVector = Vec<Rational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse rational {input:?}: {reason}")]
pub struct ParseRationalError {
    pub input: String,
    pub reason: &'static str,
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`. Decimal points and exponents are rejected.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let t = s.trim();
    let err = |reason| ParseRationalError {
        input: s.to_string(),
        reason,
    };
    if t.is_empty() {
        return Err(err("empty"));
    }
    let t = t.replace('\u{2212}', "-");
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t.as_str(), "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| err("bad numerator"))?;
    let den = BigInt::from_str(den).map_err(|_| err("bad denominator"))?;
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Renders as `"p/q"`, or `"p"` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses a comma-separated list such as `"1,0,3/5"`. The error carries the
/// zero-based position of the offending entry.
pub fn parse_vector(s: &str) -> Result<RationalVector, (usize, ParseRationalError)> {
    s.split(',')
        .enumerate()
        .map(|(i, part)| parse_rational(part).map_err(|e| (i, e)))
        .collect()
}

pub fn format_vector(v: &[Rational]) -> String {
    v.iter().map(format_rational).collect::<Vec<_>>().join(",")
}

pub fn zeros(n: usize) -> RationalVector {
    vec![Rational::zero(); n]
}

pub fn unit(n: usize, j: usize) -> RationalVector {
    let mut v = zeros(n);
    v[j] = Rational::one();
    v
}

pub fn dot(u: &[Rational], v: &[Rational]) -> Rational {
    debug_assert_eq!(u.len(), v.len());
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

pub fn norm_sq(v: &[Rational]) -> Rational {
    dot(v, v)
}

pub fn add(u: &[Rational], v: &[Rational]) -> RationalVector {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn sub(u: &[Rational], v: &[Rational]) -> RationalVector {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn scale(v: &[Rational], s: &Rational) -> RationalVector {
    v.iter().map(|a| a * s).collect()
}

pub fn neg(v: &[Rational]) -> RationalVector {
    v.iter().map(|a| -a).collect()
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Largest bit length among numerators and denominators; used to keep
/// randomized tests from drifting into huge coefficients.
pub fn height_bits(r: &Rational) -> u64 {
    r.numer().abs().bits().max(r.denom().bits())
}

/// Wrapper giving `Display` in the `p/q` format.
pub struct Show<'a>(pub &'a Rational);

impl fmt::Display for Show<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(self.0))
    }
}

pub fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}
