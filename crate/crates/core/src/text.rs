//! Diagnostic text format for multivectors: `1 + 3/2 e1e2 - e1e4e5`.
//!
//! Terms are ordered by grade then mask. A unit coefficient on a blade is
//! omitted. The parser also accepts unsorted generator strings such as
//! `e2e1` (reordered with the product sign rule), `*` between coefficient
//! and blade, and the Unicode minus sign.

use std::fmt;

use num_traits::{One, Signed};

use crate::multivector::{AlgebraError, Multivector};
use crate::rational::{format_rational, parse_rational, Rational};

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (blade, coeff)) in terms.into_iter().enumerate() {
            let negative = coeff.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = coeff.abs();
            if blade.mask() == 0 {
                f.write_str(&format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{blade}")?;
            } else {
                write!(f, "{} {blade}", format_rational(&mag))?;
            }
        }
        Ok(())
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn err(&self, reason: impl Into<String>) -> AlgebraError {
        AlgebraError::Parse {
            pos: self.pos,
            reason: reason.into(),
        }
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.bump();
                Some(false)
            }
            Some('-') | Some('\u{2212}') => {
                self.bump();
                Some(true)
            }
            _ => None,
        }
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        &self.src[start..self.pos]
    }
}

/// Parses the diagnostic format for a multivector of dimension `dim`.
pub fn parse_multivector(dim: usize, src: &str) -> Result<Multivector, AlgebraError> {
    crate::multivector::check_dim(dim)?;
    let mut cur = Cursor { src, pos: 0 };
    let mut total = Multivector::zero(dim);
    cur.skip_ws();
    if cur.peek().is_none() {
        return Err(cur.err("empty input"));
    }
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.peek().is_none() {
            break;
        }
        let negative = match cur.sign() {
            Some(n) => n,
            None if first => false,
            None => return Err(cur.err("expected '+' or '-'")),
        };
        first = false;
        cur.skip_ws();

        let coeff_start = cur.pos;
        let mut coeff = Rational::one();
        let num = cur.digits();
        if !num.is_empty() {
            let mut text = num.to_string();
            if cur.peek() == Some('/') {
                cur.bump();
                let den = cur.digits();
                if den.is_empty() {
                    return Err(cur.err("missing denominator"));
                }
                text.push('/');
                text.push_str(den);
            }
            coeff = parse_rational(&text).map_err(|e| AlgebraError::Parse {
                pos: coeff_start,
                reason: e.reason.to_string(),
            })?;
            cur.skip_ws();
            if cur.peek() == Some('*') {
                cur.bump();
                cur.skip_ws();
            }
        }

        let mut generators = Vec::new();
        while cur.peek() == Some('e') {
            cur.bump();
            let at = cur.pos;
            let idx = cur.digits();
            let j: usize = idx
                .parse()
                .map_err(|_| AlgebraError::Parse {
                    pos: at,
                    reason: "expected generator index".into(),
                })?;
            if j == 0 || j > dim + 2 {
                return Err(AlgebraError::Parse {
                    pos: at,
                    reason: format!("generator e{j} out of range for d = {dim}"),
                });
            }
            generators.push(j);
        }
        if num.is_empty() && generators.is_empty() {
            return Err(cur.err("expected coefficient or blade"));
        }
        let mut term = Multivector::product_of(dim, &generators).scale(&coeff);
        if negative {
            term = -term;
        }
        total = &total + &term;
    }
    Ok(total)
}
