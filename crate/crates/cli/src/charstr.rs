//! Parser for Laurent polynomials written like `2 + 3*t^2 + 3*t^-2`.
//!
//! The variable may be `t` or `lambda` (the circle character) or `mu`
//! (its square root, `t = mu^2`). Coefficients are integers or `a/b`.
//! Exponents may be written `t^-3`, `t^(-3)` or `t^{-3}`.

use ellgenus_core::{LaurentPoly, Scalar};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("cannot parse {input:?} at byte {pos}: {what}")]
pub struct CharParseError {
    pub input: String,
    pub pos: usize,
    pub what: &'static str,
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.as_bytes().get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, what: &'static str) -> CharParseError {
        CharParseError { input: self.src.to_string(), pos: self.pos, what }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.src.as_bytes().get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn integer(&mut self) -> Result<i64, CharParseError> {
        let neg = self.eat(b'-');
        if !neg {
            self.eat(b'+');
        }
        let d = self.digits().ok_or_else(|| self.err("expected an integer"))?;
        let v: i64 = d.parse().map_err(|_| self.err("integer out of range"))?;
        Ok(if neg { -v } else { v })
    }

    /// Variable name and how many powers of μ one unit of it is.
    fn variable(&mut self) -> Option<i64> {
        self.skip_ws();
        for (name, scale) in [("lambda", 2), ("mu", 1), ("t", 2)] {
            if self.src[self.pos..].starts_with(name) {
                self.pos += name.len();
                return Some(scale);
            }
        }
        None
    }

    fn exponent(&mut self) -> Result<i64, CharParseError> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        for (open, close) in [(b'(', b')'), (b'{', b'}')] {
            if self.eat(open) {
                let v = self.integer()?;
                if !self.eat(close) {
                    return Err(self.err("unbalanced bracket in exponent"));
                }
                return Ok(v);
            }
        }
        self.integer()
    }
}

/// Parses into the `μ` representation used by the core library.
pub fn parse_laurent(input: &str) -> Result<LaurentPoly, CharParseError> {
    let mut cur = Cursor { src: input, pos: 0 };
    let mut out = LaurentPoly::zero();
    if cur.peek().is_none() {
        return Err(cur.err("empty expression"));
    }
    let mut first = true;
    while cur.peek().is_some() {
        let negative = if cur.eat(b'-') {
            true
        } else if cur.eat(b'+') || first {
            false
        } else {
            return Err(cur.err("expected + or -"));
        };
        first = false;
        let mut coeff = Scalar::from_integer(1.into());
        let mut have_coeff = false;
        if let Some(num) = cur.digits() {
            let num: i64 = num.parse().map_err(|_| cur.err("integer out of range"))?;
            coeff = Scalar::from_integer(num.into());
            if cur.eat(b'/') {
                let den = cur.digits().ok_or_else(|| cur.err("expected a denominator"))?;
                let den: i64 = den.parse().map_err(|_| cur.err("integer out of range"))?;
                if den == 0 {
                    return Err(cur.err("zero denominator"));
                }
                coeff /= Scalar::from_integer(den.into());
            }
            have_coeff = true;
            cur.eat(b'*');
        }
        let exp = match cur.variable() {
            Some(scale) => scale * cur.exponent()?,
            None if have_coeff => 0,
            None => return Err(cur.err("expected a coefficient or variable")),
        };
        out.add_term(exp, if negative { -coeff } else { coeff });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_t_terms(terms.iter().map(|&(e, c)| (e, Scalar::from_integer(c.into()))))
    }

    #[test]
    fn parses_characters() {
        assert_eq!(parse_laurent("2 + 3*t^2 + 3*t^-2").unwrap(), t(&[(0, 2), (2, 3), (-2, 3)]));
        assert_eq!(parse_laurent("3t + 3t^(-1) + t^{3} + t^-3").unwrap(), t(&[(1, 3), (-1, 3), (3, 1), (-3, 1)]));
        assert_eq!(parse_laurent("lambda - lambda^-1").unwrap(), t(&[(1, 1), (-1, -1)]));
        assert_eq!(parse_laurent("mu").unwrap(), LaurentPoly::monomial(Scalar::from_integer(1.into()), 1));
        assert_eq!(parse_laurent("-1/2").unwrap(), LaurentPoly::constant(Scalar::new((-1).into(), 2.into())));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_laurent("").is_err());
        assert!(parse_laurent("2 3").is_err());
        assert!(parse_laurent("x^2").is_err());
        assert!(parse_laurent("t^(2").is_err());
        assert!(parse_laurent("1/0").is_err());
    }
}
