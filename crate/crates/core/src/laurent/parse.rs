use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use super::LaurentPoly;
use crate::point::LatticePoint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at position {position}: {message}")]
pub struct ParseError {
    /// Character offset into the input.
    pub position: usize,
    pub message: String,
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

/// Parses the text form of a Laurent polynomial.
///
/// ```text
/// expr    := [+|-] term {(+|-) term}
/// term    := factor {* factor}
/// factor  := primary [^ [-] integer]
/// primary := integer [/ integer] | x | y | ( expr )
/// ```
///
/// Negative powers are allowed only for monomials.
pub fn parse_laurent(text: &str) -> Result<LaurentPoly, ParseError> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0 };
    let f = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected character"));
    }
    Ok(f)
}

impl Parser {
    fn error(&self, message: &str) -> ParseError {
        ParseError { position: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut negate = false;
        if self.eat('-') {
            negate = true;
        } else {
            self.eat('+');
        }
        let mut acc = LaurentPoly::zero();
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LaurentPoly, ParseError> {
        let base = self.primary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        let at = self.pos;
        let n = self.integer()?;
        let n: u32 = u32::try_from(n).map_err(|_| ParseError { position: at, message: "exponent too large".into() })?;
        if !negative {
            return Ok(base.pow(n));
        }
        // only single terms can be inverted
        let mut terms = base.terms();
        match (terms.next(), terms.next()) {
            (Some((e, c)), None) => {
                let inv = LaurentPoly::monomial(-*e, BigRational::one() / c);
                Ok(inv.pow(n))
            }
            _ => Err(ParseError { position: at, message: "negative power of a non-monomial".into() }),
        }
    }

    fn primary(&mut self) -> Result<LaurentPoly, ParseError> {
        match self.peek() {
            Some('x') => {
                self.pos += 1;
                Ok(LaurentPoly::monomial(LatticePoint::new(1, 0), BigRational::one()))
            }
            Some('y') => {
                self.pos += 1;
                Ok(LaurentPoly::monomial(LatticePoint::new(0, 1), BigRational::one()))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut value = BigRational::from_integer(num);
                if self.eat('/') {
                    let at = self.pos;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(ParseError { position: at, message: "zero denominator".into() });
                    }
                    value /= BigRational::from_integer(den);
                }
                Ok(LaurentPoly::monomial(LatticePoint::ORIGIN, value))
            }
            Some(_) => Err(self.error("expected a number, x, y or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        if self.chars.get(self.pos) == Some(&'.') {
            return Err(self.error("decimal numbers are not allowed"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| ParseError { position: start, message: "bad integer".into() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn basic_examples() {
        let f = parse_laurent("x + y + x^-1*y^-1").unwrap();
        assert_eq!(f.len(), 3);
        assert!(f.terms().all(|(_, c)| c.is_one()));
        let g = parse_laurent("2*x*y - 1/3").unwrap();
        assert_eq!(g.coefficient((1, 1).into()), BigRational::from_integer(2.into()));
        assert_eq!(g.constant_term(), BigRational::new((-1).into(), 3.into()));
        assert_eq!(g.len(), 2);
    }

    #[test]
    fn rejects_decimals_and_garbage() {
        let e = parse_laurent("x^1.5").unwrap_err();
        assert_eq!(e.position, 3);
        assert!(parse_laurent("x +").is_err());
        assert!(parse_laurent("z").is_err());
        assert!(parse_laurent("(x+1)^-1").is_err());
        assert!(parse_laurent("1/0").is_err());
        assert!(parse_laurent("2.5*x").is_err());
    }

    #[test]
    fn parentheses_and_powers() {
        let f = parse_laurent("y + (1+x)^2*y^-1").unwrap();
        assert_eq!(f.to_string(), "y^-1 + y + 2*x*y^-1 + x^2*y^-1");
        assert_eq!(parse_laurent("(2*x)^-2").unwrap().to_string(), "1/4*x^-2");
        assert_eq!(parse_laurent("-x - -1").unwrap_err().position, 5);
    }

    #[test]
    fn round_trip() {
        for s in ["x^-1*y^-1 - 1/3 - y + 2*x*y", "0", "-x", "12 + 3/7*x^2*y^-5"] {
            let f = parse_laurent(s).unwrap();
            assert_eq!(f.to_string(), s);
            assert_eq!(parse_laurent(&f.to_string()).unwrap(), f);
        }
    }
}
