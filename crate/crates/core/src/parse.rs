//! Text literals for polynomials and rational maps.
//!
//! A polynomial is a bracketed, little-endian list of coefficients:
//! `[ -1, 0, 0, 0, 1 ]` is `z⁴ − 1`. Each coefficient is `RE`, `RE+IMi`,
//! `RE-IMi` or a bare imaginary `IMi` / `i`, where `RE` and `IM` are
//! integers or `p/q` fractions. Whitespace is ignored everywhere.
//!
//! A rational map is `{num: <poly>, den: <poly>}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{GaussRat, Poly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn expect(&mut self, ch: u8) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == ch => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => self.err(format!("expected '{}', found '{}'", ch as char, c as char)),
            None => self.err(format!("expected '{}', found end of input", ch as char)),
        }
    }

    fn eat(&mut self, ch: u8) -> bool {
        if self.peek() == Some(ch) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digit run parses"))
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    /// Unsigned magnitude `p` or `p/q`; `None` when the next token is not
    /// a digit (a bare `i` is handled by the caller).
    fn magnitude(&mut self) -> Result<Option<BigRational>, ParseError> {
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Ok(None);
        }
        let num = self.digits()?;
        if self.eat(b'/') {
            let at = self.pos;
            let den = self.digits()?;
            if den.is_zero() {
                return Err(ParseError {
                    offset: at,
                    message: "zero denominator".into(),
                });
            }
            return Ok(Some(BigRational::new(num, den)));
        }
        Ok(Some(BigRational::from_integer(num)))
    }

    /// One signed term; returns `(value, is_imaginary)`.
    fn term(&mut self, sign_required: bool) -> Result<(BigRational, bool), ParseError> {
        let mut negative = false;
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                negative = true;
            }
            Some(b'+') => {
                self.pos += 1;
            }
            _ if sign_required => return self.err("expected '+' or '-'"),
            _ => {}
        }
        let mag = self.magnitude()?;
        let imaginary = self.eat(b'i');
        let value = match (mag, imaginary) {
            (Some(v), _) => v,
            (None, true) => BigRational::one(),
            (None, false) => return self.err("expected a rational literal"),
        };
        Ok((if negative { -value } else { value }, imaginary))
    }

    fn coefficient(&mut self) -> Result<GaussRat, ParseError> {
        let (first, first_im) = self.term(false)?;
        if first_im {
            return Ok(GaussRat::new(BigRational::zero(), first));
        }
        if matches!(self.peek(), Some(b'+') | Some(b'-')) {
            let (second, second_im) = self.term(true)?;
            if !second_im {
                return self.err("second component of a coefficient must be imaginary");
            }
            return Ok(GaussRat::new(first, second));
        }
        Ok(GaussRat::from_rational(first))
    }

    fn poly(&mut self) -> Result<Poly, ParseError> {
        self.expect(b'[')?;
        let mut coeffs = Vec::new();
        if self.eat(b']') {
            return Ok(Poly::zero());
        }
        loop {
            coeffs.push(self.coefficient()?);
            if self.eat(b',') {
                continue;
            }
            self.expect(b']')?;
            break;
        }
        Ok(Poly::new(coeffs))
    }

    fn key(&mut self, name: &str) -> Result<(), ParseError> {
        self.skip_ws();
        let quoted = self.eat(b'"');
        self.skip_ws();
        let end = self.pos + name.len();
        if self.src.get(self.pos..end) != Some(name.as_bytes()) {
            return self.err(format!("expected key '{name}'"));
        }
        self.pos = end;
        if quoted {
            self.expect(b'"')?;
        }
        self.expect(b':')
    }
}

/// Parses a polynomial literal such as `[ 1/2-3/4i, 0, 1 ]`.
pub fn parse_poly_literal(text: &str) -> Result<Poly, ParseError> {
    let mut cur = Cursor::new(text);
    let p = cur.poly()?;
    if !cur.at_end() {
        return cur.err("trailing input after polynomial literal");
    }
    Ok(p)
}

/// Parses a single coefficient literal such as `3`, `-1/2+i`.
pub fn parse_scalar(text: &str) -> Result<GaussRat, ParseError> {
    let mut cur = Cursor::new(text);
    let c = cur.coefficient()?;
    if !cur.at_end() {
        return cur.err("trailing input after scalar literal");
    }
    Ok(c)
}

/// Parses `{num: [...], den: [...]}` into its raw numerator and denominator.
pub fn parse_ratio_literal(text: &str) -> Result<(Poly, Poly), ParseError> {
    let mut cur = Cursor::new(text);
    cur.expect(b'{')?;
    cur.key("num")?;
    let num = cur.poly()?;
    cur.expect(b',')?;
    cur.key("den")?;
    let den_at = cur.pos;
    let den = cur.poly()?;
    cur.expect(b'}')?;
    if !cur.at_end() {
        return cur.err("trailing input after rational map literal");
    }
    if den.is_zero() {
        return Err(ParseError {
            offset: den_at,
            message: "zero denominator polynomial".into(),
        });
    }
    Ok((num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn literal_examples() {
        assert_eq!(
            parse_poly_literal("[ -1, 0, 0, 0, 1 ]").unwrap(),
            Poly::from_ints(&[-1, 0, 0, 0, 1])
        );
        let p = parse_poly_literal("[ 1/2-3/4i, 0, 1 ]").unwrap();
        assert_eq!(p.coeff(0), GaussRat::new(rat(1, 2), rat(-3, 4)));
        assert_eq!(p.deg(), 2);
        let e = parse_poly_literal("[ 1/0 ]").unwrap_err();
        assert_eq!(e.offset, 4);
    }

    #[test]
    fn imaginary_forms() {
        assert_eq!(parse_scalar("i").unwrap(), GaussRat::i());
        assert_eq!(parse_scalar("-i").unwrap(), -GaussRat::i());
        assert_eq!(parse_scalar("2/3i").unwrap(), GaussRat::new(rat(0, 1), rat(2, 3)));
        assert_eq!(parse_scalar("1 - i").unwrap(), GaussRat::complex(1, -1));
        assert_eq!(parse_scalar("0+1i").unwrap(), GaussRat::i());
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        assert!(parse_poly_literal("[1, 2").is_err());
        assert!(parse_poly_literal("[1,,2]").is_err());
        assert!(parse_poly_literal("[1+2]").is_err());
        assert_eq!(parse_poly_literal("[1] x").unwrap_err().offset, 4);
        assert!(parse_scalar("1/").is_err());
        assert!(parse_scalar("").is_err());
    }

    #[test]
    fn ratio_literal() {
        let (n, d) = parse_ratio_literal("{num:[0,i],den:[1]}").unwrap();
        assert_eq!(n, Poly::new(vec![GaussRat::zero(), GaussRat::i()]));
        assert_eq!(d, Poly::one());
        assert!(parse_ratio_literal("{\"num\": [1], \"den\": [0, 1]}").is_ok());
        assert!(parse_ratio_literal("{num:[1],den:[]}").is_err());
    }
}
