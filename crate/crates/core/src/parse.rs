//! Text form of polynomials.
//!
//! ```text
//! poly   := sign? term (('+'|'-') term)*
//! term   := power ('*'? power)*
//! power  := atom ('^' UINT)?
//! atom   := UINT ('/' UINT)? | VAR | '(' poly ')'
//! ```

use std::fmt;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::field::rational_is_negative;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { message: message.into(), position: self.pos }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.bytes[start..self.pos]).unwrap())
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.bytes.len() && (self.bytes[self.pos].is_ascii_alphabetic() || self.bytes[self.pos] == b'_') {
            self.pos += 1;
            while self.pos < self.bytes.len()
                && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
            {
                self.pos += 1;
            }
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.bytes[start..self.pos]).unwrap())
    }
}

/// Parses a polynomial over `ring`; every variable must be declared in the ring.
pub fn parse_poly(ring: &Ring, text: &str) -> Result<Polynomial> {
    let mut p = Parser { ring, cur: Cursor { bytes: text.as_bytes(), pos: 0 } };
    if p.cur.peek().is_none() {
        return Err(p.cur.error("empty polynomial"));
    }
    let out = p.expr()?;
    match p.cur.peek() {
        None => Ok(out),
        Some(c) => Err(p.cur.error(format!("unexpected character '{}'", c as char))),
    }
}

struct Parser<'r, 'a> {
    ring: &'r Ring,
    cur: Cursor<'a>,
}

impl Parser<'_, '_> {
    fn expr(&mut self) -> Result<Polynomial> {
        let mut negative = false;
        match self.cur.peek() {
            Some(b'-') => {
                negative = true;
                self.cur.pos += 1;
            }
            Some(b'+') => self.cur.pos += 1,
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negative { first.neg() } else { first };
        loop {
            match self.cur.peek() {
                Some(b'+') => {
                    self.cur.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.cur.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    /// Factors joined by `*` or juxtaposition.
    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            match self.cur.peek() {
                Some(b'*') => {
                    self.cur.pos += 1;
                    if !matches!(self.cur.peek(), Some(c) if starts_atom(c)) {
                        return Err(self.cur.error("expected a factor after '*'"));
                    }
                    acc = &acc * &self.power()?;
                }
                Some(c) if starts_atom(c) => acc = &acc * &self.power()?,
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.cur.peek() != Some(b'^') {
            return Ok(base);
        }
        self.cur.pos += 1;
        let d = self.cur.digits().ok_or_else(|| self.cur.error("expected exponent"))?;
        let e: u16 = d.parse().map_err(|_| self.cur.error("exponent too large"))?;
        Ok(base.pow(e as u32))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let k = self.ring.field();
        match self.cur.peek() {
            Some(b'(') => {
                self.cur.pos += 1;
                let inner = self.expr()?;
                if self.cur.peek() != Some(b')') {
                    return Err(self.cur.error("expected ')'"));
                }
                self.cur.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let mut text = self.cur.digits().expect("digit").to_string();
                if self.cur.peek() == Some(b'/') {
                    self.cur.pos += 1;
                    let den = self.cur.digits().ok_or_else(|| self.cur.error("expected denominator"))?;
                    text = format!("{text}/{den}");
                }
                let c = k.parse_scalar(&text).map_err(|_| self.cur.error(format!("invalid coefficient {text}")))?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(_) => match self.cur.ident() {
                Some(name) => {
                    let i = self.ring.var_index(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
                    Ok(Polynomial::var(self.ring, i))
                }
                None => Err(self.cur.error("expected a term")),
            },
            None => Err(self.cur.error("expected a term")),
        }
    }
}

fn starts_atom(c: u8) -> bool {
    c == b'(' || c == b'_' || c.is_ascii_alphanumeric()
}

pub fn parse_polys(ring: &Ring, texts: &[&str]) -> Result<Vec<Polynomial>> {
    texts.iter().map(|t| parse_poly(ring, t)).collect()
}

/// Writes a monomial as `x0^2*x3`; the constant monomial is empty.
pub fn format_monomial(ring: &Ring, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.vars()[i].clone()),
            _ => parts.push(format!("{}^{}", ring.vars()[i], e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let k = self.field();
        for (idx, (m, c)) in self.terms_desc().enumerate() {
            let r = k.to_rational(c);
            let neg = rational_is_negative(&r);
            let abs = r.abs();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mono = format_monomial(self.ring(), m);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::ring::PolyRing;

    #[test]
    fn round_trip() {
        let r = PolyRing::with_vars(FieldSpec::rationals(), &["x0", "x1", "x2"]).unwrap();
        let p = parse_poly(&r, "x1^2 - x0*x2").unwrap();
        assert_eq!(p.to_string(), "x1^2 - x0*x2");
        let q = parse_poly(&r, "-3*x0^2*x1 + 1/2*x2 - 7").unwrap();
        assert_eq!(parse_poly(&r, &q.to_string()).unwrap(), q);
        assert_eq!(parse_poly(&r, "2x1 x2").unwrap(), parse_poly(&r, "2*x1*x2").unwrap());
        assert_eq!(parse_poly(&r, "x1 - x1").unwrap().to_string(), "0");
    }

    #[test]
    fn rejects_undeclared_variables() {
        let r = PolyRing::with_vars(FieldSpec::rationals(), &["x", "y"]).unwrap();
        assert_eq!(parse_poly(&r, "x*z"), Err(Error::UnknownVariable("z".into())));
        assert!(parse_poly(&r, "x +").is_err());
        assert!(parse_poly(&r, "").is_err());
    }
}
