//! Parser for polynomial and rational-function literals in `T` (for θ) and `u`.
//!
//! Grammar: sums and differences of products and quotients of powers of
//! atoms; an atom is an integer, `T`, `u`, or a parenthesized expression.

use super::gf::GaloisField;
use super::poly::Poly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

pub fn parse_ratfunc(src: &str, k: &GaloisField) -> Result<RatFunc> {
    let mut p = Parser { s: src.as_bytes(), pos: 0, k };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

pub fn parse_poly(src: &str, k: &GaloisField) -> Result<Poly> {
    let f = parse_ratfunc(src, k)?;
    if f.is_poly() {
        Ok(f.num().clone())
    } else {
        Err(Error::Parse(format!("'{src}' is not a polynomial")))
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    k: &'a GaloisField,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in '{}'", self.pos, String::from_utf8_lossy(self.s)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg(self.k)
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?, self.k);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?, self.k);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?, self.k);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    acc = acc.div(&d, self.k).map_err(|_| self.err("division by zero"))?;
                }
                // implicit product such as `2T` or `(T+1)(T+2)`
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => {
                    acc = acc.mul(&self.power()?, self.k);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let n = self.integer()?;
            return Ok(base.pow(n, self.k));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| self.err("expected an integer"))
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b'T') | Some(b't') => {
                self.pos += 1;
                Ok(RatFunc::from_poly(Poly::theta()))
            }
            Some(b'u') => {
                self.pos += 1;
                let u = self.k.generator().ok_or_else(|| self.err("'u' is only available for non-prime q"))?;
                Ok(RatFunc::constant(u))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RatFunc::constant(self.k.from_int((n % self.k.p() as u64) as i64)))
            }
            _ => Err(self.err("expected a term")),
        }
    }
}
