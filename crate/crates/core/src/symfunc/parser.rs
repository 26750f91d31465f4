//! Text syntax for elements of `B_r`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'e' k | 'h' k | '(' expr ')'
//! ```
//!
//! `e_k` and `h_k` may also be written with an underscore. `h`-symbols are
//! rewritten to `e`-polynomials as they are read.

use num_bigint::BigInt;

use super::HSequence;
use crate::error::{Error, Result};
use crate::exactpoly::RingElement;

pub fn parse_element(src: &str, h: &HSequence) -> Result<RingElement> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        h,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(Error::parse(p.pos, "unexpected trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    h: &'a HSequence,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RingElement> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc + self.term()?;
            } else if self.eat(b'-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RingElement> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            acc = acc * self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RingElement> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<RingElement> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let start = self.pos;
            let k = self.digits()?;
            let k: u32 = k
                .parse()
                .map_err(|_| Error::parse(start, "exponent too large"))?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn digits(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected an integer"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<RingElement> {
        let r = self.h.rank();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(Error::parse(self.pos, "expected ')'"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits()?;
                let v: BigInt = d.parse().expect("digits");
                Ok(RingElement::constant(r, v))
            }
            Some(sym @ (b'e' | b'h')) => {
                let start = self.pos;
                self.pos += 1;
                if self.src.get(self.pos) == Some(&b'_') {
                    self.pos += 1;
                }
                if !self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    return Err(Error::parse(self.pos, "expected an index after symbol"));
                }
                let k: i64 = self
                    .digits()?
                    .parse()
                    .map_err(|_| Error::parse(start, "index too large"))?;
                if sym == b'e' {
                    if k as usize > r {
                        return Err(Error::parse(
                            start,
                            format!("e{k} is not a generator of B_{r}"),
                        ));
                    }
                    Ok(self.h.e(k))
                } else {
                    Ok(self.h.h(k))
                }
            }
            Some(c) => Err(Error::parse(self.pos, format!("unexpected character {:?}", c as char))),
            None => Err(Error::parse(self.pos, "unexpected end of input")),
        }
    }
}
