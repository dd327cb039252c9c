//! Polynomial expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | identifier | '(' expr ')'
//! ```
//!
//! Products need an explicit `*`; `/` only forms rational literals.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational};

/// Parse `src` as a polynomial in the given variables.
pub fn parse_polynomial(src: &str, variables: &[String]) -> Result<Polynomial> {
    let mut p = Parser { src, pos: 0, variables };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos < src.len() {
        return Err(p.error(format!("unexpected {:?}", p.rest_char())));
    }
    Ok(poly)
}

/// Render so that [`parse_polynomial`] reads it back.
pub fn format_polynomial(f: &Polynomial, variables: &[String]) -> String {
    f.display_with(variables).to_string()
}

/// Variable names must be identifiers and pairwise distinct.
pub fn check_variables(variables: &[String]) -> Result<()> {
    for (i, v) in variables.iter().enumerate() {
        let mut chars = v.chars();
        let ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(Error::Parse { pos: 0, msg: format!("invalid variable name {v:?}") });
        }
        if variables[..i].contains(v) {
            return Err(Error::Parse { pos: 0, msg: format!("duplicate variable {v:?}") });
        }
    }
    Ok(())
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    variables: &'a [String],
}

impl Parser<'_> {
    fn m(&self) -> usize {
        self.variables.len()
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn rest_char(&self) -> char {
        self.src[self.pos..].chars().next().unwrap_or('\0')
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = &acc * &self.unary()?;
        }
        if self.peek() == Some('/') {
            return Err(self.error("division is only allowed between integer literals"));
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        self.skip_ws();
        let start = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            self.pos = start;
            return Err(self.error("exponent must be a non-negative integer literal"));
        }
        let n: u32 = digits.parse().map_err(|_| Error::Parse { pos: start, msg: "exponent too large".into() })?;
        Ok(base.pow(n))
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        let len = self.src[start..].bytes().take_while(u8::is_ascii_digit).count();
        self.pos += len;
        &self.src[start..start + len]
    }

    fn integer(&mut self) -> Option<BigInt> {
        let d = self.digits();
        (!d.is_empty()).then(|| d.parse().expect("ascii digits"))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer().expect("starts with a digit");
                let mut value = Rational::from_integer(num);
                if self.eat('/') {
                    self.skip_ws();
                    let at = self.pos;
                    let Some(den) = self.integer() else {
                        return Err(self.error("division is only allowed between integer literals"));
                    };
                    if den.is_zero() {
                        return Err(Error::Parse { pos: at, msg: "zero denominator".into() });
                    }
                    value /= Rational::from_integer(den);
                }
                Ok(Polynomial::constant(self.m(), value))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                let len = self.src[start..]
                    .bytes()
                    .take_while(|b| b.is_ascii_alphanumeric() || *b == b'_')
                    .count();
                let name = &self.src[start..start + len];
                let Some(i) = self.variables.iter().position(|v| v == name) else {
                    return Err(self.error(format!("unknown identifier {name:?}")));
                };
                self.pos += len;
                Ok(Polynomial::var(self.m(), i))
            }
            Some(c) => Err(self.error(format!("unexpected {c:?}"))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
