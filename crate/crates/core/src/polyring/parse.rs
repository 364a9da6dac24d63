//! Text form of polynomials.
//!
//! ```text
//! poly   := ["+"|"-"] term (("+"|"-") term)*
//! term   := coeff | [coeff "*"] factor ("*" factor)*
//! factor := var ["^" posint]
//! coeff  := integer | integer "/" posint
//! ```
//! Whitespace between tokens is ignored.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use super::monomial::{ExponentVector, EXPONENT_BOUND};
use super::poly::Polynomial;
use super::ring::PolyRing;
use crate::error::{Error, Result};
use crate::exactmath::{Field, Integer};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected an integer");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        if !self.src.get(self.pos).is_some_and(u8::is_ascii_alphabetic) {
            return self.error("expected a variable name");
        }
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }
}

/// Parses `text` into a canonical polynomial of `ring`.
pub fn parse_poly<F: Field>(text: &str, ring: &Arc<PolyRing<F>>) -> Result<Polynomial<F>> {
    let field = ring.field();
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut terms = Vec::new();
    let mut negative = match p.peek() {
        Some(b'-') => {
            p.pos += 1;
            true
        }
        Some(b'+') => {
            p.pos += 1;
            false
        }
        _ => false,
    };
    loop {
        let mut coeff = field.one();
        let mut exps = vec![0u32; ring.nvars()];
        let mut need_factor = true;

        if p.peek().is_some_and(|c| c.is_ascii_digit()) {
            let num: Integer = p.digits()?.parse().expect("digits");
            let den: Integer = if p.eat(b'/') {
                let d: Integer = p.digits()?.parse().expect("digits");
                if d.is_zero() {
                    return p.error("zero denominator");
                }
                d
            } else {
                Integer::from(1)
            };
            coeff = field.from_ratio(&num, &den)?;
            need_factor = p.eat(b'*');
        }
        if need_factor {
            loop {
                let name = p.ident()?;
                let Some(index) = ring.vars().index_of(name) else {
                    return Err(Error::UnknownVariable(name.to_string()));
                };
                let e: u64 = if p.eat(b'^') {
                    let digits = p.digits()?;
                    match digits.parse::<u64>() {
                        Ok(e) if e >= 1 && e < u64::from(EXPONENT_BOUND) => e,
                        _ => return p.error(format!("exponent `{digits}` out of range")),
                    }
                } else {
                    1
                };
                let sum = u64::from(exps[index]) + e;
                if sum >= u64::from(EXPONENT_BOUND) {
                    return Err(Error::ExponentOverflow);
                }
                exps[index] = sum as u32;
                if !p.eat(b'*') {
                    break;
                }
            }
        }
        if negative {
            coeff = field.neg(&coeff);
        }
        terms.push((coeff, ExponentVector::new(exps)?));

        match p.peek() {
            None => break,
            Some(b'+') => negative = false,
            Some(b'-') => negative = true,
            Some(c) => return p.error(format!("unexpected character `{}`", c as char)),
        }
        p.pos += 1;
    }
    Polynomial::from_terms(ring, terms)
}

/// Canonical text: descending terms, explicit `*` and `^`.
pub fn format_poly<F: Field>(f: &Polynomial<F>) -> String {
    f.to_string()
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return out.write_str("0");
        }
        let field = self.field();
        let vars = self.ring().vars();
        for (k, t) in self.terms().iter().enumerate() {
            let negative = field.is_negative(&t.coeff);
            let magnitude = if negative {
                field.neg(&t.coeff)
            } else {
                t.coeff.clone()
            };
            match (k, negative) {
                (0, true) => out.write_str("-")?,
                (0, false) => {}
                (_, true) => out.write_str(" - ")?,
                (_, false) => out.write_str(" + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in t.monomial.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(vars.name(i).to_string()),
                    _ => factors.push(format!("{}^{}", vars.name(i), e)),
                }
            }
            if factors.is_empty() {
                out.write_str(&field.format_elem(&magnitude))?;
            } else {
                if !field.is_one(&magnitude) {
                    write!(out, "{}*", field.format_elem(&magnitude))?;
                }
                out.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}
