//! Recursive-descent parser for the polynomial grammar
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor (('*' factor) | ('/' INT))*
//! factor := '-' factor | power
//! power  := atom ['^' INT]
//! atom   := INT | 'x' INT | '(' expr ')'
//! ```
//!
//! Whitespace is ignored. Juxtaposition (`2x1`, `x1x2`) is a syntax error.
//! Division is only allowed by a nonzero integer literal, which is enough
//! to write every rational coefficient the printer produces.

use num_bigint::BigInt;

use super::field::Field;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].parse().expect("digits"))));
                continue;
            }
            b'x' => {
                i += 1;
                let digits = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if digits == i {
                    return Err(Error::Parse { pos: start, msg: "expected variable index after 'x'".into() });
                }
                let index: usize = text[digits..i]
                    .parse()
                    .map_err(|_| Error::Parse { pos: digits, msg: "variable index too large".into() })?;
                out.push((start, Tok::Var(index)));
                continue;
            }
            _ => {
                return Err(Error::Parse { pos: start, msg: format!("unexpected character {:?}", c as char) });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    field: &'a F,
    nvars: usize,
}

impl<F: Field> Parser<'_, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.offset(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<Polynomial<F>> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                self.term()?.negate()
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.checked_add(&self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.checked_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.checked_mul(&self.factor()?)?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.offset();
                    let Some(Tok::Int(v)) = self.peek().cloned() else {
                        return self.err("expected integer literal after '/'");
                    };
                    self.pos += 1;
                    let d = self.field.from_bigint(&v);
                    let inv = self
                        .field
                        .inv(&d)
                        .ok_or(Error::Parse { pos: at, msg: "division by zero in this field".into() })?;
                    acc = acc.scalar_mul(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial<F>> {
        if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            return Ok(self.factor()?.negate());
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial<F>> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let Some(Tok::Int(e)) = self.peek().cloned() else {
                return self.err("expected integer exponent after '^'");
            };
            let e: u32 = match u32::try_from(e) {
                Ok(e) if e <= super::MAX_EXPONENT => e,
                _ => return self.err("exponent too large"),
            };
            self.pos += 1;
            return base.pow(e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial<F>> {
        let Some(tok) = self.peek().cloned() else {
            return self.err("unexpected end of input");
        };
        let at = self.offset();
        self.pos += 1;
        match tok {
            Tok::Int(v) => Ok(Polynomial::constant(self.field.clone(), self.nvars, self.field.from_bigint(&v))),
            Tok::Var(index) => {
                if index == 0 || index > self.nvars {
                    return Err(Error::Parse {
                        pos: at,
                        msg: format!("variable x{index} out of range for {} variables", self.nvars),
                    });
                }
                Polynomial::var(self.field.clone(), self.nvars, index)
            }
            Tok::LParen => {
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected ')'"),
                }
            }
            other => {
                self.pos -= 1;
                self.err(format!("unexpected token {other:?}"))
            }
        }
    }
}

/// Parses `text` as a polynomial in `x_1 … x_nvars` and returns its
/// canonical form.
pub fn parse_polynomial<F: Field>(field: F, text: &str, nvars: usize) -> Result<Polynomial<F>> {
    if nvars > super::MAX_VARS {
        return Err(Error::TooManyVariables(nvars));
    }
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len(), field: &field, nvars };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(out)
}
