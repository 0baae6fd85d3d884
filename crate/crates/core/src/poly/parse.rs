//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := coeff | var ('^' nat)? | '(' expr ')' ('^' nat)?
//! coeff  := integer | integer '/' nat
//! ```
//!
//! Whitespace is ignored. Multiplication must be written out.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use super::{Monomial, Polynomial};
use crate::Rational;

/// Errors carry the byte offset of the offending token.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("negative exponent at position {pos}")]
    NegativeExponent { pos: usize },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("zero denominator at position {pos}")]
    ZeroDenominator { pos: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].parse().expect("digits"))));
                continue;
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            other => {
                return Err(ParseError::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn syntax(&self, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            pos: self.offset(),
            msg: msg.into(),
        }
    }

    fn nvars(&self) -> usize {
        self.vars.len()
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let negate_first = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let first = self.term()?;
        let mut acc = if negate_first { first.neg() } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Int(num)) => {
                self.pos += 1;
                let mut value = Rational::from_integer(num);
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    let den_at = self.offset();
                    let Some(Tok::Int(den)) = self.peek().cloned() else {
                        return Err(self.syntax("expected a natural number after `/`"));
                    };
                    self.pos += 1;
                    if den.is_zero() {
                        return Err(ParseError::ZeroDenominator { pos: den_at });
                    }
                    value /= Rational::from_integer(den);
                }
                Ok(Polynomial::constant(self.nvars(), value))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let Some(i) = self.vars.iter().position(|v| *v == name) else {
                    return Err(ParseError::UnknownVariable { name, pos: at });
                };
                let e = self.exponent()?;
                let mut m = Monomial::one(self.nvars());
                *m.exponent_mut(i) = e;
                Ok(Polynomial::monomial(m, Rational::one()))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.syntax("expected `)`"));
                }
                self.pos += 1;
                let e = self.exponent()?;
                Ok(inner.pow(e))
            }
            Some(_) => Err(self.syntax("expected a coefficient, variable or `(`")),
            None => Err(self.syntax("unexpected end of input")),
        }
    }

    /// Optional `^ nat`; defaults to 1.
    fn exponent(&mut self) -> Result<u32, ParseError> {
        if self.peek() != Some(&Tok::Caret) {
            return Ok(1);
        }
        self.pos += 1;
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Int(k)) => {
                self.pos += 1;
                u32::try_from(k).map_err(|_| ParseError::Syntax {
                    pos: at,
                    msg: "exponent too large".into(),
                })
            }
            Some(Tok::Minus) => Err(ParseError::NegativeExponent { pos: at }),
            _ => Err(self.syntax("expected a natural exponent after `^`")),
        }
    }
}

/// Parses `text` as a polynomial in the given variables (in that order).
pub fn parse_polynomial(text: &str, vars: &[&str]) -> Result<Polynomial, ParseError> {
    let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    parse_owned(text, &vars)
}

fn parse_owned(text: &str, vars: &[String]) -> Result<Polynomial, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        vars,
    };
    let poly = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.syntax("unexpected trailing input"));
    }
    Ok(poly)
}

/// Parses with variables inferred from the text, sorted alphabetically.
///
/// Returns the polynomial together with the variable names used.
pub fn parse_with_inferred_vars(text: &str) -> Result<(Polynomial, Vec<String>), ParseError> {
    let mut names: Vec<String> = lex(text)?
        .into_iter()
        .filter_map(|(_, t)| match t {
            Tok::Ident(s) => Some(s),
            _ => None,
        })
        .collect();
    names.sort();
    names.dedup();
    let poly = parse_owned(text, &names)?;
    Ok((poly, names))
}
