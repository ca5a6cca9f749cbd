//! Recursive-descent reader for scalar expressions.
//!
//! ```text
//! expr     := term (('+' | '-') term)* ;
//! term     := factor ('*' factor)* ;
//! factor   := rational | 'i' | 'sqrt2' | 'sqrt3' | 'sqrt6' | '(' expr ')' | '-' factor ;
//! rational := integer ('/' posinteger)? ;
//! ```
//!
//! Whitespace is insignificant. Division is only allowed between integer
//! literals, so `1/sqrt3` must be written `1/3*sqrt3`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset of the offending token in the input.
    pub offset: usize,
    pub expected: BTreeSet<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let expected: Vec<&str> = self.expected.iter().copied().collect();
        write!(
            f,
            "at byte {}: expected one of {{{}}}, found {}",
            self.offset,
            expected.join(", "),
            self.found
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    End,
    Bad(char),
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Ident(s) => format!("{s:?}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
            Tok::Bad(c) => format!("{c:?}"),
        }
    }
}

const FACTOR_START: [&str; 7] = ["integer", "'i'", "'sqrt2'", "'sqrt3'", "'sqrt6'", "'('", "'-'"];

fn lex(text: &str) -> Vec<(usize, Tok)> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos];
        let start = pos;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                pos += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                out.push((start, Tok::Int(text[start..pos].parse().expect("digits"))));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                while pos < bytes.len() && bytes[pos].is_ascii_alphanumeric() {
                    pos += 1;
                }
                out.push((start, Tok::Ident(text[start..pos].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().expect("non-empty");
                out.push((start, Tok::Bad(ch)));
                return out;
            }
        };
        pos += 1;
        out.push((start, tok));
    }
    out.push((text.len(), Tok::End));
    out
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        if !matches!(t.1, Tok::End | Tok::Bad(_)) {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        let (offset, tok) = &self.toks[self.pos];
        ParseError {
            offset: *offset,
            expected: expected.iter().copied().collect(),
            found: tok.describe(),
        }
    }

    fn expr(&mut self) -> PResult<Scalar> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> PResult<Scalar> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = acc * self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> PResult<Scalar> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                if *self.peek() == Tok::Slash {
                    self.bump();
                    match self.peek().clone() {
                        Tok::Int(d) if !d.is_zero() => {
                            self.bump();
                            Ok(Scalar::from_rational(Rational::new(n, d)))
                        }
                        _ => Err(self.error(&["positive integer"])),
                    }
                } else {
                    Ok(Scalar::from_rational(Rational::from_integer(n)))
                }
            }
            Tok::Ident(name) => {
                let value = match name.as_str() {
                    "i" => Scalar::i(),
                    "sqrt2" => Scalar::sqrt2(),
                    "sqrt3" => Scalar::sqrt3(),
                    "sqrt6" => Scalar::sqrt6(),
                    _ => return Err(self.error(&FACTOR_START)),
                };
                self.bump();
                Ok(value)
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error(&["'+'", "'-'", "'*'", "')'"]));
                }
                self.bump();
                Ok(inner)
            }
            Tok::Minus => {
                self.bump();
                Ok(-self.factor()?)
            }
            _ => Err(self.error(&FACTOR_START)),
        }
    }
}

/// Parses a scalar expression in the grammar above.
pub fn parse_scalar(text: &str) -> Result<Scalar, ParseError> {
    let mut p = Parser {
        toks: lex(text),
        pos: 0,
    };
    let value = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["'+'", "'-'", "'*'", "end of input"]));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Radical;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn grammar_examples() {
        let x = parse_scalar("1/2 + 1/2*sqrt3*i").unwrap();
        assert_eq!(*x.coord(Radical::One, false), q(1, 2));
        assert_eq!(*x.coord(Radical::Sqrt3, true), q(1, 2));
        assert_eq!(x.coords().iter().filter(|c| !c.is_zero()).count(), 2);

        let x = parse_scalar("-i").unwrap();
        assert_eq!(*x.coord(Radical::One, true), q(-1, 1));

        let x = parse_scalar("sqrt2*sqrt3").unwrap();
        assert_eq!(x, Scalar::sqrt6());
    }

    #[test]
    fn nesting_and_whitespace() {
        let x = parse_scalar(" ( 1 + i ) * ( 1 - i ) ").unwrap();
        assert_eq!(x, Scalar::from(2));
        assert_eq!(parse_scalar("--3").unwrap(), Scalar::from(3));
        assert_eq!(parse_scalar("2*-sqrt2").unwrap(), Scalar::from(-2) * Scalar::sqrt2());
    }

    #[test]
    fn radical_in_denominator_is_rejected() {
        let err = parse_scalar("1/sqrt3").unwrap_err();
        assert_eq!(err.offset, 2);
        assert!(err.expected.contains("positive integer"));
    }

    #[test]
    fn error_offsets() {
        let err = parse_scalar("1/0").unwrap_err();
        assert_eq!(err.offset, 2);

        let err = parse_scalar("2i").unwrap_err();
        assert_eq!(err.offset, 1);
        assert!(err.expected.contains("'*'"));

        let err = parse_scalar("sqrt5").unwrap_err();
        assert_eq!(err.offset, 0);
        assert!(err.expected.contains("'sqrt3'"));

        let err = parse_scalar("(1 + 2").unwrap_err();
        assert_eq!(err.offset, 6);
        assert!(err.expected.contains("')'"));

        let err = parse_scalar("").unwrap_err();
        assert_eq!(err.found, "end of input");

        let err = parse_scalar("1 + 2 $").unwrap_err();
        assert_eq!(err.offset, 6);
    }
}
