//! The textual group-spec grammar. This is the single parsing point; the
//! constructors only ever see validated parameters.
//!
//! Grammar (whitespace-insensitive):
//!   cyclic:n | elemab:p:k | dihedral:N | dicyclic:n | quaternion:N
//!   | semidihedral:N | extraspecial:p:n:+|- | pauli:n
//!   | metacyclic6:m:p:k | metacyclic7:m:p:a:k | sl25 | a5
//!   | dp(A,B) | power(A,t) | central(A,B)

use ccs_core::constructors::{GroupSpec, Sign};
use std::fmt;

/// Parse failure with the byte offset where it happened.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            offset: self.pos,
            message: message.into(),
        })
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

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric())
        {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a family name");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .to_ascii_lowercase())
    }

    fn int(&mut self) -> Result<u64, ParseError> {
        self.expect(b':')?;
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected an integer");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .or_else(|_| self.err("integer out of range"))
    }

    fn sign(&mut self) -> Result<Sign, ParseError> {
        self.expect(b':')?;
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                Ok(Sign::Plus)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(Sign::Minus)
            }
            _ => self.err("expected '+' or '-'"),
        }
    }

    fn spec(&mut self) -> Result<GroupSpec, ParseError> {
        let name_pos = self.pos;
        let name = self.ident()?;
        let spec = match name.as_str() {
            "cyclic" => GroupSpec::Cyclic(self.int()?),
            "elemab" => GroupSpec::ElemAb {
                p: self.int()?,
                k: self.small_int()?,
            },
            "dihedral" => GroupSpec::Dihedral { order: self.int()? },
            "dicyclic" => GroupSpec::Dicyclic { n: self.int()? },
            "quaternion" => GroupSpec::Quaternion { order: self.int()? },
            "semidihedral" => GroupSpec::Semidihedral { order: self.int()? },
            "extraspecial" => GroupSpec::Extraspecial {
                p: self.int()?,
                n: self.small_int()?,
                sign: self.sign()?,
            },
            "pauli" => GroupSpec::Pauli {
                n: self.small_int()?,
            },
            "metacyclic6" => GroupSpec::Metacyclic6 {
                m: self.int()?,
                p: self.int()?,
                k: self.int()?,
            },
            "metacyclic7" => GroupSpec::Metacyclic7 {
                m: self.int()?,
                p: self.int()?,
                alpha: self.small_int()?,
                k: self.int()?,
            },
            "sl25" => GroupSpec::Sl25,
            "a5" => GroupSpec::A5,
            "dp" => {
                self.expect(b'(')?;
                let a = self.spec()?;
                self.expect(b',')?;
                let b = self.spec()?;
                self.expect(b')')?;
                GroupSpec::DirectProduct(Box::new(a), Box::new(b))
            }
            "power" => {
                self.expect(b'(')?;
                let a = self.spec()?;
                self.expect(b',')?;
                self.skip_ws();
                let t = self.bare_small_int()?;
                self.expect(b')')?;
                GroupSpec::DirectPower(Box::new(a), t)
            }
            "central" => {
                self.expect(b'(')?;
                let a = self.spec()?;
                self.expect(b',')?;
                let b = self.spec()?;
                self.expect(b')')?;
                GroupSpec::Central(Box::new(a), Box::new(b))
            }
            other => {
                self.pos = name_pos;
                return self.err(format!("unknown family '{other}'"));
            }
        };
        Ok(spec)
    }

    fn small_int(&mut self) -> Result<u32, ParseError> {
        let v = self.int()?;
        u32::try_from(v).or_else(|_| self.err("parameter too large"))
    }

    fn bare_small_int(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected an integer");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .or_else(|_| self.err("integer out of range"))
    }
}

pub fn parse_spec(raw: &str) -> Result<GroupSpec, ParseError> {
    let mut p = Parser::new(raw);
    let spec = p.spec()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return p.err("trailing input");
    }
    Ok(spec)
}

/// Canonical textual form; `parse_spec(render_spec(s)) == s`.
pub fn render_spec(spec: &GroupSpec) -> String {
    spec.render()
}
