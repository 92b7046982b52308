//! Text grammar for polynomials.
//!
//! ```text
//! poly   := [sign] term (sign term)*
//! term   := factor ('*' factor)*
//! factor := integer ['/' integer] | ident ['^' integer]
//! ```
//!
//! Whitespace is ignored between tokens. Positions in errors are byte offsets.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, PolyError, Polynomial, Rational};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, PolyError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' | b'-' | b'*' | b'/' | b'^' => {
                let t = match c {
                    b'+' => Token::Plus,
                    b'-' => Token::Minus,
                    b'*' => Token::Star,
                    b'/' => Token::Slash,
                    _ => Token::Caret,
                };
                out.push((i, t));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = text[start..i].parse::<BigInt>().expect("digits");
                out.push((start, Token::Int(n)));
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(text[start..i].to_string())));
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(PolyError::Syntax {
                    position: i,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn syntax(&self, message: &str) -> PolyError {
        PolyError::Syntax {
            position: self.offset(),
            message: message.to_string(),
        }
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        match self.peek() {
            Some(Token::Int(n)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.syntax("expected an integer")),
        }
    }

    fn term(&mut self) -> Result<(Monomial, Rational), PolyError> {
        let mut coeff = Rational::one();
        let mut exps = vec![0u32; self.vars.len()];
        loop {
            match self.peek().cloned() {
                Some(Token::Int(_)) => {
                    let num = self.integer()?;
                    if self.peek() == Some(&Token::Slash) {
                        self.pos += 1;
                        let at = self.offset();
                        let den = self.integer()?;
                        if den.is_zero() {
                            return Err(PolyError::ZeroDenominator { position: at });
                        }
                        coeff *= Rational::new(num, den);
                    } else {
                        coeff *= Rational::from_integer(num);
                    }
                }
                Some(Token::Ident(name)) => {
                    let at = self.offset();
                    let i = self.vars.iter().position(|v| *v == name).ok_or(
                        PolyError::UnknownVariable {
                            name: name.clone(),
                            position: at,
                        },
                    )?;
                    self.pos += 1;
                    let mut e = 1u32;
                    if self.peek() == Some(&Token::Caret) {
                        self.pos += 1;
                        let n = self.integer()?;
                        e = u32::try_from(n).map_err(|_| self.syntax("exponent too large"))?;
                    }
                    exps[i] = exps[i]
                        .checked_add(e)
                        .ok_or_else(|| self.syntax("exponent too large"))?;
                }
                _ => return Err(self.syntax("expected a coefficient or variable")),
            }
            if self.peek() == Some(&Token::Star) {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial(exps), coeff))
    }
}

/// Parse `text` as a polynomial over the declared variables.
pub fn parse<S: AsRef<str>>(text: &str, vars: &[S]) -> Result<Polynomial, PolyError> {
    let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        end: text.len(),
        vars: &vars,
    };
    let mut out = Polynomial::zero(&vars);
    if p.peek().is_none() {
        return Err(p.syntax("empty expression"));
    }
    let mut first = true;
    loop {
        let negative = match p.peek() {
            Some(Token::Plus) => {
                p.pos += 1;
                false
            }
            Some(Token::Minus) => {
                p.pos += 1;
                true
            }
            None => break,
            _ if first => false,
            _ => return Err(p.syntax("expected `+` or `-`")),
        };
        first = false;
        let (m, c) = p.term()?;
        out.add_term(m, if negative { -c } else { c });
    }
    Ok(out)
}
