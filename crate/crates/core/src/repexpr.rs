//! Text descriptions of representations.
//!
//! ```text
//! expr    := group ('x' group)*
//! group   := 'A' <n> ':' sum
//! sum     := product ('+' product)*
//! product := atom ('*' atom)*
//! atom    := 'std' | 'standard' | 'adj' | 'adjoint' | 'triv' | 'trivial'
//!          | 'dual' '(' sum ')' | '(' sum ')'
//! ```
//!
//! `A<n>` is `SL(n)`, the root system `A_{n-1}`. `x` joins groups, so
//! `"A2: std x A2: adj"` lives over `A_1 × A_1`. Whitespace is ignored.

use thiserror::Error;

use crate::repspace::{RepError, Representation};
use crate::rootsys::{RootSystem, RootSystemError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseError {
    #[error("at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Word(String),
    Int(usize),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() {
            // `A3` splits into `A` and `3`
            let mut j = i;
            while j < chars.len() && chars[j].1.is_ascii_alphabetic() {
                j += 1;
            }
            out.push((pos, Token::Word(chars[i..j].iter().map(|x| x.1).collect())));
            i = j;
        } else if c.is_ascii_digit() {
            let mut j = i;
            while j < chars.len() && chars[j].1.is_ascii_digit() {
                j += 1;
            }
            let text: String = chars[i..j].iter().map(|x| x.1).collect();
            let n = text.parse().map_err(|_| syntax(pos, "integer out of range"))?;
            out.push((pos, Token::Int(n)));
            i = j;
        } else if "():+*".contains(c) {
            out.push((pos, Token::Sym(c)));
            i += 1;
        } else {
            return Err(syntax(pos, &format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

fn syntax(position: usize, message: &str) -> ParseError {
    ParseError::Syntax { position, message: message.to_string() }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.at).map_or(self.end, |t| t.0)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.at).map(|t| t.1.clone());
        self.at += 1;
        t
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        let pos = self.pos();
        match self.next() {
            Some(Token::Sym(x)) if x == c => Ok(()),
            _ => Err(syntax(pos, &format!("expected '{c}'"))),
        }
    }

    fn expr(&mut self) -> Result<Representation, ParseError> {
        let mut rep = self.group()?;
        while self.peek() == Some(&Token::Word("x".into())) {
            self.next();
            rep = rep.external_tensor(&self.group()?);
        }
        if self.at < self.tokens.len() {
            return Err(syntax(self.pos(), "unexpected trailing input"));
        }
        Ok(rep)
    }

    fn group(&mut self) -> Result<Representation, ParseError> {
        let pos = self.pos();
        if self.next() != Some(Token::Word("A".into())) {
            return Err(syntax(pos, "expected a group 'A<n>'"));
        }
        let pos = self.pos();
        let n = match self.next() {
            Some(Token::Int(n)) => n,
            _ => return Err(syntax(pos, "expected the matrix size after 'A'")),
        };
        let rs = RootSystem::type_a(n)?;
        self.expect_sym(':')?;
        self.sum(&rs)
    }

    fn sum(&mut self, rs: &RootSystem) -> Result<Representation, ParseError> {
        let mut rep = self.product(rs)?;
        while self.peek() == Some(&Token::Sym('+')) {
            self.next();
            rep = rep.direct_sum(&self.product(rs)?)?;
        }
        Ok(rep)
    }

    fn product(&mut self, rs: &RootSystem) -> Result<Representation, ParseError> {
        let mut rep = self.atom(rs)?;
        while self.peek() == Some(&Token::Sym('*')) {
            self.next();
            rep = rep.tensor(&self.atom(rs)?)?;
        }
        Ok(rep)
    }

    fn atom(&mut self, rs: &RootSystem) -> Result<Representation, ParseError> {
        let pos = self.pos();
        match self.next() {
            Some(Token::Sym('(')) => {
                let rep = self.sum(rs)?;
                self.expect_sym(')')?;
                Ok(rep)
            }
            Some(Token::Word(w)) => match w.as_str() {
                "std" | "standard" => Ok(Representation::standard(rs)?),
                "adj" | "adjoint" => Ok(Representation::adjoint(rs)),
                "triv" | "trivial" => Ok(Representation::trivial(rs)),
                "dual" => {
                    self.expect_sym('(')?;
                    let rep = self.sum(rs)?;
                    self.expect_sym(')')?;
                    Ok(rep.dual())
                }
                _ => Err(syntax(pos, &format!("unknown constructor '{w}'"))),
            },
            _ => Err(syntax(pos, "expected a constructor")),
        }
    }
}

/// Parses and validates a representation description.
pub fn parse_rep_expr(s: &str) -> Result<Representation, ParseError> {
    let rep = parse_unvalidated(s)?;
    rep.validate()?;
    Ok(rep)
}

/// Parses without running the representation diagnostics.
pub fn parse_unvalidated(s: &str) -> Result<Representation, ParseError> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(syntax(0, "empty description"));
    }
    Parser { tokens, at: 0, end: s.len() }.expr()
}
