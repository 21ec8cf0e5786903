//! Bundle expression language.
//!
//! ```text
//! expr  := sum
//! sum   := prod { "++" prod }
//! prod  := unary { "*" unary }
//! unary := atom { "(" int ")" }
//! atom  := "bundle(" int "," int "," int ["," int] ")" | "o(" int ")"
//!        | "dual(" expr ")" | "cat(" int "," int ")" | "(" expr ")"
//! ```
//!
//! `e(n)` twists by `O_X(n)`, `*` is the tensor product and `++` the direct
//! sum. Both binary operators associate to the left.

use std::fmt;

use acmcalc::{catalog, BundleDescriptor, ChernCharacter, Hypersurface};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Bundle {
        rank: u32,
        c1: i64,
        c2: i64,
        c3: Option<i64>,
    },
    Line(i64),
    Catalog(i64, i64),
    Dual(Box<Expr>),
    Twist(Box<Expr>, i64),
    Tensor(Box<Expr>, Box<Expr>),
    Sum(Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("invalid literal at column {column}: {message}")]
    InvalidLiteral { column: usize, message: String },
    #[error("unknown catalog pair ({c1},{c2}) at column {column}")]
    UnknownCatalog { column: usize, c1: i64, c2: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    LParen,
    RParen,
    Comma,
    Star,
    PlusPlus,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Star => f.write_str("`*`"),
            Tok::PlusPlus => f.write_str("`++`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn syntax(column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        column,
        message: message.into(),
    }
}

/// Tokens paired with their 1-based starting column.
fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let col = i + 1;
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '(' => {
                out.push((Tok::LParen, col));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, col));
                i += 1;
            }
            ',' => {
                out.push((Tok::Comma, col));
                i += 1;
            }
            '*' => {
                out.push((Tok::Star, col));
                i += 1;
            }
            '+' => {
                if chars.get(i + 1) == Some(&'+') {
                    out.push((Tok::PlusPlus, col));
                    i += 2;
                } else {
                    return Err(syntax(col, "expected `++` for direct sum"));
                }
            }
            '-' | '0'..='9' => {
                let start = i;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                if s == "-" {
                    return Err(syntax(col, "expected digits after `-`"));
                }
                let n = s
                    .parse::<i64>()
                    .map_err(|_| syntax(col, format!("integer `{s}` out of range")))?;
                out.push((Tok::Int(n), col));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            }
            other => return Err(syntax(col, format!("unexpected character `{other}`"))),
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        let i = (self.pos + k).min(self.toks.len() - 1);
        &self.toks[i].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(syntax(
                self.column(),
                format!("expected {want}, found {}", self.peek()),
            ))
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            other => Err(syntax(
                self.column(),
                format!("expected integer, found {other}"),
            )),
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.prod()?;
        while *self.peek() == Tok::PlusPlus {
            self.bump();
            let rhs = self.prod()?;
            lhs = Expr::Sum(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn prod(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let rhs = self.unary()?;
            lhs = Expr::Tensor(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.atom()?;
        while *self.peek() == Tok::LParen {
            if !matches!(self.peek_at(1), Tok::Int(_)) || *self.peek_at(2) != Tok::RParen {
                return Err(syntax(
                    self.column(),
                    "a twist takes the form `(n)` with integer n",
                ));
            }
            self.bump();
            let n = self.int()?;
            self.expect(Tok::RParen)?;
            e = Expr::Twist(Box::new(e), n);
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let col = self.column();
        match self.bump() {
            Tok::LParen => {
                let e = self.sum()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.expect(Tok::LParen)?;
                let e = match name.as_str() {
                    "bundle" => self.bundle_literal(col)?,
                    "o" => Expr::Line(self.int()?),
                    "dual" => Expr::Dual(Box::new(self.sum()?)),
                    "cat" => {
                        let c1 = self.int()?;
                        self.expect(Tok::Comma)?;
                        let c2 = self.int()?;
                        if catalog::lookup(c1, c2).is_none() {
                            return Err(ParseError::UnknownCatalog {
                                column: col,
                                c1,
                                c2,
                            });
                        }
                        Expr::Catalog(c1, c2)
                    }
                    other => return Err(syntax(col, format!("unknown function `{other}`"))),
                };
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            other => Err(syntax(col, format!("expected an operand, found {other}"))),
        }
    }

    fn bundle_literal(&mut self, col: usize) -> Result<Expr, ParseError> {
        let rank_col = self.column();
        let rank = self.int()?;
        self.expect(Tok::Comma)?;
        let c1 = self.int()?;
        self.expect(Tok::Comma)?;
        let c2 = self.int()?;
        let c3 = if *self.peek() == Tok::Comma {
            self.bump();
            Some(self.int()?)
        } else {
            None
        };
        let rank = u32::try_from(rank).ok().filter(|&r| r > 0).ok_or_else(|| {
            ParseError::InvalidLiteral {
                column: rank_col,
                message: format!("rank must be a positive integer, got {rank}"),
            }
        })?;
        let invalid = |message: String| ParseError::InvalidLiteral {
            column: col,
            message,
        };
        if rank < 2 && c2 != 0 {
            return Err(invalid(format!("rank-{rank} requires c2 = 0")));
        }
        if rank < 3 && c3.unwrap_or(0) != 0 {
            return Err(invalid(format!("rank-{rank} requires c3 = 0")));
        }
        Ok(Expr::Bundle { rank, c1, c2, c3 })
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let e = p.sum()?;
    if *p.peek() != Tok::End {
        return Err(syntax(p.column(), format!("unexpected {}", p.peek())));
    }
    Ok(e)
}

impl Expr {
    pub fn eval(&self, x: &Hypersurface) -> acmcalc::Result<BundleDescriptor> {
        Ok(match self {
            Expr::Bundle { rank, c1, c2, c3 } => {
                BundleDescriptor::new(*rank, *c1, *c2, c3.unwrap_or(0))?
            }
            Expr::Line(n) => BundleDescriptor::line(*n),
            Expr::Catalog(c1, c2) => catalog::lookup(*c1, *c2)
                .ok_or_else(|| {
                    acmcalc::Error::Precondition(format!("({c1},{c2}) is not in the catalog"))
                })?
                .descriptor(),
            Expr::Dual(e) => e.eval(x)?.dual(),
            Expr::Twist(e, n) => e.eval(x)?.twist(*n, x),
            Expr::Tensor(a, b) => a.eval(x)?.tensor(&b.eval(x)?, x)?,
            Expr::Sum(a, b) => a.eval(x)?.direct_sum(&b.eval(x)?, x),
        })
    }

    fn binds_tighter_than_sum(&self) -> bool {
        !matches!(self, Expr::Sum(..))
    }

    fn is_postfix_operand(&self) -> bool {
        !matches!(self, Expr::Sum(..) | Expr::Tensor(..))
    }
}

/// Canonical printer; `parse(e.to_string()) == e`.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Bundle {
                rank,
                c1,
                c2,
                c3: None,
            } => write!(f, "bundle({rank}, {c1}, {c2})"),
            Expr::Bundle {
                rank,
                c1,
                c2,
                c3: Some(c3),
            } => write!(f, "bundle({rank}, {c1}, {c2}, {c3})"),
            Expr::Line(n) => write!(f, "o({n})"),
            Expr::Catalog(c1, c2) => write!(f, "cat({c1}, {c2})"),
            Expr::Dual(e) => write!(f, "dual({e})"),
            Expr::Twist(e, n) if e.is_postfix_operand() => write!(f, "{e}({n})"),
            Expr::Twist(e, n) => write!(f, "({e})({n})"),
            Expr::Tensor(a, b) => {
                if a.binds_tighter_than_sum() {
                    write!(f, "{a}")?;
                } else {
                    write!(f, "({a})")?;
                }
                if b.is_postfix_operand() {
                    write!(f, " * {b}")
                } else {
                    write!(f, " * ({b})")
                }
            }
            Expr::Sum(a, b) => {
                if b.binds_tighter_than_sum() {
                    write!(f, "{a} ++ {b}")
                } else {
                    write!(f, "{a} ++ ({b})")
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Query {
    Chi,
    Chern,
    Ch,
    Rank,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Chi(i64),
    Chern(BundleDescriptor),
    Ch(ChernCharacter),
    Rank(u32),
}

pub fn evaluate(e: &Expr, query: Query, x: &Hypersurface) -> acmcalc::Result<Value> {
    let d = e.eval(x)?;
    Ok(match query {
        Query::Chi => Value::Chi(d.chi_hrr(x)?),
        Query::Chern => Value::Chern(d),
        Query::Ch => Value::Ch(d.to_ch(x)),
        Query::Rank => Value::Rank(d.rank()),
    })
}
