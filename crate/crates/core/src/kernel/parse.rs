//! Text grammar for polynomials: `-3/2*x0^2*x1 + x3`.
//!
//! Accepted input is a superset of the printed form: parentheses and
//! powers of parenthesised groups are allowed, whitespace is ignored.
//! [`print_poly`] emits the canonical form, terms in decreasing
//! graded-lex order.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::mpoly::{MPoly, Monomial};
use super::rat::{fmt_rat, Rat};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(s[start..i].parse().unwrap())));
                continue;
            }
            b'x' => {
                i += 1;
                let ds = i;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                if ds == i {
                    return Err(Error::Parse { pos: start, msg: "expected variable index after 'x'".into() });
                }
                let idx = s[ds..i]
                    .parse()
                    .map_err(|_| Error::Parse { pos: start, msg: "variable index too large".into() })?;
                out.push((start, Tok::Var(idx)));
                continue;
            }
            b'+' => out.push((start, Tok::Plus)),
            b'-' => out.push((start, Tok::Minus)),
            b'*' => out.push((start, Tok::Star)),
            b'/' => out.push((start, Tok::Slash)),
            b'^' => out.push((start, Tok::Caret)),
            b'(' => out.push((start, Tok::LParen)),
            b')' => out.push((start, Tok::RParen)),
            _ => {
                return Err(Error::Parse { pos: start, msg: format!("unexpected character {:?}", c as char) })
            }
        }
        i += 1;
    }
    Ok(out)
}

/// Syntax tree; variable count is only known after the whole input is read.
enum Node {
    Num(Rat),
    Var(usize),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Neg(Box<Node>),
    Pow(Box<Node>, u32),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    max_var: Option<usize>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.here(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<Node> {
        let mut lhs = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Node::Neg(Box::new(self.term()?))
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
                    lhs = Node::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    lhs = Node::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Node> {
        let mut lhs = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            lhs = Node::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Node> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| Error::Parse { pos: self.here(), msg: "exponent too large".into() })?;
                    return Ok(Node::Pow(Box::new(base), e));
                }
                _ => return self.err("expected integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Node> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) if !d.is_zero() => {
                            self.pos += 1;
                            Ok(Node::Num(Rat::new(n, d)))
                        }
                        _ => self.err("expected nonzero integer denominator"),
                    }
                } else {
                    Ok(Node::Num(Rat::from_integer(n)))
                }
            }
            Some(Tok::Var(i)) => {
                self.pos += 1;
                self.max_var = Some(self.max_var.map_or(i, |m| m.max(i)));
                Ok(Node::Var(i))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => self.err("expected ')'"),
                }
            }
            _ => self.err("expected number, variable or '('"),
        }
    }
}

fn build(node: &Node, n: usize) -> MPoly {
    match node {
        Node::Num(r) => MPoly::constant(n, r.clone()),
        Node::Var(i) => MPoly::var(n, *i),
        Node::Add(a, b) => &build(a, n) + &build(b, n),
        Node::Sub(a, b) => &build(a, n) - &build(b, n),
        Node::Mul(a, b) => &build(a, n) * &build(b, n),
        Node::Neg(a) => -&build(a, n),
        Node::Pow(a, e) => build(a, n).pow(*e),
    }
}

pub(crate) fn parse_poly(s: &str, nvars: Option<usize>) -> Result<MPoly> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse { pos: 0, msg: "empty polynomial".into() });
    }
    let mut p = Parser { toks, pos: 0, end: s.len(), max_var: None };
    let tree = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    let needed = p.max_var.map_or(1, |m| m + 1);
    let n = match nvars {
        Some(n) if needed > n => {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("variable x{} out of range for {} variables", needed - 1, n),
            })
        }
        Some(n) => n,
        None => needed,
    };
    Ok(build(&tree, n))
}

fn print_monomial(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("x{i}")),
            _ => parts.push(format!("x{i}^{e}")),
        }
    }
    parts.join("*")
}

pub(crate) fn print_poly(p: &MPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&fmt_rat(&abs));
        } else if abs.is_one() {
            out.push_str(&print_monomial(m));
        } else {
            out.push_str(&fmt_rat(&abs));
            out.push('*');
            out.push_str(&print_monomial(m));
        }
    }
    out
}
