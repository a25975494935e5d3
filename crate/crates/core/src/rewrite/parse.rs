//! Text syntax for noncommutative polynomials, e.g. `X11*X22 - q*X12*X21 - 1`.
//!
//! Products are written with `*` (juxtaposition is not accepted), powers with
//! `^n`. Scalars may be integers, fractions, and `q` or `z` when the field has
//! them; a generator name always wins over the scalar variable.

use super::word::NCPoly;
use super::RewriteError;
use crate::exact::{FieldTag, Scalar};

pub fn parse_poly(s: &str, names: &[String], tag: FieldTag) -> Result<NCPoly, RewriteError> {
    let toks = tokenize(s)?;
    let mut p = P { toks, pos: 0, names, tag, src: s };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>, RewriteError> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Tok::Num(cs[st..i].iter().collect()));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(RewriteError::Parse(format!("unexpected `{c}` in `{s}`")));
        }
    }
    Ok(out)
}

struct P<'a> {
    toks: Vec<Tok>,
    pos: usize,
    names: &'a [String],
    tag: FieldTag,
    src: &'a str,
}

impl P<'_> {
    fn err(&self, m: &str) -> RewriteError {
        RewriteError::Parse(format!("{m} at token {} in `{}`", self.pos, self.src))
    }

    fn peek_sym(&self, c: char) -> bool {
        self.toks.get(self.pos) == Some(&Tok::Sym(c))
    }

    fn expr(&mut self) -> Result<NCPoly, RewriteError> {
        let mut acc = if self.peek_sym('-') {
            self.pos += 1;
            self.term()?.neg()
        } else {
            if self.peek_sym('+') {
                self.pos += 1;
            }
            self.term()?
        };
        loop {
            if self.peek_sym('+') {
                self.pos += 1;
                acc = acc.add(&self.term()?);
            } else if self.peek_sym('-') {
                self.pos += 1;
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<NCPoly, RewriteError> {
        let mut acc = self.power()?;
        loop {
            if self.peek_sym('*') {
                self.pos += 1;
                acc = acc.mul(&self.power()?);
            } else if self.peek_sym('/') {
                self.pos += 1;
                let d = self.power()?;
                let s = d.as_scalar().ok_or_else(|| self.err("division by a non-scalar"))?;
                let inv = s.try_inv().ok_or_else(|| self.err("division by zero"))?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<NCPoly, RewriteError> {
        let base = self.atom()?;
        if !self.peek_sym('^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = self.peek_sym('-');
        if neg {
            self.pos += 1;
        }
        let e: i64 = match self.toks.get(self.pos) {
            Some(Tok::Num(n)) => n.parse().map_err(|_| self.err("exponent too large"))?,
            _ => return Err(self.err("expected exponent")),
        };
        self.pos += 1;
        if neg || base.as_scalar().is_some() {
            let s = base.as_scalar().ok_or_else(|| self.err("negative power of a non-scalar"))?;
            if s.is_zero() && (neg || e == 0) {
                return Err(self.err("zero to a non-positive power"));
            }
            return Ok(NCPoly::constant(s.pow(if neg { -e } else { e })));
        }
        let mut acc = NCPoly::one();
        for _ in 0..e {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<NCPoly, RewriteError> {
        let t = self.toks.get(self.pos).cloned().ok_or_else(|| self.err("unexpected end"))?;
        self.pos += 1;
        match t {
            Tok::Sym('(') => {
                let v = self.expr()?;
                if !self.peek_sym(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Tok::Num(n) => Ok(NCPoly::constant(Scalar::parse(&n, FieldTag::Rational).map_err(|e| self.err(&e.to_string()))?)),
            Tok::Ident(id) => {
                if let Some(i) = self.names.iter().position(|n| *n == id) {
                    return Ok(NCPoly::gen(i));
                }
                match (id.as_str(), self.tag) {
                    ("q", FieldTag::RatFunc) => Ok(NCPoly::constant(Scalar::q())),
                    ("z", FieldTag::Cyclo(l)) => Ok(NCPoly::constant(Scalar::zeta(l))),
                    _ => Err(RewriteError::UnknownGenerator(id)),
                }
            }
            Tok::Sym(c) => Err(self.err(&format!("unexpected `{c}`"))),
        }
    }
}
