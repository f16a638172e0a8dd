//! A small expression evaluator shared by scalar and algebra-element parsing.
//!
//! Grammar: sums and differences of products; factors are integers,
//! `zeta(N)`, identifiers, group literals `g[e1,e2,...]`, and parenthesised
//! expressions, optionally raised to an integer power. Juxtaposition
//! multiplies, and division is only by scalars.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{Cyclotomic, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let bytes: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < bytes.len() {
        let (pos, c) = bytes[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = bytes[start..i].iter().map(|x| x.1).collect();
            let n = BigInt::parse_bytes(s.as_bytes(), 10).ok_or_else(|| Error::parse(pos, "bad integer"))?;
            out.push((pos, Tok::Int(n)));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].1.is_alphanumeric() || bytes[i].1 == '_') {
                i += 1;
            }
            out.push((pos, Tok::Ident(bytes[start..i].iter().map(|x| x.1).collect())));
            continue;
        }
        let t = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            _ => return Err(Error::parse(pos, alloc::format!("unexpected character `{c}`"))),
        };
        out.push((pos, t));
        i += 1;
    }
    Ok(out)
}

/// Value domain for [`eval`].
pub trait ExprCtx {
    type V: Clone;
    fn scalar(&self, c: Cyclotomic) -> Self::V;
    fn ident(&self, name: &str, pos: usize) -> Result<Self::V>;
    fn group(&self, exps: &[i64], pos: usize) -> Result<Self::V>;
    fn add(&self, a: Self::V, b: Self::V) -> Self::V;
    fn neg(&self, a: Self::V) -> Self::V;
    fn mul(&self, a: Self::V, b: Self::V) -> Result<Self::V>;
    fn as_scalar(&self, v: &Self::V) -> Option<Cyclotomic>;
}

struct Parser<'c, C: ExprCtx> {
    ctx: &'c C,
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

pub fn eval<C: ExprCtx>(ctx: &C, src: &str) -> Result<C::V> {
    let toks = tokenize(src)?;
    if toks.is_empty() {
        return Err(Error::parse(0, "empty expression"));
    }
    let mut p = Parser { ctx, toks, at: 0, end: src.len() };
    let v = p.expr()?;
    if p.at != p.toks.len() {
        return Err(Error::parse(p.pos(), "trailing input"));
    }
    Ok(v)
}

impl<C: ExprCtx> Parser<'_, C> {
    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.0).unwrap_or(self.end)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &Tok) -> Result<()> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(Error::parse(self.pos(), alloc::format!("expected {t:?}")))
        }
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.eat(&Tok::Minus);
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                let v: i64 = i64::try_from(n).map_err(|_| Error::parse(self.pos(), "integer too large"))?;
                Ok(if neg { -v } else { v })
            }
            _ => Err(Error::parse(self.pos(), "expected integer")),
        }
    }

    fn expr(&mut self) -> Result<C::V> {
        let mut acc = if self.eat(&Tok::Minus) {
            let t = self.term()?;
            self.ctx.neg(t)
        } else {
            self.eat(&Tok::Plus);
            self.term()?
        };
        loop {
            if self.eat(&Tok::Plus) {
                let t = self.term()?;
                acc = self.ctx.add(acc, t);
            } else if self.eat(&Tok::Minus) {
                let t = self.term()?;
                acc = self.ctx.add(acc, self.ctx.neg(t));
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Int(_) | Tok::Ident(_) | Tok::LParen))
    }

    fn term(&mut self) -> Result<C::V> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(&Tok::Star) {
                let f = self.factor()?;
                acc = self.ctx.mul(acc, f)?;
            } else if self.eat(&Tok::Slash) {
                let pos = self.pos();
                let f = self.factor()?;
                let s = self.ctx.as_scalar(&f).ok_or_else(|| Error::parse(pos, "division by a non-scalar"))?;
                let inv = s.inv().map_err(|_| Error::DivisionByZero)?;
                acc = self.ctx.mul(acc, self.ctx.scalar(inv))?;
            } else if self.starts_factor() {
                let f = self.factor()?;
                acc = self.ctx.mul(acc, f)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<C::V> {
        if self.eat(&Tok::Minus) {
            let f = self.factor()?;
            return Ok(self.ctx.neg(f));
        }
        let pos = self.pos();
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let e = self.int()?;
        if let Some(s) = self.ctx.as_scalar(&base) {
            return Ok(self.ctx.scalar(s.pow(e)?));
        }
        if e < 0 {
            return Err(Error::parse(pos, "negative power of a non-scalar"));
        }
        let mut acc = self.ctx.scalar(Cyclotomic::one());
        for _ in 0..e {
            acc = self.ctx.mul(acc, base.clone())?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<C::V> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                Ok(self.ctx.scalar(Cyclotomic::rational(Rational::from(n))))
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let v = self.expr()?;
                self.expect(&Tok::RParen)?;
                Ok(v)
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                if name == "zeta" && self.peek() == Some(&Tok::LParen) {
                    self.at += 1;
                    let n = self.int()?;
                    self.expect(&Tok::RParen)?;
                    if n <= 0 {
                        return Err(Error::parse(pos, "zeta needs a positive conductor"));
                    }
                    return Ok(self.ctx.scalar(Cyclotomic::zeta(n as u32)?));
                }
                if name == "g" && self.peek() == Some(&Tok::LBracket) {
                    self.at += 1;
                    let mut exps = Vec::new();
                    if !self.eat(&Tok::RBracket) {
                        loop {
                            exps.push(self.int()?);
                            if self.eat(&Tok::RBracket) {
                                break;
                            }
                            self.expect(&Tok::Comma)?;
                        }
                    }
                    return self.ctx.group(&exps, pos);
                }
                self.ctx.ident(&name, pos)
            }
            _ => Err(Error::parse(pos, "expected a factor")),
        }
    }
}

/// Scalar-only context; `var` optionally binds an identifier (the `z` of the
/// `... @ zeta(N)` rendering).
struct ScalarCtx {
    var: Option<(String, Cyclotomic)>,
}

impl ExprCtx for ScalarCtx {
    type V = Cyclotomic;
    fn scalar(&self, c: Cyclotomic) -> Cyclotomic {
        c
    }
    fn ident(&self, name: &str, _pos: usize) -> Result<Cyclotomic> {
        match &self.var {
            Some((v, c)) if v == name => Ok(c.clone()),
            _ => Err(Error::UnknownSymbol(name.to_string())),
        }
    }
    fn group(&self, _exps: &[i64], pos: usize) -> Result<Cyclotomic> {
        Err(Error::parse(pos, "group literal in a scalar expression"))
    }
    fn add(&self, a: Cyclotomic, b: Cyclotomic) -> Cyclotomic {
        &a + &b
    }
    fn neg(&self, a: Cyclotomic) -> Cyclotomic {
        -a
    }
    fn mul(&self, a: Cyclotomic, b: Cyclotomic) -> Result<Cyclotomic> {
        Ok(&a * &b)
    }
    fn as_scalar(&self, v: &Cyclotomic) -> Option<Cyclotomic> {
        Some(v.clone())
    }
}

impl Cyclotomic {
    /// Parses either the rendered form `a0 + a1*z + ... @ zeta(N)` or a free
    /// expression such as `1 - zeta(9)^2 + 3/2`.
    pub fn parse(src: &str) -> Result<Cyclotomic> {
        match src.rsplit_once('@') {
            Some((lhs, rhs)) => {
                let rhs = rhs.trim();
                let n = rhs
                    .strip_prefix("zeta(")
                    .and_then(|r| r.strip_suffix(')'))
                    .and_then(|r| r.trim().parse::<u32>().ok())
                    .ok_or_else(|| Error::parse(lhs.len() + 1, "expected zeta(N) after @"))?;
                let z = Cyclotomic::zeta(n)?;
                let ctx = ScalarCtx { var: Some(("z".into(), z.clone())) };
                eval(&ctx, lhs)?.lift_to(z.field())
            }
            None => eval(&ScalarCtx { var: None }, src),
        }
    }

    /// Parses with an extra bound identifier, e.g. `q`.
    pub fn parse_with(src: &str, name: &str, value: &Cyclotomic) -> Result<Cyclotomic> {
        eval(&ScalarCtx { var: Some((name.to_string(), value.clone())) }, src)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_free_expressions() {
        let z9 = Cyclotomic::zeta(9).unwrap();
        let v = Cyclotomic::parse("1 - zeta(9)^2 + 3/2").unwrap();
        assert_eq!(v, &Cyclotomic::rational(Rational::new(5, 2).unwrap()) - &z9.powu(2));
        assert_eq!(Cyclotomic::parse("zeta(4)^-1").unwrap(), -Cyclotomic::zeta(4).unwrap());
        assert_eq!(Cyclotomic::parse("(2)(3) - -1").unwrap(), Cyclotomic::from_int(7));
        assert_eq!(Cyclotomic::parse("zeta(3)*zeta(4)").unwrap(), Cyclotomic::zeta(12).unwrap().powu(7));
    }

    #[test]
    fn round_trips_rendering() {
        let z12 = Cyclotomic::zeta(12).unwrap();
        let samples = [
            Cyclotomic::zero(),
            Cyclotomic::rational(Rational::new(-7, 3).unwrap()),
            &z12.powu(5).scale(&Rational::new(2, 5).unwrap()) - &Cyclotomic::from_int(1),
            Cyclotomic::zeta(49).unwrap().powu(44),
        ];
        for s in samples {
            let text = s.to_string();
            let back = Cyclotomic::parse(&text).unwrap();
            assert_eq!(back, s, "{text}");
            assert_eq!(back.to_string(), text);
            assert_eq!(Cyclotomic::parse(&s.to_expr_string()).unwrap(), s);
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(Cyclotomic::parse("1/0"), Err(Error::DivisionByZero)));
        assert!(matches!(Cyclotomic::parse("q + 1"), Err(Error::UnknownSymbol(_))));
        assert!(matches!(Cyclotomic::parse("1 +"), Err(Error::Parse { .. })));
        assert!(matches!(Cyclotomic::parse("zeta(0)"), Err(Error::Parse { .. })));
        let q = Cyclotomic::zeta(5).unwrap();
        assert_eq!(Cyclotomic::parse_with("q^5", "q", &q).unwrap(), Cyclotomic::one());
    }
}
