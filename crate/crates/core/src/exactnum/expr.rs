//! Recursive-descent reader for the arithmetic text forms used by rationals,
//! cyclotomic numbers and polynomials.
//!
//! Grammar:
//! ```text
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := factor (('*' factor) | ('/' number))*
//! factor  := primary ['^' integer]
//! primary := number | ident | '(' expr ')' | '-' factor
//! number  := digits ['/' digits]
//! ident   := letter (letter | digit | '_' | ',')*
//! ```

use crate::error::{Error, Result};
use crate::exactnum::Rational;

/// Semantic actions for [`parse_expr`].
pub trait ExprTarget {
    type Value: Clone;
    fn number(&self, r: Rational) -> Result<Self::Value>;
    fn ident(&self, name: &str) -> Result<Self::Value>;
    fn add(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value>;
    fn mul(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value>;
    fn neg(&self, a: Self::Value) -> Result<Self::Value>;

    fn pow(&self, a: Self::Value, mut e: u32) -> Result<Self::Value> {
        let mut acc = self.number(Rational::one())?;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base.clone())?;
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base.clone(), base)?;
            }
        }
        Ok(acc)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' => {
                out.push(Tok::Star);
                i += 1
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1
            }
            d if d.is_ascii_digit() => {
                let st = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Tok::Num(chars[st..i].iter().collect()));
            }
            a if a.is_ascii_alphabetic() => {
                let st = i;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == ',')
                {
                    i += 1;
                }
                out.push(Tok::Ident(chars[st..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character `{}`", other))),
        }
    }
    Ok(out)
}

struct Parser<'a, T: ExprTarget> {
    toks: Vec<Tok>,
    pos: usize,
    target: &'a T,
}

impl<'a, T: ExprTarget> Parser<'a, T> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn number_literal(&mut self, first: String) -> Result<Rational> {
        let num: Rational = first.parse()?;
        if self.peek() == Some(&Tok::Slash) {
            if let Some(Tok::Num(d)) = self.toks.get(self.pos + 1).cloned() {
                self.pos += 2;
                let den: Rational = d.parse()?;
                return num.div(&den);
            }
        }
        Ok(num)
    }

    fn expr(&mut self) -> Result<T::Value> {
        let mut neg = false;
        match self.peek() {
            Some(Tok::Plus) => {
                self.pos += 1;
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                neg = true;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if neg {
            acc = self.target.neg(acc)?;
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.target.add(acc, t)?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    let t = self.target.neg(t)?;
                    acc = self.target.add(acc, t)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<T::Value> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = self.target.mul(acc, f)?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let d = match self.next() {
                        Some(Tok::Num(d)) => self.number_literal(d)?,
                        _ => return Err(Error::Parse("division only by a number".into())),
                    };
                    let inv = self.target.number(d.inv()?)?;
                    acc = self.target.mul(acc, inv)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<T::Value> {
        let base = self.primary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let e = match self.next() {
                Some(Tok::Num(d)) => d
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad exponent `{}`", d)))?,
                _ => return Err(Error::Parse("expected exponent after `^`".into())),
            };
            return self.target.pow(base, e);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<T::Value> {
        match self.next() {
            Some(Tok::Num(d)) => {
                let r = self.number_literal(d)?;
                self.target.number(r)
            }
            Some(Tok::Ident(name)) => self.target.ident(&name),
            Some(Tok::LParen) => {
                let v = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(v),
                    _ => Err(Error::Parse("missing `)`".into())),
                }
            }
            Some(Tok::Minus) => {
                let v = self.factor()?;
                self.target.neg(v)
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {:?}", t))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

/// Parses `text` fully, dispatching semantic actions to `target`.
pub fn parse_expr<T: ExprTarget>(text: &str, target: &T) -> Result<T::Value> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0, target };
    let v = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {:?}",
            p.toks[p.pos]
        )));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Q;
    impl ExprTarget for Q {
        type Value = Rational;
        fn number(&self, r: Rational) -> Result<Rational> {
            Ok(r)
        }
        fn ident(&self, name: &str) -> Result<Rational> {
            Err(Error::UnknownVariable(name.into()))
        }
        fn add(&self, a: Rational, b: Rational) -> Result<Rational> {
            Ok(a.add(&b))
        }
        fn mul(&self, a: Rational, b: Rational) -> Result<Rational> {
            Ok(a.mul(&b))
        }
        fn neg(&self, a: Rational) -> Result<Rational> {
            Ok(a.neg())
        }
    }

    #[test]
    fn arithmetic() {
        let v = parse_expr("-(1/2 + 3)^2 * 2/7 - -1", &Q).unwrap();
        assert_eq!(v, Rational::new(-5, 2).unwrap());
        assert!(parse_expr("1 +", &Q).is_err());
        assert!(parse_expr("(1", &Q).is_err());
        assert!(parse_expr("x", &Q).is_err());
        assert!(parse_expr("2 3", &Q).is_err());
    }
}
