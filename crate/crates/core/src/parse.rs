//! Small tokenizer and sum-of-products parser shared by the text formats.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::scalar::Rational;

#[derive(Debug, Clone, PartialEq)]
pub enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

pub fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let lit: String = chars[start..i].iter().collect();
                out.push(Tok::Int(lit.parse().expect("digits")));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            _ => {
                let t = match c {
                    '+' => Tok::Plus,
                    '-' | '\u{2212}' => Tok::Minus,
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    ',' => Tok::Comma,
                    other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
                };
                out.push(t);
                i += 1;
            }
        }
    }
    Ok(out)
}

/// Values that can be assembled from the sum-of-products grammar.
pub trait ParseTarget: Sized + Clone {
    fn number(q: Rational) -> Self;
    fn ident(name: &str, exp: i32) -> Result<Self>;
    fn add(self, other: Self) -> Self;
    fn mul(self, other: Self) -> Self;
    fn neg(self) -> Self;
}

pub struct Cursor<'a> {
    toks: &'a [Tok],
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(toks: &'a [Tok]) -> Self {
        Cursor { toks, pos: 0 }
    }

    pub fn peek(&self) -> Option<&'a Tok> {
        self.toks.get(self.pos)
    }

    pub fn peek_at(&self, k: usize) -> Option<&'a Tok> {
        self.toks.get(self.pos + k)
    }

    pub fn next(&mut self) -> Option<&'a Tok> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    pub fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, t: &Tok) -> Result<()> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(Error::Parse(format!("expected {t:?}, found {:?}", self.peek())))
        }
    }

    pub fn int(&mut self) -> Result<i64> {
        let neg = self.eat(&Tok::Minus);
        match self.next() {
            Some(Tok::Int(n)) => {
                let v: i64 = n
                    .try_into()
                    .map_err(|_| Error::Parse("integer out of range".into()))?;
                Ok(if neg { -v } else { v })
            }
            other => Err(Error::Parse(format!("expected integer, found {other:?}"))),
        }
    }
}

pub fn parse_sum<T: ParseTarget>(c: &mut Cursor) -> Result<T> {
    let mut acc: Option<T> = None;
    loop {
        let negate = if c.eat(&Tok::Minus) {
            true
        } else {
            c.eat(&Tok::Plus);
            false
        };
        let mut term = parse_product::<T>(c)?;
        if negate {
            term = term.neg();
        }
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(term),
        });
        match c.peek() {
            Some(Tok::Plus) | Some(Tok::Minus) => continue,
            _ => break,
        }
    }
    Ok(acc.expect("at least one term"))
}

fn parse_product<T: ParseTarget>(c: &mut Cursor) -> Result<T> {
    let mut acc = parse_factor::<T>(c)?;
    while c.eat(&Tok::Star) {
        let f = parse_factor::<T>(c)?;
        acc = acc.mul(f);
    }
    Ok(acc)
}

fn parse_factor<T: ParseTarget>(c: &mut Cursor) -> Result<T> {
    match c.next() {
        Some(Tok::Int(n)) => {
            let mut q = Rational::from_big(n.clone(), BigInt::from(1));
            if c.eat(&Tok::Slash) {
                match c.next() {
                    Some(Tok::Int(d)) if d != &BigInt::from(0) => {
                        q = Rational::from_big(n.clone(), d.clone());
                    }
                    other => return Err(Error::Parse(format!("bad denominator {other:?}"))),
                }
            }
            Ok(T::number(q))
        }
        Some(Tok::Ident(name)) => {
            let exp = if c.eat(&Tok::Caret) { c.int()? } else { 1 };
            let exp = i32::try_from(exp).map_err(|_| Error::Parse("exponent out of range".into()))?;
            T::ident(name, exp)
        }
        Some(Tok::LParen) => {
            let inner = parse_sum::<T>(c)?;
            c.expect(&Tok::RParen)?;
            if c.eat(&Tok::Caret) {
                let e = c.int()?;
                if e < 0 {
                    return Err(Error::Parse("negative power of a parenthesised expression".into()));
                }
                return Ok(pow_by_mul(inner, e as u32));
            }
            Ok(inner)
        }
        other => Err(Error::Parse(format!("unexpected token {other:?}"))),
    }
}

fn pow_by_mul<T: ParseTarget>(base: T, e: u32) -> T {
    let mut acc = T::number(Rational::one());
    for _ in 0..e {
        acc = acc.mul(base.clone());
    }
    acc
}

/// Parses a whole string as a sum of products.
pub fn parse_all<T: ParseTarget>(s: &str) -> Result<T> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let mut c = Cursor::new(&toks);
    let v = parse_sum::<T>(&mut c)?;
    if !c.at_end() {
        return Err(Error::Parse(format!("trailing input at {:?}", c.peek())));
    }
    Ok(v)
}
