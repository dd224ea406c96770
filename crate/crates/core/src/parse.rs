//! Text syntax for field elements, linear forms and arrangement files.
//!
//! Expressions use rational literals, `z` for ζ_n, `i` for ζ_4 (when 4 | n),
//! `^` with integer exponents, `+ - * /`, parentheses and juxtaposition
//! (`2a`). Variables are `x1..xℓ`, with `a, b, c, d` as aliases for ℓ ≤ 4.
//!
//! Arrangement files:
//!
//! ```text
//! # comments run to end of line
//! ambient 3 field 5
//! let w = z^2 + z^3
//! a - w*b
//! a + b + (w + 2)*c
//! ```

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::arrangement::Arrangement;
use crate::cyclo::{Cyclo, Rational};
use crate::error::{Error, Result};
use crate::linalg::{LinearForm, Row};

/// Named constants available to the parser, e.g. `w = z^2 + z^3`.
pub type Constants = HashMap<String, Cyclo>;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
            }
            out.push(Token::Num(s.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
            }
            out.push(Token::Ident(s));
        } else {
            let op = match c {
                '−' | '–' => '-',
                '·' => '*',
                '+' | '-' | '*' | '/' | '^' | '(' | ')' => c,
                _ => return Err(Error::Parse(format!("unexpected character `{c}` in `{text}`"))),
            };
            out.push(Token::Op(op));
            chars.next();
        }
    }
    Ok(out)
}

/// Value of a subexpression: `constant + Σ linear[k] x_k`.
#[derive(Clone)]
struct Affine {
    constant: Cyclo,
    linear: Vec<Cyclo>,
}

impl Affine {
    fn constant(c: Cyclo, ambient: usize) -> Self {
        let order = c.order();
        Affine { constant: c, linear: vec![Cyclo::zero(order); ambient] }
    }

    fn is_constant(&self) -> bool {
        self.linear.iter().all(Cyclo::is_zero)
    }

    fn zip(&self, other: &Affine, f: impl Fn(&Cyclo, &Cyclo) -> Cyclo) -> Affine {
        Affine {
            constant: f(&self.constant, &other.constant),
            linear: self.linear.iter().zip(&other.linear).map(|(a, b)| f(a, b)).collect(),
        }
    }

    fn scale(&self, c: &Cyclo) -> Affine {
        Affine { constant: &self.constant * c, linear: self.linear.iter().map(|x| x * c).collect() }
    }
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    ambient: usize,
    order: u32,
    constants: &'a Constants,
    text: &'a str,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} in `{}`", self.text))
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat_op(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Affine> {
        let mut acc = self.term()?;
        loop {
            if self.eat_op('+') {
                let rhs = self.term()?;
                acc = acc.zip(&rhs, |a, b| a + b);
            } else if self.eat_op('-') {
                let rhs = self.term()?;
                acc = acc.zip(&rhs, |a, b| a - b);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Affine> {
        let mut acc = self.unary()?;
        loop {
            if self.eat_op('*') {
                let rhs = self.unary()?;
                acc = self.multiply(acc, rhs)?;
            } else if self.eat_op('/') {
                let rhs = self.unary()?;
                if !rhs.is_constant() {
                    return Err(self.err("division by a non-constant"));
                }
                let inv = rhs.constant.inverse().map_err(|_| self.err("division by zero"))?;
                acc = acc.scale(&inv);
            } else if matches!(self.peek(), Some(Token::Num(_) | Token::Ident(_)) | Some(Token::Op('('))) {
                let rhs = self.power()?;
                acc = self.multiply(acc, rhs)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn multiply(&self, a: Affine, b: Affine) -> Result<Affine> {
        if a.is_constant() {
            Ok(b.scale(&a.constant))
        } else if b.is_constant() {
            Ok(a.scale(&b.constant))
        } else {
            Err(self.err("product of two non-constant terms is not linear"))
        }
    }

    fn unary(&mut self) -> Result<Affine> {
        if self.eat_op('-') {
            let v = self.unary()?;
            Ok(v.scale(&Cyclo::from_int(self.order, -1)))
        } else if self.eat_op('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Affine> {
        let base = self.primary()?;
        if !self.eat_op('^') {
            return Ok(base);
        }
        let exp = self.unary()?;
        let e = exp
            .is_constant()
            .then_some(&exp.constant)
            .and_then(Cyclo::as_rational)
            .filter(|q| q.is_integer())
            .and_then(|q| i64::try_from(q.to_integer()).ok())
            .ok_or_else(|| self.err("exponent must be an integer"))?;
        if !base.is_constant() {
            if e == 1 {
                return Ok(base);
            }
            return Err(self.err("powers of variables are not linear"));
        }
        let value = base.constant.pow(e).map_err(|_| self.err("zero to a negative power"))?;
        Ok(Affine::constant(value, self.ambient))
    }

    fn primary(&mut self) -> Result<Affine> {
        match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                Ok(Affine::constant(Cyclo::from_rational(self.order, Rational::from_integer(n)), self.ambient))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                self.ident(&name)
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat_op(')') {
                    return Err(self.err("missing `)`"));
                }
                Ok(v)
            }
            _ => Err(self.err("expected a number, name or `(`")),
        }
    }

    fn ident(&self, name: &str) -> Result<Affine> {
        if let Some(c) = self.constants.get(name) {
            let c = c.embed(self.order).map_err(|_| self.err(&format!("constant `{name}` is not in this field")))?;
            return Ok(Affine::constant(c, self.ambient));
        }
        if name == "z" {
            return Ok(Affine::constant(Cyclo::root_of_unity(self.order, 1)?, self.ambient));
        }
        if name == "i" {
            if !self.order.is_multiple_of(4) {
                return Err(self.err(&format!("`i` needs a field order divisible by 4, got {}", self.order)));
            }
            let i = Cyclo::root_of_unity(self.order, (self.order / 4) as i64)?;
            return Ok(Affine::constant(i, self.ambient));
        }
        let var = match name {
            "a" | "b" | "c" | "d" if self.ambient <= 4 => Some((name.as_bytes()[0] - b'a') as usize),
            _ => name.strip_prefix('x').and_then(|k| k.parse::<usize>().ok()).filter(|&k| k >= 1).map(|k| k - 1),
        };
        match var {
            Some(k) if k < self.ambient => {
                let mut v = Affine::constant(Cyclo::zero(self.order), self.ambient);
                v.linear[k] = Cyclo::one(self.order);
                Ok(v)
            }
            _ => Err(self.err(&format!("unknown name `{name}`"))),
        }
    }
}

fn parse_affine(text: &str, ambient: usize, order: u32, constants: &Constants) -> Result<Affine> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    let mut p = Parser { tokens: tokenize(text)?, pos: 0, ambient, order, constants, text };
    let v = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

/// A field element of Q(ζ_order).
pub fn parse_scalar(text: &str, order: u32, constants: &Constants) -> Result<Cyclo> {
    Ok(parse_affine(text, 0, order, constants)?.constant)
}

/// Coefficients of a homogeneous linear form (not normalized).
pub fn parse_row(text: &str, ambient: usize, order: u32, constants: &Constants) -> Result<Row> {
    let v = parse_affine(text, ambient, order, constants)?;
    if !v.constant.is_zero() {
        return Err(Error::Parse(format!("`{text}` has a constant term; forms must be linear")));
    }
    Ok(v.linear)
}

pub fn parse_form(text: &str, ambient: usize, order: u32, constants: &Constants) -> Result<LinearForm> {
    LinearForm::new(parse_row(text, ambient, order, constants)?)
}

/// Parses the arrangement file format described in the module docs.
pub fn parse_arrangement(text: &str) -> Result<Arrangement> {
    let mut header: Option<(usize, u32)> = None;
    let mut constants = Constants::new();
    let mut rows = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let at = |e: Error| Error::Parse(format!("line {}: {e}", lineno + 1));
        let Some((ambient, order)) = header else {
            header = Some(parse_header(line).map_err(at)?);
            continue;
        };
        if let Some(def) = line.strip_prefix("let ") {
            let (name, expr) =
                def.split_once('=').ok_or_else(|| at(Error::Parse("expected `let NAME = EXPR`".into())))?;
            let value = parse_scalar(expr.trim(), order, &constants).map_err(at)?;
            constants.insert(name.trim().to_string(), value);
            continue;
        }
        rows.push(parse_row(line, ambient, order, &constants).map_err(at)?);
    }
    let (ambient, order) = header.ok_or_else(|| Error::Parse("missing `ambient <l> field <n>` header".into()))?;
    Arrangement::new(ambient, order, rows)
}

fn parse_header(line: &str) -> Result<(usize, u32)> {
    let words: Vec<&str> = line.split_whitespace().collect();
    match words.as_slice() {
        ["ambient", l, "field", n] => {
            let l = l.parse().map_err(|_| Error::Parse(format!("bad ambient dimension `{l}`")))?;
            let n: u32 = n.parse().map_err(|_| Error::Parse(format!("bad field order `{n}`")))?;
            if n == 0 {
                return Err(Error::ZeroOrder);
            }
            Ok((l, n))
        }
        _ => Err(Error::Parse(format!("expected `ambient <l> field <n>`, got `{line}`"))),
    }
}
