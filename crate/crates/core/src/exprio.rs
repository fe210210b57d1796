//! ASCII surface syntax for curvature polynomials.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor (('*' | <juxtaposition>) factor)*
//! factor   := '-' factor | primary ('^' nat)?
//! primary  := atom | '(' expr ')'
//! atom     := rational | 'G' | 'k' "'"* | 'k^(' nat ')'
//! rational := nat ('/' nat)?
//! ```
//!
//! Variation fields are written `f | g` (tangential | normal) and functionals
//! `int(f)`. The printer emits terms in the canonical monomial order with
//! reduced fractions, and `parse(print(p)) == p` for every polynomial.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::curvegeom::VariationField;
use crate::diffalg::{DiffPoly, Functional, Monomial, Rational};

/// Largest exponent or derivative order accepted by the parser.
pub const MAX_EXPONENT: u32 = 1024;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at byte {offset}: {message} (expected {})", .expected.join(", "))]
pub struct ParseError {
    /// 1-based byte offset of the offending position.
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub message: String,
}

const FACTOR_START: &[&str] = &["number", "'G'", "'k'", "'('", "'-'"];

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            src: text.as_bytes(),
            pos: 0,
        }
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

    fn error(&self, expected: &[&'static str], message: impl Into<String>) -> ParseError {
        ParseError {
            offset: self.pos + 1,
            expected: expected.to_vec(),
            message: message.into(),
        }
    }

    fn found(&self) -> String {
        match self.src.get(self.pos) {
            Some(&b) => format!("unexpected '{}'", b as char),
            None => "unexpected end of input".to_string(),
        }
    }

    fn expect(&mut self, byte: u8, name: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&[name], self.found()))
        }
    }

    fn expr(&mut self) -> Result<DiffPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<DiffPoly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(b) if b.is_ascii_digit() || b == b'G' || b == b'k' || b == b'(' => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<DiffPoly, ParseError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.factor()?);
        }
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.nat("exponent")?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<DiffPoly, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')', "')'")?;
                Ok(inner)
            }
            Some(b'G') => {
                self.pos += 1;
                Ok(DiffPoly::big_g())
            }
            Some(b'k') => {
                self.pos += 1;
                self.derivative()
            }
            Some(b) if b.is_ascii_digit() => self.rational(),
            _ => Err(self.error(FACTOR_START, self.found())),
        }
    }

    /// After `k`: primes, or `^(` order `)`. A bare `^` followed by a digit
    /// is left for the exponent rule.
    fn derivative(&mut self) -> Result<DiffPoly, ParseError> {
        let mut order = 0usize;
        while self.src.get(self.pos) == Some(&b'\'') {
            order += 1;
            self.pos += 1;
        }
        if order == 0 && self.src.get(self.pos) == Some(&b'^') {
            let save = self.pos;
            self.pos += 1;
            if self.peek() == Some(b'(') {
                self.pos += 1;
                let m = self.nat("derivative order")?;
                self.expect(b')', "')'")?;
                return Ok(DiffPoly::kd(m as usize));
            }
            self.pos = save;
        }
        Ok(DiffPoly::kd(order))
    }

    fn rational(&mut self) -> Result<DiffPoly, ParseError> {
        let num = self.big_nat()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let start = self.pos;
            let den = self.big_nat()?;
            if den.is_zero() {
                self.pos = start;
                return Err(self.error(&["nonzero denominator"], "division by zero"));
            }
            return Ok(DiffPoly::constant(Rational::new(num, den)));
        }
        Ok(DiffPoly::constant(Rational::from_integer(num)))
    }

    fn digits(&mut self, what: &'static str) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(&[what], self.found()));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn big_nat(&mut self) -> Result<BigInt, ParseError> {
        let d = self.digits("number")?;
        Ok(d.parse().expect("digit string"))
    }

    fn nat(&mut self, what: &'static str) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let d = self.digits(what)?;
        match d.parse::<u32>() {
            Ok(v) if v <= MAX_EXPONENT => Ok(v),
            _ => {
                self.pos = start;
                Err(self.error(&[what], format!("{what} {d} exceeds {MAX_EXPONENT}")))
            }
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.error(&["'+'", "'-'", "'*'", "end of input"], self.found())),
        }
    }
}

/// Parses a curvature polynomial.
pub fn parse(text: &str) -> Result<DiffPoly, ParseError> {
    let mut p = Parser::new(text);
    let out = p.expr()?;
    p.finish()?;
    Ok(out)
}

/// Parses a variation field written `f | g`.
pub fn parse_field(text: &str) -> Result<VariationField, ParseError> {
    let Some(bar) = text.find('|') else {
        return Err(ParseError {
            offset: text.len() + 1,
            expected: vec!["'|'"],
            message: "a field is written 'tangential | normal'".into(),
        });
    };
    let f = parse(&text[..bar])?;
    let g = parse(&text[bar + 1..]).map_err(|mut e| {
        e.offset += bar + 1;
        e
    })?;
    Ok(VariationField::new(f, g))
}

/// Parses `int(f)`; a bare polynomial is accepted as its own integrand.
pub fn parse_functional(text: &str) -> Result<Functional, ParseError> {
    let trimmed = text.trim_start();
    let lead = text.len() - trimmed.len();
    if let Some(rest) = trimmed.strip_prefix("int") {
        let inner = rest.trim();
        if inner.starts_with('(') && inner.ends_with(')') {
            let open = lead + 3 + (rest.len() - rest.trim_start().len());
            let body = &inner[1..inner.len() - 1];
            return parse(body).map(Functional::new).map_err(|mut e| {
                e.offset += open + 1;
                e
            });
        }
    }
    parse(text).map(Functional::new)
}

fn write_rational(out: &mut String, c: &Rational) {
    if c.denom().is_one() {
        out.push_str(&c.numer().to_string());
    } else {
        out.push_str(&format!("{}/{}", c.numer(), c.denom()));
    }
}

fn write_variable(out: &mut String, order: usize) {
    match order {
        0..=3 => {
            out.push('k');
            for _ in 0..order {
                out.push('\'');
            }
        }
        m => out.push_str(&format!("k^({m})")),
    }
}

fn write_monomial(out: &mut String, m: &Monomial) {
    let mut first = true;
    let mut sep = |out: &mut String| {
        if !first {
            out.push(' ');
        }
        first = false;
    };
    if m.g() > 0 {
        sep(out);
        out.push('G');
        if m.g() > 1 {
            out.push_str(&format!("^{}", m.g()));
        }
    }
    for (order, e) in m.factors() {
        sep(out);
        write_variable(out, order);
        if e > 1 {
            out.push_str(&format!("^{e}"));
        }
    }
}

/// Canonical text of `p`.
pub fn print(p: &DiffPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = c.abs();
        if m.is_constant() && m.g() == 0 {
            write_rational(&mut out, &mag);
            continue;
        }
        if !mag.is_one() {
            write_rational(&mut out, &mag);
            out.push(' ');
        }
        write_monomial(&mut out, m);
    }
    out
}

pub fn print_field(v: &VariationField) -> String {
    format!("{} | {}", print(v.f()), print(v.g()))
}

pub fn print_functional(f: &Functional) -> String {
    format!("int({})", print(f.representative()))
}
