//! Text form `coeff*x1^e1*x2^e2 + ... - ...`.
//!
//! Real coefficients print with 17 significant digits, which makes
//! print-then-parse bit-exact. Complex coefficients print as `(re+imi)`.
//! Variables are `x1..xn`; `x`, `y`, `z` alias `x1..x3` when `n <= 3`, and
//! for `n == 1` the names `u`, `t`, `z` also mean `x1`.

use std::fmt;

use num_complex::Complex64;

use super::monomial::Monomial;
use super::poly::{ComplexPoly, MultiPoly, RealPoly};
use crate::error::{Error, Result};

fn fmt_real(x: f64) -> String {
    format!("{x:.16e}")
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => write!(f, "*x{}", i + 1)?,
            _ => write!(f, "*x{}^{}", i + 1, e)?,
        }
    }
    Ok(())
}

impl fmt::Display for RealPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, &c)) in self.terms().enumerate() {
            match (i, c.is_sign_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{}", fmt_real(c.abs()))?;
            write_monomial(f, m)?;
        }
        Ok(())
    }
}

impl fmt::Display for ComplexPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let sign = if c.im.is_sign_negative() { '-' } else { '+' };
            write!(f, "({}{}{}i)", fmt_real(c.re), sign, fmt_real(c.im.abs()))?;
            write_monomial(f, m)?;
        }
        Ok(())
    }
}

pub fn parse_real_poly(text: &str, ambient_dim: usize) -> Result<RealPoly> {
    let terms = Parser::new(text, ambient_dim).parse()?;
    let mut real = Vec::with_capacity(terms.len());
    for (m, c, pos) in terms {
        if c.im != 0.0 {
            return Err(Error::Parse {
                pos,
                msg: "complex coefficient in a real polynomial".into(),
            });
        }
        real.push((m, c.re));
    }
    MultiPoly::from_terms(ambient_dim, real)
}

pub fn parse_complex_poly(text: &str, ambient_dim: usize) -> Result<ComplexPoly> {
    let terms = Parser::new(text, ambient_dim).parse()?;
    MultiPoly::from_terms(ambient_dim, terms.into_iter().map(|(m, c, _)| (m, c)))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, n: usize) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
            n,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
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

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse(mut self) -> Result<Vec<(Monomial, Complex64, usize)>> {
        let mut out = Vec::new();
        if self.peek().is_none() {
            return self.err("empty polynomial");
        }
        let mut sign = if self.eat(b'-') {
            -1.0
        } else {
            self.eat(b'+');
            1.0
        };
        loop {
            let start = self.pos;
            let (m, c) = self.term()?;
            out.push((m, c * sign, start));
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1.0;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1.0;
                }
                Some(other) => return self.err(format!("unexpected '{}'", other as char)),
            }
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Monomial, Complex64)> {
        let mut coeff = Complex64::new(1.0, 0.0);
        let mut exps = vec![0u32; self.n];
        loop {
            match self.peek() {
                Some(b'(') => coeff *= self.complex()?,
                Some(b) if b.is_ascii_digit() || b == b'.' => coeff *= self.number()?,
                Some(b) if b.is_ascii_alphabetic() => {
                    let var = self.variable()?;
                    let e = if self.eat(b'^') { self.exponent()? } else { 1 };
                    exps[var] += e;
                }
                _ => return self.err("expected a coefficient or variable"),
            }
            if !self.eat(b'*') {
                break;
            }
        }
        Ok((Monomial::new(exps), coeff))
    }

    fn number(&mut self) -> Result<f64> {
        self.skip_ws();
        let start = self.pos;
        let s = self.src;
        let mut i = self.pos;
        while i < s.len() && (s[i].is_ascii_digit() || s[i] == b'.') {
            i += 1;
        }
        if i < s.len() && (s[i] == b'e' || s[i] == b'E') {
            let mut j = i + 1;
            if j < s.len() && (s[j] == b'+' || s[j] == b'-') {
                j += 1;
            }
            if j < s.len() && s[j].is_ascii_digit() {
                while j < s.len() && s[j].is_ascii_digit() {
                    j += 1;
                }
                i = j;
            }
        }
        let text = std::str::from_utf8(&s[start..i]).expect("ascii slice");
        match text.parse::<f64>() {
            Ok(v) => {
                self.pos = i;
                Ok(v)
            }
            Err(_) => self.err(format!("bad number '{text}'")),
        }
    }

    // (re+imi), (re-imi), (imi) or (re)
    fn complex(&mut self) -> Result<Complex64> {
        self.eat(b'(');
        let neg = self.eat(b'-');
        let mut first = self.number()?;
        if neg {
            first = -first;
        }
        if self.eat(b'i') {
            return self.close(Complex64::new(0.0, first));
        }
        let sign = match self.peek() {
            Some(b'+') => 1.0,
            Some(b'-') => -1.0,
            _ => return self.close(Complex64::new(first, 0.0)),
        };
        self.pos += 1;
        let im = self.number()?;
        if !self.eat(b'i') {
            return self.err("expected 'i' after imaginary part");
        }
        self.close(Complex64::new(first, sign * im))
    }

    fn close(&mut self, c: Complex64) -> Result<Complex64> {
        if !self.eat(b')') {
            return self.err("expected ')'");
        }
        Ok(c)
    }

    fn exponent(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii slice");
        text.parse().or_else(|_| {
            self.pos = start;
            self.err("expected a non-negative integer exponent")
        })
    }

    fn variable(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        let name = self.src[self.pos];
        self.pos += 1;
        let digits_start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let var = if self.pos > digits_start {
            if name != b'x' {
                self.pos = start;
                return self.err("indexed variables are written x1, x2, ...");
            }
            let idx: usize = std::str::from_utf8(&self.src[digits_start..self.pos])
                .expect("ascii digits")
                .parse()
                .unwrap_or(0);
            if idx == 0 {
                self.pos = start;
                return self.err("variable indices start at 1");
            }
            idx - 1
        } else {
            match (name, self.n) {
                (b'u' | b't' | b'z', 1) => 0,
                (b'x', _) => 0,
                (b'y', _) => 1,
                (b'z', _) => 2,
                _ => {
                    self.pos = start;
                    return self.err(format!("unknown variable '{}'", name as char));
                }
            }
        };
        if var >= self.n {
            self.pos = start;
            return self.err(format!("variable index {} exceeds dimension {}", var + 1, self.n));
        }
        Ok(var)
    }
}
