//! Ideal text grammar.
//!
//! ```text
//! ideal    := monomial (',' monomial)*   |  '0'  |  ''
//! monomial := '1' | factor ('*'? factor)*
//! factor   := var ('^' int)?
//! var      := 'x' | 'y' | 'z' | 'x' int
//! ```
//!
//! Whitespace is ignored. The letter style `x, y, z` and the indexed style
//! `x1, x2, ...` cannot be mixed within one ideal. Canonical output uses
//! letters for up to three variables and indices beyond that.

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::ideal::{minimalize, MonomialIdeal};

const LETTERS: [&str; 3] = ["x", "y", "z"];

pub fn variable_name(n: usize, var: usize) -> String {
    if n <= 3 {
        LETTERS[var].to_string()
    } else {
        format!("x{}", var + 1)
    }
}

pub fn format_monomial(e: &Exponent) -> String {
    let n = e.n();
    let mut parts = Vec::new();
    for (i, &c) in e.0.iter().enumerate() {
        match c {
            0 => {}
            1 => parts.push(variable_name(n, i)),
            _ => parts.push(format!("{}^{}", variable_name(n, i), c)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Style {
    Letters,
    Indexed,
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    style: Option<Style>,
}

/// A factor `(variable index, power)`, position of the variable token.
type Factor = (usize, u32, usize);

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn int(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii digits")
            .parse::<u32>()
            .or_else(|_| self.err("integer out of range"))
    }

    fn set_style(&mut self, style: Style) -> Result<()> {
        match self.style {
            Some(s) if s != style => self.err("cannot mix x,y,z with indexed variables"),
            _ => {
                self.style = Some(style);
                Ok(())
            }
        }
    }

    fn factor(&mut self) -> Result<Factor> {
        let at = self.pos;
        let var = match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                // no whitespace allowed inside an indexed name
                if self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
                    self.set_style(Style::Indexed)?;
                    let idx = self.int()?;
                    if idx == 0 {
                        return self.err("variable indices start at 1");
                    }
                    idx as usize - 1
                } else {
                    self.set_style(Style::Letters)?;
                    0
                }
            }
            Some(b'y') => {
                self.pos += 1;
                self.set_style(Style::Letters)?;
                1
            }
            Some(b'z') => {
                self.pos += 1;
                self.set_style(Style::Letters)?;
                2
            }
            Some(c) => return self.err(format!("unexpected `{}`", c as char)),
            None => return self.err("unexpected end of input"),
        };
        let power = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.int()?
        } else {
            1
        };
        Ok((var, power, at))
    }

    fn monomial(&mut self) -> Result<Vec<Factor>> {
        if self.peek() == Some(b'1') {
            self.pos += 1;
            return Ok(Vec::new());
        }
        let mut factors = vec![self.factor()?];
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    factors.push(self.factor()?);
                }
                Some(b'x' | b'y' | b'z') => factors.push(self.factor()?),
                _ => return Ok(factors),
            }
        }
    }
}

pub fn parse_ideal(text: &str, n: Option<usize>) -> Result<MonomialIdeal> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        style: None,
    };
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "0" {
        return match n {
            Some(n) => Ok(MonomialIdeal::zero(n)),
            None => Ok(MonomialIdeal::zero(3)),
        };
    }
    let mut monomials = vec![p.monomial()?];
    while let Some(c) = p.peek() {
        if c != b',' {
            return p.err(format!("unexpected `{}`", c as char));
        }
        p.pos += 1;
        monomials.push(p.monomial()?);
    }

    let max_var = monomials
        .iter()
        .flatten()
        .map(|&(v, _, _)| v + 1)
        .max()
        .unwrap_or(0);
    let n = match (n, p.style) {
        (Some(n), _) => n,
        (None, Some(Style::Indexed)) => max_var,
        (None, _) => 3,
    };
    if n == 0 {
        return Err(Error::InvalidParameter("need at least one variable".into()));
    }
    let mut exps = Vec::with_capacity(monomials.len());
    for m in monomials {
        let mut e = vec![0u32; n];
        for (v, pow, at) in m {
            if v >= n {
                return Err(Error::Parse {
                    position: at,
                    message: format!("variable index {} exceeds {n} variables", v + 1),
                });
            }
            e[v] += pow;
        }
        exps.push(Exponent(e));
    }
    minimalize(exps, n)
}
