//! Recursive-descent parser for polynomial expressions with rational coefficients.
//!
//! Accepts `+ - * ^`, parentheses, integer and `p/q` literals and division by a
//! nonzero rational constant; multiplication must be written explicitly.

use num_bigint::BigInt;

use super::poly::{Poly, Vars};
use super::scalar::{Field, Ring, Q};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Tok::Num(s.parse().unwrap()));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a Vars,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = if self.eat('-') {
            self.term()?.neg()
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.power()?);
            } else if self.eat('/') {
                let d = self.power()?;
                let c = d
                    .constant_value()
                    .and_then(|c| c.inv())
                    .ok_or_else(|| Error::Parse("division by a non-constant or zero".into()))?;
                acc = acc.scale(&c);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
                    Ok(base.pow(e))
                }
                other => Err(Error::Parse(format!("expected exponent, found {other:?}"))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Poly::constant_in(self.vars, Q::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if self.vars.index_of(&name).is_none() {
                    return Err(Error::Parse(format!("unknown variable {name}")));
                }
                Ok(Poly::var(self.vars, &name))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(e)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(self.power()?.neg())
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

impl Poly<Q> {
    /// Parses an expression over the given variables.
    pub fn parse(src: &str, vars: &Vars) -> Result<Poly<Q>> {
        let mut p = Parser { toks: tokenize(src)?, pos: 0, vars };
        let e = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
        }
        e.with_vars(vars)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::qf;

    #[test]
    fn parses_nested_expressions() {
        let v = Vars::new(&["T", "x"]);
        let f = Poly::parse("-(T - 1)^2*x + 3/2*T - x^0", &v).unwrap();
        assert_eq!(f.to_string(), "-T^2*x + 2*T*x + 3/2*T - x - 1");
        let g = Poly::parse("15/2*(3*T^4 - 1)", &v).unwrap();
        assert_eq!(g.coefficient_of(&[("T", 4)]), qf(45, 2));
    }

    #[test]
    fn canonical_form_round_trips() {
        let v = Vars::new(&["a", "b", "c"]);
        let f = Poly::parse("a^2*b - 7/3*b*c^2 + c - 5", &v).unwrap();
        assert_eq!(Poly::parse(&f.to_string(), &v).unwrap(), f);
    }

    #[test]
    fn rejects_bad_input() {
        let v = Vars::new(&["x"]);
        assert!(Poly::parse("y + 1", &v).is_err());
        assert!(Poly::parse("x / x", &v).is_err());
        assert!(Poly::parse("(x + 1", &v).is_err());
        assert!(Poly::parse("x $ 1", &v).is_err());
    }
}
