//! A small expression language for elements of `Sym`.
//!
//! ```text
//! sum   := prod (('+' | '-') prod)*
//! prod  := unary (('*' | '.') unary)*        '*' internal, '.' outer product
//! unary := '-' unary | number ['/' number] [atom] | atom
//! atom  := S[i,j,..] | R[..] | Lambda[n] | zeta[n] | phi[n] | pi[n]
//!        | D[n,k] | P[n,k] | sharp(sum) | (sum)
//! ```

use num_traits::One;

use super::derangement::{d_nk, neutral_p, sharp};
use super::element::NsfElement;
use super::lie::{hausdorff, solomon, zeta};
use crate::combinatorics::Composition;
use crate::exact::Rational;
use crate::{Error, Result};

#[derive(Clone, Debug)]
enum Val {
    Scalar(Rational),
    Elem(NsfElement),
}

impl Val {
    fn into_elem(self) -> NsfElement {
        match self {
            Val::Scalar(c) => NsfElement::one().scale(&c),
            Val::Elem(e) => e,
        }
    }
}

/// Parses and evaluates an expression.
pub fn parse_element(src: &str) -> Result<NsfElement> {
    let toks: Vec<char> = src.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser { toks, pos: 0 };
    let v = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v.into_elem())
}

struct Parser {
    toks: Vec<char>,
    pos: usize,
}

impl Parser {
    fn err(&self, m: &str) -> Error {
        let rest: String = self.toks[self.pos.min(self.toks.len())..].iter().collect();
        Error::Parse(format!("{m} at {rest:?}"))
    }

    fn peek(&self) -> Option<char> {
        self.toks.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected {c:?}")))
        }
    }

    fn sum(&mut self) -> Result<Val> {
        let mut acc = self.prod()?;
        loop {
            if self.eat('+') {
                let r = self.prod()?;
                acc = add(acc, r, false)?;
            } else if self.eat('-') {
                let r = self.prod()?;
                acc = add(acc, r, true)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn prod(&mut self) -> Result<Val> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                let r = self.unary()?;
                acc = mul(acc, r, true)?;
            } else if self.eat('.') {
                let r = self.unary()?;
                acc = mul(acc, r, false)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Val> {
        if self.eat('-') {
            let v = self.unary()?;
            return mul(Val::Scalar(-Rational::one()), v, false);
        }
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                let c = if self.eat('/') {
                    let d = self.number()?;
                    if d == 0 {
                        return Err(self.err("zero denominator"));
                    }
                    Rational::new(n.into(), d.into())
                } else {
                    Rational::from_integer(n.into())
                };
                // a coefficient written in front of an atom: `1/3 S[1,1,1]`
                if self.peek().is_some_and(|c| c.is_ascii_alphabetic() || c == '(') {
                    let v = self.unary()?;
                    return mul(Val::Scalar(c), v, false);
                }
                Ok(Val::Scalar(c))
            }
            Some('(') => {
                self.pos += 1;
                let v = self.sum()?;
                self.expect(')')?;
                Ok(v)
            }
            _ => self.atom(),
        }
    }

    fn number(&mut self) -> Result<i64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.toks[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("expected a number"))
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        self.toks[start..self.pos].iter().collect()
    }

    fn index_list(&mut self) -> Result<Vec<usize>> {
        self.expect('[')?;
        let mut v = Vec::new();
        if self.eat(']') {
            return Ok(v);
        }
        loop {
            v.push(self.number()? as usize);
            if self.eat(']') {
                return Ok(v);
            }
            self.expect(',')?;
        }
    }

    fn single(&mut self) -> Result<usize> {
        let v = self.index_list()?;
        match v.as_slice() {
            [n] => Ok(*n),
            _ => Err(self.err("expected one index")),
        }
    }

    fn atom(&mut self) -> Result<Val> {
        let name = self.ident();
        let e = match name.as_str() {
            "S" => NsfElement::s(Composition::try_new(self.index_list()?)?),
            "R" => NsfElement::r(Composition::try_new(self.index_list()?)?),
            "Lambda" => NsfElement::lambda_n(self.single()?),
            "zeta" => nonzero_degree(self.single()?).map(zeta)?,
            "phi" => nonzero_degree(self.single()?).map(|n| solomon(n).get(n))?,
            "pi" => nonzero_degree(self.single()?).map(|n| hausdorff(n).get(n))?,
            "D" | "P" => {
                let v = self.index_list()?;
                let [n, k] = v[..] else { return Err(self.err("expected [n,k]")) };
                if name == "D" {
                    if k > n {
                        return Err(self.err("need k <= n"));
                    }
                    d_nk(n, k)
                } else {
                    neutral_p(n, Some(k))
                }
            }
            "sharp" => {
                self.expect('(')?;
                let v = self.sum()?;
                self.expect(')')?;
                sharp(&v.into_elem())
            }
            "" => return Err(self.err("expected an atom")),
            other => return Err(Error::Parse(format!("unknown name {other:?}"))),
        };
        Ok(Val::Elem(e))
    }
}

fn nonzero_degree(n: usize) -> Result<usize> {
    if n == 0 {
        Err(Error::Parse("degree must be positive".into()))
    } else {
        Ok(n)
    }
}

fn add(a: Val, b: Val, negate: bool) -> Result<Val> {
    let sign = if negate { -Rational::one() } else { Rational::one() };
    match (a, b) {
        (Val::Scalar(x), Val::Scalar(y)) => Ok(Val::Scalar(x + sign * y)),
        (a, b) => {
            let (a, b) = (a.into_elem(), b.into_elem());
            if a.degree() != b.degree() && !a.is_zero() && !b.is_zero() {
                return Err(Error::Parse("sum of elements of different degrees".into()));
            }
            Ok(Val::Elem(&a + &b.scale(&sign)))
        }
    }
}

fn mul(a: Val, b: Val, internal: bool) -> Result<Val> {
    Ok(match (a, b) {
        (Val::Scalar(x), Val::Scalar(y)) => Val::Scalar(x * y),
        (Val::Scalar(x), Val::Elem(e)) | (Val::Elem(e), Val::Scalar(x)) => Val::Elem(e.scale(&x)),
        (Val::Elem(x), Val::Elem(y)) => {
            if internal {
                if x.degree() != y.degree() {
                    return Err(Error::Parse("internal product of different degrees".into()));
                }
                Val::Elem(x.internal_product(&y))
            } else {
                Val::Elem(x.product(&y))
            }
        }
    })
}
