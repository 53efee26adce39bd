use num_bigint::BigInt;

use super::{MPoly, PolyRing};
use crate::numbers::{FieldElem, Rational};
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("unexpected character `{ch}` at byte {pos}")]
    UnexpectedChar { ch: char, pos: usize },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected token at byte {0}")]
    UnexpectedToken(usize),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("division by a non-constant or zero polynomial at byte {0}")]
    BadDivision(usize),
    #[error("exponent at byte {0} is not a small nonnegative integer")]
    BadExponent(usize),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = bytes[start..i].iter().collect();
            out.push((start, Tok::Num(text.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_') {
                i += 1;
            }
            out.push((start, Tok::Ident(bytes[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(ParseError::UnexpectedChar { ch: c, pos: i });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a PolyRing,
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(usize::MAX, |(o, _)| *o)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MPoly<FieldElem>, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MPoly<FieldElem>, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc * self.unary()?;
            } else if self.peek() == Some(&Tok::Op('/')) {
                let at = self.offset();
                self.pos += 1;
                let d = self.unary()?;
                let inv = d
                    .as_constant()
                    .and_then(|c| c.inverse())
                    .ok_or(ParseError::BadDivision(at))?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<MPoly<FieldElem>, ParseError> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<MPoly<FieldElem>, ParseError> {
        let base = self.atom()?;
        if self.eat('^') {
            let at = self.offset();
            match self.toks.get(self.pos) {
                Some((_, Tok::Num(n))) => {
                    let e: u32 = n.try_into().map_err(|_| ParseError::BadExponent(at))?;
                    self.pos += 1;
                    Ok(base.pow(e))
                }
                Some(_) => Err(ParseError::BadExponent(at)),
                None => Err(ParseError::UnexpectedEnd),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MPoly<FieldElem>, ParseError> {
        let at = self.offset();
        let tok = self.toks.get(self.pos).cloned().ok_or(ParseError::UnexpectedEnd)?.1;
        self.pos += 1;
        match tok {
            Tok::Num(n) => Ok(self.ring.constant(FieldElem::from_rational(Rational::from_integer(n)))),
            Tok::Ident(name) if name == "zeta" => Ok(self.ring.constant(FieldElem::zeta())),
            Tok::Ident(name) => self.ring.try_var(&name).map_err(|_| ParseError::UnknownVariable(name)),
            Tok::Op('(') => {
                let e = self.expr()?;
                if !self.eat(')') {
                    return match self.peek() {
                        None => Err(ParseError::UnexpectedEnd),
                        Some(_) => Err(ParseError::UnexpectedToken(self.offset())),
                    };
                }
                Ok(e)
            }
            Tok::Op(_) => Err(ParseError::UnexpectedToken(at)),
        }
    }
}

pub(super) fn parse_poly(ring: &PolyRing, text: &str) -> Result<MPoly<FieldElem>, ParseError> {
    let mut p = Parser { ring, toks: lex(text)?, pos: 0 };
    if p.toks.is_empty() {
        return Err(ParseError::UnexpectedEnd);
    }
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(ParseError::UnexpectedToken(p.offset()));
    }
    Ok(e)
}

/// Parses a field element such as `3/2+2*zeta`.
pub fn parse_constant(text: &str) -> Result<FieldElem, ParseError> {
    let ring = PolyRing::new::<&str>(&[]);
    let p = parse_poly(&ring, text)?;
    Ok(p.as_constant().unwrap_or_else(FieldElem::zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::rat;

    #[test]
    fn constants() {
        assert_eq!(parse_constant("-1-zeta").unwrap(), FieldElem::from_ints(-1, -1));
        assert_eq!(parse_constant("3/2+2*zeta").unwrap(), FieldElem::new(rat(3, 2), rat(2, 1)));
        assert_eq!(parse_constant("zeta^3").unwrap(), FieldElem::from_ints(1, 0));
        assert_eq!(parse_constant("(8+zeta^2)*(8+zeta)").unwrap(), FieldElem::from_ints(57, 0));
    }

    #[test]
    fn errors() {
        let r = PolyRing::new(&["x"]);
        assert_eq!(r.parse("y"), Err(ParseError::UnknownVariable("y".into())));
        assert!(matches!(r.parse("x/x"), Err(ParseError::BadDivision(_))));
        assert!(matches!(r.parse("x^"), Err(ParseError::UnexpectedEnd)));
        assert!(matches!(r.parse("x^y"), Err(ParseError::BadExponent(_))));
        assert!(matches!(r.parse("(x"), Err(ParseError::UnexpectedEnd)));
        assert!(matches!(r.parse("x $"), Err(ParseError::UnexpectedChar { ch: '$', .. })));
        assert!(matches!(r.parse("x )"), Err(ParseError::UnexpectedToken(_))));
        assert!(matches!(r.parse(""), Err(ParseError::UnexpectedEnd)));
    }

    #[test]
    fn precedence() {
        let r = PolyRing::new(&["x", "y"]);
        assert_eq!(r.parse("-x^2").unwrap(), -(r.var::<FieldElem>("x").pow(2)));
        assert_eq!(r.parse("3/2*x").unwrap(), r.var::<FieldElem>("x").scale(&FieldElem::new(rat(3, 2), rat(0, 1))));
        assert_eq!(r.parse("2*(x+y)^2").unwrap(), r.parse("2*x^2 + 4*x*y + 2*y^2").unwrap());
    }
}
