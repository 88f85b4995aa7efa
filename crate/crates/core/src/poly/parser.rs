//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := ('+' | '-')? term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ('^' uint)?
//! atom   := integer | ident | '(' expr ')' | '-' factor
//! ```
//!
//! Division is only allowed by a nonzero constant, so `3/2*x` and
//! `(x+y)/4` are fine but `x/y` is rejected. Everything is expanded
//! eagerly into a sparse [`Polynomial`].

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use super::{Monomial, MonomialOrder, Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { position: usize, name: String },
    #[error("negative exponent at position {position}")]
    NegativeExponent { position: usize },
    #[error("division by a non-constant expression at position {position}")]
    NonConstantDivisor { position: usize },
    #[error("division by zero at position {position}")]
    DivisionByZero { position: usize },
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
}

impl ParseError {
    pub fn position(&self) -> Option<usize> {
        match self {
            ParseError::Syntax { position, .. }
            | ParseError::UnknownVariable { position, .. }
            | ParseError::NegativeExponent { position }
            | ParseError::NonConstantDivisor { position }
            | ParseError::DivisionByZero { position } => Some(*position),
            ParseError::DuplicateVariable(_) => None,
        }
    }
}

/// Parses `text` over the given variables into canonical expanded form.
pub fn parse_polynomial(text: &str, variables: &[&str]) -> Result<Polynomial, ParseError> {
    let vars: Arc<[String]> = variables.iter().map(|s| s.to_string()).collect();
    for (i, v) in vars.iter().enumerate() {
        if vars[..i].contains(v) {
            return Err(ParseError::DuplicateVariable(v.clone()));
        }
    }
    let mut parser = Parser { src: text.as_bytes(), pos: 0, vars };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.syntax("unexpected trailing input"));
    }
    Ok(p)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: Arc<[String]>,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax(&self, message: &str) -> ParseError {
        ParseError::Syntax { position: self.pos, message: message.to_string() }
    }

    fn constant(&self, c: Rational) -> Polynomial {
        Polynomial::monomial_in(self.vars.clone(), Monomial::one(self.vars.len()), c)
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add_unchecked(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.add_unchecked(&self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul_unchecked(&self.factor()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let divisor = self.factor()?;
                    if !divisor.is_constant() {
                        return Err(ParseError::NonConstantDivisor { position: at });
                    }
                    let c = divisor.constant_term();
                    if c.is_zero() {
                        return Err(ParseError::DivisionByZero { position: at });
                    }
                    acc = acc.scale(&c.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = {
                self.skip_ws();
                self.pos
            };
            if self.peek() == Some(b'-') {
                return Err(ParseError::NegativeExponent { position: at });
            }
            let n = self.integer()?;
            let e = n.to_u32().ok_or_else(|| ParseError::Syntax {
                position: at,
                message: "exponent too large".to_string(),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.syntax("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(self.constant(Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let idx = self
                    .vars
                    .iter()
                    .position(|v| v == name)
                    .ok_or_else(|| ParseError::UnknownVariable { position: start, name: name.to_string() })?;
                let m = Monomial::pure_power(self.vars.len(), idx, 1);
                Ok(Polynomial::monomial_in(self.vars.clone(), m, Rational::from_integer(1.into())))
            }
            Some(_) => Err(self.syntax("unexpected character")),
            None => Err(self.syntax("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(digits.parse().expect("digits"))
    }
}

impl Polynomial {
    /// Parses with [`parse_polynomial`] and re-sorts under `order`.
    pub fn parse_with_order(text: &str, variables: &[&str], order: MonomialOrder) -> Result<Polynomial, ParseError> {
        Ok(parse_polynomial(text, variables)?.with_order(order))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_rational;

    const XY: &[&str] = &["x", "y"];

    fn coeff(p: &Polynomial, e: &[u32]) -> Rational {
        p.coefficient(&Monomial::new(e.to_vec()))
    }

    #[test]
    fn expands_x9_at_two() {
        let p = parse_polynomial("x^4 + y^4 + 2*x^2*y^2", XY).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(coeff(&p, &[4, 0]), parse_rational("1").unwrap());
        assert_eq!(coeff(&p, &[2, 2]), parse_rational("2").unwrap());
    }

    #[test]
    fn expands_binomial() {
        let p = parse_polynomial("(x+y)^2", XY).unwrap();
        assert_eq!(p, parse_polynomial("x^2 + 2*x*y + y^2", XY).unwrap());
    }

    #[test]
    fn rational_literal_is_exact() {
        let p = parse_polynomial("x^4 + y^4 + (3/2)*x^2*y^2", XY).unwrap();
        assert_eq!(coeff(&p, &[2, 2]), parse_rational("3/2").unwrap());
        let q = parse_polynomial("x^4 + y^4 + 3/2*x^2*y^2", XY).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn unary_minus_and_nesting() {
        let p = parse_polynomial("-(x - y)*-(x + y)", XY).unwrap();
        assert_eq!(p, parse_polynomial("x^2 - y^2", XY).unwrap());
        assert_eq!(parse_polynomial("x^0", XY).unwrap().to_string(), "1");
    }

    #[test]
    fn errors_report_position() {
        match parse_polynomial("x + * y", XY) {
            Err(ParseError::Syntax { position, .. }) => assert_eq!(position, 4),
            other => panic!("{other:?}"),
        }
        assert_eq!(
            parse_polynomial("x + z", XY),
            Err(ParseError::UnknownVariable { position: 4, name: "z".into() })
        );
        assert_eq!(parse_polynomial("x^-2", XY), Err(ParseError::NegativeExponent { position: 2 }));
        assert!(matches!(parse_polynomial("x/y", XY), Err(ParseError::NonConstantDivisor { .. })));
        assert!(matches!(parse_polynomial("x/(1-1)", XY), Err(ParseError::DivisionByZero { .. })));
        assert!(matches!(parse_polynomial("(x+y", XY), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_polynomial("x y", XY), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_polynomial("", XY), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_polynomial("x", &["x", "x"]), Err(ParseError::DuplicateVariable(_))));
    }
}
