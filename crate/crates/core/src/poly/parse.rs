//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := coeff ('*'? factor)* | factor ('*' factor)*
//! factor := ident ('^' uint)? | '(' expr ')' ('^' uint)?
//! coeff  := uint | uint '/' uint
//! ```
//!
//! Whitespace is insignificant. Over `F_p` integer literals reduce mod `p`.

use std::sync::Arc;

use num_bigint::BigInt;

use super::{Monomial, Polynomial, Ring};
use crate::error::{Error, Result};

const MAX_GROUP_POWER: u32 = 1000;

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    ring: &'a Arc<Ring>,
}

pub(super) fn parse_polynomial(text: &str, ring: &Arc<Ring>) -> Result<Polynomial> {
    let mut parser = Parser {
        chars: text.chars().collect(),
        pos: 0,
        ring,
    };
    let poly = parser.expr()?;
    parser.skip_ws();
    if let Some(c) = parser.peek() {
        return Err(parser.error(format!("unexpected character {c:?}")));
    }
    Ok(poly)
}

impl Parser<'_> {
    fn location(&self, pos: usize) -> (usize, usize) {
        let mut line = 1;
        let mut column = 1;
        for &c in &self.chars[..pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        (line, column)
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> Error {
        let (line, column) = self.location(pos);
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        self.error_at(self.pos, message)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    /// Next non-whitespace character, without consuming it.
    fn lookahead(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        match self.lookahead() {
            Some('-') => {
                negate = true;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.lookahead() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc.add_unchecked(&self.term()?);
                }
                Some('-') => {
                    self.pos += 1;
                    acc = acc.add_unchecked(&self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = match self.lookahead() {
            Some(c) if c.is_ascii_digit() => self.coeff()?,
            _ => self.factor()?,
        };
        loop {
            match self.lookahead() {
                Some('*') => {
                    self.pos += 1;
                    let next = match self.lookahead() {
                        Some(c) if c.is_ascii_digit() => self.coeff()?,
                        _ => self.factor()?,
                    };
                    acc = acc.mul_unchecked(&next);
                }
                Some(c) if c.is_ascii_alphabetic() || c == '(' => {
                    acc = acc.mul_unchecked(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an unsigned integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("digit string"))
    }

    fn coeff(&mut self) -> Result<Polynomial> {
        let start = self.pos;
        let num = self.uint()?;
        let den = if self.lookahead() == Some('/') {
            self.pos += 1;
            self.uint()?
        } else {
            BigInt::from(1)
        };
        let field = self.ring.field();
        let c = field
            .from_ratio(&num, &den)
            .map_err(|_| self.error_at(start, format!("denominator {den} vanishes in {field}")))?;
        Ok(Polynomial::constant(self.ring, c))
    }

    fn exponent(&mut self) -> Result<Option<u32>> {
        if self.lookahead() != Some('^') {
            return Ok(None);
        }
        self.pos += 1;
        if self.lookahead() == Some('-') {
            return Err(self.error("exponent must be a nonnegative integer"));
        }
        let start = self.pos;
        let e = self.uint()?;
        let e: u32 = e
            .try_into()
            .map_err(|_| self.error_at(start, "exponent too large"))?;
        Ok(Some(e))
    }

    fn factor(&mut self) -> Result<Polynomial> {
        match self.lookahead() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.lookahead() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                let start = self.pos;
                match self.exponent()? {
                    Some(e) if e > MAX_GROUP_POWER => {
                        Err(self.error_at(start, "exponent of a parenthesized group too large"))
                    }
                    Some(e) => Ok(inner.pow(e)),
                    None => Ok(inner),
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self
                    .peek()
                    .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let index = self
                    .ring
                    .var_index(&name)
                    .ok_or_else(|| self.error_at(start, format!("unknown variable {name:?}")))?;
                let e = self.exponent()?.unwrap_or(1);
                Ok(Polynomial::monomial(
                    self.ring,
                    Monomial::var_power(self.ring.nvars(), index, e),
                ))
            }
            Some(c) => Err(self.error(format!("unexpected character {c:?}"))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, FieldElement};
    use crate::poly::{MonomialOrder, Term};
    use proptest::prelude::*;

    fn ring(vars: &[&str], field: Field) -> Arc<Ring> {
        Ring::new(vars, field, MonomialOrder::DegRevLex).unwrap()
    }

    #[test]
    fn storch_generator() {
        let r = ring(&["X", "Y"], Field::prime(2).unwrap());
        let f = Polynomial::parse("X^2+Y^2", &r).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.to_string(), "X^2 + Y^2");
    }

    #[test]
    fn coefficient_arithmetic() {
        let q = ring(&["X"], Field::Rationals);
        assert_eq!(
            Polynomial::parse("3/2*X - X", &q).unwrap().to_string(),
            "1/2*X"
        );
        let f5 = ring(&["X"], Field::prime(5).unwrap());
        assert_eq!(
            Polynomial::parse("X^2 + 5*X^2", &f5).unwrap().to_string(),
            "X^2"
        );
    }

    #[test]
    fn implicit_products_and_groups() {
        let q = ring(&["x", "y"], Field::Rationals);
        let a = Polynomial::parse("2 x y^2", &q).unwrap();
        assert_eq!(a.to_string(), "2*x*y^2");
        let b = Polynomial::parse("(x+y)^2 - (x - y)(x + y)", &q).unwrap();
        assert_eq!(b.to_string(), "2*x*y + 2*y^2");
        assert!(Polynomial::parse("0", &q).unwrap().is_zero());
        assert_eq!(Polynomial::parse("-x", &q).unwrap().to_string(), "-x");
    }

    #[test]
    fn errors_carry_locations() {
        let q = ring(&["x", "y"], Field::Rationals);
        match Polynomial::parse("x + z", &q) {
            Err(Error::Parse {
                line,
                column,
                message,
            }) => {
                assert_eq!((line, column), (1, 5));
                assert!(message.contains("unknown variable"));
            }
            other => panic!("unexpected {other:?}"),
        }
        match Polynomial::parse("x +\n y^-2", &q) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(Polynomial::parse("x +", &q).is_err());
        assert!(Polynomial::parse("x y)", &q).is_err());
        assert!(Polynomial::parse("1/0", &q).is_err());
        assert!(Polynomial::parse("", &q).is_err());
    }

    fn field_strategy() -> impl Strategy<Value = Field> {
        prop_oneof![
            Just(Field::prime(2).unwrap()),
            Just(Field::prime(32003).unwrap()),
            Just(Field::Rationals),
        ]
    }

    fn coefficient(field: Field, n: i64, d: i64) -> FieldElement {
        match field {
            Field::Rationals => field.from_ratio(&n.into(), &d.into()).unwrap(),
            _ => field.from_i64(n),
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn print_parse_roundtrip(
            field in field_strategy(),
            terms in proptest::collection::vec(
                ((-50i64..50, 1i64..7), proptest::collection::vec(0u32..4, 3)), 0..8)
        ) {
            let r = ring(&["x", "y", "z1"], field);
            let terms = terms
                .into_iter()
                .map(|((n, d), e)| (coefficient(field, n, d), Monomial::new(e)))
                .collect();
            let f = Polynomial::from_terms(&r, terms).unwrap();
            let text = f.to_string();
            let g = Polynomial::parse(&text, &r).unwrap();
            prop_assert_eq!(&g, &f);
            // canonical structure
            for w in g.terms().windows(2) {
                prop_assert_eq!(r.order().cmp(&w[0].monomial, &w[1].monomial),
                                std::cmp::Ordering::Greater);
            }
            prop_assert!(g.terms().iter().all(|t: &Term| !t.coeff.is_zero()));
        }
    }
}
