//! Text form of polynomials: `term ((+|-) term)*` with
//! `term = [coeff*] var(^exp)? (*var(^exp)?)*` and `var = x<index>`.
//! Whitespace insensitive; coefficients may be reduced fractions `p/q`.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::ring::{Coefficient, Monomial, PolyRing, Polynomial};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Int(BigInt),
    Name(String),
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let bytes: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                tokens.push(Token::Plus);
                i += 1;
            }
            '-' => {
                tokens.push(Token::Minus);
                i += 1;
            }
            '*' => {
                tokens.push(Token::Star);
                i += 1;
            }
            '^' => {
                tokens.push(Token::Caret);
                i += 1;
            }
            '/' => {
                tokens.push(Token::Slash);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = bytes[start..i].iter().collect();
                tokens.push(Token::Int(s.parse().expect("digits")));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_') {
                    i += 1;
                }
                tokens.push(Token::Name(bytes[start..i].iter().collect()));
            }
            other => {
                return Err(Error::Parse {
                    line: 1,
                    msg: format!("unexpected character {other:?} in polynomial"),
                })
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    ring: &'a PolyRing,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: 1,
            msg: msg.into(),
        }
    }

    fn var_index(&self, name: &str) -> Result<usize> {
        for idx in 0..self.ring.num_vars() {
            if self.ring.var_name(idx) == name {
                return Ok(idx);
            }
        }
        Err(self.err(format!("unknown variable {name:?}")))
    }

    fn parse_exponent(&mut self) -> Result<u32> {
        match self.bump() {
            Some(Token::Int(n)) => u32::try_from(&n).map_err(|_| self.err("exponent too large")),
            _ => Err(self.err("expected integer exponent after '^'")),
        }
    }

    /// One term: optional coefficient, then variable powers joined by `*`.
    fn parse_term(&mut self, sign_negative: bool) -> Result<Polynomial> {
        let mut coeff = Coefficient::one();
        let mut mono = Monomial::one(self.ring.num_vars());

        loop {
            match self.peek() {
                Some(Token::Int(_)) => {
                    let Some(Token::Int(n)) = self.bump() else {
                        unreachable!()
                    };
                    let mut value = Coefficient::from_integer(n);
                    if matches!(self.peek(), Some(Token::Slash)) {
                        self.bump();
                        match self.bump() {
                            Some(Token::Int(d)) => {
                                if d == BigInt::from(0) {
                                    return Err(self.err("zero denominator"));
                                }
                                value /= Coefficient::from_integer(d);
                            }
                            _ => return Err(self.err("expected denominator after '/'")),
                        }
                    }
                    coeff *= value;
                }
                Some(Token::Name(_)) => {
                    let Some(Token::Name(name)) = self.bump() else {
                        unreachable!()
                    };
                    let idx = self.var_index(&name)?;
                    let exp = if matches!(self.peek(), Some(Token::Caret)) {
                        self.bump();
                        self.parse_exponent()?
                    } else {
                        1
                    };
                    let mut exps = mono.exps().to_vec();
                    exps[idx] += exp;
                    mono = Monomial::new(exps);
                }
                _ => return Err(self.err("expected coefficient or variable")),
            }
            if matches!(self.peek(), Some(Token::Star)) {
                self.bump();
                continue;
            }
            break;
        }
        if sign_negative {
            coeff = -coeff;
        }
        Ok(Polynomial::from_term(self.ring.num_vars(), mono, coeff))
    }

    fn parse_polynomial(&mut self) -> Result<Polynomial> {
        let mut negative = false;
        match self.peek() {
            Some(Token::Minus) => {
                self.bump();
                negative = true;
            }
            Some(Token::Plus) => {
                self.bump();
            }
            None => return Err(self.err("empty polynomial")),
            _ => {}
        }
        let mut acc = self.parse_term(negative)?;
        while let Some(tok) = self.peek() {
            let neg = match tok {
                Token::Plus => false,
                Token::Minus => true,
                other => return Err(self.err(format!("expected '+' or '-', found {other:?}"))),
            };
            self.bump();
            let term = self.parse_term(neg)?;
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }
}

/// Parse a polynomial in the text grammar; `"0"` yields the zero polynomial.
pub fn parse(input: &str, ring: &PolyRing) -> Result<Polynomial> {
    if input.trim() == "0" {
        return Ok(ring.zero());
    }
    let mut parser = Parser {
        tokens: tokenize(input)?,
        pos: 0,
        ring,
    };
    parser.parse_polynomial()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{render, MonomialOrder};
    use proptest::prelude::*;

    #[test]
    fn parse_basic_forms() {
        let ring = PolyRing::for_vertices(3);
        let f = parse("x1*x3 - x2^2", &ring).unwrap();
        assert_eq!(f.num_terms(), 2);
        let g = parse("  -3/2 * x1 ^ 2 + x4", &ring).unwrap();
        assert_eq!(g.num_terms(), 2);
        assert!(parse("0", &ring).unwrap().is_zero());
        assert!(parse("x9", &ring).is_err());
        assert!(parse("x1 +", &ring).is_err());
    }

    #[test]
    fn render_is_canonical() {
        let ring = PolyRing::for_vertices(3);
        let f = parse("x2^2 - x1*x3", &ring).unwrap();
        assert_eq!(render(&f, &ring, MonomialOrder::GradedRevLex), "x2^2 - x1*x3");
        // structural sum parses the same regardless of term order
        let g = parse("-x1*x3 + x2^2", &ring).unwrap();
        assert_eq!(f, g);
    }

    proptest! {
        // round trip: parse(render(f)) == f under every order
        #[test]
        fn parse_render_round_trip(
            terms in proptest::collection::vec(
                (proptest::collection::vec(0u32..4, 4), -9i64..10),
                0..8,
            )
        ) {
            let ring = PolyRing::for_vertices(3);
            let f = Polynomial::from_terms(
                4,
                terms.into_iter().map(|(e, c)| {
                    (Monomial::new(e), Coefficient::from_integer(c.into()))
                }),
            );
            for ord in [MonomialOrder::GradedRevLex, MonomialOrder::Lex] {
                let text = render(&f, &ring, ord);
                let back = parse(&text, &ring).unwrap();
                prop_assert_eq!(&back, &f);
            }
        }
    }
}
