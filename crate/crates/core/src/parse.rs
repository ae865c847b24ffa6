//! Text grammar for algebra elements.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'] factor)*
//! factor := atom ['^' ['-'] int]
//! atom   := int ['/' int] | 'a' | 'b' | 'c' | 'x' | 'y' | 'z' | '(' expr ')'
//! ```
//!
//! Juxtaposed letters multiply, so `xyx` is the group word x·y·x. Negative powers invert
//! through the determinant criterion and fail for non-units.

use num_bigint::BigInt;

use crate::coeff_ring::{Field, LaurentPoly, Scalar, Var};
use crate::dihedral::Letter;
use crate::error::{Error, Result};
use crate::gamma::{AlgebraElement, GroupElement};
use crate::matrix_rep::try_invert;
use crate::splitting::LinearFactor;

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    field: Field,
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn expr(&mut self) -> Result<AlgebraElement> {
        let mut acc = AlgebraElement::zero(self.field);
        let mut sign = match self.peek() {
            Some('-') => {
                self.bump();
                -1
            }
            Some('+') => {
                self.bump();
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc - t } else { acc + t };
            match self.peek() {
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                _ => return Ok(acc),
            }
            self.bump();
        }
    }

    fn starts_factor(c: char) -> bool {
        c.is_ascii_digit() || matches!(c, 'a' | 'b' | 'c' | 'x' | 'y' | 'z' | '(')
    }

    fn term(&mut self) -> Result<AlgebraElement> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Some(c) if Self::starts_factor(c) => acc = &acc * &self.factor()?,
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<AlgebraElement> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.bump();
        let negative = if self.peek() == Some('-') {
            self.bump();
            true
        } else {
            false
        };
        let at = self.pos;
        let n = self.integer()?;
        let n: u32 = n
            .try_into()
            .map_err(|_| Error::Parse { pos: at, msg: "exponent too large".into() })?;
        let base = if negative {
            try_invert(&base).map_err(|e| Error::Parse {
                pos: at,
                msg: format!("cannot invert: {e}"),
            })?
        } else {
            base
        };
        Ok(base.pow(n))
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        Ok(self.src[start..self.pos].parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<AlgebraElement> {
        let at = {
            self.skip_ws();
            self.pos
        };
        let c = self.peek().ok_or_else(|| self.err("unexpected end of input"))?;
        if c.is_ascii_digit() {
            let num = self.integer()?;
            let s = if self.peek() == Some('/') {
                self.bump();
                let den = self.integer()?;
                Scalar::from_ratio(self.field, &num, &den).map_err(|e| Error::Parse {
                    pos: at,
                    msg: e.to_string(),
                })?
            } else {
                Scalar::from_bigint(self.field, &num)
            };
            return Ok(AlgebraElement::from_poly(LaurentPoly::constant(s)));
        }
        self.bump();
        let f = self.field;
        let var = |v| AlgebraElement::from_poly(LaurentPoly::var(f, v));
        match c {
            'a' => Ok(var(Var::A)),
            'b' => Ok(var(Var::B)),
            'c' => Ok(var(Var::C)),
            'x' => Ok(AlgebraElement::group(f, GroupElement::x())),
            'y' => Ok(AlgebraElement::group(f, GroupElement::y())),
            'z' => Ok(AlgebraElement::group(f, GroupElement::z())),
            '(' => {
                let e = self.expr()?;
                match self.bump() {
                    Some(')') => Ok(e),
                    _ => Err(self.err("expected ')'")),
                }
            }
            other => Err(Error::UnknownSymbol { pos: at, symbol: other }),
        }
    }
}

/// Parses an element of KΓ over `field`.
pub fn parse_element(text: &str, field: Field) -> Result<AlgebraElement> {
    let mut p = Parser {
        src: text,
        pos: 0,
        field,
    };
    let e = p.expr()?;
    match p.peek() {
        None => Ok(e),
        Some(c) if Parser::starts_factor(c) || "+-*^)/".contains(c) => Err(p.err(format!("unexpected {c:?}"))),
        Some(c) => Err(Error::UnknownSymbol { pos: p.pos, symbol: c }),
    }
}

/// Parses an element of KH (no x, y or z).
pub fn parse_poly(text: &str, field: Field) -> Result<LaurentPoly> {
    let e = parse_element(text, field)?;
    if !e.support().iter().all(GroupElement::in_h) {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("{text:?} is not in KH"),
        });
    }
    Ok(e.component(crate::coeff_ring::Klein::E).clone())
}

/// Parses a single group element such as `a^-1*c*x` or `xyx`.
pub fn parse_group_element(text: &str) -> Result<GroupElement> {
    let e = parse_element(text, Field::Rational)?;
    let mut terms = e.terms();
    match (terms.next(), terms.next()) {
        (Some((g, s)), None) if s.is_one() => Ok(g),
        _ => Err(Error::Parse {
            pos: 0,
            msg: format!("{text:?} is not a group element"),
        }),
    }
}

/// Parses linear factors written `(alpha; beta; x|y)`, separated by whitespace or commas.
pub fn parse_factors(text: &str, field: Field) -> Result<Vec<LinearFactor>> {
    let mut out = Vec::new();
    let mut rest = text;
    let mut offset = 0;
    loop {
        let trimmed = rest.trim_start_matches(|c: char| c.is_whitespace() || c == ',');
        offset += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            return Ok(out);
        }
        if !trimmed.starts_with('(') {
            return Err(Error::Parse {
                pos: offset,
                msg: "expected '(' starting a factor".into(),
            });
        }
        let close = matching_paren(trimmed).ok_or(Error::Parse {
            pos: offset,
            msg: "unbalanced parentheses".into(),
        })?;
        let inner = &trimmed[1..close];
        let parts: Vec<&str> = inner.split(';').collect();
        if parts.len() != 3 {
            return Err(Error::Parse {
                pos: offset,
                msg: "a factor needs three fields: (alpha; beta; x|y)".into(),
            });
        }
        let alpha = parse_poly(parts[0], field)?;
        let beta = parse_poly(parts[1], field)?;
        let gamma: Letter = parts[2].trim().parse()?;
        out.push(LinearFactor::new(alpha, beta, gamma)?);
        offset += close + 1;
        rest = &trimmed[close + 1..];
    }
}

fn matching_paren(s: &str) -> Option<usize> {
    let mut depth = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff_ring::Klein;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn basic_forms() {
        let e = parse_element("1+x", q()).unwrap();
        assert_eq!(e, AlgebraElement::one(q()) + AlgebraElement::group(q(), GroupElement::x()));
        let m = parse_element("a^2*b^-1*z", q()).unwrap();
        assert_eq!(m, AlgebraElement::group(q(), GroupElement::new([2, -1, 0], Klein::Z)));
        assert_eq!(parse_group_element("xyxy").unwrap(), GroupElement::h([0, 0, 1]));
        assert_eq!(parse_group_element("yx").unwrap(), GroupElement::new([-1, 1, -1], Klein::Z));
        assert_eq!(parse_group_element("x^-1").unwrap(), GroupElement::x().inv());
    }

    #[test]
    fn round_trips() {
        for s in ["1 - 2*x + z", "-3*a^2*b^-1*c", "1/2*a*x - b^-1*y", "0", "a^-1*b*c^-1*z"] {
            let e = parse_element(s, q()).unwrap();
            assert_eq!(e.to_string(), s);
        }
    }

    #[test]
    fn errors_have_positions() {
        assert!(matches!(parse_element("1 + w", q()), Err(Error::UnknownSymbol { pos: 4, symbol: 'w' })));
        assert!(matches!(parse_element("(1 + x", q()), Err(Error::Parse { .. })));
        assert!(matches!(parse_element("1 +", q()), Err(Error::Parse { pos: 3, .. })));
        assert!(parse_element("(1+x)^-1", q()).is_err());
        assert!(parse_element("1/0", q()).is_err());
    }

    #[test]
    fn factors() {
        let fs = parse_factors("(1; 1; x) (1; 1-a; y), (1; -a; x)", q()).unwrap();
        assert_eq!(fs.len(), 3);
        assert_eq!(fs[1].gamma(), Letter::Y);
        assert!(parse_factors("(1; x; x)", q()).is_err());
        assert!(parse_factors("(1; 1)", q()).is_err());
    }

    #[test]
    fn residues() {
        let f = Field::Prime(3);
        assert_eq!(parse_element("4*x", f).unwrap().to_string(), "x");
        assert_eq!(parse_element("x + x + x", f).unwrap().to_string(), "0");
    }
}
