//! Recursive-descent parser for homogeneous polynomial input.
//!
//! Grammar (ASCII): variables x, y, z; unsigned integer literals;
//! operators `+ - * ^` and parentheses; `^` binds tighter than `*`, which
//! binds tighter than `+`/`-`; unary minus is allowed; juxtaposition is
//! not multiplication (`2x` is an error, `2*x` is fine); whitespace is
//! ignored. Decimal literals are rejected — coefficients are exact.
//!
//! Intermediate values may be inhomogeneous (e.g. while expanding a
//! product of mixed-degree factors); homogeneity is enforced on the final
//! value, and violations report the two offending degrees.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use std::collections::BTreeMap;

use super::Form;
use crate::scalar::Scalar;

/// Hard safety bound on any intermediate degree, to keep hostile input
/// (`x^999999`) from allocating huge coefficient vectors. The CLI applies
/// its own, much smaller, configurable cap on top.
pub const MAX_PARSE_DEGREE: usize = 512;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown variable '{var}' at position {pos}: only x, y, z are allowed")]
    UnknownVariable { pos: usize, var: char },
    #[error("decimal literal at position {pos}: coefficients must be exact integers")]
    DecimalLiteral { pos: usize },
    #[error("inhomogeneous polynomial: mixes degrees {lower} and {higher}")]
    Inhomogeneous { lower: usize, higher: usize },
    #[error("degree {attempted} exceeds the cap of {cap}")]
    DegreeCap { attempted: usize, cap: usize },
}

/// Parses with the default safety cap of [`MAX_PARSE_DEGREE`].
pub fn parse_form(text: &str) -> Result<Form, ParseError> {
    parse_form_with_cap(text, MAX_PARSE_DEGREE)
}

/// Parses and rejects any intermediate degree above `cap`.
pub fn parse_form_with_cap(text: &str, cap: usize) -> Result<Form, ParseError> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        cap,
    };
    let poly = p.expr()?;
    p.expect_end()?;
    poly.into_form()
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Int(BigInt),
    Var(usize), // 0 = x, 1 = y, 2 = z
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let pos = i + 1; // 1-based for messages
        match bytes[i] {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => {
                out.push((pos, Tok::Plus));
                i += 1;
            }
            b'-' => {
                out.push((pos, Tok::Minus));
                i += 1;
            }
            b'*' => {
                out.push((pos, Tok::Star));
                i += 1;
            }
            b'^' => {
                out.push((pos, Tok::Caret));
                i += 1;
            }
            b'(' => {
                out.push((pos, Tok::LParen));
                i += 1;
            }
            b')' => {
                out.push((pos, Tok::RParen));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'.' {
                    return Err(ParseError::DecimalLiteral { pos: i + 1 });
                }
                let lit = &text[start..i];
                out.push((pos, Tok::Int(lit.parse::<BigInt>().unwrap())));
            }
            b'.' => return Err(ParseError::DecimalLiteral { pos }),
            b'x' => {
                out.push((pos, Tok::Var(0)));
                i += 1;
            }
            b'y' => {
                out.push((pos, Tok::Var(1)));
                i += 1;
            }
            b'z' => {
                out.push((pos, Tok::Var(2)));
                i += 1;
            }
            c if c.is_ascii_alphabetic() => {
                return Err(ParseError::UnknownVariable {
                    pos,
                    var: c as char,
                });
            }
            c => {
                return Err(ParseError::Syntax {
                    pos,
                    message: format!("unexpected character '{}'", c as char),
                });
            }
        }
    }
    Ok(out)
}

/// A possibly inhomogeneous polynomial: one form per occurring degree.
struct Poly {
    parts: BTreeMap<usize, Form>,
}

impl Poly {
    fn zero() -> Poly {
        Poly {
            parts: BTreeMap::new(),
        }
    }

    fn from_form(f: Form) -> Poly {
        let mut parts = BTreeMap::new();
        if !f.is_zero() {
            parts.insert(f.degree(), f);
        }
        Poly { parts }
    }

    fn constant(v: BigInt) -> Poly {
        Poly::from_form(Form::monomial(0, 0, 0, Scalar::from_integer(v)))
    }

    fn variable(i: usize) -> Poly {
        let exps = [(1, 0, 0), (0, 1, 0), (0, 0, 1)][i];
        Poly::from_form(Form::monomial(
            exps.0,
            exps.1,
            exps.2,
            Scalar::from_integer(BigInt::from(1)),
        ))
    }

    fn add(mut self, rhs: Poly) -> Poly {
        for (d, f) in rhs.parts {
            match self.parts.remove(&d) {
                None => {
                    self.parts.insert(d, f);
                }
                Some(g) => {
                    let s = g.add(&f);
                    if !s.is_zero() {
                        self.parts.insert(d, s);
                    }
                }
            }
        }
        self
    }

    fn neg(mut self) -> Poly {
        for f in self.parts.values_mut() {
            *f = f.neg();
        }
        self
    }

    fn mul(&self, rhs: &Poly, cap: usize) -> Result<Poly, ParseError> {
        let mut acc = Poly::zero();
        for (da, fa) in &self.parts {
            for (db, fb) in &rhs.parts {
                let d = da + db;
                if d > cap {
                    return Err(ParseError::DegreeCap {
                        attempted: d,
                        cap,
                    });
                }
                acc = acc.add(Poly::from_form(fa.multiply(fb)));
            }
        }
        Ok(acc)
    }

    fn pow(&self, e: usize, cap: usize) -> Result<Poly, ParseError> {
        if let Some(&max_d) = self.parts.keys().next_back() {
            if max_d.saturating_mul(e) > cap {
                return Err(ParseError::DegreeCap {
                    attempted: max_d.saturating_mul(e),
                    cap,
                });
            }
        }
        let mut acc = Poly::constant(BigInt::from(1));
        for _ in 0..e {
            acc = acc.mul(self, cap)?;
        }
        Ok(acc)
    }

    fn into_form(mut self) -> Result<Form, ParseError> {
        match self.parts.len() {
            0 => Ok(Form::zero(0)),
            1 => Ok(self.parts.pop_first().unwrap().1),
            _ => {
                let mut degs = self.parts.keys();
                let lower = *degs.next().unwrap();
                let higher = *degs.next().unwrap();
                Err(ParseError::Inhomogeneous { lower, higher })
            }
        }
    }
}

struct Parser {
    tokens: Vec<(usize, Tok)>,
    pos: usize,
    cap: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(usize, Tok)> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<(usize, Tok)> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn end_pos(&self) -> usize {
        self.tokens.last().map_or(1, |(p, _)| p + 1)
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some((pos, tok)) => Err(ParseError::Syntax {
                pos: *pos,
                message: format!("unexpected {}", describe(tok)),
            }),
        }
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = match self.peek() {
            Some((_, Tok::Minus)) => {
                self.next();
                self.term()?.neg()
            }
            Some((_, Tok::Plus)) => {
                self.next();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some((_, Tok::Plus)) => {
                    self.next();
                    acc = acc.add(self.term()?);
                }
                Some((_, Tok::Minus)) => {
                    self.next();
                    acc = acc.add(self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some((_, Tok::Star)) => {
                    self.next();
                    let rhs = self.factor()?;
                    acc = acc.mul(&rhs, self.cap)?;
                }
                // a value token right after a value is juxtaposition
                Some(&(pos, Tok::Int(_))) | Some(&(pos, Tok::Var(_))) | Some(&(pos, Tok::LParen)) => {
                    return Err(ParseError::Syntax {
                        pos,
                        message: "juxtaposition is not multiplication; use '*'".into(),
                    });
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly, ParseError> {
        if let Some((_, Tok::Minus)) = self.peek() {
            self.next();
            return Ok(self.factor()?.neg());
        }
        let base = self.base()?;
        if let Some((_, Tok::Caret)) = self.peek() {
            self.next();
            let (pos, tok) = self.next().ok_or_else(|| ParseError::Syntax {
                pos: self.end_pos(),
                message: "expected an exponent after '^'".into(),
            })?;
            let Tok::Int(e) = tok else {
                return Err(ParseError::Syntax {
                    pos,
                    message: format!("expected an exponent after '^', found {}", describe(&tok)),
                });
            };
            if e.is_negative() {
                return Err(ParseError::Syntax {
                    pos,
                    message: "negative exponents are not allowed".into(),
                });
            }
            let e = e.to_usize().ok_or(ParseError::DegreeCap {
                attempted: usize::MAX,
                cap: self.cap,
            })?;
            return base.pow(e, self.cap);
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Poly, ParseError> {
        let (pos, tok) = self.next().ok_or_else(|| ParseError::Syntax {
            pos: self.end_pos(),
            message: "unexpected end of input".into(),
        })?;
        match tok {
            Tok::Int(v) => Ok(Poly::constant(v)),
            Tok::Var(i) => Ok(Poly::variable(i)),
            Tok::LParen => {
                let inner = self.expr()?;
                match self.next() {
                    Some((_, Tok::RParen)) => Ok(inner),
                    Some((p, t)) => Err(ParseError::Syntax {
                        pos: p,
                        message: format!("expected ')', found {}", describe(&t)),
                    }),
                    None => Err(ParseError::Syntax {
                        pos: self.end_pos(),
                        message: "unclosed parenthesis".into(),
                    }),
                }
            }
            other => Err(ParseError::Syntax {
                pos,
                message: format!("unexpected {}", describe(&other)),
            }),
        }
    }
}

fn describe(tok: &Tok) -> String {
    match tok {
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::Int(v) => format!("number {v}"),
        Tok::Var(i) => format!("variable '{}'", ["x", "y", "z"][*i]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::from_int;

    #[test]
    fn parses_basic_forms() {
        let conic = parse_form("x^2+y^2+z^2").unwrap();
        assert_eq!(conic.degree(), 2);
        assert_eq!(conic.coeff_at(2, 0, 0), &from_int(1));
        assert_eq!(conic.coeff_at(1, 1, 0), &from_int(0));
        let f = parse_form(" - 3*x * y ^ 2 + z^3 ").unwrap();
        assert_eq!(f.degree(), 3);
        assert_eq!(f.coeff_at(1, 2, 0), &from_int(-3));
        assert_eq!(f.coeff_at(0, 0, 3), &from_int(1));
    }

    #[test]
    fn braid_product_expands() {
        let braid = parse_form("x*y*z*(x-y)*(x-z)*(y-z)").unwrap();
        assert_eq!(braid.degree(), 6);
        // expansion: xyz(x−y)(x−z)(y−z) = x^3y^2z − x^3yz^2 − x^2y^3z
        //            + x^2yz^3 + xy^3z^2 − xy^2z^3
        assert_eq!(braid.coeff_at(3, 2, 1), &from_int(1));
        assert_eq!(braid.coeff_at(3, 1, 2), &from_int(-1));
        assert_eq!(braid.coeff_at(2, 3, 1), &from_int(-1));
        assert_eq!(braid.coeff_at(2, 1, 3), &from_int(1));
        assert_eq!(braid.coeff_at(1, 3, 2), &from_int(1));
        assert_eq!(braid.coeff_at(1, 2, 3), &from_int(-1));
        assert_eq!(braid.coeff_at(2, 2, 2), &from_int(0));
    }

    #[test]
    fn rejects_inhomogeneous_input() {
        assert_eq!(
            parse_form("x^2+y^3"),
            Err(ParseError::Inhomogeneous {
                lower: 2,
                higher: 3
            })
        );
        assert_eq!(
            parse_form("(x+y^2)*(x^2+y)"),
            Err(ParseError::Inhomogeneous {
                lower: 2,
                higher: 3
            })
        );
        // cancellation may restore homogeneity
        assert!(parse_form("(x^2+y^3) - y^3 + z^2").is_ok());
    }

    #[test]
    fn rejects_bad_syntax() {
        assert!(matches!(
            parse_form("2x"),
            Err(ParseError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_form("x+"),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_form("(x+y"),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_form("x^y"),
            Err(ParseError::Syntax { pos: 3, .. })
        ));
        assert_eq!(
            parse_form("x+w^2"),
            Err(ParseError::UnknownVariable { pos: 3, var: 'w' })
        );
        assert_eq!(
            parse_form("1.5*x"),
            Err(ParseError::DecimalLiteral { pos: 2 })
        );
        assert!(matches!(
            parse_form("x^600"),
            Err(ParseError::DegreeCap { .. })
        ));
    }

    #[test]
    fn unary_and_nested_signs() {
        let f = parse_form("-x^2 - -y^2").unwrap();
        assert_eq!(f.coeff_at(2, 0, 0), &from_int(-1));
        assert_eq!(f.coeff_at(0, 2, 0), &from_int(1));
        let g = parse_form("3*-x*y").unwrap();
        assert_eq!(g.coeff_at(1, 1, 0), &from_int(-3));
    }

    #[test]
    fn zero_and_constants() {
        let z = parse_form("0").unwrap();
        assert!(z.is_zero());
        assert_eq!(z.degree(), 0);
        let c = parse_form("(2+3)^2").unwrap();
        assert_eq!(c.degree(), 0);
        assert_eq!(c.coeff_at(0, 0, 0), &from_int(25));
        let cancel = parse_form("x^2 - x^2").unwrap();
        assert!(cancel.is_zero());
    }
}
