//! Canonical text format for polynomials.
//!
//! Grammar:
//!
//! ```text
//! poly    := term (" + " term | " - " term)*
//! term    := coeff | coeff "*" factors | factors
//! coeff   := integer | integer "/" positive-integer
//! factors := factor ("*" factor)*
//! factor  := ("q" | "X" | "Y") ["^" signed-integer]
//! ```
//!
//! Formatting is bit-exact: terms are emitted in canonical display order
//! (descending `X` degree, then descending `Y` degree, then ascending
//! `q`-exponent), omitted exponents mean 1, and unit coefficients are
//! omitted except on the constant term. The parser is lenient about
//! whitespace but otherwise accepts exactly this grammar, and reports the
//! byte position of the first offending character.

use std::cmp::Reverse;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, Monomial, MAX_Q_EXPONENT, MAX_XY_EXPONENT};
use crate::rational::Rational;

/// Sort key for emission: `X` descending, `Y` descending, `q` ascending.
fn display_key(m: &Monomial) -> (Reverse<u32>, Reverse<u32>, i64) {
    (Reverse(m.x_exp()), Reverse(m.y_exp()), m.q_exp())
}

impl LaurentPoly {
    /// Terms in the order used by the text format and the JSON output:
    /// descending `X` degree, then descending `Y` degree, then ascending
    /// `q`-exponent.
    pub fn display_ordered_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut terms: Vec<(&Monomial, &Rational)> = self.terms().collect();
        terms.sort_by_key(|(m, _)| display_key(m));
        terms
    }
}

fn write_factors(f: &mut fmt::Formatter<'_>, m: &Monomial, mut lead: bool) -> fmt::Result {
    let parts: [(&str, i64); 3] = [
        ("X", m.x_exp() as i64),
        ("Y", m.y_exp() as i64),
        ("q", m.q_exp()),
    ];
    for (name, e) in parts {
        if e == 0 {
            continue;
        }
        if !lead {
            write!(f, "*")?;
        }
        lead = false;
        if e == 1 {
            write!(f, "{}", name)?;
        } else {
            write!(f, "{}^{}", name, e)?;
        }
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms = self.display_ordered_terms();
        for (i, (m, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                write_factors(f, m, true)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn parse_digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a digit");
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(s.parse::<BigInt>().unwrap())
    }

    fn parse_signed_int(&mut self) -> Result<i64> {
        let sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1i64
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        let at = self.pos;
        let digits = self.parse_digits()?;
        match i64::try_from(digits) {
            Ok(v) => Ok(sign * v),
            Err(_) => Err(Error::Parse {
                pos: at,
                msg: "exponent out of range".into(),
            }),
        }
    }

    fn parse_factor(&mut self, x: &mut i64, y: &mut i64, q: &mut i64) -> Result<()> {
        let var_pos = self.pos;
        let var = match self.bump() {
            Some(v @ (b'q' | b'X' | b'Y')) => v,
            _ => {
                self.pos = var_pos;
                return self.err("expected one of 'q', 'X', 'Y'");
            }
        };
        let exp = if self.peek() == Some(b'^') {
            self.pos += 1;
            let exp_pos = self.pos;
            let e = self.parse_signed_int()?;
            if var != b'q' && e < 0 {
                return Err(Error::Parse {
                    pos: exp_pos,
                    msg: format!("negative exponent for {}", var as char),
                });
            }
            e
        } else {
            1
        };
        let slot = match var {
            b'X' => x,
            b'Y' => y,
            _ => q,
        };
        *slot += exp;
        Ok(())
    }

    /// One term; returns the (monomial, signed coefficient) pair.
    fn parse_term(&mut self, negate: bool) -> Result<(Monomial, Rational)> {
        self.skip_ws();
        let mut coeff = Rational::one();
        let mut saw_coeff = false;
        if matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            let numer = self.parse_digits()?;
            let denom = if self.peek() == Some(b'/') {
                self.pos += 1;
                let den_pos = self.pos;
                let d = self.parse_digits()?;
                if d == BigInt::from(0) {
                    return Err(Error::Parse {
                        pos: den_pos,
                        msg: "zero denominator".into(),
                    });
                }
                d
            } else {
                BigInt::from(1)
            };
            coeff = Rational::new(numer, denom);
            saw_coeff = true;
        }

        let mut x = 0i64;
        let mut y = 0i64;
        let mut q = 0i64;
        let mut saw_factor = false;
        if saw_coeff {
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.parse_factor(&mut x, &mut y, &mut q)?;
                saw_factor = true;
            }
        } else {
            self.parse_factor(&mut x, &mut y, &mut q)?;
            saw_factor = true;
        }
        if saw_factor {
            while self.peek() == Some(b'*') {
                self.pos += 1;
                self.parse_factor(&mut x, &mut y, &mut q)?;
            }
        }
        if !saw_coeff && !saw_factor {
            return self.err("expected a term");
        }

        if x > MAX_XY_EXPONENT as i64 || y > MAX_XY_EXPONENT as i64 || q.abs() > MAX_Q_EXPONENT {
            return self.err("exponent out of range");
        }
        let m = Monomial::new(x as u32, y as u32, q);
        let c = if negate { -coeff } else { coeff };
        Ok((m, c))
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        p.skip_ws();
        if p.peek().is_none() {
            return p.err("empty polynomial");
        }
        let mut terms = Vec::new();
        let mut negate = match p.peek() {
            Some(b'-') => {
                p.pos += 1;
                true
            }
            Some(b'+') => {
                p.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            terms.push(p.parse_term(negate)?);
            p.skip_ws();
            match p.bump() {
                None => break,
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                Some(_) => {
                    p.pos -= 1;
                    return p.err("expected '+', '-' or end of input");
                }
            }
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::step_weight;

    fn roundtrip(s: &str) -> String {
        s.parse::<LaurentPoly>().unwrap().to_string()
    }

    #[test]
    fn parses_weights() {
        let w0: LaurentPoly = "1/2*X + 1/2*Y".parse().unwrap();
        assert_eq!(w0, step_weight(0));
    }

    #[test]
    fn parses_q_powers() {
        let f: LaurentPoly = "q^-3".parse().unwrap();
        assert_eq!(f, LaurentPoly::q_pow(-3));
    }

    #[test]
    fn canonical_order() {
        assert_eq!(roundtrip("Y + X"), "X + Y");
        assert_eq!(roundtrip("q^2 + 1 + q^-2"), "q^-2 + 1 + q^2");
        assert_eq!(roundtrip("Y*q - X*q^-1"), "-X*q^-1 + Y*q");
    }

    #[test]
    fn display_examples() {
        let w01 = &step_weight(0) * &step_weight(1);
        assert_eq!(
            w01.to_string(),
            "1/4*X^2*q + 1/4*X*Y*q^-1 + 1/4*X*Y*q + 1/4*Y^2*q^-1"
        );
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        let f: LaurentPoly = "X - 1".parse().unwrap();
        assert_eq!(f.to_string(), "X - 1");
        assert_eq!(roundtrip("-X"), "-X");
        assert_eq!(roundtrip("3/1"), "3");
    }

    #[test]
    fn format_parse_roundtrip() {
        for s in [
            "0",
            "1",
            "-5/2",
            "X + Y",
            "1/4*X^2*q + 1/4*X*Y*q^-1 + 1/4*X*Y*q + 1/4*Y^2*q^-1",
            "q^-7 - q^7",
            "2*X*Y^3*q^-2 - 1/3*Y",
        ] {
            let f: LaurentPoly = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
            let g: LaurentPoly = f.to_string().parse().unwrap();
            assert_eq!(f, g);
        }
    }

    #[test]
    fn combines_duplicate_terms() {
        let f: LaurentPoly = "X + X".parse().unwrap();
        assert_eq!(f.to_string(), "2*X");
        let g: LaurentPoly = "5 - 5".parse().unwrap();
        assert!(g.is_zero());
        let h: LaurentPoly = "X*X".parse().unwrap();
        assert_eq!(h.to_string(), "X^2");
    }

    #[test]
    fn parse_errors_carry_positions() {
        let cases: [(&str, usize); 6] = [
            ("", 0),
            ("X^-1", 2),
            ("1/0", 2),
            ("X**Y", 2),
            ("X + ", 4),
            ("X ? Y", 2),
        ];
        for (input, want_pos) in cases {
            match input.parse::<LaurentPoly>() {
                Err(Error::Parse { pos, .. }) => {
                    assert_eq!(pos, want_pos, "position for {:?}", input)
                }
                other => panic!("expected parse error for {:?}, got {:?}", input, other),
            }
        }
    }
}
