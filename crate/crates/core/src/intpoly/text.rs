//! Text form of polynomials.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! poly := sign? term (('+'|'-') term)*
//! term := int | int '*'? var ('^' uint)? | var ('^' uint)?
//! var  := 'x' | 'q'
//! ```
//!
//! A single polynomial may use only one of the two letters. Canonical output
//! lists descending powers with single spaces around binary operators and no
//! `*`, e.g. `x^2 - 7x + 11`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::IntPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

fn err(pos: usize, msg: impl Into<String>) -> ParseError {
    ParseError { pos, msg: msg.into() }
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Lexer<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }
}

pub(super) fn parse(input: &str) -> Result<IntPoly, ParseError> {
    let mut lx = Lexer { s: input.as_bytes(), pos: 0 };
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut var: Option<u8> = None;
    let mut first = true;
    loop {
        let mut negative = false;
        match lx.peek() {
            None if first => return Err(err(lx.pos, "empty polynomial")),
            None => return Err(err(lx.pos, "expected a term after operator")),
            Some(b'+') | Some(b'-') => {
                negative = lx.peek() == Some(b'-');
                lx.pos += 1;
            }
            Some(_) if first => {}
            Some(c) => return Err(err(lx.pos, format!("expected '+' or '-', found '{}'", c as char))),
        }
        first = false;

        let term_pos = lx.pos;
        let coeff = lx.digits().map(|d| d.parse::<BigInt>().unwrap());
        if coeff.is_some() && lx.peek() == Some(b'*') {
            lx.pos += 1;
            if !matches!(lx.peek(), Some(b'x') | Some(b'q')) {
                return Err(err(lx.pos, "expected variable after '*'"));
            }
        }
        let mut power = 0usize;
        if let Some(c @ (b'x' | b'q')) = lx.peek() {
            if let Some(v) = var {
                if v != c {
                    return Err(err(lx.pos, "mixed variables 'x' and 'q'"));
                }
            }
            var = Some(c);
            lx.pos += 1;
            power = 1;
            if lx.peek() == Some(b'^') {
                lx.pos += 1;
                let at = lx.pos;
                let d = lx.digits().ok_or_else(|| err(at, "expected exponent after '^'"))?;
                power = d.parse().map_err(|_| err(at, "exponent too large"))?;
                if power > 1 << 16 {
                    return Err(err(lx.pos, "exponent too large"));
                }
            }
        } else if coeff.is_none() {
            return Err(err(term_pos, "expected integer or variable"));
        }
        let mut c = coeff.unwrap_or_else(BigInt::one);
        if negative {
            c = -c;
        }
        if coeffs.len() <= power {
            coeffs.resize(power + 1, BigInt::zero());
        }
        coeffs[power] += c;
        if lx.peek().is_none() {
            break;
        }
    }
    Ok(IntPoly::new(coeffs))
}

pub(super) fn format(p: &IntPoly, var: char) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if i == 0 || !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        if i >= 1 {
            out.push(var);
        }
        if i >= 2 {
            out.push('^');
            out.push_str(&i.to_string());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        assert_eq!(parse("x^2 - 7*x + 11").unwrap(), IntPoly::from_i64s(&[11, -7, 1]));
        assert_eq!(parse("q^2-7q+11").unwrap(), IntPoly::from_i64s(&[11, -7, 1]));
        assert_eq!(parse("-x").unwrap(), IntPoly::from_i64s(&[0, -1]));
        assert_eq!(parse("3 + x + x").unwrap(), IntPoly::from_i64s(&[3, 2]));
        assert_eq!(parse("0").unwrap(), IntPoly::zero());
    }

    #[test]
    fn parse_errors_carry_position() {
        assert_eq!(parse("x^2 +").unwrap_err().pos, 5);
        assert_eq!(parse("x + q").unwrap_err().pos, 4);
        assert_eq!(parse("x^").unwrap_err().pos, 2);
        assert_eq!(parse("2x 3").unwrap_err().pos, 3);
        assert!(parse("").is_err());
        assert!(parse("y").is_err());
        assert!(parse("2*").is_err());
    }

    #[test]
    fn format_examples() {
        assert_eq!(format(&IntPoly::from_i64s(&[11, -7, 1]), 'x'), "x^2 - 7x + 11");
        assert_eq!(format(&IntPoly::from_i64s(&[11, -7, 1]), 'q'), "q^2 - 7q + 11");
        assert_eq!(format(&IntPoly::from_i64s(&[0, 0, -1]), 'x'), "-x^2");
        assert_eq!(format(&IntPoly::from_i64s(&[-1, 0, 2]), 'x'), "2x^2 - 1");
        assert_eq!(format(&IntPoly::zero(), 'x'), "0");
        assert_eq!(format(&IntPoly::from_i64s(&[-4]), 'x'), "-4");
    }

    proptest! {
        #[test]
        fn format_then_parse_is_identity(c in proptest::collection::vec(-1000i64..1000, 0..12)) {
            let f = IntPoly::from_i64s(&c);
            prop_assert_eq!(parse(&format(&f, 'x')).unwrap(), f.clone());
            prop_assert_eq!(parse(&format(&f, 'q')).unwrap(), f);
        }
    }
}
