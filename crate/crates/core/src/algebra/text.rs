//! Text rendering and parsing for Laurent polynomials.
//!
//! The display form lists terms from the largest monomial down, writes
//! exponents as `q^2` or `q^-1`, joins factors with `*`, and omits unit
//! coefficients and unit exponents: `q^2*t - 2*q*u + 1/2`. The parser
//! accepts exactly this grammar (whitespace is ignored), so rendering
//! and parsing round-trip.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::laurent::{Laurent, QQ};
use super::{AlgebraError, Mono};

fn write_mono(out: &mut String, m: Mono) {
    let mut parts: Vec<String> = Vec::new();
    for (name, e) in [("q", m.eq), ("t", m.et), ("u", m.eu)] {
        if e == 1 {
            parts.push(name.to_string());
        } else if e != 0 {
            parts.push(format!("{}^{}", name, e));
        }
    }
    out.push_str(&parts.join("*"));
}

fn write_coeff_abs(out: &mut String, c: &QQ) {
    let n = c.numer().magnitude();
    let d = c.denom();
    if d.is_one() {
        out.push_str(&n.to_string());
    } else {
        out.push_str(&format!("{}/{}", n, d));
    }
}

/// Render a polynomial in the canonical text form.
pub fn render_laurent(f: &Laurent) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let terms: Vec<(&Mono, &QQ)> = f.iter().collect();
    for (idx, (m, c)) in terms.iter().rev().enumerate() {
        let negative = c.is_negative();
        if idx == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let abs_one = c.numer().magnitude().is_one() && c.denom().is_one();
        if m.is_one() {
            write_coeff_abs(&mut out, c);
        } else {
            if !abs_one {
                write_coeff_abs(&mut out, c);
                out.push('*');
            }
            write_mono(&mut out, **m);
        }
    }
    out
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_laurent(self))
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src: src.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> AlgebraError {
        AlgebraError::Parse(format!("{} at byte {}", what, self.pos))
    }

    fn parse_uint(&mut self) -> Result<BigInt, AlgebraError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse::<BigInt>().unwrap())
    }

    fn parse_exponent(&mut self) -> Result<i32, AlgebraError> {
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let n = self.parse_uint()?;
        let v: i32 = n
            .try_into()
            .map_err(|_| AlgebraError::Parse("exponent out of range".to_string()))?;
        Ok(if neg { -v } else { v })
    }

    /// One term: [coefficient] [* ] factor (* factor)* or bare coefficient.
    fn parse_term(&mut self) -> Result<(Mono, QQ), AlgebraError> {
        self.skip_ws();
        let mut coeff = QQ::one();
        let mut saw_coeff = false;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let n = self.parse_uint()?;
            let d = if self.peek() == Some(b'/') {
                self.pos += 1;
                self.parse_uint()?
            } else {
                BigInt::one()
            };
            if d.is_zero() {
                return Err(self.err("zero denominator in coefficient"));
            }
            coeff = QQ::new(n, d);
            saw_coeff = true;
        }
        let mut mono = Mono::ONE;
        let mut saw_var = false;
        loop {
            self.skip_ws();
            if saw_coeff || saw_var {
                // Factors after the first are joined by '*'.
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.skip_ws();
                } else {
                    break;
                }
            }
            let var = match self.peek() {
                Some(b'q') => 0,
                Some(b't') => 1,
                Some(b'u') => 2,
                _ => {
                    if saw_coeff || saw_var {
                        return Err(self.err("expected variable after '*'"));
                    }
                    break;
                }
            };
            self.pos += 1;
            let e = if self.peek() == Some(b'^') {
                self.pos += 1;
                self.parse_exponent()?
            } else {
                1
            };
            match var {
                0 => mono.eq += e,
                1 => mono.et += e,
                _ => mono.eu += e,
            }
            saw_var = true;
        }
        if !saw_coeff && !saw_var {
            return Err(self.err("expected term"));
        }
        Ok((mono, coeff))
    }

    fn parse_sum(&mut self) -> Result<Laurent, AlgebraError> {
        let mut out = Laurent::zero();
        self.skip_ws();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let (mono, coeff) = self.parse_term()?;
            let signed = if sign < 0 { -coeff } else { coeff };
            out.add_term(mono, &signed);
            self.skip_ws();
            sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                None => break,
                _ => return Err(self.err("expected '+' or '-'")),
            };
        }
        Ok(out)
    }
}

/// Parse the canonical text form back into a polynomial.
pub fn parse_laurent(src: &str) -> Result<Laurent, AlgebraError> {
    let mut p = Parser::new(src);
    let out = p.parse_sum()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roundtrip(s: &str) {
        let f = parse_laurent(s).unwrap();
        assert_eq!(render_laurent(&f), s);
    }

    #[test]
    fn renders_fixed_forms() {
        roundtrip("0");
        roundtrip("1");
        roundtrip("-1");
        roundtrip("q + q^-1");
        roundtrip("q^2*t - 2*q*u + 1/2");
        roundtrip("u^2 - q*u - t*u - u + q + t");
        roundtrip("-q^3 + t^-2");
    }

    #[test]
    fn parses_loose_input() {
        let f = parse_laurent(" - 3 * q^2 + t").unwrap();
        assert_eq!(render_laurent(&f), "-3*q^2 + t");
        let g = parse_laurent("q*q*t^-1").unwrap();
        assert_eq!(render_laurent(&g), "q^2*t^-1");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_laurent("q +").is_err());
        assert!(parse_laurent("3/0").is_err());
        assert!(parse_laurent("x + 1").is_err());
        assert!(parse_laurent("q^").is_err());
    }

    #[test]
    fn display_orders_terms_descending() {
        // u has the highest grade contribution here; constant last.
        let f = parse_laurent("1 + u + q + t").unwrap();
        assert_eq!(render_laurent(&f), "u + q + t + 1");
    }
}
