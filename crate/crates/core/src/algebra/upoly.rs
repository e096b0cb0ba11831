//! Polynomials in u with coefficients in Q(q,t).
//!
//! Summation pipelines accumulate here so that every gcd stays
//! bivariate: u never enters a fraction, it only indexes coefficients.
//! When a sum is asserted to be a genuine Laurent polynomial, each
//! coefficient must come out with a monomial denominator; anything else
//! surfaces as `NotPolynomial`.

use std::ops::{Add, Mul, Neg, Sub};

use super::laurent::Laurent;
use super::ratqt::RatQt;
use super::{AlgebraError, Mono};

/// Dense polynomial in u over Q(q,t); index is the u-degree, trailing
/// zeros are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UPoly {
    coeffs: Vec<RatQt>,
}

impl UPoly {
    pub fn zero() -> UPoly {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> UPoly {
        UPoly::constant(RatQt::one())
    }

    pub fn constant(c: RatQt) -> UPoly {
        let mut p = UPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// The variable u.
    pub fn u() -> UPoly {
        UPoly { coeffs: vec![RatQt::zero(), RatQt::one()] }
    }

    /// Build from coefficients, lowest degree first.
    pub fn from_coeffs(coeffs: Vec<RatQt>) -> UPoly {
        let mut p = UPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in u; zero for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> RatQt {
        self.coeffs.get(k).cloned().unwrap_or_else(RatQt::zero)
    }

    pub fn coeffs(&self) -> &[RatQt] {
        &self.coeffs
    }

    pub fn scale(&self, c: &RatQt) -> UPoly {
        UPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> UPoly {
        let mut acc = UPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Split a Laurent polynomial along powers of u; requires u-degree
    /// bounded below by zero.
    pub fn from_laurent(f: &Laurent) -> UPoly {
        UPoly::from_coeffs(
            f.u_coefficients()
                .iter()
                .map(RatQt::from_laurent)
                .collect(),
        )
    }

    /// Reassemble into a single Laurent polynomial; every coefficient
    /// must have a monomial denominator.
    pub fn as_laurent(&self) -> Result<Laurent, AlgebraError> {
        let mut out = Laurent::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            let part = c.as_laurent()?;
            out += &part.mul_mono(Mono::u(k as i32));
        }
        Ok(out)
    }

    /// Long division over the field Q(q,t): returns (quotient, remainder).
    pub fn div_rem(&self, rhs: &UPoly) -> Result<(UPoly, UPoly), AlgebraError> {
        if rhs.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        let db = rhs.degree();
        let lead = rhs.coeffs[db].inv()?;
        let mut rem = self.clone();
        let mut quot = UPoly::zero();
        while !rem.is_zero() && rem.degree() >= db {
            let dr = rem.degree();
            let c = &rem.coeffs[dr] * &lead;
            let mut shifted = vec![RatQt::zero(); dr - db];
            shifted.push(c.clone());
            let mono = UPoly::from_coeffs(shifted);
            quot = &quot + &mono;
            rem = &rem - &(&mono * rhs);
            debug_assert!(rem.is_zero() || rem.degree() < dr);
        }
        Ok((quot, rem))
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect();
        UPoly::from_coeffs(coeffs)
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect();
        UPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut coeffs = vec![RatQt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        UPoly::from_coeffs(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_laurent;

    fn rq(num: &str, den: &str) -> RatQt {
        RatQt::new(parse_laurent(num).unwrap(), parse_laurent(den).unwrap()).unwrap()
    }

    #[test]
    fn division_roundtrip() {
        // f = (u - q)(u - t), divide by (u - q).
        let a = &UPoly::u() - &UPoly::constant(rq("q", "1"));
        let b = &UPoly::u() - &UPoly::constant(rq("t", "1"));
        let prod = &a * &b;
        let (q, r) = prod.div_rem(&a).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, b);
        let (_, r2) = (&prod + &UPoly::one()).div_rem(&a).unwrap();
        assert!(!r2.is_zero());
    }

    #[test]
    fn laurent_roundtrip_and_polynomiality() {
        let f = parse_laurent("u^2 - q*u - t*u - u + q + t").unwrap();
        let p = UPoly::from_laurent(&f);
        assert_eq!(p.degree(), 2);
        assert_eq!(p.as_laurent().unwrap(), f);
        let bad = UPoly::constant(rq("1", "1 - q"));
        assert!(matches!(bad.as_laurent(), Err(AlgebraError::NotPolynomial)));
        // Monomial denominators are fine.
        let unit = UPoly::constant(rq("1", "q*t"));
        assert_eq!(unit.as_laurent().unwrap(), parse_laurent("q^-1*t^-1").unwrap());
    }

    #[test]
    fn arithmetic_matches_expansion() {
        let p = &(&UPoly::u() + &UPoly::one()).pow(2) - &UPoly::one();
        // (u+1)^2 - 1 = u^2 + 2u.
        assert_eq!(p.coeff(0), RatQt::zero());
        assert_eq!(p.coeff(1), RatQt::int(2));
        assert_eq!(p.coeff(2), RatQt::one());
    }
}
