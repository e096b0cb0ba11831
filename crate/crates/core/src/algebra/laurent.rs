//! Sparse Laurent polynomials in q, t, u with rational coefficients.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, Mono, Substitution};

/// Arbitrary-precision rational, the coefficient domain everywhere.
pub type QQ = BigRational;

/// A sparse Laurent polynomial in q, t, u.
///
/// Invariants: no zero coefficients are stored, and the map iterates in
/// the fixed monomial order of [`Mono`]. Negative exponents are allowed
/// throughout; polynomiality in a particular variable is only asserted
/// where a caller checks it.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Laurent {
    terms: BTreeMap<Mono, QQ>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Laurent::monomial(Mono::ONE, QQ::one())
    }

    /// The constant polynomial c.
    pub fn constant(c: QQ) -> Self {
        Laurent::monomial(Mono::ONE, c)
    }

    /// The constant polynomial n (integer).
    pub fn int(n: i64) -> Self {
        Laurent::constant(QQ::from_integer(BigInt::from(n)))
    }

    /// The single-term polynomial c * mono.
    pub fn monomial(mono: Mono, c: QQ) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        Laurent { terms }
    }

    /// The monomial with coefficient 1.
    pub fn mono(mono: Mono) -> Self {
        Laurent::monomial(mono, QQ::one())
    }

    /// The variable q.
    pub fn q() -> Self {
        Laurent::mono(Mono::q(1))
    }

    /// The variable t.
    pub fn t() -> Self {
        Laurent::mono(Mono::t(1))
    }

    /// The variable u.
    pub fn u() -> Self {
        Laurent::mono(Mono::u(1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Mono::ONE)
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coeff(&self, mono: Mono) -> QQ {
        self.terms.get(&mono).cloned().unwrap_or_else(QQ::zero)
    }

    /// Iterate terms in ascending canonical monomial order.
    pub fn iter(&self) -> impl Iterator<Item = (&Mono, &QQ)> {
        self.terms.iter()
    }

    /// The largest monomial under the fixed order, if nonzero.
    pub fn leading_mono(&self) -> Option<Mono> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the largest monomial, if nonzero.
    pub fn leading_coeff(&self) -> Option<&QQ> {
        self.terms.values().next_back()
    }

    /// True if no term involves u.
    pub fn is_u_free(&self) -> bool {
        self.terms.keys().all(|m| m.eu == 0)
    }

    /// Add c * mono in place, dropping the term if it cancels.
    pub fn add_term(&mut self, mono: Mono, c: &QQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, c.clone());
            }
        }
    }

    /// Multiply by a single term c * mono.
    pub fn mul_term(&self, mono: Mono, c: &QQ) -> Laurent {
        if c.is_zero() {
            return Laurent::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (*m + mono, a * c))
            .collect();
        Laurent { terms }
    }

    /// Multiply by a bare monomial.
    pub fn mul_mono(&self, mono: Mono) -> Laurent {
        self.mul_term(mono, &QQ::one())
    }

    /// Scale by a rational constant.
    pub fn scale(&self, c: &QQ) -> Laurent {
        self.mul_term(Mono::ONE, c)
    }

    pub fn pow(&self, e: u32) -> Laurent {
        let mut acc = Laurent::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Apply a substitution. Monomials remap exactly; terms that collide
    /// after the remap are combined. `u -> 0` on a negative u-exponent is
    /// singular and reported as an error.
    pub fn substitute(&self, s: Substitution) -> Result<Laurent, AlgebraError> {
        let mut out = Laurent::zero();
        for (m, c) in &self.terms {
            let mapped = match s {
                Substitution::TOne => Some(Mono::new(m.eq, 0, m.eu)),
                Substitution::QOne => Some(Mono::new(0, m.et, m.eu)),
                Substitution::TQInverse => Some(Mono::new(m.eq - m.et, 0, m.eu)),
                Substitution::TInverse => Some(Mono::new(m.eq, -m.et, m.eu)),
                Substitution::UZero => {
                    if m.eu > 0 {
                        None
                    } else if m.eu < 0 {
                        return Err(AlgebraError::SingularSubstitution);
                    } else {
                        Some(*m)
                    }
                }
                Substitution::UTPower(n) => {
                    Some(Mono::new(m.eq, m.et + n * m.eu, 0))
                }
                Substitution::SwapQT => Some(Mono::new(m.et, m.eq, m.eu)),
            };
            if let Some(mm) = mapped {
                out.add_term(mm, c);
            }
        }
        Ok(out)
    }

    /// Evaluate at exact rational values of (q, t, u). Negative exponents
    /// require the corresponding value to be nonzero.
    pub fn eval(&self, qv: &QQ, tv: &QQ, uv: &QQ) -> QQ {
        fn powq(base: &QQ, e: i32) -> QQ {
            if e >= 0 {
                num_traits::pow::pow(base.clone(), e as usize)
            } else {
                num_traits::pow::pow(base.clone(), (-e) as usize).recip()
            }
        }
        let mut acc = QQ::zero();
        for (m, c) in &self.terms {
            acc += c * powq(qv, m.eq) * powq(tv, m.et) * powq(uv, m.eu);
        }
        acc
    }

    /// The componentwise minimum exponent triple over all terms, used to
    /// clear negative exponents before polynomial routines.
    pub fn min_exponents(&self) -> Mono {
        let mut min = Mono::ONE;
        let mut first = true;
        for m in self.terms.keys() {
            if first {
                min = *m;
                first = false;
            } else {
                min.eq = min.eq.min(m.eq);
                min.et = min.et.min(m.et);
                min.eu = min.eu.min(m.eu);
            }
        }
        min
    }

    /// Largest exponent of u appearing (0 for the zero polynomial).
    pub fn u_degree(&self) -> i32 {
        self.terms.keys().map(|m| m.eu).max().unwrap_or(0)
    }

    /// Split into coefficients of powers of u: the k-th entry is the
    /// u-free Laurent polynomial multiplying u^k. Requires e_u >= 0.
    pub fn u_coefficients(&self) -> Vec<Laurent> {
        let deg = self.u_degree();
        let mut out = vec![Laurent::zero(); deg as usize + 1];
        for (m, c) in &self.terms {
            assert!(m.eu >= 0, "u_coefficients on negative u-exponent");
            out[m.eu as usize].add_term(Mono::new(m.eq, m.et, 0), c);
        }
        out
    }

    /// Content signum: the sign of the leading coefficient (0 if zero).
    pub fn leading_sign(&self) -> i32 {
        match self.leading_coeff() {
            None => 0,
            Some(c) => {
                if c.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c);
        }
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            let neg = -c.clone();
            out.add_term(*m, &neg);
        }
        out
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (*m, -c.clone()))
            .collect();
        Laurent { terms }
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let (small, large) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = Laurent::zero();
        for (m, c) in &small.terms {
            for (m2, c2) in &large.terms {
                out.add_term(*m + *m2, &(c * c2));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qq(n: i64) -> QQ {
        QQ::from_integer(BigInt::from(n))
    }

    #[test]
    fn one_minus_q_times_one_plus_q() {
        let a = &Laurent::one() - &Laurent::q();
        let b = &Laurent::one() + &Laurent::q();
        let prod = &a * &b;
        let expect = &Laurent::one() - &Laurent::mono(Mono::q(2));
        assert_eq!(prod, expect);
    }

    #[test]
    fn cancellation_drops_terms() {
        let a = &Laurent::q() - &Laurent::q();
        assert!(a.is_zero());
        assert_eq!(a.num_terms(), 0);
    }

    #[test]
    fn substitution_t_to_q_inverse() {
        // q*t -> 1, t^2 -> q^-2.
        let f = &Laurent::mono(Mono::qt(1, 1)) + &Laurent::mono(Mono::t(2));
        let g = f.substitute(Substitution::TQInverse).unwrap();
        let expect = &Laurent::one() + &Laurent::mono(Mono::q(-2));
        assert_eq!(g, expect);
    }

    #[test]
    fn substitution_u_to_t_power() {
        let f = Laurent::mono(Mono::new(1, 0, 2));
        let g = f.substitute(Substitution::UTPower(3)).unwrap();
        assert_eq!(g, Laurent::mono(Mono::qt(1, 6)));
    }

    #[test]
    fn eval_with_negative_exponents() {
        let f = &Laurent::mono(Mono::q(-1)) + &Laurent::t();
        let v = f.eval(&qq(2), &qq(5), &qq(0));
        assert_eq!(v, QQ::new(BigInt::from(11), BigInt::from(2)));
    }
}
