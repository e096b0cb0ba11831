//! The fraction field Q(q,t), kept fully reduced at all times.
//!
//! A value is a pair of u-free Laurent polynomials num/den in canonical
//! form: both have non-negative exponents, no power of q or t divides
//! both, the pair is coprime as polynomials, and the denominator's
//! coefficient on its largest monomial is exactly 1. Equality of values
//! is therefore structural equality of the pairs. Reduction clears the
//! coefficient denominators and runs the integer bivariate gcd, so no
//! rational-coefficient gcd is ever needed.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::{Laurent, QQ};
use super::zpoly::{bi_div_exact, bi_gcd, Zpq};
use super::{AlgebraError, Mono, Substitution};

/// A reduced element of Q(q,t).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatQt {
    num: Laurent,
    den: Laurent,
}

/// Decompose a nonzero polynomial with non-negative exponents into a
/// rational content and a primitive integer polynomial whose top
/// coefficient (highest t row, then highest q) is positive.
fn laurent_to_zpq(f: &Laurent) -> (QQ, Zpq) {
    let mut lcm = BigInt::one();
    for (_, c) in f.iter() {
        lcm = lcm.lcm(c.denom());
    }
    let mut gcd = BigInt::zero();
    for (_, c) in f.iter() {
        gcd = gcd.gcd(&(c.numer() * &lcm / c.denom()));
    }
    let mut rows: Zpq = Vec::new();
    for (m, c) in f.iter() {
        debug_assert!(m.eq >= 0 && m.et >= 0 && m.eu == 0);
        let (et, eq) = (m.et as usize, m.eq as usize);
        if rows.len() <= et {
            rows.resize(et + 1, Vec::new());
        }
        if rows[et].len() <= eq {
            rows[et].resize(eq + 1, BigInt::zero());
        }
        rows[et][eq] = c.numer() * &lcm / c.denom() / &gcd;
    }
    let mut content = QQ::new(gcd, lcm);
    let top_negative = rows
        .last()
        .and_then(|r| r.last())
        .map(|c| c.is_negative())
        .unwrap_or(false);
    if top_negative {
        for row in rows.iter_mut() {
            for c in row.iter_mut() {
                *c = -c.clone();
            }
        }
        content = -content;
    }
    (content, rows)
}

fn zpq_to_laurent(p: &Zpq) -> Laurent {
    let mut out = Laurent::zero();
    for (et, row) in p.iter().enumerate() {
        for (eq, c) in row.iter().enumerate() {
            if !c.is_zero() {
                out.add_term(Mono::qt(eq as i32, et as i32), &QQ::from_integer(c.clone()));
            }
        }
    }
    out
}

/// A gcd of two nonzero u-free polynomials, up to monomial and scalar
/// units; the zero polynomial is absorbed.
pub(crate) fn laurent_gcd(a: &Laurent, b: &Laurent) -> Laurent {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let sa = a.min_exponents();
    let sb = b.min_exponents();
    let (_, pa) = laurent_to_zpq(&a.mul_mono(sa.inv()));
    let (_, pb) = laurent_to_zpq(&b.mul_mono(sb.inv()));
    zpq_to_laurent(&bi_gcd(&pa, &pb))
}

/// Exact quotient a / b of u-free polynomials, allowing a monomial unit
/// and rational scalars; panics if b does not divide a.
pub(crate) fn laurent_div_exact(a: &Laurent, b: &Laurent) -> Laurent {
    if a.is_zero() {
        return Laurent::zero();
    }
    let sa = a.min_exponents();
    let sb = b.min_exponents();
    let (ca, pa) = laurent_to_zpq(&a.mul_mono(sa.inv()));
    let (cb, pb) = laurent_to_zpq(&b.mul_mono(sb.inv()));
    let q = zpq_to_laurent(&bi_div_exact(&pa, &pb));
    q.mul_term(sa - sb, &(ca / cb))
}

impl RatQt {
    /// Build and reduce num/den. Fails only on a zero denominator.
    pub fn new(num: Laurent, den: Laurent) -> Result<RatQt, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        debug_assert!(num.is_u_free() && den.is_u_free(), "RatQt holds q,t only");
        if num.is_zero() {
            return Ok(RatQt { num: Laurent::zero(), den: Laurent::one() });
        }
        // Shift both by the same monomial so exponents are non-negative
        // and at least one of the pair touches exponent zero in each
        // variable.
        let mn = num.min_exponents();
        let md = den.min_exponents();
        let shift = Mono::qt(-mn.eq.min(md.eq), -mn.et.min(md.et));
        let num = num.mul_mono(shift);
        let den = den.mul_mono(shift);
        let (cn, pn) = laurent_to_zpq(&num);
        let (cd, pd) = laurent_to_zpq(&den);
        let g = bi_gcd(&pn, &pd);
        let num = zpq_to_laurent(&bi_div_exact(&pn, &g));
        let den = zpq_to_laurent(&bi_div_exact(&pd, &g));
        let lc = den.leading_coeff().expect("reduced denominator is nonzero").clone();
        let num = num.scale(&(cn / cd / &lc));
        let den = den.scale(&lc.recip());
        Ok(RatQt { num, den })
    }

    pub fn zero() -> RatQt {
        RatQt { num: Laurent::zero(), den: Laurent::one() }
    }

    pub fn one() -> RatQt {
        RatQt { num: Laurent::one(), den: Laurent::one() }
    }

    pub fn int(n: i64) -> RatQt {
        RatQt { num: Laurent::int(n), den: Laurent::one() }
    }

    pub fn from_laurent(f: &Laurent) -> RatQt {
        RatQt::new(f.clone(), Laurent::one()).expect("unit denominator")
    }

    pub fn from_mono(m: Mono) -> RatQt {
        RatQt::from_laurent(&Laurent::mono(m))
    }

    pub fn numer(&self) -> &Laurent {
        &self.num
    }

    pub fn denom(&self) -> &Laurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inv(&self) -> Result<RatQt, AlgebraError> {
        RatQt::new(self.den.clone(), self.num.clone()).map_err(|_| AlgebraError::ZeroDenominator)
    }

    /// Integer power; negative exponents invert first and fail on zero.
    pub fn pow_i(&self, e: i32) -> Result<RatQt, AlgebraError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatQt::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn pow(&self, e: u32) -> RatQt {
        self.pow_i(e as i32).expect("non-negative power")
    }

    /// Extract a Laurent polynomial. Monomial denominators are units in
    /// the Laurent ring, so they fold into the numerator; anything else
    /// is a genuine failure of polynomiality.
    pub fn as_laurent(&self) -> Result<Laurent, AlgebraError> {
        if self.den.is_one() {
            return Ok(self.num.clone());
        }
        if self.den.num_terms() == 1 {
            let m = self.den.leading_mono().unwrap();
            let c = self.den.leading_coeff().unwrap();
            return Ok(self.num.mul_term(m.inv(), &c.recip()));
        }
        Err(AlgebraError::NotPolynomial)
    }

    /// Apply a substitution to the reduced form. Because the fraction is
    /// always reduced first, a substitution is singular only when the
    /// value itself has a pole there (so (q-t)/(q-t) at t -> 1 gives 1).
    pub fn substitute(&self, s: Substitution) -> Result<RatQt, AlgebraError> {
        let n = self.num.substitute(s)?;
        let d = self.den.substitute(s)?;
        if d.is_zero() {
            return Err(AlgebraError::SingularSubstitution);
        }
        RatQt::new(n, d)
    }

    /// Evaluate at exact rational (q, t); fails on a vanished denominator.
    pub fn eval(&self, qv: &QQ, tv: &QQ) -> Result<QQ, AlgebraError> {
        let u = QQ::zero();
        let d = self.den.eval(qv, tv, &u);
        if d.is_zero() {
            return Err(AlgebraError::SingularSubstitution);
        }
        Ok(self.num.eval(qv, tv, &u) / d)
    }
}

impl Add for &RatQt {
    type Output = RatQt;
    fn add(self, rhs: &RatQt) -> RatQt {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatQt::new(num, den).expect("nonzero denominator product")
    }
}

impl Sub for &RatQt {
    type Output = RatQt;
    fn sub(self, rhs: &RatQt) -> RatQt {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatQt::new(num, den).expect("nonzero denominator product")
    }
}

impl Neg for &RatQt {
    type Output = RatQt;
    fn neg(self) -> RatQt {
        RatQt { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatQt {
    type Output = RatQt;
    fn mul(self, rhs: &RatQt) -> RatQt {
        let num = &self.num * &rhs.num;
        let den = &self.den * &rhs.den;
        RatQt::new(num, den).expect("nonzero denominator product")
    }
}

/// Panics on division by zero; use [`RatQt::inv`] for a fallible route.
impl Div for &RatQt {
    type Output = RatQt;
    fn div(self, rhs: &RatQt) -> RatQt {
        assert!(!rhs.is_zero(), "division by zero in Q(q,t)");
        let num = &self.num * &rhs.den;
        let den = &self.den * &rhs.num;
        RatQt::new(num, den).expect("nonzero denominator product")
    }
}

impl fmt::Display for RatQt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Accumulator for long sums of fractions. Each term is merged over the
/// least common denominator (one denominator gcd per add, no
/// numerator-denominator gcd), and the whole pair is re-reduced after
/// every 64 additions so intermediate growth stays bounded. Formula
/// denominators share most of their factors, which keeps the running
/// common denominator near the lcm of the term denominators.
pub struct RatSum {
    num: Laurent,
    den: Laurent,
    pending: usize,
}

impl RatSum {
    pub fn new() -> RatSum {
        RatSum { num: Laurent::zero(), den: Laurent::one(), pending: 0 }
    }

    pub fn add(&mut self, r: &RatQt) {
        if self.num.is_zero() {
            self.num = r.numer().clone();
            self.den = r.denom().clone();
        } else if &self.den == r.denom() {
            self.num += r.numer();
        } else {
            let g = laurent_gcd(&self.den, r.denom());
            let cof_term = laurent_div_exact(r.denom(), &g);
            let cof_acc = laurent_div_exact(&self.den, &g);
            self.num = &(&self.num * &cof_term) + &(r.numer() * &cof_acc);
            self.den = &self.den * &cof_term;
        }
        self.pending += 1;
        if self.pending >= 64 {
            self.reduce();
        }
    }

    fn reduce(&mut self) {
        let r = RatQt::new(
            std::mem::take(&mut self.num),
            std::mem::replace(&mut self.den, Laurent::one()),
        )
        .expect("nonzero denominator product");
        self.num = r.num;
        self.den = r.den;
        self.pending = 0;
    }

    pub fn finish(mut self) -> RatQt {
        self.reduce();
        RatQt { num: self.num, den: self.den }
    }
}

impl Default for RatSum {
    fn default() -> Self {
        RatSum::new()
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
    fn reduces_common_polynomial_factor() {
        let r = rq("q^2 - 1", "q - 1");
        assert_eq!(r, rq("q + 1", "1"));
        assert!(r.den.is_one());
    }

    #[test]
    fn clears_common_monomial_shift() {
        let r = rq("q^2*t", "q*t^2");
        assert_eq!(r.numer(), &parse_laurent("q").unwrap());
        assert_eq!(r.denom(), &parse_laurent("t").unwrap());
    }

    #[test]
    fn denominator_is_monic() {
        let r = rq("1 - q", "1 - t");
        assert_eq!(r.numer(), &parse_laurent("q - 1").unwrap());
        assert_eq!(r.denom(), &parse_laurent("t - 1").unwrap());
        let half = rq("q - 1", "2*q - 2");
        assert_eq!(half, rq("1/2", "1"));
    }

    #[test]
    fn arithmetic_agrees_with_evaluation() {
        let a = rq("1", "1 - q");
        let b = rq("1", "1 - t");
        let s = &a + &b;
        let expect = rq("2 - q - t", "1 - q - t + q*t");
        assert_eq!(s, expect);
        let p = &a * &b;
        assert_eq!(&(&p / &b), &a);
    }

    #[test]
    fn removable_singularity_survives_substitution() {
        let r = rq("q - t", "q - t");
        assert!(r.is_one());
        assert_eq!(r.substitute(Substitution::TOne).unwrap(), RatQt::one());
        let pole = rq("1", "1 - t");
        assert!(matches!(
            pole.substitute(Substitution::TOne),
            Err(AlgebraError::SingularSubstitution)
        ));
    }

    #[test]
    fn monomial_denominator_folds_into_laurent() {
        let r = rq("q^2 - 1", "q*t");
        let f = r.as_laurent().unwrap();
        assert_eq!(f, parse_laurent("q*t^-1 - q^-1*t^-1").unwrap());
        assert!(rq("1", "1 - q").as_laurent().is_err());
    }

    #[test]
    fn long_sum_matches_pairwise_sum() {
        // Denominators cycle through a small pool, as formula summands
        // do; the running common denominator must stay at the pool lcm
        // rather than the full product.
        let pool = [
            parse_laurent("1 - q").unwrap(),
            parse_laurent("1 - t").unwrap(),
            parse_laurent("1 - q*t").unwrap(),
            parse_laurent("1 - q^2*t").unwrap(),
        ];
        let terms: Vec<RatQt> = (1..150)
            .map(|k: i64| {
                RatQt::new(Laurent::int(k), pool[k as usize % 4].clone()).unwrap()
            })
            .collect();
        let mut acc = RatSum::new();
        let mut naive = RatQt::zero();
        for r in &terms {
            acc.add(r);
            naive = &naive + r;
        }
        assert_eq!(acc.finish(), naive);
    }

    #[test]
    fn sum_cancellation_collapses() {
        let a = rq("1", "1 - q*t");
        let mut acc = RatSum::new();
        acc.add(&a);
        acc.add(&rq("q", "1 - t"));
        acc.add(&(-&a));
        acc.add(&(-&rq("q", "1 - t")));
        assert!(acc.finish().is_zero());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn laurent_strategy() -> impl Strategy<Value = Laurent> {
            prop::collection::vec(((-2i32..3), (-2i32..3), (-3i64..4)), 0..4).prop_map(|terms| {
                let mut f = Laurent::zero();
                for (eq, et, c) in terms {
                    f.add_term(Mono::qt(eq, et), &QQ::from_integer(BigInt::from(c)));
                }
                f
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn product_quotient_roundtrip(f in laurent_strategy(), g in laurent_strategy()) {
                prop_assume!(!g.is_zero());
                let rf = RatQt::from_laurent(&f);
                let rg = RatQt::from_laurent(&g);
                let back = &(&rf * &rg) / &rg;
                prop_assert_eq!(back, rf);
            }

            #[test]
            fn construction_order_is_canonical(
                f in laurent_strategy(),
                g in laurent_strategy(),
                h in laurent_strategy(),
            ) {
                prop_assume!(!g.is_zero() && !h.is_zero());
                // f*h / (g*h) must equal f/g structurally.
                let a = RatQt::new(&f * &h, &g * &h).unwrap();
                let b = RatQt::new(f, g).unwrap();
                prop_assert_eq!(a, b);
            }

            #[test]
            fn addition_associates(
                f in laurent_strategy(),
                g in laurent_strategy(),
                h in laurent_strategy(),
            ) {
                let (a, b, c) = (
                    RatQt::from_laurent(&f),
                    RatQt::from_laurent(&g),
                    RatQt::from_laurent(&h),
                );
                prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            }
        }
    }
}
