//! Polynomials in finitely many variables x_1..x_N over Q(q,t), used to
//! realize symmetric functions concretely and to apply the q-difference
//! operator delta_1.  The operator's rational coefficients are cleared
//! through the Vandermonde determinant, so all arithmetic stays
//! polynomial and the final division is exact.

use std::collections::BTreeMap;

use crate::algebra::{Mono, RatQt};
use crate::young::Partition;

/// A polynomial in x_1..x_N: exponent vector of length N -> coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct XPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, RatQt>,
}

impl XPoly {
    pub(crate) fn zero(nvars: usize) -> XPoly {
        XPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub(crate) fn constant(nvars: usize, c: RatQt) -> XPoly {
        let mut p = XPoly::zero(nvars);
        p.add_term(vec![0; nvars], &c);
        p
    }

    pub(crate) fn one(nvars: usize) -> XPoly {
        XPoly::constant(nvars, RatQt::one())
    }

    /// The variable x_i (0-based).
    pub(crate) fn variable(nvars: usize, i: usize) -> XPoly {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        let mut p = XPoly::zero(nvars);
        p.add_term(exps, &RatQt::one());
        p
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, exps: Vec<u32>, c: &RatQt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
        }
    }

    pub(crate) fn add(&self, rhs: &XPoly) -> XPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub(crate) fn sub(&self, rhs: &XPoly) -> XPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), &-c);
        }
        out
    }

    pub(crate) fn scale(&self, c: &RatQt) -> XPoly {
        let mut out = XPoly::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), &(v * c));
        }
        out
    }

    pub(crate) fn mul(&self, rhs: &XPoly) -> XPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = XPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, &(ca * cb));
            }
        }
        out
    }

    /// Substitute x_i -> q x_i: each term picks up q^(exponent of x_i).
    pub(crate) fn q_shift(&self, i: usize) -> XPoly {
        let mut out = XPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let factor = RatQt::from_mono(Mono::q(e[i] as i32));
            out.add_term(e.clone(), &(c * &factor));
        }
        out
    }

    /// Exact division by the linear factor (x_a - x_b) via Horner in
    /// x_a; panics if the division leaves a remainder, which would mean
    /// the Vandermonde clearing identity was applied to a non-multiple.
    pub(crate) fn div_linear_exact(&self, a: usize, b: usize) -> XPoly {
        let mut by_dega: BTreeMap<u32, XPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let da = e[a];
            let mut rest = e.clone();
            rest[a] = 0;
            by_dega
                .entry(da)
                .or_insert_with(|| XPoly::zero(self.nvars))
                .add_term(rest, c);
        }
        let top = match by_dega.keys().next_back() {
            Some(&d) => d,
            None => return XPoly::zero(self.nvars),
        };
        let xb = XPoly::variable(self.nvars, b);
        let coeff_at = |k: u32| {
            by_dega
                .get(&k)
                .cloned()
                .unwrap_or_else(|| XPoly::zero(self.nvars))
        };
        let mut quotient = XPoly::zero(self.nvars);
        let mut carry = coeff_at(top);
        for k in (0..top).rev() {
            let mut piece = XPoly::zero(self.nvars);
            for (e, c) in &carry.terms {
                let mut exps = e.clone();
                exps[a] = k;
                piece.add_term(exps, c);
            }
            quotient = quotient.add(&piece);
            carry = coeff_at(k).add(&xb.mul(&carry));
        }
        assert!(
            carry.is_zero(),
            "division by a Vandermonde factor left a remainder"
        );
        quotient
    }
}

/// prod_{a<b in the listed order} (x_{vars[a]} - x_{vars[b]}).
fn vandermonde(nvars: usize, vars: &[usize]) -> XPoly {
    let mut v = XPoly::one(nvars);
    for a in 0..vars.len() {
        for b in (a + 1)..vars.len() {
            let f = XPoly::variable(nvars, vars[a]).sub(&XPoly::variable(nvars, vars[b]));
            v = v.mul(&f);
        }
    }
    v
}

/// Apply delta_1 = sum_i [prod_{j!=i} (t x_i - x_j)/(x_i - x_j)] (x_i -> q x_i).
///
/// The rational coefficients are cleared against the full Vandermonde:
/// delta_1(f) V = sum_i (-1)^(i-1) [prod_{j!=i} (t x_i - x_j)] V_without_i (f with x_i -> q x_i),
/// after which the division by V is exact whenever f is symmetric.
pub(crate) fn delta1(f: &XPoly) -> XPoly {
    let n = f.nvars;
    if n == 0 {
        return f.clone();
    }
    let t = RatQt::from_mono(Mono::t(1));
    let mut cleared = XPoly::zero(n);
    for i in 0..n {
        let mut pre = XPoly::one(n);
        for j in 0..n {
            if j != i {
                let factor = XPoly::variable(n, i)
                    .scale(&t)
                    .sub(&XPoly::variable(n, j));
                pre = pre.mul(&factor);
            }
        }
        let rest: Vec<usize> = (0..n).filter(|&j| j != i).collect();
        let mut term = pre.mul(&vandermonde(n, &rest)).mul(&f.q_shift(i));
        if i % 2 == 1 {
            term = term.scale(&-&RatQt::one());
        }
        cleared = cleared.add(&term);
    }
    let mut out = cleared;
    for a in 0..n {
        for b in (a + 1)..n {
            out = out.div_linear_exact(a, b);
        }
    }
    out
}

fn distinct_permutations(values: &[u32]) -> Vec<Vec<u32>> {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &v in values {
        *counts.entry(v).or_insert(0) += 1;
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(values.len());
    fn go(
        counts: &mut BTreeMap<u32, usize>,
        cur: &mut Vec<u32>,
        len: usize,
        out: &mut Vec<Vec<u32>>,
    ) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let keys: Vec<u32> = counts
            .iter()
            .filter(|(_, &c)| c > 0)
            .map(|(&k, _)| k)
            .collect();
        for k in keys {
            *counts.get_mut(&k).unwrap() -= 1;
            cur.push(k);
            go(counts, cur, len, out);
            cur.pop();
            *counts.get_mut(&k).unwrap() += 1;
        }
    }
    go(&mut counts, &mut cur, values.len(), &mut out);
    out
}

/// m_lambda realized in nvars variables; zero when lambda has more rows
/// than there are variables.
pub(crate) fn monomial_sym(lam: &Partition, nvars: usize) -> XPoly {
    if lam.len() > nvars {
        return XPoly::zero(nvars);
    }
    let mut padded: Vec<u32> = lam.parts().to_vec();
    padded.resize(nvars, 0);
    let mut out = XPoly::zero(nvars);
    for exps in distinct_permutations(&padded) {
        out.add_term(exps, &RatQt::one());
    }
    out
}

/// Read a symmetric polynomial back as monomial-basis coefficients.
/// Returns None when the input is not actually symmetric.
pub(crate) fn read_symmetric(f: &XPoly) -> Option<Vec<(Partition, RatQt)>> {
    let mut coeffs = Vec::new();
    for (e, c) in &f.terms {
        if e.windows(2).all(|w| w[0] >= w[1]) {
            let lam = Partition::new(e.clone()).expect("weakly decreasing exponents");
            coeffs.push((lam, c.clone()));
        }
    }
    let mut rebuilt = XPoly::zero(f.nvars);
    for (lam, c) in &coeffs {
        rebuilt = rebuilt.add(&monomial_sym(lam, f.nvars).scale(c));
    }
    if &rebuilt == f {
        Some(coeffs)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::of(parts)
    }

    #[test]
    fn linear_division_round_trip() {
        let n = 3;
        let f = monomial_sym(&part(&[2, 1]), n);
        let lin = XPoly::variable(n, 0).sub(&XPoly::variable(n, 2));
        assert_eq!(f.mul(&lin).div_linear_exact(0, 2), f);
    }

    #[test]
    fn delta1_on_constants_and_linear() {
        // On 1 with two variables the eigenvalue is t + 1.
        let one = XPoly::one(2);
        let expect = one.scale(&RatQt::from_laurent(
            &crate::algebra::parse_laurent("t + 1").unwrap(),
        ));
        assert_eq!(delta1(&one), expect);
        // m_(1) = x1 + x2 is the degree-one Macdonald polynomial, with
        // eigenvalue qt + 1.
        let m1 = monomial_sym(&part(&[1]), 2);
        let expect = m1.scale(&RatQt::from_laurent(
            &crate::algebra::parse_laurent("q*t + 1").unwrap(),
        ));
        assert_eq!(delta1(&m1), expect);
        // One variable: delta_1(x) = q x.
        let x = XPoly::variable(1, 0);
        assert_eq!(delta1(&x), x.scale(&RatQt::from_mono(Mono::q(1))));
    }

    #[test]
    fn symmetric_read_back() {
        let n = 3;
        let f = monomial_sym(&part(&[2, 1]), n).add(&monomial_sym(&part(&[1, 1, 1]), n).scale(
            &RatQt::from_laurent(&crate::algebra::parse_laurent("q - t").unwrap()),
        ));
        let coeffs = read_symmetric(&f).expect("symmetric by construction");
        assert_eq!(coeffs.len(), 2);
        let not_sym = XPoly::variable(n, 0);
        assert!(read_symmetric(&not_sym).is_none());
    }
}
