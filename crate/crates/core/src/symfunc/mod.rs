//! The ring of symmetric functions over Q(q,t).
//!
//! A [`SymFunc`] is a finite linear combination of basis elements
//! indexed by partitions, tagged with which basis it lives in.  Eight
//! bases are supported: power sums p, monomials m, elementary e,
//! complete homogeneous h, Schur s, Macdonald P and its integral form
//! J, and the modified Macdonald family.  All conversions route
//! through the power basis; tables fill per degree on first use and
//! are cached for the life of the process.
//!
//! On top of the basis machinery the module provides the Hall and
//! (q,t) inner products, the geometric pairing that is diagonal on the
//! modified family, plethystic rescalings of power sums, the nabla
//! operator, principal evaluation into Q(q,t)[u], a finite-variable
//! q-difference operator used as an independent certificate for the
//! Macdonald family, and the graded character attached to a coprime
//! pair (n, m).

mod basis;
mod macdonald;
mod xpoly;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::Arc;

use num_integer::Integer;
use serde::ser::{Serialize, SerializeSeq, SerializeStruct, Serializer};

use crate::algebra::{Laurent, Mono, RatQt, UPoly};
use crate::young::{box_stats, hook_products, nabla_eigenvalue, Partition};

use basis::{
    complete_product_in_power, elementary_product_in_power, monomial_in_power_table,
    power_in_complete_table, power_in_elementary_table, power_in_monomial, power_in_schur,
    schur_in_power,
};
use macdonald::{
    hall_norm, macdonald_j_in_power, macdonald_p_table, modified_in_power, pair_diagonal,
    power_in_mac_table, qt_norm, radd_into, MacFamily, RMap,
};

/// Errors reported by symmetric-function operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymFuncError {
    /// A conversion or construction exceeded the configured degree bound.
    #[error("degree {degree} exceeds the configured bound {bound}")]
    DegreeBound { degree: u32, bound: u32 },
    /// An inverted plethystic map has a vanishing multiplier.
    #[error("plethystic map is not invertible: a multiplier vanishes")]
    NonInvertible,
    /// A finite-variable computation was asked for more variables or a
    /// higher degree than the oracle supports.
    #[error("request exceeds the supported variable count or degree")]
    TooLarge,
    /// A graded character was requested for a non-coprime pair.
    #[error("the pair (n, m) must be coprime with n, m >= 1")]
    NotCoprime,
}

/// The supported bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Power sums p_lambda.
    Power,
    /// Monomial symmetric functions m_lambda.
    Monomial,
    /// Products of elementary symmetric functions e_lambda.
    Elementary,
    /// Products of complete homogeneous functions h_lambda.
    Homogeneous,
    /// Schur functions s_lambda.
    Schur,
    /// Macdonald polynomials P_lambda.
    MacdonaldP,
    /// Integral Macdonald forms J_lambda = h_lambda P_lambda.
    MacdonaldJ,
    /// The modified Macdonald family.
    ModifiedMacdonald,
}

impl Basis {
    /// Name used in JSON output.
    pub fn json_name(self) -> &'static str {
        match self {
            Basis::Power => "p",
            Basis::Monomial => "m",
            Basis::Elementary => "e",
            Basis::Homogeneous => "h",
            Basis::Schur => "s",
            Basis::MacdonaldP => "P",
            Basis::MacdonaldJ => "J",
            Basis::ModifiedMacdonald => "Htilde",
        }
    }
}

static DEGREE_BOUND: AtomicU32 = AtomicU32::new(12);

/// The current degree bound for basis conversions.
pub fn degree_bound() -> u32 {
    DEGREE_BOUND.load(Ordering::Relaxed)
}

/// Raise or lower the degree bound.  Operations refuse degrees beyond
/// the bound instead of truncating.
pub fn set_degree_bound(bound: u32) {
    DEGREE_BOUND.store(bound, Ordering::Relaxed);
}

fn check_degree(degree: u32) -> Result<(), SymFuncError> {
    let bound = degree_bound();
    if degree > bound {
        Err(SymFuncError::DegreeBound { degree, bound })
    } else {
        Ok(())
    }
}

fn lift(c: &crate::algebra::QQ) -> RatQt {
    RatQt::from_laurent(&Laurent::constant(c.clone()))
}

/// A finite linear combination of basis elements over Q(q,t).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, RatQt>,
}

impl SymFunc {
    /// The zero element of a basis.
    pub fn zero(basis: Basis) -> SymFunc {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// A single basis element with coefficient one.
    pub fn basis_element(basis: Basis, lam: Partition) -> SymFunc {
        let mut f = SymFunc::zero(basis);
        f.add_term(lam, &RatQt::one());
        f
    }

    /// The multiplicative unit: the empty partition in any basis.
    pub fn one(basis: Basis) -> SymFunc {
        SymFunc::basis_element(basis, Partition::empty())
    }

    /// Build from explicit terms; zero coefficients are dropped and
    /// repeated partitions accumulate.
    pub fn from_terms(
        basis: Basis,
        terms: impl IntoIterator<Item = (Partition, RatQt)>,
    ) -> SymFunc {
        let mut f = SymFunc::zero(basis);
        for (lam, c) in terms {
            f.add_term(lam, &c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatQt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of one indexing partition (zero when absent).
    pub fn coeff(&self, lam: &Partition) -> RatQt {
        self.terms.get(lam).cloned().unwrap_or_else(RatQt::zero)
    }

    /// The largest size among indexing partitions, or 0 when empty.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|p| p.size()).max().unwrap_or(0)
    }

    /// Add one term in place, dropping cancellations.
    pub fn add_term(&mut self, lam: Partition, c: &RatQt) {
        radd_into(&mut self.terms, lam, c);
    }

    /// Sum of two combinations in the same basis.
    ///
    /// Panics on a basis mismatch; convert explicitly first.
    pub fn add(&self, rhs: &SymFunc) -> SymFunc {
        assert_eq!(self.basis, rhs.basis, "basis mismatch in add");
        let mut out = self.clone();
        for (lam, c) in &rhs.terms {
            out.add_term(lam.clone(), c);
        }
        out
    }

    /// Difference of two combinations in the same basis.
    ///
    /// Panics on a basis mismatch; convert explicitly first.
    pub fn sub(&self, rhs: &SymFunc) -> SymFunc {
        assert_eq!(self.basis, rhs.basis, "basis mismatch in sub");
        let mut out = self.clone();
        for (lam, c) in &rhs.terms {
            out.add_term(lam.clone(), &-c);
        }
        out
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &RatQt) -> SymFunc {
        let mut out = SymFunc::zero(self.basis);
        for (lam, v) in &self.terms {
            out.add_term(lam.clone(), &(v * c));
        }
        out
    }

    fn from_power_map(terms: RMap) -> SymFunc {
        SymFunc {
            basis: Basis::Power,
            terms,
        }
    }

    fn to_power(&self) -> SymFunc {
        if self.basis == Basis::Power {
            return self.clone();
        }
        let mut out = RMap::new();
        for (lam, c) in &self.terms {
            match self.basis {
                Basis::Power => unreachable!(),
                Basis::Monomial => {
                    let table = monomial_in_power_table(lam.size());
                    for (rho, v) in &table[lam] {
                        radd_into(&mut out, rho.clone(), &(c * &lift(v)));
                    }
                }
                Basis::Elementary => {
                    for (rho, v) in elementary_product_in_power(lam) {
                        radd_into(&mut out, rho, &(c * &lift(&v)));
                    }
                }
                Basis::Homogeneous => {
                    for (rho, v) in complete_product_in_power(lam) {
                        radd_into(&mut out, rho, &(c * &lift(&v)));
                    }
                }
                Basis::Schur => {
                    for (rho, v) in schur_in_power(lam) {
                        radd_into(&mut out, rho, &(c * &lift(&v)));
                    }
                }
                Basis::MacdonaldP => {
                    let table = macdonald_p_table(lam.size());
                    for (rho, v) in table.in_power[lam].iter() {
                        radd_into(&mut out, rho.clone(), &(c * v));
                    }
                }
                Basis::MacdonaldJ => {
                    for (rho, v) in macdonald_j_in_power(lam).iter() {
                        radd_into(&mut out, rho.clone(), &(c * v));
                    }
                }
                Basis::ModifiedMacdonald => {
                    for (rho, v) in modified_in_power(lam).iter() {
                        radd_into(&mut out, rho.clone(), &(c * v));
                    }
                }
            }
        }
        SymFunc::from_power_map(out)
    }

    fn from_power(&self, target: Basis) -> SymFunc {
        debug_assert_eq!(self.basis, Basis::Power);
        if target == Basis::Power {
            return self.clone();
        }
        let mut out = RMap::new();
        for (rho, c) in &self.terms {
            match target {
                Basis::Power => unreachable!(),
                Basis::Monomial => {
                    for (lam, v) in power_in_monomial(rho).iter() {
                        radd_into(&mut out, lam.clone(), &(c * &lift(v)));
                    }
                }
                Basis::Elementary => {
                    let table = power_in_elementary_table(rho.size());
                    for (lam, v) in &table[rho] {
                        radd_into(&mut out, lam.clone(), &(c * &lift(v)));
                    }
                }
                Basis::Homogeneous => {
                    let table = power_in_complete_table(rho.size());
                    for (lam, v) in &table[rho] {
                        radd_into(&mut out, lam.clone(), &(c * &lift(v)));
                    }
                }
                Basis::Schur => {
                    for (lam, v) in power_in_schur(rho) {
                        radd_into(&mut out, lam, &(c * &lift(&v)));
                    }
                }
                Basis::MacdonaldP => {
                    let table = power_in_mac_table(MacFamily::P, rho.size());
                    for (lam, v) in &table[rho] {
                        radd_into(&mut out, lam.clone(), &(c * v));
                    }
                }
                Basis::MacdonaldJ => {
                    let table = power_in_mac_table(MacFamily::J, rho.size());
                    for (lam, v) in &table[rho] {
                        radd_into(&mut out, lam.clone(), &(c * v));
                    }
                }
                Basis::ModifiedMacdonald => {
                    let table = power_in_mac_table(MacFamily::Modified, rho.size());
                    for (lam, v) in &table[rho] {
                        radd_into(&mut out, lam.clone(), &(c * v));
                    }
                }
            }
        }
        SymFunc { basis: target, terms: out }
    }

    /// Exact conversion to another basis.
    pub fn change_basis(&self, target: Basis) -> Result<SymFunc, SymFuncError> {
        check_degree(self.degree())?;
        if self.basis == target {
            return Ok(self.clone());
        }
        Ok(self.to_power().from_power(target))
    }

    /// Product, computed in the power basis and converted back to the
    /// basis of the left factor.
    pub fn multiply(&self, rhs: &SymFunc) -> Result<SymFunc, SymFuncError> {
        let a = self.change_basis(Basis::Power)?;
        let b = rhs.change_basis(Basis::Power)?;
        let mut out = RMap::new();
        for (lam, ca) in &a.terms {
            for (mu, cb) in &b.terms {
                let mut parts: Vec<u32> = lam.parts().to_vec();
                parts.extend_from_slice(mu.parts());
                parts.sort_unstable_by(|x, y| y.cmp(x));
                let key = Partition::new(parts).expect("sorted positive parts");
                radd_into(&mut out, key, &(ca * cb));
            }
        }
        SymFunc::from_power_map(out).change_basis(self.basis)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (lam, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})*{}{}", c, self.basis.json_name(), lam)?;
        }
        Ok(())
    }
}

#[derive(serde::Serialize)]
struct TermRepr {
    partition: Vec<u32>,
    coeff: String,
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Terms<'a>(&'a BTreeMap<Partition, RatQt>);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
                for (lam, c) in self.0 {
                    seq.serialize_element(&TermRepr {
                        partition: lam.parts().to_vec(),
                        coeff: c.to_string(),
                    })?;
                }
                seq.end()
            }
        }
        let mut st = serializer.serialize_struct("SymFunc", 2)?;
        st.serialize_field("basis", self.basis.json_name())?;
        st.serialize_field("terms", &Terms(&self.terms))?;
        st.end()
    }
}

/// The Macdonald polynomial P_lambda, expanded in the monomial basis.
pub fn macdonald_p(lam: &Partition) -> Result<SymFunc, SymFuncError> {
    check_degree(lam.size())?;
    SymFunc::basis_element(Basis::MacdonaldP, lam.clone()).change_basis(Basis::Monomial)
}

/// The integral form J_lambda, expanded in the monomial basis.
pub fn macdonald_j(lam: &Partition) -> Result<SymFunc, SymFuncError> {
    check_degree(lam.size())?;
    SymFunc::basis_element(Basis::MacdonaldJ, lam.clone()).change_basis(Basis::Monomial)
}

/// The modified Macdonald polynomial, expanded in the power basis.
pub fn modified_macdonald(lam: &Partition) -> Result<SymFunc, SymFuncError> {
    check_degree(lam.size())?;
    SymFunc::basis_element(Basis::ModifiedMacdonald, lam.clone()).change_basis(Basis::Power)
}

/// The squared norm of P_lambda under the (q,t) product.
pub fn macdonald_norm(lam: &Partition) -> Result<RatQt, SymFuncError> {
    check_degree(lam.size())?;
    Ok(macdonald_p_table(lam.size()).norm[lam].clone())
}

/// The (q,t)-deformed power-sum inner product, diagonal on p_lambda
/// with value z_lambda prod_i (1-q^{lambda_i})/(1-t^{lambda_i}).
pub fn qt_pairing(f: &SymFunc, g: &SymFunc) -> Result<RatQt, SymFuncError> {
    let a = f.change_basis(Basis::Power)?;
    let b = g.change_basis(Basis::Power)?;
    Ok(pair_diagonal(&a.terms, &b.terms, qt_norm))
}

/// The Hall inner product, diagonal on p_lambda with value z_lambda.
pub fn hall_pairing(f: &SymFunc, g: &SymFunc) -> Result<RatQt, SymFuncError> {
    let a = f.change_basis(Basis::Power)?;
    let b = g.change_basis(Basis::Power)?;
    Ok(pair_diagonal(&a.terms, &b.terms, hall_norm))
}

/// The pairing that is diagonal on the modified Macdonald basis, with
/// diagonal value prod (1-q^a t^(-l-1))(1-q^(-a-1) t^l).
pub fn geometric_pairing(f: &SymFunc, g: &SymFunc) -> Result<RatQt, SymFuncError> {
    let a = f.change_basis(Basis::ModifiedMacdonald)?;
    let b = g.change_basis(Basis::ModifiedMacdonald)?;
    Ok(pair_diagonal(&a.terms, &b.terms, |lam| {
        RatQt::from_laurent(&hook_products(lam).g)
    }))
}

/// A multiplicative rescaling of power sums: p_k picks up a scalar
/// multiplier depending on k.
#[derive(Clone)]
pub struct PlethysticMap {
    rule: Arc<dyn Fn(u32) -> RatQt + Send + Sync>,
    inverted: bool,
}

impl PlethysticMap {
    pub fn new(rule: impl Fn(u32) -> RatQt + Send + Sync + 'static) -> PlethysticMap {
        PlethysticMap {
            rule: Arc::new(rule),
            inverted: false,
        }
    }

    /// The same map with every multiplier inverted.  Application fails
    /// with NonInvertible if a needed multiplier vanishes.
    pub fn inverse(&self) -> PlethysticMap {
        PlethysticMap {
            rule: self.rule.clone(),
            inverted: !self.inverted,
        }
    }

    /// p_k -> p_k / (1 - t^(-k)): the rescaling that turns integral
    /// Macdonald forms with t inverted into the modified family.
    pub fn t_geometric_scaling() -> PlethysticMap {
        PlethysticMap::new(|k| {
            let den = &Laurent::one() - &Laurent::mono(Mono::t(-(k as i32)));
            RatQt::new(Laurent::one(), den).expect("nonzero denominator")
        })
    }

    /// p_k -> p_k (1-q^{km})/(1-q^k): multiplication by the q^k-integer
    /// [m], used by the graded character of a coprime pair.
    pub fn q_integer_scaling(m: u32) -> PlethysticMap {
        PlethysticMap::new(move |k| {
            let num = &Laurent::one() - &Laurent::mono(Mono::q((k * m) as i32));
            let den = &Laurent::one() - &Laurent::mono(Mono::q(k as i32));
            RatQt::new(num, den).expect("nonzero denominator")
        })
    }
}

/// Apply a plethystic rescaling: each p_k in the power expansion picks
/// up the map's multiplier (or its inverse for an inverted map).
pub fn apply_plethysm(f: &SymFunc, map: &PlethysticMap) -> Result<SymFunc, SymFuncError> {
    let p = f.change_basis(Basis::Power)?;
    let mut out = RMap::new();
    for (rho, c) in &p.terms {
        let mut v = c.clone();
        for &k in rho.parts() {
            let mult = (map.rule)(k);
            let mult = if map.inverted {
                if mult.is_zero() {
                    return Err(SymFuncError::NonInvertible);
                }
                mult.inv().expect("nonzero multiplier")
            } else {
                mult
            };
            v = &v * &mult;
        }
        radd_into(&mut out, rho.clone(), &v);
    }
    SymFunc::from_power_map(out).change_basis(f.basis)
}

fn nabla_scaled(f: &SymFunc, invert: bool) -> Result<SymFunc, SymFuncError> {
    let ht = f.change_basis(Basis::ModifiedMacdonald)?;
    let mut out = RMap::new();
    for (lam, c) in &ht.terms {
        let eig = nabla_eigenvalue(lam);
        let eig = if invert { eig.inv() } else { eig };
        out.insert(lam.clone(), c * &RatQt::from_mono(eig));
    }
    SymFunc {
        basis: Basis::ModifiedMacdonald,
        terms: out,
    }
    .change_basis(f.basis)
}

/// The operator scaling each modified Macdonald polynomial by
/// q^(n(lambda')) t^(n(lambda)).
pub fn nabla(f: &SymFunc) -> Result<SymFunc, SymFuncError> {
    nabla_scaled(f, false)
}

/// The inverse of [`nabla`].
pub fn nabla_inverse(f: &SymFunc) -> Result<SymFunc, SymFuncError> {
    nabla_scaled(f, true)
}

/// The evaluation homomorphism p_k -> (1-u^k)/(1-t^k), which captures
/// the dependence on the number of variables in the single variable u:
/// substituting u = t^N recovers evaluation at x_i = t^(i-1), i <= N.
pub fn evaluate_principal(f: &SymFunc) -> Result<UPoly, SymFuncError> {
    let p = f.change_basis(Basis::Power)?;
    let mut acc = UPoly::zero();
    for (rho, c) in &p.terms {
        let mut prod = UPoly::constant(c.clone());
        for &k in rho.parts() {
            let den = &Laurent::one() - &Laurent::mono(Mono::t(k as i32));
            let inv = RatQt::new(Laurent::one(), den).expect("nonzero denominator");
            let mut coeffs = vec![RatQt::zero(); k as usize + 1];
            coeffs[0] = inv.clone();
            coeffs[k as usize] = -&inv;
            prod = &prod * &UPoly::from_coeffs(coeffs);
        }
        acc = &acc + &prod;
    }
    Ok(acc)
}

/// The same evaluation computed degree by degree through the J family:
/// pair f against sum_lambda J_lambda/(h_lambda h'_lambda) times the
/// cell product prod (t^(coleg) - u q^(coarm)), without materializing
/// the infinite sum.
pub fn evaluate_principal_by_expansion(f: &SymFunc) -> Result<UPoly, SymFuncError> {
    let p = f.change_basis(Basis::Power)?;
    let mut by_degree: BTreeMap<u32, RMap> = BTreeMap::new();
    for (rho, c) in &p.terms {
        by_degree
            .entry(rho.size())
            .or_default()
            .insert(rho.clone(), c.clone());
    }
    let mut acc = UPoly::zero();
    for (d, component) in by_degree {
        for lam in Partition::all(d) {
            let j = macdonald_j_in_power(&lam);
            let paired = pair_diagonal(&component, &j, qt_norm);
            if paired.is_zero() {
                continue;
            }
            let hooks = hook_products(&lam);
            let norm = RatQt::new(Laurent::one(), &hooks.h * &hooks.h_prime)
                .expect("hook products are nonzero");
            let mut cell_prod = UPoly::constant(&paired * &norm);
            for cell in lam.cells() {
                let s = box_stats(&lam, cell).expect("cell of own diagram");
                cell_prod = &cell_prod
                    * &UPoly::from_coeffs(vec![
                        RatQt::from_mono(Mono::t(s.coleg as i32)),
                        -&RatQt::from_mono(Mono::q(s.coarm as i32)),
                    ]);
            }
            acc = &acc + &cell_prod;
        }
    }
    Ok(acc)
}

/// Apply the q-difference operator
/// delta_1 = sum_i [prod_{j != i} (t x_i - x_j)/(x_i - x_j)] (x_i -> q x_i)
/// to f realized in nvars variables, reading the result back in the
/// monomial basis.  Partitions with more rows than variables realize
/// to zero on both sides.
pub fn delta1_oracle(f: &SymFunc, nvars: usize) -> Result<SymFunc, SymFuncError> {
    if nvars > 4 || f.degree() > 6 {
        return Err(SymFuncError::TooLarge);
    }
    let m = f.change_basis(Basis::Monomial)?;
    let mut realized = xpoly::XPoly::zero(nvars);
    for (lam, c) in &m.terms {
        realized = realized.add(&xpoly::monomial_sym(lam, nvars).scale(c));
    }
    let image = xpoly::delta1(&realized);
    let coeffs = xpoly::read_symmetric(&image)
        .expect("the q-difference operator preserves symmetry");
    Ok(SymFunc::from_terms(Basis::Monomial, coeffs))
}

/// The graded character attached to a coprime pair (n, m):
/// q^(-(m-1)(n-1)/2) (1-q)/(1-q^m) times the q-integer rescaling of
/// h_n, expanded in the Schur basis.  Its dimension specialization at
/// q -> 1 is m^(n-1).
pub fn cherednik_character(n: u32, m: u32) -> Result<SymFunc, SymFuncError> {
    if n == 0 || m == 0 || n.gcd(&m) != 1 {
        return Err(SymFuncError::NotCoprime);
    }
    check_degree(n)?;
    let mut h = SymFunc::zero(Basis::Power);
    for (rho, c) in basis::complete_in_power(n).iter() {
        h.add_term(rho.clone(), &lift(c));
    }
    let scaled = apply_plethysm(&h, &PlethysticMap::q_integer_scaling(m))?;
    let delta = (m - 1) * (n - 1);
    debug_assert_eq!(delta % 2, 0, "coprime pairs have an even exponent");
    let num = &Laurent::one() - &Laurent::mono(Mono::q(1));
    let den = &Laurent::one() - &Laurent::mono(Mono::q(m as i32));
    let prefactor = &RatQt::from_mono(Mono::q(-((delta / 2) as i32)))
        * &RatQt::new(num, den).expect("nonzero denominator");
    scaled.scale(&prefactor).change_basis(Basis::Schur)
}
