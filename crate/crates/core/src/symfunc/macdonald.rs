//! Macdonald polynomials over Q(q,t): the orthogonal family P by
//! Gram-Schmidt against monomials, the integral form J, and the
//! modified family obtained from J by inverting t and rescaling each
//! power sum.  Everything is stored as a power-basis expansion.
//!
//! Two structural facts keep the arithmetic cheap.  Because the family
//! is orthogonal and unitriangular, every projection coefficient can be
//! paired against the original monomial function (whose power
//! coordinates are plain rationals) instead of the partially reduced
//! vector, and the squared norm equals the pairing with that monomial.
//! The inverse tables need no matrix inversion at all: expanding p_rho
//! in the family is again just diagonal pairings, and the modified
//! family is reached from J by an invertible rescaling of power sums
//! plus a coefficient substitution.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use once_cell::sync::Lazy;

use crate::algebra::{Laurent, Mono, RatQt, RatSum, Substitution, QQ};
use crate::young::{hook_products, Partition};

use super::basis::{monomial_in_power_table, z_factor};

/// A Q(q,t)-linear combination of basis elements indexed by partitions.
pub(crate) type RMap = BTreeMap<Partition, RatQt>;

pub(crate) fn radd_into(map: &mut RMap, key: Partition, c: &RatQt) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
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

fn lift(c: &QQ) -> RatQt {
    RatQt::from_laurent(&Laurent::constant(c.clone()))
}

/// z_rho as a scalar in Q(q,t).
pub(crate) fn hall_norm(rho: &Partition) -> RatQt {
    RatQt::from_laurent(&Laurent::constant(z_factor(rho)))
}

/// The power-sum norm z_rho prod_i (1-q^{rho_i})/(1-t^{rho_i}).
pub(crate) fn qt_norm(rho: &Partition) -> RatQt {
    let mut num = Laurent::constant(z_factor(rho));
    let mut den = Laurent::one();
    for &k in rho.parts() {
        num = &num * &(&Laurent::one() - &Laurent::mono(Mono::q(k as i32)));
        den = &den * &(&Laurent::one() - &Laurent::mono(Mono::t(k as i32)));
    }
    RatQt::new(num, den).expect("denominator is a product of nonzero factors")
}

/// Pair two power-basis expansions against a diagonal form.
pub(crate) fn pair_diagonal(
    a: &RMap,
    b: &RMap,
    diag: impl Fn(&Partition) -> RatQt,
) -> RatQt {
    let mut acc = RatSum::new();
    for (rho, ca) in a {
        if let Some(cb) = b.get(rho) {
            acc.add(&(&(ca * cb) * &diag(rho)));
        }
    }
    acc.finish()
}

/// Macdonald P polynomials of one degree with their squared norms,
/// both in power-basis coordinates.
pub(crate) struct PTable {
    pub in_power: HashMap<Partition, Arc<RMap>>,
    pub norm: HashMap<Partition, RatQt>,
}

static MACDONALD_P: Lazy<RwLock<HashMap<u32, Arc<PTable>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// All P_lambda of degree d by Gram-Schmidt: walk shapes in a total
/// order refining dominance (partial-sums-lex, smallest first) and
/// orthogonalize each m_lambda against everything before it.  The
/// leading monomial coefficient stays 1 because earlier shapes only
/// involve dominance-smaller monomials.
pub(crate) fn macdonald_p_table(d: u32) -> Arc<PTable> {
    if let Some(hit) = MACDONALD_P.read().unwrap().get(&d) {
        return hit.clone();
    }
    let mut shapes = Partition::all(d);
    shapes.sort_by(|a, b| a.dominance_key().cmp(&b.dominance_key()));
    let monomials = monomial_in_power_table(d);
    let norms: HashMap<Partition, RatQt> = shapes
        .iter()
        .map(|rho| (rho.clone(), qt_norm(rho)))
        .collect();
    // The pairing of a monomial function (rational power coordinates)
    // with an orthogonalized vector stays cheap: every summand is a
    // reduced fraction scaled by a rational.
    let pair_monomial = |mlam: &super::basis::QMap, v: &RMap| -> RatQt {
        let mut s = RatSum::new();
        for (rho, qc) in mlam {
            if let Some(c) = v.get(rho) {
                s.add(&(&(c * &norms[rho]) * &lift(qc)));
            }
        }
        s.finish()
    };
    let mut done: Vec<(Partition, RMap, RatQt)> = Vec::new();
    for lam in shapes.iter() {
        let mlam = &monomials[lam];
        // Orthogonality of the finished vectors lets every projection
        // coefficient be computed against m_lambda itself.
        let coeffs: Vec<RatQt> = done
            .iter()
            .map(|(_, p_mu, norm_mu)| &pair_monomial(mlam, p_mu) / norm_mu)
            .collect();
        let mut cur = RMap::new();
        for rho in shapes.iter() {
            let mut s = RatSum::new();
            if let Some(qc) = mlam.get(rho) {
                s.add(&lift(qc));
            }
            for ((_, p_mu, _), c) in done.iter().zip(&coeffs) {
                if let Some(v) = p_mu.get(rho) {
                    s.add(&-&(c * v));
                }
            }
            let v = s.finish();
            if !v.is_zero() {
                cur.insert(rho.clone(), v);
            }
        }
        // For the same reason the squared norm is the pairing with the
        // original monomial function.
        let norm = pair_monomial(mlam, &cur);
        done.push((lam.clone(), cur, norm));
    }
    let mut table = PTable {
        in_power: HashMap::new(),
        norm: HashMap::new(),
    };
    for (lam, map, norm) in done {
        table.in_power.insert(lam.clone(), Arc::new(map));
        table.norm.insert(lam, norm);
    }
    let arc = Arc::new(table);
    MACDONALD_P
        .write()
        .unwrap()
        .entry(d)
        .or_insert_with(|| arc.clone())
        .clone()
}

static MACDONALD_J: Lazy<RwLock<HashMap<Partition, Arc<RMap>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));
static MODIFIED: Lazy<RwLock<HashMap<Partition, Arc<RMap>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// J_lambda = h_lambda P_lambda in power coordinates.
pub(crate) fn macdonald_j_in_power(lam: &Partition) -> Arc<RMap> {
    if let Some(hit) = MACDONALD_J.read().unwrap().get(lam) {
        return hit.clone();
    }
    let table = macdonald_p_table(lam.size());
    let h = RatQt::from_laurent(&hook_products(lam).h);
    let mut out = RMap::new();
    for (rho, c) in table.in_power[lam].iter() {
        out.insert(rho.clone(), &h * c);
    }
    let arc = Arc::new(out);
    MACDONALD_J
        .write()
        .unwrap()
        .entry(lam.clone())
        .or_insert_with(|| arc.clone())
        .clone()
}

/// The modified polynomial in power coordinates: invert t in the
/// coefficients of J_lambda, rescale p_k by 1/(1-t^{-k}), and multiply
/// by t^{n(lambda)}.
pub(crate) fn modified_in_power(lam: &Partition) -> Arc<RMap> {
    if let Some(hit) = MODIFIED.read().unwrap().get(lam) {
        return hit.clone();
    }
    let j = macdonald_j_in_power(lam);
    let twist = Mono::t(lam.n_stat() as i32);
    let mut out = RMap::new();
    for (rho, c) in j.iter() {
        let mut v = c
            .substitute(Substitution::TInverse)
            .expect("inverting t is invertible");
        v = &v * &RatQt::from_mono(twist);
        for &k in rho.parts() {
            let den = &Laurent::one() - &Laurent::mono(Mono::t(-(k as i32)));
            v = &v * &RatQt::new(Laurent::one(), den).expect("nonzero factor");
        }
        if !v.is_zero() {
            out.insert(rho.clone(), v);
        }
    }
    let arc = Arc::new(out);
    MODIFIED
        .write()
        .unwrap()
        .entry(lam.clone())
        .or_insert_with(|| arc.clone())
        .clone()
}

/// Which Macdonald-side family an inverse table belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum MacFamily {
    P,
    J,
    Modified,
}

static POWER_IN_MAC: Lazy<RwLock<HashMap<(MacFamily, u32), Arc<HashMap<Partition, RMap>>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// Expansion of every degree-d power sum in one of the Macdonald-side
/// families.  Orthogonality gives the P coefficients directly:
/// p_rho = sum_lambda P_lambda[rho] <p_rho, p_rho> / <P_lambda, P_lambda> P_lambda,
/// J divides each by h_lambda, and the modified family pulls the
/// expansion through the rescaling that defines it.
pub(crate) fn power_in_mac_table(family: MacFamily, d: u32) -> Arc<HashMap<Partition, RMap>> {
    let key = (family, d);
    if let Some(hit) = POWER_IN_MAC.read().unwrap().get(&key) {
        return hit.clone();
    }
    let shapes = Partition::all(d);
    let pt = macdonald_p_table(d);
    let mut table = HashMap::new();
    for rho in &shapes {
        let rho_norm = qt_norm(rho);
        let mut combo = RMap::new();
        for lam in &shapes {
            let coord = match pt.in_power[lam].get(rho) {
                Some(c) => c,
                None => continue,
            };
            let mut c = &(coord * &rho_norm) / &pt.norm[lam];
            match family {
                MacFamily::P => {}
                MacFamily::J | MacFamily::Modified => {
                    let h = RatQt::from_laurent(&hook_products(lam).h);
                    c = &c / &h;
                }
            }
            if family == MacFamily::Modified {
                // p_rho = sum d_lambda(q,t) J_lambda implies, after the
                // rescaling p_k -> p_k/(1-t^{-k}) and t -> 1/t that
                // build the modified family, the coefficient
                // d_lambda(q,t^{-1}) t^{-n(lambda)} on each modified
                // polynomial of the rescaled p_rho; undoing the
                // rescaling on p_rho multiplies d by prod (1-t^k)
                // before the substitution.
                for &k in rho.parts() {
                    let f = &Laurent::one() - &Laurent::mono(Mono::t(k as i32));
                    c = &c * &RatQt::from_laurent(&f);
                }
                c = c
                    .substitute(Substitution::TInverse)
                    .expect("inverting t is invertible");
                c = &c * &RatQt::from_mono(Mono::t(-(lam.n_stat() as i32)));
            }
            if !c.is_zero() {
                combo.insert(lam.clone(), c);
            }
        }
        table.insert(rho.clone(), combo);
    }
    let arc = Arc::new(table);
    POWER_IN_MAC
        .write()
        .unwrap()
        .entry(key)
        .or_insert_with(|| arc.clone())
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::of(parts)
    }

    fn rq(s: &str) -> RatQt {
        let f = crate::algebra::parse_laurent(s).unwrap();
        RatQt::from_laurent(&f)
    }

    fn rq2(num: &str, den: &str) -> RatQt {
        let n = crate::algebra::parse_laurent(num).unwrap();
        let d = crate::algebra::parse_laurent(den).unwrap();
        RatQt::new(n, d).unwrap()
    }

    #[test]
    fn macdonald_p_minimal_and_hand_checked() {
        // P_(1,1) = m_(1,1), the dominance-minimal shape of degree 2.
        let table = macdonald_p_table(2);
        let monomials = monomial_in_power_table(2);
        let p11 = &table.in_power[&part(&[1, 1])];
        for (rho, c) in &monomials[&part(&[1, 1])] {
            let expect = RatQt::from_laurent(&Laurent::constant(c.clone()));
            assert_eq!(p11.get(rho), Some(&expect));
        }
        // P_(2) = m_(2) + (1-t)(1+q)/(1-qt) m_(1,1), compared in power
        // coordinates.
        let c = rq2("1 + q - t - q*t", "1 - q*t");
        let mut expect = RMap::new();
        for (rho, v) in &monomials[&part(&[2])] {
            radd_into(
                &mut expect,
                rho.clone(),
                &RatQt::from_laurent(&Laurent::constant(v.clone())),
            );
        }
        for (rho, v) in &monomials[&part(&[1, 1])] {
            let w = &c * &RatQt::from_laurent(&Laurent::constant(v.clone()));
            radd_into(&mut expect, rho.clone(), &w);
        }
        assert_eq!(table.in_power[&part(&[2])].as_ref(), &expect);
    }

    #[test]
    fn macdonald_norms_match_hook_ratio() {
        for d in 1..=5u32 {
            let table = macdonald_p_table(d);
            for lam in Partition::all(d) {
                let hooks = hook_products(&lam);
                let expect = RatQt::new(hooks.h_prime.clone(), hooks.h.clone()).unwrap();
                assert_eq!(table.norm[&lam], expect, "norm of {}", lam);
            }
        }
    }

    #[test]
    fn macdonald_orthogonality_degree_four() {
        let table = macdonald_p_table(4);
        let shapes = Partition::all(4);
        for a in &shapes {
            for b in &shapes {
                if a != b {
                    let v = pair_diagonal(
                        &table.in_power[a],
                        &table.in_power[b],
                        qt_norm,
                    );
                    assert!(v.is_zero(), "{} vs {}", a, b);
                }
            }
        }
    }

    #[test]
    fn modified_degree_one_is_power_sum() {
        let ht = modified_in_power(&part(&[1]));
        assert_eq!(ht.len(), 1);
        assert_eq!(ht.get(&part(&[1])), Some(&RatQt::one()));
    }

    #[test]
    fn modified_degree_two_table() {
        // Coefficients (1+q)/2 on p_(1,1) and (1-q)/2 on p_(2) for the
        // row shape; transpose swaps q and t.
        let ht2 = modified_in_power(&part(&[2]));
        assert_eq!(ht2.get(&part(&[1, 1])), Some(&rq("1/2*q + 1/2")));
        assert_eq!(ht2.get(&part(&[2])), Some(&rq("-1/2*q + 1/2")));
        let ht11 = modified_in_power(&part(&[1, 1]));
        assert_eq!(ht11.get(&part(&[1, 1])), Some(&rq("1/2*t + 1/2")));
        assert_eq!(ht11.get(&part(&[2])), Some(&rq("-1/2*t + 1/2")));
    }

    #[test]
    fn power_in_families_inverts() {
        for family in [MacFamily::P, MacFamily::J, MacFamily::Modified] {
            for d in 1..=4u32 {
                let inverse = power_in_mac_table(family, d);
                for rho in Partition::all(d) {
                    let mut back = RMap::new();
                    for (lam, c) in &inverse[&rho] {
                        let fwd = match family {
                            MacFamily::P => macdonald_p_table(d).in_power[lam].clone(),
                            MacFamily::J => macdonald_j_in_power(lam),
                            MacFamily::Modified => modified_in_power(lam),
                        };
                        for (sigma, v) in fwd.iter() {
                            radd_into(&mut back, sigma.clone(), &(c * v));
                        }
                    }
                    assert_eq!(back.len(), 1, "round trip p_{}", rho);
                    assert_eq!(back.get(&rho), Some(&RatQt::one()));
                }
            }
        }
    }
}
