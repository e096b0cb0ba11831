//! Classical basis tables with power sums as the hub.
//!
//! Everything here has coefficients in Q: the expansion of p_mu in the
//! monomial basis (by the Pieri-style multiplication rule), its
//! per-degree inverse, Newton's identities for e_n and h_n, and Schur
//! functions through Murnaghan-Nakayama characters on beta sequences.
//! Tables fill on demand and are cached append-only.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use crate::algebra::QQ;
use crate::young::Partition;

/// A Q-linear combination of basis elements indexed by partitions.
pub(crate) type QMap = BTreeMap<Partition, QQ>;

fn qq(n: i64) -> QQ {
    QQ::from_integer(BigInt::from(n))
}

fn add_into(map: &mut QMap, key: Partition, c: &QQ) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c.clone());
        }
    }
}

/// z_lambda = prod k^{m_k} m_k! for multiplicities m_k.
pub(crate) fn z_factor(lam: &Partition) -> QQ {
    let mut mult: HashMap<u32, u64> = HashMap::new();
    for &p in lam.parts() {
        *mult.entry(p).or_insert(0) += 1;
    }
    let mut z = BigInt::one();
    for (k, m) in mult {
        for _ in 0..m {
            z *= BigInt::from(k);
        }
        for j in 1..=m {
            z *= BigInt::from(j);
        }
    }
    QQ::from_integer(z)
}

/// Multiply an m-basis combination by the power sum p_r: each partition
/// gains r boxes on one of its distinct part values (or as a new part),
/// weighted by the multiplicity of the grown part in the result.
fn multiply_power_into_monomial(state: &QMap, r: u32) -> QMap {
    let mut out = QMap::new();
    for (lam, c) in state {
        let mut values: Vec<u32> = lam.parts().to_vec();
        values.push(0);
        values.dedup();
        for &v in values.iter() {
            let mut parts: Vec<u32> = lam.parts().to_vec();
            if v == 0 {
                parts.push(r);
            } else {
                let pos = parts.iter().position(|&p| p == v).unwrap();
                parts[pos] = v + r;
            }
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let grown = v + r;
            let mult = parts.iter().filter(|&&p| p == grown).count() as i64;
            let mu = Partition::new(parts).expect("sorted positive parts");
            add_into(&mut out, mu, &(c * qq(mult)));
        }
    }
    out
}

static POWER_IN_MONOMIAL: Lazy<RwLock<HashMap<Partition, Arc<QMap>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// Expansion of p_mu in the monomial basis (integer coefficients).
pub(crate) fn power_in_monomial(mu: &Partition) -> Arc<QMap> {
    if let Some(hit) = POWER_IN_MONOMIAL.read().unwrap().get(mu) {
        return hit.clone();
    }
    let mut state = QMap::new();
    state.insert(Partition::empty(), QQ::one());
    for &r in mu.parts() {
        state = multiply_power_into_monomial(&state, r);
    }
    let arc = Arc::new(state);
    POWER_IN_MONOMIAL
        .write()
        .unwrap()
        .entry(mu.clone())
        .or_insert_with(|| arc.clone())
        .clone()
}

/// Gauss-Jordan inverse over Q; panics on a singular matrix, which
/// would mean a basis table is wrong.
fn invert_matrix(mut a: Vec<Vec<QQ>>) -> Vec<Vec<QQ>> {
    let n = a.len();
    let mut inv: Vec<Vec<QQ>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { QQ::one() } else { QQ::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("basis transition matrix is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let d = &a[col][j] * &f;
                    a[r][j] -= d;
                    let d = &inv[col][j] * &f;
                    inv[r][j] -= d;
                }
            }
        }
    }
    inv
}

static MONOMIAL_IN_POWER: Lazy<RwLock<HashMap<u32, Arc<HashMap<Partition, QMap>>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// Expansion of every m_lambda of degree d in the power basis, by
/// inverting the p-to-m transition matrix of that degree.
pub(crate) fn monomial_in_power_table(d: u32) -> Arc<HashMap<Partition, QMap>> {
    if let Some(hit) = MONOMIAL_IN_POWER.read().unwrap().get(&d) {
        return hit.clone();
    }
    let shapes = Partition::all(d);
    let n = shapes.len();
    // a[i][j] = coefficient of m_{shapes[j]} in p_{shapes[i]}.
    let mut a = vec![vec![QQ::zero(); n]; n];
    for (i, mu) in shapes.iter().enumerate() {
        let row = power_in_monomial(mu);
        for (j, lam) in shapes.iter().enumerate() {
            if let Some(c) = row.get(lam) {
                a[i][j] = c.clone();
            }
        }
    }
    // c^m = A^T c^p, so the p-coordinates of m_j are column j of (A^T)^{-1},
    // i.e. row j of A^{-1}.
    let ainv = invert_matrix(a);
    let mut table = HashMap::new();
    for (j, lam) in shapes.iter().enumerate() {
        let mut combo = QMap::new();
        for (i, mu) in shapes.iter().enumerate() {
            add_into(&mut combo, mu.clone(), &ainv[j][i]);
        }
        table.insert(lam.clone(), combo);
    }
    let arc = Arc::new(table);
    MONOMIAL_IN_POWER
        .write()
        .unwrap()
        .entry(d)
        .or_insert_with(|| arc.clone())
        .clone()
}

/// Product of two power-basis combinations: keys concatenate.
pub(crate) fn multiply_power_combos(a: &QMap, b: &QMap) -> QMap {
    let mut out = QMap::new();
    for (lam, ca) in a {
        for (mu, cb) in b {
            let mut parts: Vec<u32> = lam.parts().to_vec();
            parts.extend_from_slice(mu.parts());
            parts.sort_unstable_by(|x, y| y.cmp(x));
            let key = Partition::new(parts).expect("sorted positive parts");
            add_into(&mut out, key, &(ca * cb));
        }
    }
    out
}

static ELEMENTARY_IN_POWER: Lazy<RwLock<HashMap<u32, Arc<QMap>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));
static COMPLETE_IN_POWER: Lazy<RwLock<HashMap<u32, Arc<QMap>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// e_n in the power basis by Newton's identity
/// n e_n = sum_{i=1}^n (-1)^{i-1} e_{n-i} p_i.
pub(crate) fn elementary_in_power(n: u32) -> Arc<QMap> {
    if let Some(hit) = ELEMENTARY_IN_POWER.read().unwrap().get(&n) {
        return hit.clone();
    }
    let value = if n == 0 {
        let mut one = QMap::new();
        one.insert(Partition::empty(), QQ::one());
        one
    } else {
        let mut acc = QMap::new();
        for i in 1..=n {
            let prev = elementary_in_power(n - i);
            let sign = if i % 2 == 1 { QQ::one() } else { -QQ::one() };
            for (lam, c) in prev.iter() {
                let mut parts: Vec<u32> = lam.parts().to_vec();
                parts.push(i);
                parts.sort_unstable_by(|x, y| y.cmp(x));
                let key = Partition::new(parts).expect("sorted positive parts");
                add_into(&mut acc, key, &(c * &sign / qq(n as i64)));
            }
        }
        acc
    };
    let arc = Arc::new(value);
    ELEMENTARY_IN_POWER
        .write()
        .unwrap()
        .entry(n)
        .or_insert_with(|| arc.clone())
        .clone()
}

/// h_n in the power basis by n h_n = sum h_{n-i} p_i.
pub(crate) fn complete_in_power(n: u32) -> Arc<QMap> {
    if let Some(hit) = COMPLETE_IN_POWER.read().unwrap().get(&n) {
        return hit.clone();
    }
    let value = if n == 0 {
        let mut one = QMap::new();
        one.insert(Partition::empty(), QQ::one());
        one
    } else {
        let mut acc = QMap::new();
        for i in 1..=n {
            let prev = complete_in_power(n - i);
            for (lam, c) in prev.iter() {
                let mut parts: Vec<u32> = lam.parts().to_vec();
                parts.push(i);
                parts.sort_unstable_by(|x, y| y.cmp(x));
                let key = Partition::new(parts).expect("sorted positive parts");
                add_into(&mut acc, key, &(c / qq(n as i64)));
            }
        }
        acc
    };
    let arc = Arc::new(value);
    COMPLETE_IN_POWER
        .write()
        .unwrap()
        .entry(n)
        .or_insert_with(|| arc.clone())
        .clone()
}

/// e_lambda = prod_i e_{lambda_i} in the power basis.
pub(crate) fn elementary_product_in_power(lam: &Partition) -> QMap {
    let mut acc = QMap::new();
    acc.insert(Partition::empty(), QQ::one());
    for &p in lam.parts() {
        acc = multiply_power_combos(&acc, &elementary_in_power(p));
    }
    acc
}

/// h_lambda = prod_i h_{lambda_i} in the power basis.
pub(crate) fn complete_product_in_power(lam: &Partition) -> QMap {
    let mut acc = QMap::new();
    acc.insert(Partition::empty(), QQ::one());
    for &p in lam.parts() {
        acc = multiply_power_combos(&acc, &complete_in_power(p));
    }
    acc
}

fn invert_product_family(d: u32, expand: impl Fn(&Partition) -> QMap) -> HashMap<Partition, QMap> {
    let shapes = Partition::all(d);
    let n = shapes.len();
    let mut a = vec![vec![QQ::zero(); n]; n];
    for (i, lam) in shapes.iter().enumerate() {
        let row = expand(lam);
        for (j, rho) in shapes.iter().enumerate() {
            if let Some(c) = row.get(rho) {
                a[i][j] = c.clone();
            }
        }
    }
    let ainv = invert_matrix(a);
    let mut table = HashMap::new();
    for (j, rho) in shapes.iter().enumerate() {
        let mut combo = QMap::new();
        for (i, lam) in shapes.iter().enumerate() {
            add_into(&mut combo, lam.clone(), &ainv[j][i]);
        }
        table.insert(rho.clone(), combo);
    }
    table
}

static POWER_IN_ELEMENTARY: Lazy<RwLock<HashMap<u32, Arc<HashMap<Partition, QMap>>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));
static POWER_IN_COMPLETE: Lazy<RwLock<HashMap<u32, Arc<HashMap<Partition, QMap>>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// Expansion of every degree-d power sum in the e_lambda products.
pub(crate) fn power_in_elementary_table(d: u32) -> Arc<HashMap<Partition, QMap>> {
    if let Some(hit) = POWER_IN_ELEMENTARY.read().unwrap().get(&d) {
        return hit.clone();
    }
    let arc = Arc::new(invert_product_family(d, elementary_product_in_power));
    POWER_IN_ELEMENTARY
        .write()
        .unwrap()
        .entry(d)
        .or_insert_with(|| arc.clone())
        .clone()
}

/// Expansion of every degree-d power sum in the h_lambda products.
pub(crate) fn power_in_complete_table(d: u32) -> Arc<HashMap<Partition, QMap>> {
    if let Some(hit) = POWER_IN_COMPLETE.read().unwrap().get(&d) {
        return hit.clone();
    }
    let arc = Arc::new(invert_product_family(d, complete_product_in_power));
    POWER_IN_COMPLETE
        .write()
        .unwrap()
        .entry(d)
        .or_insert_with(|| arc.clone())
        .clone()
}

/// Symmetric-group character chi^lambda(mu) by Murnaghan-Nakayama,
/// recursing on strictly decreasing beta sequences: to remove a border
/// strip of size k, pick beta_i >= k with beta_i - k not among the
/// betas; the sign is (-1)^{#betas strictly between}.
fn mn_on_betas(betas: &[u64], hooks: &[u32]) -> i64 {
    if hooks.is_empty() {
        return 1;
    }
    let k = hooks[0] as u64;
    let mut total = 0;
    for i in 0..betas.len() {
        let b = betas[i];
        if b >= k && !betas.contains(&(b - k)) {
            let height = betas.iter().filter(|&&x| b - k < x && x < b).count();
            let mut next: Vec<u64> = betas.to_vec();
            next[i] = b - k;
            next.sort_unstable_by(|a, b| b.cmp(a));
            let sign = if height % 2 == 0 { 1 } else { -1 };
            total += sign * mn_on_betas(&next, &hooks[1..]);
        }
    }
    total
}

static CHARACTER: Lazy<RwLock<HashMap<(Partition, Partition), i64>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// chi^lambda(mu), both partitions of the same size.
pub(crate) fn character(lam: &Partition, mu: &Partition) -> i64 {
    assert_eq!(lam.size(), mu.size(), "character needs equal sizes");
    if lam.is_empty() {
        return 1;
    }
    let key = (lam.clone(), mu.clone());
    if let Some(&hit) = CHARACTER.read().unwrap().get(&key) {
        return hit;
    }
    let rows = lam.len() as u64;
    let betas: Vec<u64> = lam
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p as u64 + rows - 1 - i as u64)
        .collect();
    let value = mn_on_betas(&betas, mu.parts());
    CHARACTER.write().unwrap().insert(key, value);
    value
}

/// s_lambda in the power basis: sum over mu of chi^lambda(mu)/z_mu p_mu.
pub(crate) fn schur_in_power(lam: &Partition) -> QMap {
    let mut out = QMap::new();
    for mu in Partition::all(lam.size()) {
        let chi = character(lam, &mu);
        if chi != 0 {
            let c = qq(chi) / z_factor(&mu);
            add_into(&mut out, mu, &c);
        }
    }
    out
}

/// A power-basis combination expanded in the Schur basis:
/// p_mu = sum_lambda chi^lambda(mu) s_lambda.
pub(crate) fn power_in_schur(mu: &Partition) -> QMap {
    let mut out = QMap::new();
    for lam in Partition::all(mu.size()) {
        let chi = character(&lam, mu);
        if chi != 0 {
            add_into(&mut out, lam, &qq(chi));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::of(parts)
    }

    #[test]
    fn power_in_monomial_small_cases() {
        // p_1^2 = sum x_i^2 + 2 sum_{i<j} x_i x_j = m_(2) + 2 m_(1,1).
        let p11 = power_in_monomial(&part(&[1, 1]));
        assert_eq!(p11.get(&part(&[2])), Some(&qq(1)));
        assert_eq!(p11.get(&part(&[1, 1])), Some(&qq(2)));
        // p_2 p_1 = m_(3) + m_(2,1).
        let p21 = power_in_monomial(&part(&[2, 1]));
        assert_eq!(p21.get(&part(&[3])), Some(&qq(1)));
        assert_eq!(p21.get(&part(&[2, 1])), Some(&qq(1)));
        assert_eq!(p21.get(&part(&[1, 1, 1])), None);
    }

    #[test]
    fn monomial_in_power_inverts_exactly() {
        for d in 0..=6u32 {
            let table = monomial_in_power_table(d);
            for lam in Partition::all(d) {
                // Expand m_lam in p, then re-expand each p in m; must
                // recover the unit vector.
                let in_p = &table[&lam];
                let mut back = QMap::new();
                for (mu, c) in in_p {
                    for (nu, c2) in power_in_monomial(mu).iter() {
                        add_into(&mut back, nu.clone(), &(c * c2));
                    }
                }
                assert_eq!(back.len(), 1, "m_{} round trip", lam);
                assert_eq!(back.get(&lam), Some(&QQ::one()));
            }
        }
    }

    #[test]
    fn newton_identities_match_known_expansions() {
        // e_2 = (p_1^2 - p_2)/2, h_2 = (p_1^2 + p_2)/2.
        let e2 = elementary_in_power(2);
        assert_eq!(e2.get(&part(&[1, 1])), Some(&QQ::new(1.into(), 2.into())));
        assert_eq!(e2.get(&part(&[2])), Some(&QQ::new(BigInt::from(-1), 2.into())));
        let h2 = complete_in_power(2);
        assert_eq!(h2.get(&part(&[2])), Some(&QQ::new(1.into(), 2.into())));
        // e_3 = (p_1^3 - 3 p_1 p_2 + 2 p_3)/6.
        let e3 = elementary_in_power(3);
        assert_eq!(e3.get(&part(&[3])), Some(&QQ::new(1.into(), 3.into())));
        assert_eq!(
            e3.get(&part(&[2, 1])),
            Some(&QQ::new(BigInt::from(-1), 2.into()))
        );
        assert_eq!(e3.get(&part(&[1, 1, 1])), Some(&QQ::new(1.into(), 6.into())));
    }

    #[test]
    fn h2_in_monomial_basis() {
        // h_2 = m_2 + m_11.
        let h2 = complete_in_power(2);
        let mut in_m = QMap::new();
        for (mu, c) in h2.iter() {
            for (nu, c2) in power_in_monomial(mu).iter() {
                add_into(&mut in_m, nu.clone(), &(c * c2));
            }
        }
        assert_eq!(in_m.get(&part(&[2])), Some(&QQ::one()));
        assert_eq!(in_m.get(&part(&[1, 1])), Some(&QQ::one()));
    }

    #[test]
    fn characters_of_s3_and_s4() {
        // S_3 table rows (lambda) at classes (3),(2,1),(1,1,1).
        assert_eq!(character(&part(&[3]), &part(&[3])), 1);
        assert_eq!(character(&part(&[2, 1]), &part(&[3])), -1);
        assert_eq!(character(&part(&[2, 1]), &part(&[2, 1])), 0);
        assert_eq!(character(&part(&[2, 1]), &part(&[1, 1, 1])), 2);
        assert_eq!(character(&part(&[1, 1, 1]), &part(&[2, 1])), -1);
        // S_4 spot checks: chi^{(2,2)}.
        assert_eq!(character(&part(&[2, 2]), &part(&[1, 1, 1, 1])), 2);
        assert_eq!(character(&part(&[2, 2]), &part(&[2, 1, 1])), 0);
        assert_eq!(character(&part(&[2, 2]), &part(&[2, 2])), 2);
        assert_eq!(character(&part(&[2, 2]), &part(&[3, 1])), -1);
        assert_eq!(character(&part(&[2, 2]), &part(&[4])), 0);
    }

    #[test]
    fn schur_s21_in_power_basis() {
        let s21 = schur_in_power(&part(&[2, 1]));
        assert_eq!(s21.get(&part(&[1, 1, 1])), Some(&QQ::new(1.into(), 3.into())));
        assert_eq!(s21.get(&part(&[3])), Some(&QQ::new(BigInt::from(-1), 3.into())));
        assert_eq!(s21.get(&part(&[2, 1])), None);
    }

    #[test]
    fn character_orthogonality_degree_five() {
        // sum_mu chi^a(mu) chi^b(mu) / z_mu = delta_{ab}.
        let shapes = Partition::all(5);
        for a in &shapes {
            for b in &shapes {
                let mut acc = QQ::zero();
                for mu in &shapes {
                    let prod = qq(character(a, mu) * character(b, mu));
                    acc += prod / z_factor(mu);
                }
                let expect = if a == b { QQ::one() } else { QQ::zero() };
                assert_eq!(acc, expect, "classes {} {}", a, b);
            }
        }
    }
}
